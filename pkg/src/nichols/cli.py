"""Command-line front end.

    nichols dims SPEC --max-deg 6
    nichols relations SPEC --deg 3
    nichols quotient SPEC --relations FILE --max-deg 10
    nichols gs SPEC --cutoff 50
    nichols pair SPEC --max-deg 4
    nichols bosonize SPEC --max-deg 6 --max-dim 2000
    nichols check SPEC

SPEC is a TOML file or the name of a shipped fixture.  Exit status: 0 on
success, 1 when a verdict-bearing check fails, 2 on input or resource errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .bosonize import coinvariants_dim, generator_map, projection_checks, smash_product, verify_presentation
from .braidops import DEFAULT_BUDGET
from .core import golod_shafarevich, nichols_dims, parse_relations, poincare_check, quotient_dims
from .core import GradedQuotient
from .errors import CompatibilityError, InputError, NicholsError, ResourceError, VerdictError
from .expr import ExprError
from .pairing import evaluation_pair, radical_cross_check
from .scalars import format_scalar
from .specfile import load_spec, read_relations, resolve_path
from .ydmodule import check_yd_axiom

CONVENTIONS = {
    "tensor_order": "lexicographic, leftmost factor most significant",
    "braid_indices": "0-based: c_i acts on factors i, i+1; word [i1..ik] is c_i1 o ... o c_ik",
    "normal_words": "non-pivot coordinates of the relation echelon, lexicographic",
    "permutation_product": "(xy)(i) = x(y(i))",
}


def format_tensor(tensor: dict, labels, n: int) -> str:
    d = len(labels)
    terms = []
    for t in sorted(tensor):
        c = tensor[t]
        letters = []
        for _ in range(n):
            t, b = divmod(t, d)
            letters.append(labels[b])
        word = "*".join(reversed(letters)) or "1"
        cs = format_scalar(c)
        if cs == "1":
            terms.append(f"+ {word}")
        elif cs == "-1":
            terms.append(f"- {word}")
        elif cs.startswith("-") and " " not in cs:
            terms.append(f"- {cs[1:]}*{word}")
        else:
            terms.append(f"+ ({cs})*{word}" if " " in cs else f"+ {cs}*{word}")
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:] if text.startswith("- ") else text


def _coords(tensor: dict) -> dict:
    return {str(k): format_scalar(v) for k, v in sorted(tensor.items())}


def _opt(args, spec, name, default):
    v = getattr(args, name, None)
    if v is not None:
        return v
    return spec.options.get(name, default)


def _budget(args, spec):
    return _opt(args, spec, "budget", DEFAULT_BUDGET)


def _words(state, n):
    labels = state.B.labels
    return [format_tensor({w: 1}, labels, n) for w in state.words[n]]


def cmd_check(args, spec):
    out = {}
    ok = True
    if spec.module is not None:
        rep = check_yd_axiom(spec.module)
        out["yd_axiom"] = rep
        ok = rep["status"] == "pass"
    out["braid_equation"] = spec.braided.satisfies_braid_equation()
    out["invertible"] = spec.braided.is_invertible()
    out["dim"] = spec.braided.dim
    if spec.group is not None:
        out["group_order"] = spec.group.size
    ok = ok and out["braid_equation"] and out["invertible"]
    return out, 0 if ok else 1


def cmd_dims(args, spec):
    max_deg = _opt(args, spec, "max_deg", 8)
    dims, cert, state = nichols_dims(spec.braided, max_deg, _budget(args, spec))
    out = {"dims": dims, "total": cert.total if cert.verdict == "finite" else None,
           "verdict": str(cert), "certificate": cert.as_dict()}
    if cert.verdict == "finite":
        out["palindromic"] = poincare_check(dims, cert)
    out["basis"] = {str(n): _words(state, n) for n in range(len(dims)) if dims[n]}
    return out, 0


def cmd_relations(args, spec):
    deg = _opt(args, spec, "deg", 2)
    state = GradedQuotient(spec.braided, budget=_budget(args, spec))
    per = []
    for n in range(2, deg + 1):
        rels = state.minimal_relations(n)
        per.append({
            "degree": n,
            "kernel_dim": state.kernel_dim(n),
            "minimal_count": len(rels),
            "relations": [format_tensor(r, spec.braided.labels, n) for r in rels],
            "relation_bases": [_coords(r) for r in rels],
        })
    return {"degrees": per, "dims": state.dims}, 0


def _relation_texts(args, spec):
    if args.relations:
        return read_relations(args.relations)
    if spec.relations:
        return spec.relations
    raise InputError("no relations given (use --relations FILE or a [relations] section)")


def cmd_quotient(args, spec):
    max_deg = _opt(args, spec, "max_deg", 10)
    texts = _relation_texts(args, spec)
    try:
        gens = parse_relations(texts, spec.braided.labels, spec.braided.dim)
    except ExprError as exc:
        raise InputError(str(exc)) from None
    dims, cert, state = quotient_dims(spec.braided, gens, max_deg, _budget(args, spec))
    return {"relation_count": len(gens), "dims": dims,
            "total": cert.total if cert.verdict == "finite" else None,
            "verdict": str(cert), "certificate": cert.as_dict()}, 0


def cmd_gs(args, spec):
    cutoff = _opt(args, spec, "cutoff", 50)
    top = _opt(args, spec, "gs_degree", 2) if args.deg is None else args.deg
    state = GradedQuotient(spec.braided, budget=_budget(args, spec))
    counts = {n: len(state.minimal_relations(n)) for n in range(2, top + 1)}
    data, cert = golod_shafarevich(spec.braided.dim, counts, cutoff)
    return {
        "dim_V": spec.braided.dim,
        "relation_counts": {str(k): v for k, v in counts.items()},
        "relation_degrees_used": top,
        "algebra": "tensor algebra modulo the minimal relations up to the given degree",
        "g": [str(x) for x in data.g],
        "verdict": cert.verdict,
        "certificate": cert.as_dict(),
    }, 0


def cmd_pair(args, spec):
    if spec.module is None:
        raise InputError("pair needs a module given by group data")
    max_deg = _opt(args, spec, "max_deg", 4)
    P = evaluation_pair(spec.module)
    rep = radical_cross_check(P, max_deg, _budget(args, spec))
    return rep, 0


def cmd_bosonize(args, spec):
    if spec.module is None:
        raise InputError("bosonize needs a module given by group data")
    max_deg = _opt(args, spec, "max_deg", 10)
    max_dim = _opt(args, spec, "max_dim", 2000)
    seed = _opt(args, spec, "seed", 0)
    dims, cert, state = nichols_dims(spec.braided, max_deg, _budget(args, spec))
    T = smash_product(state, spec.module, max_dim, verify=True, seed=seed)
    out = {"dims": dims, "dim": T.dim, "axioms": T.axioms,
           "coinvariants_dim": coinvariants_dim(T), "projection": projection_checks(T)}
    code = 0
    if spec.presentation:
        names = generator_map(T, spec.presentation["generators"])
        pres = verify_presentation(T, spec.presentation["relations"], names)
        out["presentation"] = pres
        if not pres["all_hold"]:
            code = 1
    if args.dump:
        out["structure_constants"] = {
            "labels": T.labels,
            "mul": {f"{a},{b}": _coords(v) for (a, b), v in sorted(T.mul.items()) if v},
            "comul": {str(a): {f"{x},{y}": format_scalar(s) for (x, y), s in sorted(d.items())}
                      for a, d in enumerate(T.comul)},
            "antipode": {str(a): _coords(v) for a, v in enumerate(T.antipode)},
            "counit": [format_scalar(x) for x in T.counit],
        }
    return out, code


COMMANDS = {
    "check": cmd_check,
    "dims": cmd_dims,
    "relations": cmd_relations,
    "quotient": cmd_quotient,
    "gs": cmd_gs,
    "pair": cmd_pair,
    "bosonize": cmd_bosonize,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nichols", description="Exact Nichols algebra computations.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("spec", help="TOML spec file or shipped fixture name")
    ap.add_argument("--max-deg", type=int, dest="max_deg")
    ap.add_argument("--deg", type=int)
    ap.add_argument("--cutoff", type=int)
    ap.add_argument("--budget", type=int)
    ap.add_argument("--max-dim", type=int, dest="max_dim")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--relations", help="relations file (one per line) for `quotient`")
    ap.add_argument("--dump", action="store_true", help="include structure constants (bosonize)")
    ap.add_argument("--json", dest="json_path", help="also write the report to this path")
    return ap


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    report = {"command": args.command}
    start = time.perf_counter()
    try:
        path = resolve_path(args.spec)
        spec = load_spec(args.spec)
        report["input"] = {"path": args.spec, "resolved": path.name, "sha256": spec.digest}
        report["conventions"] = CONVENTIONS
        result, code = COMMANDS[args.command](args, spec)
        report["result"] = result
        report["status"] = "ok" if code == 0 else "failed"
    except (ResourceError,) as exc:
        report.update(status="resource_error", error=str(exc))
        code = 2
    except (InputError, ExprError) as exc:
        report.update(status="input_error", error=str(exc))
        code = 2
    except (CompatibilityError, VerdictError) as exc:
        report.update(status="failed", error=str(exc))
        code = 1
    except NicholsError as exc:
        report.update(status="error", error=str(exc))
        code = 2
    report["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
    text = json.dumps(report, indent=2, default=str)
    print(text, file=stdout)
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(text + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
