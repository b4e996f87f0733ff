"""The smash product R # kΓ of a finite graded quotient R with a group algebra.

Basis elements are pairs (r, g): r a normal word of R, g a group element,
flattened as ``r_index * |Γ| + g``.  The TOBA factor is multiplied by
concatenating normal words and reducing with the stored relation echelons.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .braidops import apply_word, reduced_word
from .core import GradedQuotient, comultiplication_component
from .errors import InputError, ResourceError, VerdictError
from .expr import parse_polynomial
from .linalg import ExactMatrix, kernel, vec_iadd

__all__ = [
    "HopfTable",
    "smash_product",
    "verify_presentation",
    "generator_map",
    "evaluate",
    "coinvariants_dim",
    "projection_checks",
    "rank12_fixture_check",
    "RANK12_MATRICES",
]


def _acc(out: dict, key, x):
    v = out.get(key, 0) + x
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _is_zero(v: dict) -> bool:
    return not any(v.values())


@dataclass
class HopfTable:
    dim: int
    group_size: int
    labels: list
    mul: dict  # (a, b) -> sparse vector
    comul: list  # a -> {(a1, a2): scalar}
    counit: list  # a -> scalar
    antipode: list  # a -> sparse vector
    unit: int
    group_label: callable = None
    axioms: dict = field(default_factory=dict)
    r_labels: list = field(default_factory=list)

    # -- linear extensions ------------------------------------------------
    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for a, s in x.items():
            for b, t in y.items():
                st = s * t
                for k, z in self.mul[a, b].items():
                    _acc(out, k, st * z)
        return out

    def coproduct(self, x: dict) -> dict:
        out: dict = {}
        for a, s in x.items():
            for key, z in self.comul[a].items():
                _acc(out, key, s * z)
        return out

    def basis_vector(self, a: int) -> dict:
        return {a: Fraction(1)}

    def element(self, r_index: int, g: int) -> int:
        return r_index * self.group_size + g

    # -- axioms -----------------------------------------------------------
    def verify(self, exhaustive_limit: int = 128, samples: int = 10_000, seed: int = 0) -> dict:
        n = self.dim
        report = {}

        def fail(name, witness):
            report[name] = {"ok": False, "witness": witness}

        if n <= exhaustive_limit:
            triples = None
        else:
            rng = random.Random(seed)
            triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
        report["associativity"] = {"ok": True, "mode": "exhaustive" if triples is None else f"sampled({samples}, seed={seed})"}
        it = ((a, b, c) for a in range(n) for b in range(n) for c in range(n)) if triples is None else triples
        for a, b, c in it:
            lhs = self.multiply(self.mul[a, b], {c: 1})
            rhs = self.multiply({a: 1}, self.mul[b, c])
            if not _is_zero(_diff(lhs, rhs)):
                fail("associativity", [a, b, c])
                break
        report.setdefault("unit", {"ok": True})
        for a in range(n):
            if not _is_zero(_diff(self.mul[self.unit, a], {a: 1})) or not _is_zero(_diff(self.mul[a, self.unit], {a: 1})):
                fail("unit", [a])
                break
        report.setdefault("coassociativity", {"ok": True})
        report.setdefault("counit", {"ok": True})
        for a in range(n):
            d = self.comul[a]
            left, right = {}, {}
            for (x, y), s in d.items():
                for (x1, x2), t in self.comul[x].items():
                    _acc(left, (x1, x2, y), s * t)
                for (y1, y2), t in self.comul[y].items():
                    _acc(right, (x, y1, y2), s * t)
            if not _is_zero(_diff(left, right)):
                fail("coassociativity", [a])
                break
        for a in range(n):
            l, r = {}, {}
            for (x, y), s in self.comul[a].items():
                if self.counit[x]:
                    _acc(l, y, s * self.counit[x])
                if self.counit[y]:
                    _acc(r, x, s * self.counit[y])
            if not _is_zero(_diff(l, {a: 1})) or not _is_zero(_diff(r, {a: 1})):
                fail("counit", [a])
                break
        report.setdefault("comultiplication_multiplicative", {"ok": True})
        report.setdefault("counit_multiplicative", {"ok": True})
        pairs = [(a, b) for a in range(n) for b in range(n)] if triples is None else [(a, b) for a, b, _ in triples]
        for a, b in pairs:
            lhs = self.coproduct(self.mul[a, b])
            rhs: dict = {}
            for (x1, x2), s in self.comul[a].items():
                for (y1, y2), t in self.comul[b].items():
                    st = s * t
                    p1 = self.mul[x1, y1]
                    if not p1:
                        continue
                    p2 = self.mul[x2, y2]
                    for k1, u in p1.items():
                        for k2, v in p2.items():
                            _acc(rhs, (k1, k2), st * u * v)
            if not _is_zero(_diff(lhs, rhs)):
                fail("comultiplication_multiplicative", [a, b])
                break
            eps_ab = sum((x * self.counit[k] for k, x in self.mul[a, b].items()), Fraction(0))
            if eps_ab != self.counit[a] * self.counit[b]:
                fail("counit_multiplicative", [a, b])
                break
        report.setdefault("antipode", {"ok": True})
        for a in range(n):
            l, r = {}, {}
            for (x, y), s in self.comul[a].items():
                vec_iadd(l, self.multiply(self.antipode[x], {y: 1}), s)
                vec_iadd(r, self.multiply({x: 1}, self.antipode[y]), s)
            target = {self.unit: self.counit[a]} if self.counit[a] else {}
            if not _is_zero(_diff(l, target)) or not _is_zero(_diff(r, target)):
                fail("antipode", [a])
                break
        self.axioms = report
        return report

    @property
    def axioms_ok(self) -> bool:
        return bool(self.axioms) and all(v["ok"] for v in self.axioms.values())


def _diff(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, x in b.items():
        _acc(out, k, -x)
    return out


class _RData:
    """Basis of R with group action and G-degrees."""

    def __init__(self, state: GradedQuotient, M):
        self.state = state
        self.M = M
        G = M.group
        self.G = G
        d = state.d
        self.index = []  # r -> (degree, pos)
        self.flat = {}
        for n, words in enumerate(state.words):
            for p in range(len(words)):
                self.flat[n, p] = len(self.index)
                self.index.append((n, p))
        self.degree = []
        self.letters = []
        for n, p in self.index:
            t = state.words[n][p]
            letters = []
            for _ in range(n):
                t, b = divmod(t, d)
                letters.append(b)
            letters.reverse()
            self.letters.append(letters)
            self.degree.append(G.product(M.degrees[b] for b in letters))
        self._act = {}

    def vec(self, n: int, v: dict) -> dict:
        return {self.flat[n, p]: x for p, x in v.items()}

    def act(self, g: int, r: int) -> dict:
        """g·r as a flat vector over R."""
        key = (g, r)
        got = self._act.get(key)
        if got is None:
            n, _ = self.index[r]
            d = self.state.d
            tensor = {0: Fraction(1)}
            for b in self.letters[r]:
                col = self.M.action[g][b]
                new = {}
                for t, x in tensor.items():
                    for k, y in col.items():
                        _acc(new, t * d + k, x * y)
                tensor = new
            got = self.vec(n, self.state.project(n, tensor))
            self._act[key] = got
        return got

    def multiply(self, r: int, s_vec: dict) -> dict:
        i, p = self.index[r]
        out: dict = {}
        by_deg: dict = {}
        for s, x in s_vec.items():
            j, q = self.index[s]
            by_deg.setdefault(j, {})[q] = x
        for j, v in by_deg.items():
            vec_iadd(out, self.vec(i + j, self.state.multiply(i, {p: Fraction(1)}, j, v)))
        return out

    def label(self, r: int) -> str:
        labs = [self.M.labels[b] for b in self.letters[r]]
        return "*".join(labs) if labs else "1"


def smash_product(state: GradedQuotient, M, max_total_dim: int = 2000, verify: bool = True,
                  seed: int = 0) -> HopfTable:
    """R # kΓ with R = ``state`` (must have terminated) and Γ acting through ``M``."""
    if not state.terminated:
        raise VerdictError("bosonization needs a finite graded algebra (no vanishing component found)")
    if state.B.module is not M and state.B.module is not None and state.B.module.degrees != M.degrees:
        raise InputError("module does not match the braided space of the algebra")
    G = M.group
    R = _RData(state, M)
    m = G.size
    nr = len(R.index)
    dim = nr * m
    if dim > max_total_dim:
        raise ResourceError(f"bosonization has dimension {dim}, above the limit {max_total_dim}")
    mul = {}
    for r in range(nr):
        for g in range(m):
            a = r * m + g
            for r2 in range(nr):
                gr2 = R.act(g, r2)
                prod = R.multiply(r, gr2) if gr2 else {}
                for g2 in range(m):
                    gg = G.mul[g][g2]
                    mul[a, r2 * m + g2] = {s * m + gg: x for s, x in prod.items()}
    comul = []
    counit = []
    for r in range(nr):
        n, p = R.index[r]
        parts = []
        for i in range(n + 1):
            for (p1, p2), x in comultiplication_component(state, i, n - i, {p: Fraction(1)}).items():
                parts.append((R.flat[i, p1], R.flat[n - i, p2], x))
        for h in range(m):
            d = {}
            for r1, r2, x in parts:
                _acc(d, (r1 * m + G.mul[R.degree[r2]][h], r2 * m + h), x)
            comul.append(d)
            counit.append(Fraction(1) if n == 0 else Fraction(0))
    # braided antipode: S_R(word) = (-1)^n π(s(w0) word)
    s_r = []
    d = state.d
    for r in range(nr):
        n, p = R.index[r]
        if n == 0:
            s_r.append({r: Fraction(1)})
            continue
        w0 = tuple(range(n - 1, -1, -1))
        t = apply_word(state.B.cols, d, n, reduced_word(w0), {state.words[n][p]: Fraction((-1) ** n)})
        s_r.append(R.vec(n, state.project(n, t)))
    antipode = []
    for r in range(nr):
        ginv_r = G.inverse(R.degree[r])
        for g in range(m):
            # (1#g^-1)(1#deg(r)^-1)(S_R(r)#1) = g^-1 deg(r)^-1 · S_R(r) # g^-1 deg(r)^-1
            k = G.mul[G.inverse(g)][ginv_r]
            out = {}
            for s, x in s_r[r].items():
                for s2, y in R.act(k, s).items():
                    _acc(out, s2 * m + k, x * y)
            antipode.append(out)
    labels = [f"{R.label(r)}#{G.name(g)}" for r in range(nr) for g in range(m)]
    T = HopfTable(dim, m, labels, mul, comul, counit, antipode, unit=G.identity,
                  r_labels=[R.label(r) for r in range(nr)])
    T.group = G
    T.rdata = R
    if verify:
        T.verify(seed=seed)
        if not T.axioms_ok:
            bad = {k: v for k, v in T.axioms.items() if not v["ok"]}
            raise VerdictError(f"Hopf axioms fail: {sorted(bad)}", witness=bad)
    return T


def generator_map(T: HopfTable, group_generators: dict) -> dict:
    """Name -> element vector: every degree-1 letter as r#e plus named group-likes 1#g."""
    R = T.rdata
    G = T.group
    names = {}
    for r, (n, _) in enumerate(R.index):
        if n == 1:
            names[R.label(r)] = {T.element(r, G.identity): Fraction(1)}
    for name, g in group_generators.items():
        names[name] = {T.element(0, g): Fraction(1)}
    return names


def evaluate(T: HopfTable, poly: dict, names: dict) -> dict:
    one = {T.unit: Fraction(1)}
    out: dict = {}
    for word, c in poly.items():
        v = one
        for name in word:
            v = T.multiply(v, names[name])
        vec_iadd(out, v, c)
    return out


def verify_presentation(T: HopfTable, relations, generators: dict) -> dict:
    """Evaluate relation strings (``lhs`` or ``lhs = rhs``) in T."""
    results = []
    for text in relations:
        lhs, _, rhs = text.partition("=")
        try:
            pl = parse_polynomial(lhs, generators)
            pr = parse_polynomial(rhs, generators) if rhs.strip() else {}
        except ValueError as exc:
            raise InputError(str(exc)) from None
        diff = _diff(evaluate(T, pl, generators), evaluate(T, pr, generators))
        results.append({"relation": text.strip(), "holds": _is_zero(diff)})
    return {"all_hold": all(r["holds"] for r in results), "relations": results}


def coinvariants_dim(T: HopfTable) -> int:
    """dim {a : (id ⊗ p)Δ(a) = a ⊗ 1} with p(r#g) = ε(r) g."""
    m = T.group_size
    e = T.group.identity
    cols = []
    for a in range(T.dim):
        v = {}
        for (x, y), s in T.comul[a].items():
            ry, gy = divmod(y, m)
            if T.rdata.index[ry][0] == 0:
                _acc(v, x * m + gy, s)
        _acc(v, a * m + e, -1)
        cols.append(v)
    return kernel(ExactMatrix.from_columns(T.dim * m, cols)).dim


def projection_checks(T: HopfTable) -> dict:
    """p and ι are algebra maps and p∘ι = id."""
    G = T.group
    m = T.group_size

    def p(vec):
        out = {}
        for a, x in vec.items():
            r, g = divmod(a, m)
            if T.rdata.index[r][0] == 0:
                _acc(out, g, x)
        return out

    p_mult_all = True
    for a in range(T.dim):
        for b in range(T.dim):
            pa, pb = p({a: 1}), p({b: 1})
            lhs = p(T.mul[a, b])
            rhs = {}
            for g, x in pa.items():
                for h, y in pb.items():
                    _acc(rhs, G.mul[g][h], x * y)
            if not _is_zero(_diff(lhs, rhs)):
                p_mult_all = False
    iota_mult = all(
        T.mul[T.element(0, g), T.element(0, h)] == {T.element(0, G.mul[g][h]): 1}
        for g in range(m) for h in range(m)
    )
    p_iota = all(p({T.element(0, g): 1}) == {g: 1} for g in range(m))
    return {"p_algebra_map": p_mult_all, "iota_algebra_map": iota_mult, "p_iota_identity": p_iota}


# rank-12 representation, 1-based (row, col, sign) entries
_RANK12 = {
    "y0": [(1, 2, 1), (3, 7, 1), (4, 8, 1), (5, 9, 1), (6, 10, 1), (11, 12, 1)],
    "y1": [(1, 3, 1), (2, 5, 1), (4, 6, -1), (4, 7, -1), (6, 9, -1), (7, 9, 1), (8, 11, -1), (10, 12, 1)],
    "y2": [(1, 4, 1), (2, 6, 1), (3, 5, -1), (3, 8, -1), (5, 10, -1), (7, 11, -1), (8, 10, 1), (9, 12, 1)],
}
RANK12_MATRICES = {
    name: ExactMatrix(12, 12, [
        {j - 1: Fraction(s) for (i2, j, s) in entries if i2 == i}
        for i in range(1, 13)
    ])
    for name, entries in _RANK12.items()
}
RANK12_MONOMIALS = ["1", "y0", "y1", "y2", "y0*y1", "y1*y2", "y0*y2", "y1*y0",
                    "y0*y1*y0", "y0*y1*y2", "y1*y0*y2", "y0*y1*y0*y2"]


def rank12_fixture_check() -> dict:
    from .linalg import rank

    A = RANK12_MATRICES
    zero = ExactMatrix(12, 12)
    checks = {f"{k}^2 = 0": (A[k] @ A[k]) == zero for k in A}

    def msum(*ms):
        rows = []
        for i in range(12):
            acc = {}
            for mm in ms:
                vec_iadd(acc, mm.rows[i])
            rows.append(acc)
        return ExactMatrix(12, 12, rows)

    checks["y0y1 + y1y2 + y2y0 = 0"] = msum(A["y0"] @ A["y1"], A["y1"] @ A["y2"], A["y2"] @ A["y0"]) == zero
    checks["y0y2 + y1y0 + y2y1 = 0"] = msum(A["y0"] @ A["y2"], A["y1"] @ A["y0"], A["y2"] @ A["y1"]) == zero
    images = []
    for mono in RANK12_MONOMIALS:
        P = ExactMatrix.identity(12)
        if mono != "1":
            for name in mono.split("*"):
                P = P @ A[name]
        images.append({i * 12 + j: x for i, r in enumerate(P.rows) for j, x in r.items()})
    rk = rank(ExactMatrix(len(images), 144, images))
    checks["monomial images independent"] = rk == 12
    return {"checks": checks, "rank": rk, "all_pass": all(checks.values())}
