"""TOML input files describing a group, a module and optional relations.

Layout::

    [group]
    type = "dihedral"          # symmetric | dihedral | cyclic | permutation
    p = 5

    [module]
    induced = { class_rep = "sigma", character = { sigma = "-1" } }
    # or explicit = { degrees = [...], action = { rho = [[...]], ... } }
    # or diagonal = { q = [["z(3)", "1"], ["1", "-1"]] }
    labels = ["y0", "y1", ...]   # optional

    [relations]
    list = ["y0*y0", "y0*y1 + y1*y2 + y2*y0"]

    [presentation]               # optional, checked by `bosonize`
    generators = { g0 = "sigma", g1 = "rho^2*sigma" }
    relations = ["g0*g0 = 1", ...]

    [options]
    max_deg = 8
"""
from __future__ import annotations

import hashlib
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

import tomli_w

from . import groups
from .errors import InputError
from .expr import ExprError
from .scalars import parse_scalar
from .ydmodule import LinearCharacter, MatrixRep, YDModule, braiding, diagonal_braiding, induce

__all__ = ["SpecFile", "parse_spec", "load_spec", "resolve_path", "read_relations"]

_TOP_KEYS = {"group", "module", "relations", "presentation", "options"}
_OPTION_KEYS = {"max_deg", "budget", "cutoff", "seed", "max_dim", "deg", "gs_degree"}


@dataclass
class SpecFile:
    raw: dict
    group: groups.FiniteGroup | None
    module: YDModule | None
    braided: object
    relations: list = field(default_factory=list)
    presentation: dict | None = None
    options: dict = field(default_factory=dict)
    digest: str = ""

    def to_toml(self) -> str:
        return tomli_w.dumps(self.raw)


def _reject_unknown(table: dict, allowed, where: str):
    extra = sorted(set(table) - set(allowed))
    if extra:
        raise InputError(f"unknown key(s) {extra} in {where}")


def _scalar(x, where):
    if isinstance(x, bool):
        raise InputError(f"{where}: boolean is not a scalar")
    if isinstance(x, int):
        return parse_scalar(str(x))
    if isinstance(x, str):
        try:
            return parse_scalar(x)
        except ExprError as exc:
            raise InputError(f"{where}: {exc}") from None
    raise InputError(f"{where}: expected an integer or a scalar string, got {x!r}")


def _matrix(m, where):
    if not isinstance(m, list) or not all(isinstance(r, list) for r in m):
        raise InputError(f"{where}: expected a list of rows")
    return [[_scalar(x, f"{where}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(m)]


def _element(G, expr, where):
    try:
        return G.element(expr)
    except groups.GroupError as exc:
        raise InputError(f"{where}: {exc}") from None


def _build_group(sec: dict):
    kind = sec.get("type")
    if kind == "symmetric":
        _reject_unknown(sec, {"type", "n"}, "[group]")
        return groups.symmetric(int(sec["n"]))
    if kind == "dihedral":
        _reject_unknown(sec, {"type", "p"}, "[group]")
        return groups.dihedral(int(sec["p"]))
    if kind == "cyclic":
        _reject_unknown(sec, {"type", "n"}, "[group]")
        return groups.cyclic(int(sec["n"]))
    if kind == "permutation":
        _reject_unknown(sec, {"type", "degree", "generators", "labels", "max_size"}, "[group]")
        try:
            return groups.from_permutations(
                int(sec["degree"]), [tuple(g) for g in sec.get("generators", [])],
                max_size=int(sec.get("max_size", 10_000)), labels=sec.get("labels"),
            )
        except groups.GroupError as exc:
            raise InputError(f"[group]: {exc}") from None
    raise InputError(f"[group]: unknown type {kind!r}")


def _build_module(sec: dict, G):
    _reject_unknown(sec, {"induced", "explicit", "diagonal", "labels"}, "[module]")
    kinds = [k for k in ("induced", "explicit", "diagonal") if k in sec]
    if len(kinds) != 1:
        raise InputError("[module] needs exactly one of induced, explicit, diagonal")
    labels = tuple(sec.get("labels", ()))
    kind = kinds[0]
    body = sec[kind]
    if kind == "diagonal":
        _reject_unknown(body, {"q"}, "[module.diagonal]")
        return None, diagonal_braiding(_matrix(body["q"], "module.diagonal.q"), labels)
    if G is None:
        raise InputError(f"[module] {kind} needs a [group] section")
    if kind == "induced":
        _reject_unknown(body, {"class_rep", "character", "representation"}, "[module.induced]")
        g = _element(G, body["class_rep"], "module.induced.class_rep")
        if "character" in body:
            vals = {
                _element(G, k, f"module.induced.character.{k}"): _scalar(v, f"module.induced.character.{k}")
                for k, v in body["character"].items()
            }
            rho = LinearCharacter(vals)
        elif "representation" in body:
            rep = body["representation"]
            _reject_unknown(rep, {"dim", "matrices"}, "[module.induced.representation]")
            vals = {
                _element(G, k, f"module.induced.representation.{k}"): _matrix(v, f"module.induced.representation.{k}")
                for k, v in rep["matrices"].items()
            }
            rho = MatrixRep(vals, int(rep["dim"]))
        else:
            raise InputError("[module.induced] needs character or representation")
        M = induce(G, g, rho, labels)
    else:
        _reject_unknown(body, {"degrees", "action"}, "[module.explicit]")
        degrees = [_element(G, x, "module.explicit.degrees") for x in body["degrees"]]
        acts = {
            _element(G, k, f"module.explicit.action.{k}"): _matrix(v, f"module.explicit.action.{k}")
            for k, v in body["action"].items()
        }
        M = YDModule.from_generators(G, degrees, acts, labels)
    return M, braiding(M)


def parse_spec(text: str) -> SpecFile:
    try:
        raw = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"syntax error: {exc}") from None
    try:
        return _parse(raw, text)
    except KeyError as exc:
        raise InputError(f"missing required key {exc.args[0]!r}") from None
    except (TypeError, AttributeError) as exc:
        raise InputError(f"malformed spec: {exc}") from None


def _parse(raw: dict, text: str) -> SpecFile:
    _reject_unknown(raw, _TOP_KEYS, "top level")
    if "module" not in raw:
        raise InputError("missing [module] section")
    G = _build_group(raw["group"]) if "group" in raw else None
    M, B = _build_module(raw["module"], G)
    relations = []
    if "relations" in raw:
        _reject_unknown(raw["relations"], {"list"}, "[relations]")
        relations = list(raw["relations"].get("list", []))
    presentation = None
    if "presentation" in raw:
        sec = raw["presentation"]
        _reject_unknown(sec, {"generators", "relations"}, "[presentation]")
        if G is None:
            raise InputError("[presentation] needs a [group] section")
        presentation = {
            "generators": {k: _element(G, v, f"presentation.generators.{k}") for k, v in sec.get("generators", {}).items()},
            "relations": list(sec.get("relations", [])),
        }
    options = dict(raw.get("options", {}))
    _reject_unknown(options, _OPTION_KEYS, "[options]")
    digest = hashlib.sha256(text.encode()).hexdigest()
    return SpecFile(raw, G, M, B, relations, presentation, options, digest)


def _fixture_dir():
    return resources.files("nichols") / "fixtures"


def resolve_path(path: str) -> Path:
    """A file path, or the name of a shipped fixture (with or without directory/extension)."""
    p = Path(path)
    for cand in (p, p.with_name(p.name + ".toml"), p.with_name(p.name + ".txt")):
        if cand.is_file():
            return cand
    base = _fixture_dir()
    for name in (p.name, p.name + ".toml", p.name + ".txt"):
        cand = base / name
        if cand.is_file():
            return Path(str(cand))
    raise InputError(f"no such spec or fixture: {path}")


def load_spec(path: str) -> SpecFile:
    return parse_spec(resolve_path(path).read_text())


def read_relations(path: str) -> list[str]:
    """One relation per line (``#`` comments), or a TOML file with [relations] list."""
    p = resolve_path(path)
    text = p.read_text()
    if p.suffix == ".toml":
        try:
            raw = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise InputError(f"syntax error in {path}: {exc}") from None
        return list(raw.get("relations", {}).get("list", []))
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out
