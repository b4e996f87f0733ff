"""Yetter–Drinfeld modules over a group algebra kΓ and their braidings.

A module is a Γ-graded space with a basis of homogeneous vectors and a
Γ-action; the YD condition reduces to h·M_g ⊆ M_{hgh^-1}.  Action matrices
are stored as sparse columns: ``action[h][j]`` is the image of basis vector
j as ``{i: scalar}``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .braidops import apply_c
from .errors import CompatibilityError, InputError
from .groups import FiniteGroup, Subgroup, centralizer, coset_decomposition, left_coset_reps
from .linalg import ExactMatrix, inverse, vec_iadd
from .scalars import as_field, is_root_of_unity

__all__ = [
    "YDModule",
    "LinearCharacter",
    "MatrixRep",
    "BraidedSpace",
    "induce",
    "direct_sum",
    "zero_module",
    "braiding",
    "braiding_inverse",
    "yd_braiding_inverse",
    "diagonal_braiding",
    "dual_module",
    "check_yd_axiom",
]


def _apply_cols(cols, vec):
    out: dict = {}
    for j, x in vec.items():
        vec_iadd(out, cols[j], x)
    return out


def _compose_cols(a, b):
    """Columns of A∘B."""
    return [_apply_cols(a, col) for col in b]


def _cols_equal(a, b):
    for x, y in zip(a, b):
        if x.keys() != y.keys() or any(x[k] != y[k] for k in x):
            return False
    return len(a) == len(b)


def _dense_to_cols(mat):
    """Row-major dense matrix -> sparse columns."""
    mat = [[as_field(x) for x in row] for row in mat]
    n = len(mat)
    m = len(mat[0]) if n else 0
    return [{i: mat[i][j] for i in range(n) if mat[i][j]} for j in range(m)]


def _identity_cols(n):
    return [{i: Fraction(1)} for i in range(n)]


def _extend_to_group(G: FiniteGroup, gens: dict, dim: int, within=None):
    """Extend generator images to a homomorphism on the generated subgroup.

    ``gens`` maps element index -> columns.  Returns {element: columns}.
    Raises InputError when the images are not multiplicative.
    """
    images = {G.identity: _identity_cols(dim)}
    queue = deque([G.identity])
    while queue:
        a = queue.popleft()
        for s, cols in gens.items():
            b = G.mul[a][s]
            img = _compose_cols(images[a], cols)
            if b in images:
                if not _cols_equal(images[b], img):
                    raise InputError(
                        f"assigned values are not multiplicative: element {G.name(a)} * {G.name(s)}"
                    )
            else:
                images[b] = img
                queue.append(b)
    if within is not None and set(images) != set(within):
        raise InputError(
            f"given elements generate a subgroup of size {len(images)}, expected {len(within)}"
        )
    return images


@dataclass(frozen=True, eq=False)
class LinearCharacter:
    """A one-dimensional representation given on generators of a subgroup."""

    values: dict  # element index -> scalar

    dim = 1

    def extend(self, G: FiniteGroup, H: Subgroup) -> dict:
        for g, v in self.values.items():
            if g not in H:
                raise InputError(f"character given on {G.name(g)}, which is outside the centralizer")
            if not v or not is_root_of_unity(v):
                raise InputError(f"character value {v} on {G.name(g)} is not a root of unity")
        gens = {g: [{0: as_field(v)}] for g, v in self.values.items()}
        return _extend_to_group(G, gens, 1, within=H.elements)


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """A representation given by invertible matrices on subgroup generators."""

    values: dict  # element index -> dense row-major matrix
    dim_rho: int = 1

    @property
    def dim(self):
        return self.dim_rho

    def extend(self, G: FiniteGroup, H: Subgroup) -> dict:
        gens = {}
        for g, m in self.values.items():
            if g not in H:
                raise InputError(f"representation given on {G.name(g)}, which is outside the centralizer")
            if len(m) != self.dim_rho or any(len(r) != self.dim_rho for r in m):
                raise InputError(f"matrix for {G.name(g)} is not {self.dim_rho}x{self.dim_rho}")
            gens[g] = _dense_to_cols(m)
        return _extend_to_group(G, gens, self.dim_rho, within=H.elements)


@dataclass(frozen=True, eq=False)
class YDModule:
    group: FiniteGroup
    degrees: tuple
    action: dict  # element -> list of sparse columns
    labels: tuple = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"y{i}" for i in range(len(self.degrees))))
        if len(self.labels) != len(self.degrees):
            raise InputError("one label per basis vector required")

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def matrix(self, h: int) -> ExactMatrix:
        return ExactMatrix.from_columns(self.dim, self.action[h])

    def act(self, h: int, vec: dict) -> dict:
        return _apply_cols(self.action[h], vec)

    @classmethod
    def from_generators(cls, group: FiniteGroup, degrees, gen_actions: dict, labels=()):
        """Build from action matrices (dense, row-major) on generating elements."""
        dim = len(degrees)
        gens = {}
        for g, m in gen_actions.items():
            if len(m) != dim or any(len(r) != dim for r in m):
                raise InputError(f"action matrix for {group.name(g)} must be {dim}x{dim}")
            gens[g] = _dense_to_cols(m)
        if dim == 0:
            action = {h: [] for h in range(group.size)}
        else:
            action = _extend_to_group(group, gens, dim)
            if len(action) != group.size:
                raise InputError(
                    f"action given on elements generating only {len(action)} of {group.size} group elements"
                )
        return cls(group, tuple(degrees), action, tuple(labels))


def zero_module(G: FiniteGroup) -> YDModule:
    return YDModule(G, (), {h: [] for h in range(G.size)}, ())


def induce(G: FiniteGroup, g: int, rho, labels=()) -> YDModule:
    """M(g, ρ): basis (coset rep x, ρ-basis v) in lexicographic order."""
    H = centralizer(G, g)
    rho_img = rho.extend(G, H)
    r = rho.dim
    reps = left_coset_reps(G, H)
    pos = {x: k for k, x in enumerate(reps)}
    decomp = coset_decomposition(G, H, reps)
    degrees = tuple(G.conjugate(x, g) for x in reps for _ in range(r))
    action = {}
    for h in range(G.size):
        cols = []
        for x in reps:
            x2, t = decomp[G.mul[h][x]]
            base = pos[x2] * r
            for v in range(r):
                cols.append({base + w: c for w, c in rho_img[t][v].items()})
        action[h] = cols
    if not labels:
        if r == 1:
            labels = tuple(f"y{k}" for k in range(len(reps)))
        else:
            labels = tuple(f"y{k}_{v}" for k in range(len(reps)) for v in range(r))
    return YDModule(G, degrees, action, tuple(labels))


def direct_sum(M: YDModule, N: YDModule, labels=()) -> YDModule:
    if M.group is not N.group and M.group.mul != N.group.mul:
        raise InputError("direct sum needs modules over the same group")
    m = M.dim
    action = {
        h: list(M.action[h]) + [{i + m: x for i, x in col.items()} for col in N.action[h]]
        for h in range(M.group.size)
    }
    if not labels:
        labels = M.labels + N.labels
        if len(set(labels)) != len(labels):
            labels = tuple(f"y{i}" for i in range(m + N.dim))
    return YDModule(M.group, M.degrees + N.degrees, action, tuple(labels))


def check_yd_axiom(M: YDModule) -> dict:
    """Support test of h·M_g ⊆ M_{hgh^-1} for every h and basis vector."""
    G = M.group
    violations = []
    for h in range(G.size):
        for j, col in enumerate(M.action[h]):
            expected = G.conjugate(h, M.degrees[j])
            bad = sorted(i for i in col if M.degrees[i] != expected)
            if bad:
                violations.append({
                    "h": G.name(h),
                    "basis": M.labels[j],
                    "expected_degree": G.name(expected),
                    "found_support": [M.labels[i] for i in bad],
                })
    return {"status": "pass" if not violations else "fail", "violations": violations}


class BraidedSpace:
    """A dimension and an invertible solution c of the braid equation on V⊗V.

    ``cols[i*d + j]`` is c(b_i ⊗ b_j) as a sparse vector over V⊗V.
    """

    def __init__(self, dim: int, cols, labels=(), module: YDModule | None = None,
                 check: bool = True):
        self.dim = dim
        self.cols = [dict(c) for c in cols]
        if len(self.cols) != dim * dim:
            raise InputError("braiding needs dim^2 columns")
        self.labels = tuple(labels) or tuple(f"y{i}" for i in range(dim))
        self.module = module
        self.quantum_linear_space = False
        if check:
            if not self.is_invertible():
                raise CompatibilityError("braiding is not invertible")
            w = self.braid_equation_witness()
            if w is not None:
                raise CompatibilityError(f"braid equation fails on basis tensor {w}", witness=w)

    def matrix(self) -> ExactMatrix:
        return ExactMatrix.from_columns(self.dim ** 2, self.cols)

    def is_invertible(self) -> bool:
        try:
            inverse(self.matrix())
        except ZeroDivisionError:
            return False
        return True

    def braid_equation_witness(self):
        """First basis tensor of V^{⊗3} where the braid equation fails, or None."""
        d = self.dim
        for t in range(d ** 3):
            v = {t: Fraction(1)}
            lhs = apply_c(self.cols, d, 3, 0, apply_c(self.cols, d, 3, 1, apply_c(self.cols, d, 3, 0, v)))
            rhs = apply_c(self.cols, d, 3, 1, apply_c(self.cols, d, 3, 0, apply_c(self.cols, d, 3, 1, v)))
            if lhs.keys() != rhs.keys() or any(lhs[k] != rhs[k] for k in lhs):
                a, r = divmod(t, d * d)
                return tuple(self.labels[i] for i in (a, r // d, r % d))
        return None

    def satisfies_braid_equation(self) -> bool:
        return self.braid_equation_witness() is None


def braiding(M: YDModule) -> BraidedSpace:
    """c(b_i ⊗ b_j) = deg(b_i)·b_j ⊗ b_i."""
    report = check_yd_axiom(M)
    if report["violations"]:
        v = report["violations"][0]
        raise CompatibilityError(
            f"YD compatibility fails for h={v['h']} on {v['basis']}: expected degree "
            f"{v['expected_degree']}, found support {v['found_support']}",
            witness=v,
        )
    d = M.dim
    cols = []
    for i in range(d):
        act = M.action[M.degrees[i]]
        for j in range(d):
            cols.append({k * d + i: x for k, x in act[j].items()})
    return BraidedSpace(d, cols, M.labels, module=M)


def braiding_inverse(B: BraidedSpace) -> ExactMatrix:
    return inverse(B.matrix())


def yd_braiding_inverse(M: YDModule) -> ExactMatrix:
    """Closed form c^-1(b_i ⊗ b_j) = b_j ⊗ deg(b_j)^-1 · b_i."""
    G = M.group
    d = M.dim
    cols = []
    for i in range(d):
        for j in range(d):
            act = M.action[G.inverse(M.degrees[j])]
            cols.append({j * d + k: x for k, x in act[i].items()})
    return ExactMatrix.from_columns(d * d, cols)


def diagonal_braiding(q, labels=()) -> BraidedSpace:
    """c(x_i ⊗ x_j) = q_ij x_j ⊗ x_i."""
    n = len(q)
    q = [[as_field(x) for x in row] for row in q]
    if any(len(row) != n for row in q):
        raise InputError("q must be a square matrix")
    for i in range(n):
        for j in range(n):
            if not q[i][j]:
                raise InputError(f"q[{i}][{j}] is zero")
    cols = [{j * n + i: q[i][j]} for i in range(n) for j in range(n)]
    B = BraidedSpace(n, cols, labels or tuple(f"x{i}" for i in range(n)))
    B.quantum_linear_space = all(q[i][j] * q[j][i] == 1 for i in range(n) for j in range(n) if i != j)
    B.q = q
    return B


def dual_module(M: YDModule) -> YDModule:
    """Dual: f_b has degree deg(b)^-1 and h acts by the transpose of h^-1."""
    G = M.group
    d = M.dim
    action = {}
    for h in range(G.size):
        src = M.action[G.inverse(h)]
        cols = [{} for _ in range(d)]
        for j, col in enumerate(src):
            for i, x in col.items():
                cols[i][j] = x
        action[h] = cols
    degrees = tuple(G.inverse(g) for g in M.degrees)
    return YDModule(G, degrees, action, tuple(f"{lab}*" for lab in M.labels))
