"""Permutations, shuffles and the braid-group action on tensor powers.

Conventions
-----------
* Permutations are tuples in one-line form, composed as (xy)(i) = x(y(i)).
* ``c_i`` (0-based) acts on tensor factors i and i+1 of V^{⊗n}.
* A word [i1, ..., ik] stands for c_{i1} ∘ ... ∘ c_{ik}; the rightmost
  letter is applied first.
* Tensor basis index of b_{a1} ⊗ ... ⊗ b_{an} is the base-d integer with a1
  most significant.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import ResourceError
from .linalg import ExactMatrix, vec_iadd

__all__ = [
    "DEFAULT_BUDGET",
    "length",
    "reduced_word",
    "perm_compose",
    "perm_inverse",
    "TensorOperator",
    "apply_c",
    "apply_word",
    "matsumoto_action",
    "shuffle_set",
    "partial_symmetrizer",
    "quantum_symmetrizer",
    "naive_symmetrizer",
    "shuffle_apply",
]

DEFAULT_BUDGET = 200_000


def perm_compose(x, y):
    return tuple(x[i] for i in y)


def perm_inverse(x):
    out = [0] * len(x)
    for i, xi in enumerate(x):
        out[xi] = i
    return tuple(out)


def length(x) -> int:
    """Number of inversions."""
    n = len(x)
    return sum(1 for i in range(n) for j in range(i + 1, n) if x[i] > x[j])


def reduced_word(x) -> list[int]:
    """Reduced word with x = τ_{w0} ... τ_{wk}, peeling the smallest right descent."""
    x = list(x)
    word = []
    while True:
        for i in range(len(x) - 1):
            if x[i] > x[i + 1]:
                x[i], x[i + 1] = x[i + 1], x[i]
                word.append(i)
                break
        else:
            break
    word.reverse()
    return word


def apply_c(c_cols, d: int, n: int, i: int, vec: dict) -> dict:
    """Apply c at positions (i, i+1) of V^{⊗n} to a sparse vector."""
    shift = d ** (n - i - 2)
    dd = d * d
    out: dict = {}
    for t, x in vec.items():
        pair = (t // shift) % dd
        base = t - pair * shift
        for o, y in c_cols[pair].items():
            k = base + o * shift
            v = out.get(k, 0) + x * y
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def apply_word(c_cols, d: int, n: int, word, vec: dict) -> dict:
    for i in reversed(word):
        vec = apply_c(c_cols, d, n, i, vec)
    return vec


class TensorOperator:
    """Linear operator on V^{⊗n} stored as sparse columns."""

    __slots__ = ("n", "dim", "cols")

    def __init__(self, n: int, dim: int, cols):
        self.n = n
        self.dim = dim
        self.cols = cols

    @property
    def size(self) -> int:
        return self.dim ** self.n

    @classmethod
    def identity(cls, n: int, dim: int) -> "TensorOperator":
        return cls(n, dim, [{t: Fraction(1)} for t in range(dim ** n)])

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for t, x in vec.items():
            vec_iadd(out, self.cols[t], x)
        return out

    def compose(self, other: "TensorOperator") -> "TensorOperator":
        """self ∘ other."""
        return TensorOperator(self.n, self.dim, [self.apply(col) for col in other.cols])

    __matmul__ = compose

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        cols = []
        for a, b in zip(self.cols, other.cols):
            s = dict(a)
            vec_iadd(s, b)
            cols.append(s)
        return TensorOperator(self.n, self.dim, cols)

    def tensor_identity(self) -> "TensorOperator":
        """self ⊗ id_V."""
        d = self.dim
        cols = []
        for t in range(d ** (self.n + 1)):
            col = self.cols[t // d]
            b = t % d
            cols.append({k * d + b: x for k, x in col.items()})
        return TensorOperator(self.n + 1, d, cols)

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        if (self.n, self.dim) != (other.n, other.dim):
            return False
        for a, b in zip(self.cols, other.cols):
            if a.keys() != b.keys() or any(a[k] != b[k] for k in a):
                return False
        return True

    def is_zero(self) -> bool:
        return not any(self.cols)

    def to_matrix(self) -> ExactMatrix:
        return ExactMatrix.from_columns(self.size, self.cols)


def _check_budget(d: int, n: int, budget: int | None):
    if budget is not None and d ** n > budget:
        raise ResourceError(f"dim^n = {d}^{n} = {d ** n} exceeds budget {budget}")


def matsumoto_action(x, B, word=None) -> TensorOperator:
    """s(x) on V^{⊗n}; ``word`` overrides the default reduced word."""
    n = len(x)
    d = B.dim
    word = reduced_word(x) if word is None else list(word)
    cols = [apply_word(B.cols, d, n, word, {t: Fraction(1)}) for t in range(d ** n)]
    return TensorOperator(n, d, cols)


def shuffle_set(*parts) -> list[tuple]:
    """All x with x^{-1} increasing on each consecutive block of sizes ``parts``."""
    if len(parts) == 1 and isinstance(parts[0], (list, tuple)):
        parts = tuple(parts[0])
    n = sum(parts)
    out = []

    def rec(b, free, xinv):
        if b == len(parts):
            out.append(perm_inverse(xinv))
            return
        for chosen in itertools.combinations(free, parts[b]):
            rest = [f for f in free if f not in chosen]
            rec(b + 1, rest, xinv + list(chosen))

    rec(0, list(range(n)), [])
    return out


def partial_symmetrizer(kind: str, parts, B) -> TensorOperator:
    """S_{parts} (kind "X") or T_{parts} (kind "Y", inverse shuffles)."""
    perms = shuffle_set(*parts)
    if kind.upper() == "Y":
        perms = [perm_inverse(x) for x in perms]
    elif kind.upper() != "X":
        raise ValueError("kind must be 'X' or 'Y'")
    n = sum(parts)
    op = TensorOperator(n, B.dim, [{} for _ in range(B.dim ** n)])
    for x in perms:
        op = op + matsumoto_action(x, B)
    return op


def shuffle_apply(B, i: int, j: int, vec: dict) -> dict:
    """S_{i,j} applied to a sparse vector of V^{⊗(i+j)}."""
    n = i + j
    out: dict = {}
    for x in shuffle_set(i, j):
        vec_iadd(out, apply_word(B.cols, B.dim, n, reduced_word(x), vec))
    return out


def last_letter_symmetrizer(B, n: int, vec: dict) -> dict:
    """S_{n-1,1} applied to ``vec`` via v + c_{n-2}(v + c_{n-3}(... )) nesting."""
    w = vec
    for k in range(n - 1):
        w = apply_c(B.cols, B.dim, n, k, w)
        vec_iadd(w, vec)
    return w


def quantum_symmetrizer(n: int, B, budget: int | None = DEFAULT_BUDGET) -> TensorOperator:
    """S^n by the recursion S^n = (S^{n-1} ⊗ id) ∘ S_{n-1,1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = B.dim
    _check_budget(d, n, budget)
    op = TensorOperator.identity(1, d)
    for m in range(2, n + 1):
        cols = []
        for t in range(d ** m):
            v = last_letter_symmetrizer(B, m, {t: Fraction(1)})
            out: dict = {}
            for s, x in v.items():
                head, b = divmod(s, d)
                for k, y in op.cols[head].items():
                    key = k * d + b
                    val = out.get(key, 0) + x * y
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
            cols.append(out)
        op = TensorOperator(m, d, cols)
    return op


def naive_symmetrizer(n: int, B) -> TensorOperator:
    """Σ_{x ∈ S_n} s(x), summed term by term (test oracle)."""
    d = B.dim
    op = TensorOperator(n, d, [{} for _ in range(d ** n)])
    for x in itertools.permutations(range(n)):
        op = op + matsumoto_action(x, B)
    return op
