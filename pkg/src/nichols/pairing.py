"""Bilinear forms on tensor powers and the pairing [u, z] = (S^n u | z).

A form is a matrix F with F[i][j] = (v_i | w_j).  On V^{⊗n} ⊗ W^{⊗n} it is
extended either factorwise ("aligned") or with the W-factors read in
reverse ("reversed").  Matrices act on column vectors, so the pairing of
degree n is G = (S_V^n)^T F_n and its left radical is ker G^T.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product

from .braidops import quantum_symmetrizer
from .errors import CompatibilityError, InputError
from .linalg import ExactMatrix, Subspace, inverse, kernel
from .ydmodule import BraidedSpace, braiding, dual_module

__all__ = [
    "PairingConvention",
    "DualPair",
    "evaluation_pair",
    "tensor_form",
    "toba_pairing",
    "left_radical",
    "right_radical",
    "adjointness_holds",
    "radical_cross_check",
]


class PairingConvention(str, Enum):
    ALIGNED = "aligned"
    REVERSED = "reversed"


def _digits(t: int, d: int, n: int):
    out = [0] * n
    for k in range(n - 1, -1, -1):
        t, out[k] = divmod(t, d)
    return out


def _form_tensor(F: ExactMatrix, n: int, convention: PairingConvention) -> ExactMatrix:
    dv, dw = F.nrows, F.ncols
    if n == 0:
        return ExactMatrix(1, 1, [{0: Fraction(1)}])
    rows = []
    for s in range(dv ** n):
        vs = _digits(s, dv, n)
        # for each V-factor, the W-letters it pairs with
        choices = [list(F.rows[i].items()) for i in vs]
        if convention is PairingConvention.REVERSED:
            choices = choices[::-1]
        row = {}
        for combo in product(*choices):
            t, coef = 0, Fraction(1)
            for j, x in combo:
                t = t * dw + j
                coef = coef * x
            row[t] = row.get(t, 0) + coef
        rows.append({k: v for k, v in row.items() if v})
    return ExactMatrix(dv ** n, dw ** n, rows)


@dataclass
class DualPair:
    V: BraidedSpace
    W: BraidedSpace
    form: ExactMatrix
    convention: PairingConvention

    def __post_init__(self):
        self.convention = PairingConvention(self.convention)
        if (self.form.nrows, self.form.ncols) != (self.V.dim, self.W.dim):
            raise InputError("form must be dim V x dim W")
        if self.V.dim != self.W.dim:
            raise InputError("a nondegenerate form needs dim V = dim W")
        try:
            inverse(self.form)
        except ZeroDivisionError:
            raise InputError("base form is degenerate; only nondegenerate forms are supported") from None
        F2 = _form_tensor(self.form, 2, self.convention)
        lhs = self.V.matrix().transpose() @ F2
        rhs = F2 @ self.W.matrix()
        if lhs != rhs:
            bad = next(i for i, (a, b) in enumerate(zip(lhs.rows, rhs.rows)) if a != b)
            raise CompatibilityError(
                f"form is not compatible with the braidings ({self.convention.value}); "
                f"first failing V⊗V basis index {bad}",
                witness=bad,
            )


def evaluation_pair(M) -> DualPair:
    """V = M, W = its dual module, identity form, reversed convention."""
    V = braiding(M)
    W = braiding(dual_module(M))
    return DualPair(V, W, ExactMatrix.identity(M.dim), PairingConvention.REVERSED)


def tensor_form(P: DualPair, n: int) -> ExactMatrix:
    return _form_tensor(P.form, n, P.convention)


def _sym_matrix(B, n, budget):
    if n == 0:
        return ExactMatrix(1, 1, [{0: Fraction(1)}])
    return quantum_symmetrizer(n, B, budget).to_matrix()


def toba_pairing(P: DualPair, n: int, budget=None) -> ExactMatrix:
    """G[u][z] = (S^n u | z)."""
    return _sym_matrix(P.V, n, budget).transpose() @ tensor_form(P, n)


def left_radical(G: ExactMatrix) -> Subspace:
    return kernel(G.transpose())


def right_radical(G: ExactMatrix) -> Subspace:
    return kernel(G)


def adjointness_holds(P: DualPair, n: int) -> bool:
    """(S_V^n u | z) = (u | S_W^n z) for all basis tensors."""
    F = tensor_form(P, n)
    return _sym_matrix(P.V, n, None).transpose() @ F == F @ _sym_matrix(P.W, n, None)


def radical_cross_check(P: DualPair, max_deg: int, budget=None) -> dict:
    """Compare radicals of the pairing with ker S^n on both sides, degree by degree."""
    degrees = []
    for n in range(1, max_deg + 1):
        G = toba_pairing(P, n, budget)
        rad_l, rad_r = left_radical(G), right_radical(G)
        ker_v = kernel(_sym_matrix(P.V, n, budget))
        ker_w = kernel(_sym_matrix(P.W, n, budget))
        for side, rad, ker in (("left", rad_l, ker_v), ("right", rad_r, ker_w)):
            if rad != ker:
                witness = next((b for b in rad.basis if not ker.contains(b)), None) or next(
                    b for b in ker.basis if not rad.contains(b)
                )
                raise CompatibilityError(
                    f"{side} radical differs from ker S^{n} in degree {n}",
                    witness={"degree": n, "vector": {k: str(v) for k, v in witness.items()}},
                )
        degrees.append({
            "degree": n,
            "radical_dim": rad_l.dim,
            "kernel_dim": ker_v.dim,
            "quotient_dim": G.nrows - rad_l.dim,
            "equal": True,
        })
    return {"convention": P.convention.value, "degrees": degrees,
            "dims": [1] + [e["quotient_dim"] for e in degrees]}
