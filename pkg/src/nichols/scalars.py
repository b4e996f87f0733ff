"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_N).

Rationals are plain :class:`fractions.Fraction` (or ``int``); the linear
algebra layers accept either, so rational-only computations never pay for
the cyclotomic machinery.  :class:`CycScalar` stores a dense coefficient
vector of length phi(N) for the polynomial in zeta_N, reduced modulo the
N-th cyclotomic polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

__all__ = [
    "CycScalar",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "as_field",
    "is_root_of_unity",
    "multiplicative_order",
    "scalar_order",
    "format_scalar",
    "parse_scalar",
]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _mobius(n: int) -> int:
    sign, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            sign = -sign
        p += 1
    if m > 1:
        sign = -sign
    return sign


# --- dense polynomials over Q, low degree first -----------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(_trim(a)) >= len(b):
        a = _trim(a)
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, bi in enumerate(b):
            a[shift + i] -= f * bi
    return _trim(q), _trim(a)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first (cached per order)."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reductions of x^0 .. x^(2*phi(n)-2) modulo Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(max(2 * deg - 1, 1)):
        rows.append(tuple(cur))
        # multiply by x, then reduce the overflow with x^deg = -sum phi_i x^i
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _reduce(coeffs, n: int) -> tuple[Fraction, ...]:
    deg = euler_phi(n)
    if len(coeffs) <= deg:
        out = [Fraction(c) for c in coeffs] + [Fraction(0)] * (deg - len(coeffs))
        return tuple(out)
    table = _power_table(n)
    if len(coeffs) > len(table):
        _, rem = _poly_divmod(coeffs, cyclotomic_polynomial(n))
        return _reduce(rem, n)
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if c:
            for i, t in enumerate(table[k]):
                if t:
                    out[i] += c * t
    return tuple(out)


@lru_cache(maxsize=None)
def _ramanujan(n: int, j: int) -> Fraction:
    """Normalized trace Tr(zeta_n^j) / phi(n)."""
    g = gcd(j % n, n) if j % n else n
    m = n // g
    return Fraction(_mobius(m), euler_phi(m))


class CycScalar:
    """An element of Q(zeta_N) as a polynomial in zeta_N of degree < phi(N).

    Instances are immutable.  Operands of different orders are embedded into
    the lcm order before combining; ``int`` and ``Fraction`` operands are
    promoted transparently.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "coeffs", _reduce(list(coeffs), order))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycScalar is immutable")

    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def rational(cls, value, order: int = 1) -> "CycScalar":
        deg = euler_phi(order)
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    # -- order handling -----------------------------------------------------
    def embed(self, order: int) -> "CycScalar":
        """Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N)."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {order}")
        k = order // self.order
        poly = [Fraction(0)] * (k * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * k] = c
        return CycScalar(order, poly)

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.order == self.order:
                return self, other
            n = _lcm(self.order, other.order)
            return self.embed(n), other.embed(n)
        if isinstance(other, (int, Fraction)) or isinstance(other, _RationalABC):
            return self, CycScalar.rational(other, self.order)
        return None, None

    # -- predicates ---------------------------------------------------------
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            # normalized trace is invariant under the order embeddings
            t = sum((c * _ramanujan(self.order, i) for i, c in enumerate(self.coeffs) if c), Fraction(0))
            h = hash(t) if not self.is_rational() else hash(self.coeffs[0])
            object.__setattr__(self, "_hash", h)
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CycScalar._raw(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._raw(self.order, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CycScalar._raw(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar._raw(self.order, tuple(x * other for x in self.coeffs))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CycScalar._raw(a.order, _reduce(_poly_mul(a.coeffs, b.coeffs), a.order))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        if self.is_rational():
            return CycScalar.rational(1 / self.coeffs[0], self.order)
        # Phi_N is irreducible, so gcd(a, Phi_N) = 1 and s*a + t*Phi_N = 1.
        r0, r1 = [Fraction(c) for c in cyclotomic_polynomial(self.order)], _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("scalar not invertible")
        c = r1[0]
        return CycScalar(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycScalar._raw(self.order, tuple(x / other for x in self.coeffs))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycScalar.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"CycScalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def root_of_unity(n: int, k: int = 1) -> CycScalar:
    """zeta_n ** k, reduced modulo Phi_n."""
    if n < 1:
        raise ValueError("root_of_unity needs n >= 1")
    k %= n
    poly = [0] * (k + 1)
    poly[k] = 1
    return CycScalar(n, poly)


def as_field(x):
    """Normalise a scalar: rational CycScalars become Fractions."""
    if isinstance(x, CycScalar):
        return x.to_fraction() if x.is_rational() else x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact scalar: {x!r}")


def scalar_order(x) -> int:
    """Cyclotomic order the scalar is stored in (1 for rationals)."""
    return x.order if isinstance(x, CycScalar) else 1


def multiplicative_order(x, bound: int = 10_000) -> int | None:
    """Smallest k >= 1 with x**k == 1, or None if none up to ``bound``."""
    if not x:
        return None
    if not isinstance(x, CycScalar):
        x = Fraction(x)
        if x == 1:
            return 1
        return 2 if x == -1 else None
    # a root of unity in Q(zeta_N) has order dividing lcm(2, N)
    cap = min(bound, _lcm(2, x.order))
    p = x
    for k in range(1, cap + 1):
        if p == 1:
            return k
        p = p * x
    return None


def is_root_of_unity(x) -> bool:
    return multiplicative_order(x) is not None


def format_scalar(x) -> str:
    """Text form accepted by :func:`parse_scalar` (``-3/2``, ``2*z(5)^3 - z(5)^1``)."""
    if not isinstance(x, CycScalar):
        return str(Fraction(x))
    if x.is_rational():
        return str(x.coeffs[0])
    terms = []
    for i, c in enumerate(x.coeffs):
        if not c:
            continue
        if i == 0:
            body, sign = str(abs(c)), c < 0
        else:
            mono = f"z({x.order})^{i}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = c < 0
        if not terms:
            terms.append(("-" if sign else "") + body)
        else:
            terms.append(("- " if sign else "+ ") + body)
    return " ".join(terms)


def parse_scalar(text: str):
    """Parse the scalar syntax: rationals, ``z(N)^k``, ``+ - *`` and parentheses."""
    from .expr import parse_polynomial

    poly = parse_polynomial(text, generators=())
    return as_field(poly.get((), 0))
