"""Graded quotients of the tensor algebra: Nichols algebras and presented algebras.

Both kinds of quotient are built one degree at a time without forming
V^{⊗n}.  With Q_n = T^n / I_n and I_n ⊇ I_{n-1} ⊗ V, every degree is a
quotient of Q_{n-1} ⊗ V.  Coordinates there are ``pos * d + letter``, where
``pos`` indexes the normal words of degree n-1.  The relations of degree n
live in that coordinate space, and the normal words of degree n are the
non-pivot coordinates of their echelon form, so they are sorted in
lexicographic tensor order.

For the Nichols algebra, ker S^n = ker((π_{n-1} ⊗ id) S_{n-1,1}) because
S^n = (S^{n-1} ⊗ id) S_{n-1,1} and S^{n-1} factors through π_{n-1}
injectively.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .braidops import DEFAULT_BUDGET, last_letter_symmetrizer, shuffle_apply
from .errors import InputError, ResourceError, VerdictError
from .linalg import Echelon, ExactMatrix, Subspace, kernel, vec_iadd

__all__ = [
    "Certificate",
    "HilbertData",
    "GradedQuotient",
    "nichols_dims",
    "minimal_relations",
    "quotient_dims",
    "comultiplication_component",
    "golod_shafarevich",
    "poincare_check",
    "parse_relations",
]


@dataclass
class Certificate:
    verdict: str  # "finite" | "infinite" | "inconclusive"
    total: int | None = None
    cutoff: int | None = None
    first_negative: int | None = None
    terminating_degree: int | None = None
    note: str = ""

    def as_dict(self) -> dict:
        out = {"verdict": self.verdict}
        for k in ("total", "cutoff", "first_negative", "terminating_degree"):
            v = getattr(self, k)
            if v is not None:
                out[k] = v
        if self.note:
            out["note"] = self.note
        return out

    def __str__(self):
        return f"finite({self.total})" if self.verdict == "finite" else self.verdict


@dataclass
class HilbertData:
    h_V: list
    h_I: list
    g: list = field(default_factory=list)


class GradedQuotient:
    """T(V) / I computed degree by degree.

    ``mode`` is "nichols" (I = ⊕ ker S^n) or "presented" (I generated by
    ``generators``, a dict degree -> list of sparse tensors over V^{⊗k}).
    """

    def __init__(self, B, mode: str = "nichols", generators=None, budget: int | None = DEFAULT_BUDGET):
        if mode not in ("nichols", "presented"):
            raise ValueError(f"unknown mode {mode!r}")
        self.B = B
        self.d = B.dim
        self.mode = mode
        self.budget = budget
        self.generators = {}
        for k, gens in (generators or {}).items():
            if k < 1:
                raise InputError("relations must have degree >= 1")
            self.generators[k] = [dict(g) for g in gens if g]
        # degree 0: the empty word
        self.words: list[list[int]] = [[0]]
        self.relations: list[Subspace | None] = [None]
        self._pos: list[dict] = [{0: 0}]
        self._proj: list[dict] = [{0: {0: Fraction(1)}}]
        self._minimal: dict[int, list] = {}

    # -- structure ----------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.words) - 1

    @property
    def dims(self) -> list[int]:
        return [len(w) for w in self.words]

    @property
    def terminated(self) -> bool:
        return self.dims[-1] == 0

    @property
    def total(self) -> int:
        return sum(self.dims)

    def certificate(self) -> Certificate:
        if self.terminated:
            return Certificate("finite", total=self.total, terminating_degree=self.degree)
        return Certificate("inconclusive", cutoff=self.degree,
                           note="no vanishing component up to the computed degree")

    def extend_to(self, max_deg: int):
        while self.degree < max_deg and not self.terminated:
            self._next_degree()
        return self

    # -- projection onto normal words -------------------------------------
    def project_index(self, n: int, t: int) -> dict:
        """Normal form of the basis tensor with index ``t`` in degree n."""
        if n > self.degree:
            self.extend_to(n)
            if n > self.degree:
                return {}
        cache = self._proj[n]
        got = cache.get(t)
        if got is None:
            prefix = self.project_index(n - 1, t // self.d)
            got = self._reduce_coords(n, self._coords(prefix, t % self.d))
            cache[t] = got
        return got

    def project(self, n: int, vec: dict) -> dict:
        out: dict = {}
        for t, x in vec.items():
            vec_iadd(out, self.project_index(n, t), x)
        return out

    def _coords(self, prefix: dict, letter: int) -> dict:
        d = self.d
        return {p * d + letter: x for p, x in prefix.items()}

    def _reduce_coords(self, n: int, v: dict) -> dict:
        rel = self.relations[n]
        if rel is not None:
            v = rel.reduce(v)
        pos = self._pos[n]
        return {pos[c]: x for c, x in v.items()}

    def coords_to_tensor(self, n: int, v: dict) -> dict:
        """Lift a vector in Q_{n-1} ⊗ V coordinates to V^{⊗n}."""
        d = self.d
        prev = self.words[n - 1]
        return {prev[c // d] * d + c % d: x for c, x in v.items()}

    def lift(self, n: int, v: dict) -> dict:
        """Lift a vector over normal words of degree n to V^{⊗n}."""
        words = self.words[n]
        return {words[p]: x for p, x in v.items()}

    def _tensor_to_coords(self, n: int, vec: dict) -> dict:
        """(π_{n-1} ⊗ id) of a tensor in V^{⊗n}."""
        d = self.d
        out: dict = {}
        for s, x in vec.items():
            head, b = divmod(s, d)
            for p, y in self.project_index(n - 1, head).items():
                k = p * d + b
                val = out.get(k, 0) + x * y
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
        return out

    def multiply(self, i: int, a: dict, j: int, b: dict) -> dict:
        """Product of normal-word vectors a (degree i) and b (degree j)."""
        dj = self.d ** j
        wi, wj = self.words[i], self.words[j]
        tensor: dict = {}
        for p, x in a.items():
            for q, y in b.items():
                k = wi[p] * dj + wj[q]
                tensor[k] = tensor.get(k, 0) + x * y
        return self.project(i + j, {k: v for k, v in tensor.items() if v})

    # -- one degree ----------------------------------------------------------
    def _next_degree(self):
        n = self.degree + 1
        d = self.d
        prev_words = self.words[n - 1]
        size = len(prev_words) * d
        if self.budget is not None and size > self.budget:
            raise ResourceError(
                f"degree {n} needs a working space of {size} coordinates, budget {self.budget}"
            )
        if self.mode == "nichols":
            if n == 1:
                rel = Subspace(size)
            else:
                cols = []
                for c in range(size):
                    t = prev_words[c // d] * d + c % d
                    cols.append(self._tensor_to_coords(n, last_letter_symmetrizer(self.B, n, {t: Fraction(1)})))
                rel = kernel(ExactMatrix.from_columns(size, cols))
        else:
            rows = []
            for k, gens in self.generators.items():
                if k > n:
                    continue
                for u in self.words[n - k]:
                    shift = d ** k
                    for g in gens:
                        rows.append(self._tensor_to_coords(n, {u * shift + w: x for w, x in g.items()}))
            rel = Subspace(size, rows)
        self.relations.append(rel)
        words = [prev_words[c // d] * d + c % d for c in rel.complement_coordinates()]
        free = rel.complement_coordinates()
        self._pos.append({c: i for i, c in enumerate(free)})
        self.words.append(words)
        self._proj.append({})

    # -- relations -----------------------------------------------------------
    def generated_relations(self, n: int) -> Subspace:
        """Span, in Q_{n-1} ⊗ V coordinates, of L(Q_{n-k}) ⊗ L(K_k) for 2 <= k < n."""
        d = self.d
        size = len(self.words[n - 1]) * d
        rows = []
        for k in range(2, n):
            rel = self.relations[k]
            lifts = [self.coords_to_tensor(k, r) for r in rel.basis]
            shift = d ** k
            for u in self.words[n - k]:
                for r in lifts:
                    rows.append(self._tensor_to_coords(n, {u * shift + w: x for w, x in r.items()}))
        return Subspace(size, rows)

    def minimal_relations(self, n: int) -> list[dict]:
        """Tensors in V^{⊗n} spanning a complement of the generated part in K_n."""
        if n < 2:
            raise ValueError("relations start in degree 2")
        if n in self._minimal:
            return self._minimal[n]
        self.extend_to(n)
        if self.degree < n:
            # terminated earlier: degree n is everything
            self._extend_zero(n)
        K = self.relations[n]
        J = self.generated_relations(n)
        ech = Echelon()
        for row in J.basis:
            ech.add(row)
        out = []
        for r in K.basis:
            if ech.add(r) is not None:
                out.append(self.coords_to_tensor(n, r))
        self._minimal[n] = out
        return out

    def _extend_zero(self, n: int):
        while self.degree < n:
            m = self.degree + 1
            size = len(self.words[m - 1]) * self.d
            self.relations.append(Subspace.full(size))
            self.words.append([])
            self._pos.append({})
            self._proj.append({})

    def kernel_dim(self, n: int) -> int:
        """dim of I_n inside V^{⊗n}."""
        self.extend_to(n)
        if self.degree < n:
            self._extend_zero(n)
        return self.d ** n - len(self.words[n])


def _make(B, budget):
    return GradedQuotient(B, "nichols", budget=budget)


def nichols_dims(B, max_deg: int, budget: int | None = DEFAULT_BUDGET):
    """Graded dimensions of the Nichols algebra up to ``max_deg``.

    Returns (dims, certificate, state).  Stops at the first zero component.
    """
    if max_deg < 1:
        raise ValueError("max_deg must be >= 1")
    state = _make(B, budget).extend_to(max_deg)
    return state.dims, state.certificate(), state


def minimal_relations(B, n: int, budget: int | None = DEFAULT_BUDGET, state=None) -> list[dict]:
    state = state or _make(B, budget)
    return state.minimal_relations(n)


def quotient_dims(B, generators, max_deg: int, budget: int | None = DEFAULT_BUDGET):
    """Dims of T(V)/(generators); ``generators`` is a list of (degree, tensor)."""
    by_deg: dict[int, list] = {}
    for k, g in generators:
        if k < 2:
            raise InputError("relations must be homogeneous of degree >= 2")
        by_deg.setdefault(k, []).append(g)
    state = GradedQuotient(B, "presented", by_deg, budget=budget).extend_to(max_deg)
    return state.dims, state.certificate(), state


def comultiplication_component(state: GradedQuotient, i: int, j: int, element: dict) -> dict:
    """Δ_{i,j} of an element of B^{i+j} given over normal words.

    Returns {(p, q): scalar} over pairs of normal words of degrees i and j.
    """
    n = i + j
    state.extend_to(n)
    if state.degree < n:
        state._extend_zero(n)
    tensor = shuffle_apply(state.B, i, j, state.lift(n, element))
    dj = state.d ** j
    out: dict = {}
    for s, x in tensor.items():
        a, b = divmod(s, dj)
        pa = state.project_index(i, a)
        if not pa:
            continue
        pb = state.project_index(j, b)
        for p, y in pa.items():
            for q, z in pb.items():
                key = (p, q)
                v = out.get(key, 0) + x * y * z
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return out


def golod_shafarevich(dim_V: int, relation_counts: dict, cutoff: int):
    """Series (1 - h_V + h_I)^{-1} up to ``cutoff`` and an infinitude verdict."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    top = max([cutoff, *relation_counts]) if relation_counts else cutoff
    h_I = [0] * (top + 1)
    for k, r in relation_counts.items():
        h_I[k] += r
    h_V = [0, dim_V] + [0] * (top - 1)
    g = [1]
    for n in range(1, cutoff + 1):
        v = dim_V * g[n - 1]
        for k in range(2, n + 1):
            if h_I[k]:
                v -= h_I[k] * g[n - k]
        g.append(v)
    data = HilbertData(h_V[: cutoff + 1], h_I[: cutoff + 1], g)
    first_neg = next((n for n, x in enumerate(g) if x < 0), None)
    rels = {k: r for k, r in relation_counts.items() if r}
    if first_neg is None and not rels and dim_V >= 1:
        return data, Certificate("infinite", cutoff=cutoff, note="free algebra")
    if first_neg is None and set(rels) == {2} and dim_V ** 2 - 4 * rels[2] >= 0:
        return data, Certificate(
            "infinite", cutoff=cutoff,
            note=f"quadratic relations: dim^2 - 4r = {dim_V ** 2 - 4 * rels[2]} >= 0",
        )
    return data, Certificate("inconclusive", cutoff=cutoff, first_negative=first_neg)


def poincare_check(dims, certificate: Certificate | None = None) -> bool:
    """True iff the terminated profile is palindromic (trailing zeros ignored)."""
    if certificate is not None and certificate.verdict != "finite":
        raise VerdictError("Poincaré check needs a terminated (finite) profile")
    dims = list(dims)
    while dims and dims[-1] == 0:
        dims.pop()
    if not dims:
        raise VerdictError("empty dimension profile")
    return dims == dims[::-1]


def parse_relations(texts, labels, dim: int) -> list[tuple[int, dict]]:
    """Parse relation strings over basis ``labels`` into (degree, tensor) pairs."""
    from .expr import parse_polynomial

    index = {lab: i for i, lab in enumerate(labels)}
    out = []
    for text in texts:
        if "=" in text:
            lhs, rhs = text.split("=", 1)
            poly = parse_polynomial(lhs, index)
            for w, c in parse_polynomial(rhs, index).items():
                poly[w] = poly.get(w, 0) - c
            poly = {w: c for w, c in poly.items() if c}
        else:
            poly = parse_polynomial(text, index)
        if not poly:
            continue
        degs = {len(w) for w in poly}
        if len(degs) != 1:
            raise InputError(f"relation {text!r} is not homogeneous")
        k = degs.pop()
        tensor = {}
        for w, c in poly.items():
            t = 0
            for name in w:
                t = t * dim + index[name]
            tensor[t] = c
        out.append((k, tensor))
    return out
