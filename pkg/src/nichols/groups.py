"""Finite groups stored as full Cayley tables.

Elements are integer indices ``0 .. size-1``.  Groups built from
permutations keep the permutation of every element so that class
representatives can be written in cycle or one-line notation.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "GroupError",
    "compose",
    "from_permutations",
    "symmetric",
    "dihedral",
    "cyclic",
    "conjugacy_class",
    "centralizer",
    "left_coset_reps",
]


class GroupError(ValueError):
    pass


def compose(x, y):
    """(x*y)(i) = x(y(i)) for permutations in one-line form."""
    return tuple(x[i] for i in y)


def _perm_inverse(x):
    out = [0] * len(x)
    for i, xi in enumerate(x):
        out[xi] = i
    return tuple(out)


def _check_perm(p, degree):
    if sorted(p) != list(range(degree)):
        raise GroupError(f"{list(p)} is not a permutation of 0..{degree - 1}")
    return tuple(p)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``mul[a][b]`` is the index of ``a*b``.  ``labels`` maps generator names
    to element indices; ``perms`` (optional) holds a faithful permutation
    image of every element.
    """

    mul: tuple
    identity: int = 0
    labels: dict = field(default_factory=dict)
    perms: tuple | None = None

    def __post_init__(self):
        m = len(self.mul)
        inv = [None] * m
        for a in range(m):
            row = self.mul[a]
            for b in range(m):
                if row[b] == self.identity:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise GroupError(f"element {a} has no inverse")
        object.__setattr__(self, "inv", tuple(inv))
        if self.perms is not None:
            object.__setattr__(self, "_perm_index", {p: i for i, p in enumerate(self.perms)})

    @property
    def size(self) -> int:
        return len(self.mul)

    def __len__(self):
        return len(self.mul)

    def multiply(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mul[self.mul[h][g]][self.inv[h]]

    def product(self, elements) -> int:
        out = self.identity
        for e in elements:
            out = self.mul[out][e]
        return out

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        out = self.identity
        for _ in range(k):
            out = self.mul[out][g]
        return out

    def order_of(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul[x][g]
            k += 1
        return k

    def check_associativity(self, sample: int | None = None, seed: int = 0) -> bool:
        """Exhaustive for size <= 64, otherwise ``sample`` random triples."""
        m = self.size
        mul = self.mul
        if m <= 64 and sample is None:
            return all(
                mul[mul[a][b]][c] == mul[a][mul[b][c]]
                for a in range(m) for b in range(m) for c in range(m)
            )
        import random

        rng = random.Random(seed)
        for _ in range(sample or 20_000):
            a, b, c = rng.randrange(m), rng.randrange(m), rng.randrange(m)
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                return False
        return True

    def element(self, expr) -> int:
        """Resolve an element from an index, a word, or a permutation.

        Accepted: ``int``; a list of images (one-line form); strings such as
        ``"rho^2*sigma"``, ``"e"``/``"1"``, ``"(0 1)(2 3)"`` or ``"[1,0,2]"``.
        """
        if isinstance(expr, int):
            if not 0 <= expr < self.size:
                raise GroupError(f"element index {expr} out of range")
            return expr
        if isinstance(expr, (list, tuple)):
            return self._from_perm(tuple(expr))
        text = str(expr).strip()
        if text in ("e", "1", "id", ""):
            return self.identity
        if text.startswith("["):
            return self._from_perm(tuple(int(t) for t in re.findall(r"-?\d+", text)))
        if text.startswith("("):
            return self._from_cycles(text)
        out = self.identity
        for factor in text.split("*"):
            factor = factor.strip()
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?", factor)
            if not m or m.group(1) not in self.labels:
                if factor in ("e", "1"):
                    continue
                raise GroupError(f"unknown group element {factor!r} in {text!r}")
            g = self.labels[m.group(1)]
            out = self.mul[out][self.power(g, int(m.group(2) or 1))]
        return out

    def _from_perm(self, perm):
        if self.perms is None:
            raise GroupError("group has no permutation realisation")
        if perm not in self._perm_index:
            raise GroupError(f"permutation {list(perm)} is not in the group")
        return self._perm_index[perm]

    def _from_cycles(self, text):
        if self.perms is None:
            raise GroupError("group has no permutation realisation")
        degree = len(self.perms[0])
        img = list(range(degree))
        # cycles compose right to left, matching (xy)(i) = x(y(i))
        for cyc in reversed(re.findall(r"\(([^)]*)\)", text)):
            pts = [int(t) for t in re.findall(r"\d+", cyc)]
            step = {pts[k]: pts[(k + 1) % len(pts)] for k in range(len(pts))} if pts else {}
            img = [step.get(v, v) for v in img]
        return self._from_perm(tuple(img))

    def name(self, g: int) -> str:
        """Readable name: a cycle string when permutations are known."""
        if self.perms is None:
            return str(g)
        p = self.perms[g]
        seen, cycles = set(), []
        for i in range(len(p)):
            if i in seen or p[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = p[j]
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(cycles) or "()"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup recorded by the sorted list of its element indices."""

    parent: FiniteGroup
    elements: tuple

    def __contains__(self, g):
        return g in self._set

    def __post_init__(self):
        object.__setattr__(self, "_set", frozenset(self.elements))

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def generated_by(self, gens) -> "Subgroup":
        return generated_subgroup(self.parent, gens)


def generated_subgroup(G: FiniteGroup, gens) -> Subgroup:
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        a = queue.popleft()
        for s in gens:
            b = G.mul[a][s]
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return Subgroup(G, tuple(sorted(seen)))


def from_permutations(degree: int, generators, max_size: int = 10_000, labels=None) -> FiniteGroup:
    """Close ``generators`` under composition.

    Elements are numbered breadth-first from the identity, applying the
    generators on the right in the order given.
    """
    gens = [_check_perm(g, degree) for g in generators]
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = compose(x, s)
            if y not in index:
                if len(elements) >= max_size:
                    raise GroupError(f"group closure exceeds {max_size} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    return _from_perm_list(elements, gens, labels)


def _from_perm_list(elements, gens, labels):
    index = {p: i for i, p in enumerate(elements)}
    mul = tuple(tuple(index[compose(x, y)] for y in elements) for x in elements)
    if labels is None:
        labels = [f"g{i}" for i in range(len(gens))]
    return FiniteGroup(
        mul=mul,
        identity=index[tuple(range(len(elements[0])))],
        labels={name: index[g] for name, g in zip(labels, gens)},
        perms=tuple(elements),
    )


def symmetric(n: int) -> FiniteGroup:
    """S_n on {0..n-1}; generators s1..s_{n-1} are the adjacent transpositions."""
    gens = []
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(tuple(p))
    return from_permutations(max(n, 1), gens, labels=[f"s{i + 1}" for i in range(n - 1)])


def dihedral(p: int) -> FiniteGroup:
    """D_p of order 2p acting on Z/p, generated by ``rho`` and ``sigma``.

    Elements are numbered rho^0..rho^{p-1} followed by rho^0 sigma ..
    rho^{p-1} sigma, so that rotations represent the cosets of <sigma>.
    """
    if p < 2:
        raise GroupError("dihedral group needs p >= 2")
    elements = [tuple((x + i) % p for x in range(p)) for i in range(p)]
    elements += [tuple((i - x) % p for x in range(p)) for i in range(p)]
    if p == 2:
        # D_2 is realised on 4 points so the action stays faithful
        elements = [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    rho, sigma = elements[1], elements[p]
    return _from_perm_list(elements, [rho, sigma], ["rho", "sigma"])


def cyclic(n: int) -> FiniteGroup:
    """Z/n with generator ``g``; element k is g^k."""
    elements = [tuple((x + k) % n for x in range(n)) for k in range(n)]
    return _from_perm_list(elements, [elements[1 % n]], ["g"])


def conjugacy_class(G: FiniteGroup, g: int) -> list[int]:
    return sorted({G.conjugate(x, g) for x in range(G.size)})


def centralizer(G: FiniteGroup, g: int) -> Subgroup:
    return Subgroup(G, tuple(x for x in range(G.size) if G.mul[x][g] == G.mul[g][x]))


def left_coset_reps(G: FiniteGroup, H: Subgroup) -> list[int]:
    """Smallest index of every left coset xH, in increasing order."""
    reps, covered = [], set()
    for x in range(G.size):
        if x in covered:
            continue
        reps.append(x)
        covered.update(G.mul[x][h] for h in H.elements)
    return reps


def coset_decomposition(G: FiniteGroup, H: Subgroup, reps) -> dict[int, tuple[int, int]]:
    """Map every element y to (rep, t) with y = rep * t and t in H."""
    out = {}
    for r in reps:
        for t in H.elements:
            out[G.mul[r][t]] = (r, t)
    return out
