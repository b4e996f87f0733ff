import itertools
import random
from fractions import Fraction

import pytest
import sympy

from nichols.braidops import naive_symmetrizer
from nichols.core import (
    Certificate, GradedQuotient, comultiplication_component, golod_shafarevich, minimal_relations,
    nichols_dims, parse_relations, poincare_check, quotient_dims,
)
from nichols.errors import InputError, ResourceError, VerdictError
from nichols.linalg import ExactMatrix, Subspace, rank
from nichols.scalars import root_of_unity
from nichols.ydmodule import braiding, diagonal_braiding

from _support import random_braiding, s3_module, sympy_rational_matrix


def _naive_dims(B, top):
    return [1] + [B.dim ** n - (B.dim ** n - rank(naive_symmetrizer(n, B).to_matrix())) for n in range(1, top + 1)]


def test_s3_against_sympy_rank():
    B = braiding(s3_module())
    dims, cert, _ = nichols_dims(B, 3)
    for n in (1, 2, 3):
        assert dims[n] == sympy_rational_matrix(naive_symmetrizer(n, B).to_matrix()).rank()


@pytest.mark.parametrize("seed", range(6))
def test_random_braidings_against_naive_rank(seed):
    B = random_braiding(random.Random(seed))
    dims, _, _ = nichols_dims(B, 4)
    dims = dims + [0] * (5 - len(dims))
    assert dims == _naive_dims(B, 4)


def test_qls_monomial_basis():
    q = [[-1, root_of_unity(3)], [root_of_unity(3, 2), root_of_unity(3)]]
    B = diagonal_braiding(q)
    dims, cert, st = nichols_dims(B, 6)
    oracle = [sum(1 for a in range(2) for b in range(3) if a + b == n) for n in range(4)]
    assert dims[:4] == oracle and dims[4] == 0 and cert.total == 6
    # the monomials x0^a x1^b project to independent vectors
    for n in range(1, 4):
        vecs = []
        for a in range(2):
            b = n - a
            if 0 <= b < 3:
                t = 0
                for letter in [0] * a + [1] * b:
                    t = t * 2 + letter
                vecs.append(st.project(n, {t: 1}))
        assert Subspace(dims[n], vecs).dim == len(vecs)


def test_relations_lie_in_kernel_and_ideal():
    B = braiding(s3_module())
    st = GradedQuotient(B).extend_to(5)
    for n in (2, 3, 4):
        S = naive_symmetrizer(n, B)
        for r in st.minimal_relations(n):
            assert not S.apply(r)
    for r in st.minimal_relations(2):
        for a in range(3):
            for b in range(3):
                left = {(a * 3 + b) * 9 + t: x for t, x in r.items()}
                right = {t * 9 + a * 3 + b: x for t, x in r.items()}
                mid = {(a * 9 + t) * 3 + b: x for t, x in r.items()}
                for v in (left, right, mid):
                    assert st.project(4, v) == {}


def test_minimal_relation_counts_s3():
    B = braiding(s3_module())
    st = GradedQuotient(B)
    assert len(st.minimal_relations(2)) == st.kernel_dim(2) == 5
    assert st.kernel_dim(3) == 27 - 3
    assert len(minimal_relations(B, 3, state=st)) == 0
    assert len(st.minimal_relations(4)) == 0
    assert len(st.minimal_relations(5)) == 0


def test_coassociativity_s3():
    B = braiding(s3_module())
    st = GradedQuotient(B).extend_to(5)
    for n in (3, 4):
        for (i, j, k) in [c for c in itertools.product(range(1, n), repeat=3) if sum(c) == n]:
            for e in range(st.dims[n]):
                elem = {e: Fraction(1)}
                lhs, rhs = {}, {}
                for (pq, r), s in comultiplication_component(st, i + j, k, elem).items():
                    for (p, q), s2 in comultiplication_component(st, i, j, {pq: 1}).items():
                        lhs[p, q, r] = lhs.get((p, q, r), 0) + s * s2
                for (p, qr), s in comultiplication_component(st, i, j + k, elem).items():
                    for (q, r), s2 in comultiplication_component(st, j, k, {qr: 1}).items():
                        rhs[p, q, r] = rhs.get((p, q, r), 0) + s * s2
                assert {x: v for x, v in lhs.items() if v} == {x: v for x, v in rhs.items() if v}


def test_no_primitives_above_degree_one():
    B = braiding(s3_module())
    st = GradedQuotient(B).extend_to(5)
    for n in (2, 3, 4):
        cols = []
        for e in range(st.dims[n]):
            comp = comultiplication_component(st, n - 1, 1, {e: Fraction(1)})
            cols.append({p * 3 + q: s for (p, q), s in comp.items()})
        assert rank(ExactMatrix.from_columns(st.dims[n - 1] * 3, cols)) == st.dims[n]


def test_multiplication_associative_s3():
    B = braiding(s3_module())
    st = GradedQuotient(B).extend_to(5)
    for a in range(3):
        for b in range(st.dims[2]):
            for c in range(3):
                lhs = st.multiply(3, st.multiply(1, {a: 1}, 2, {b: 1}), 1, {c: 1})
                rhs = st.multiply(1, {a: 1}, 3, st.multiply(2, {b: 1}, 1, {c: 1}))
                assert lhs == rhs


def test_top_degree_is_one_dimensional():
    B = braiding(s3_module())
    dims, cert, st = nichols_dims(B, 10)
    assert cert.verdict == "finite" and cert.terminating_degree == 5
    assert str(cert) == "finite(12)"
    assert st.project_index(7, 0) == {}


def test_budget_is_enforced():
    B = braiding(s3_module())
    with pytest.raises(ResourceError):
        nichols_dims(B, 4, budget=5)


@pytest.mark.parametrize("counts,dim_v", [({2: 5}, 3), ({2: 3}, 3), ({2: 1, 3: 2}, 2), ({2: 4, 4: 1}, 3), ({}, 2)])
def test_golod_shafarevich_against_series(counts, dim_v):
    t = sympy.Symbol("t")
    denom = 1 - dim_v * t + sum(r * t ** k for k, r in counts.items())
    series = sympy.series(1 / denom, t, 0, 13).removeO()
    oracle = [int(series.coeff(t, n)) for n in range(13)]
    data, cert = golod_shafarevich(dim_v, counts, 12)
    assert data.g == oracle


def test_golod_shafarevich_verdicts():
    _, cert = golod_shafarevich(3, {2: 5}, 20)
    assert cert.verdict == "inconclusive" and cert.first_negative == 3
    _, cert = golod_shafarevich(11, {2: 21}, 40)
    assert cert.verdict == "infinite"
    _, cert = golod_shafarevich(2, {}, 10)
    assert cert.verdict == "infinite"


def test_poincare_check():
    assert poincare_check([1, 3, 4, 3, 1, 0])
    assert not poincare_check([1, 2, 1, 1])
    with pytest.raises(VerdictError):
        poincare_check([1, 3, 4], Certificate("inconclusive", cutoff=2))
    with pytest.raises(VerdictError):
        poincare_check([0, 0])


def test_parse_relations():
    rels = parse_relations(["y0*y1 + y1*y0", "y0*y0 = 0"], ("y0", "y1"), 2)
    assert rels == [(2, {1: 1, 2: 1}), (2, {0: 1})]
    with pytest.raises(InputError):
        parse_relations(["y0 + y0*y1"], ("y0", "y1"), 2)


def test_quotient_by_kernel_reproduces_nichols():
    B = braiding(s3_module())
    st = GradedQuotient(B)
    gens = [(2, r) for r in st.minimal_relations(2)] + [(4, r) for r in st.minimal_relations(4)]
    dims, cert, _ = quotient_dims(B, gens, 8)
    assert dims == [1, 3, 4, 3, 1, 0] and cert.total == 12
