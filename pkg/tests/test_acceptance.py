"""End-to-end acceptance checks, one marker per criterion.

The terminal summary (see conftest.py) prints one PASS/FAIL line per criterion.
"""
import io
import itertools
import json
import random
import time
from importlib import resources

import pytest
import sympy

from nichols.bosonize import generator_map, rank12_fixture_check, smash_product, verify_presentation
from nichols.braidops import matsumoto_action, naive_symmetrizer, quantum_symmetrizer
from nichols.cli import run
from nichols.core import GradedQuotient, golod_shafarevich, nichols_dims, parse_relations, poincare_check, quotient_dims
from nichols.pairing import adjointness_holds, evaluation_pair, radical_cross_check
from nichols.specfile import load_spec, read_relations

from _support import D4_RELATIONS, d4_module, dp_module, random_braiding, s3_module
from nichols.ydmodule import braiding, diagonal_braiding
from nichols.scalars import root_of_unity

FIXTURES = sorted(p.name for p in (resources.files("nichols") / "fixtures").iterdir() if p.name.endswith(".toml"))


def _cli(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, json.loads(buf.getvalue())


# -- 1 ----------------------------------------------------------------------
@pytest.mark.criterion(1)
def test_c1_s3_nichols_algebra():
    start = time.perf_counter()
    code, rep = _cli("dims", "s3_transpositions", "--max-deg", "8")
    elapsed = time.perf_counter() - start
    res = rep["result"]
    assert code == 0
    assert res["dims"][:5] == [1, 3, 4, 3, 1] and res["dims"][5:] == [0]
    assert res["total"] == 12 and res["certificate"]["verdict"] == "finite"
    assert res["palindromic"] is True
    assert elapsed < 10


# -- 2 ----------------------------------------------------------------------
def _s3_kernel_dim():
    return GradedQuotient(braiding(load_spec("s3_cyclic_basis").module)).kernel_dim(2)


@pytest.mark.criterion(2)
def test_c2_kernel_of_s2_true_value():
    # 9 - dim B^2 = 9 - 4
    assert _s3_kernel_dim() == 5


@pytest.mark.criterion(2)
@pytest.mark.xfail(strict=True, reason="target 6 unattainable: dim ker S^2 = 9 - 4 = 5")
def test_c2_kernel_of_s2_stated_target():
    assert _s3_kernel_dim() == 6


@pytest.mark.criterion(2)
def test_c2_quotient_matches_toba():
    spec = load_spec("s3_cyclic_basis")
    gens = parse_relations(read_relations("s3_relations.txt"), spec.braided.labels, 3)
    q_dims, q_cert, _ = quotient_dims(spec.braided, gens, 10)
    t_dims, t_cert, _ = nichols_dims(spec.braided, 10)
    assert q_dims == t_dims == [1, 3, 4, 3, 1, 0]
    assert q_cert.total == t_cert.total == 12


# -- 3 ----------------------------------------------------------------------
@pytest.mark.criterion(3)
@pytest.mark.parametrize("p", [3, 5, 7])
def test_c3_dihedral_kernel_law(p):
    start = time.perf_counter()
    code, rep = _cli("relations", f"d{p}_sigma", "--deg", "2")
    assert code == 0
    assert rep["result"]["degrees"][0]["kernel_dim"] == 2 * p - 1
    assert time.perf_counter() - start < 30


# -- 4 ----------------------------------------------------------------------
@pytest.mark.criterion(4)
def test_c4_golod_shafarevich_p11_infinite():
    code, rep = _cli("gs", "d11_sigma", "--cutoff", "50")
    assert code == 0 and rep["result"]["verdict"] == "infinite"
    assert rep["result"]["relation_counts"] == {"2": 21}


@pytest.mark.criterion(4)
def test_c4_golod_shafarevich_p3_inconclusive():
    code, rep = _cli("gs", "d3_sigma", "--cutoff", "10")
    res = rep["result"]
    assert res["verdict"] == "inconclusive"
    assert res["certificate"]["first_negative"] == 3
    t = sympy.Symbol("t")
    r = res["relation_counts"]["2"]
    series = sympy.series(1 / (1 - 3 * t + r * t ** 2), t, 0, 11).removeO()
    assert [int(series.coeff(t, n)) for n in range(11)] == [int(x) for x in res["g"]]
    assert int(res["g"][3]) == -3


# -- 5 ----------------------------------------------------------------------
@pytest.mark.criterion(5)
def test_c5_d4_quotient():
    start = time.perf_counter()
    code, rep = _cli("quotient", "d4_z", "--relations", "d4_relations.txt", "--max-deg", "12")
    assert code == 0
    assert rep["result"]["relation_count"] == 11
    assert rep["result"]["total"] == 64
    assert rep["result"]["dims"] == [1, 4, 8, 12, 14, 12, 8, 4, 1, 0]
    assert time.perf_counter() - start < 600


@pytest.mark.criterion(5)
def test_c5_relation_file_matches_module():
    B = braiding(d4_module())
    assert [r.replace(" ", "") for r in read_relations("d4_relations.txt")] == D4_RELATIONS
    assert load_spec("d4_z").braided.matrix() == B.matrix()
    dims, cert, _ = quotient_dims(B, parse_relations(D4_RELATIONS, B.labels, 4), 12)
    assert cert.total == 64


# -- 6 ----------------------------------------------------------------------
@pytest.fixture(scope="module")
def d3_table():
    spec = load_spec("d3_sigma")
    _, _, st = nichols_dims(spec.braided, 10)
    return spec, smash_product(st, spec.module, verify=True)


@pytest.mark.criterion(6)
def test_c6_bosonization_dimension_and_axioms(d3_table):
    _, T = d3_table
    assert T.dim == 72
    assert all(v["ok"] for v in T.axioms.values())
    assert T.axioms["associativity"]["mode"] == "exhaustive"
    assert set(T.axioms) >= {"associativity", "coassociativity", "antipode", "counit", "unit"}


@pytest.mark.criterion(6)
def test_c6_presentation_relations(d3_table):
    spec, T = d3_table
    names = generator_map(T, spec.presentation["generators"])
    rep = verify_presentation(T, spec.presentation["relations"], names)
    assert rep["all_hold"], [r for r in rep["relations"] if not r["holds"]]


@pytest.mark.criterion(6)
def test_c6_s3_transposition_bosonization():
    M = s3_module()
    _, _, st = nichols_dims(braiding(M), 10)
    assert smash_product(st, M).dim == 72


@pytest.mark.criterion(6)
def test_c6_rank12_fixture():
    rep = rank12_fixture_check()
    assert rep["all_pass"] and rep["rank"] == 12


# -- 7 ----------------------------------------------------------------------
@pytest.mark.criterion(7)
@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_c7_braided_lines(N):
    code, rep = _cli("dims", f"taft_{N}", "--max-deg", str(N + 3))
    assert code == 0 and rep["result"]["dims"] == [1] * N + [0]


@pytest.mark.criterion(7)
def test_c7_quantum_linear_space():
    code, rep = _cli("dims", "qls_2_3")
    oracle = [sum(1 for a in range(2) for b in range(3) if a + b == n) for n in range(4)]
    assert oracle == [1, 2, 2, 1]
    assert rep["result"]["dims"] == oracle + [0] and rep["result"]["total"] == 6


# -- 8 ----------------------------------------------------------------------
@pytest.mark.criterion(8)
@pytest.mark.parametrize("name", FIXTURES)
def test_c8_braid_equation_every_fixture(name):
    code, rep = _cli("check", name)
    assert code == 0
    assert rep["result"]["braid_equation"] and rep["result"]["invertible"]


@pytest.mark.criterion(8)
@pytest.mark.parametrize("n", [3, 4])
def test_c8_matsumoto_independence(n):
    from test_braidops import _all_reduced_words
    B = braiding(s3_module())
    for x in itertools.permutations(range(n)):
        ref = matsumoto_action(x, B)
        for w in _all_reduced_words(x):
            assert matsumoto_action(x, B, word=w) == ref


@pytest.mark.criterion(8)
@pytest.mark.parametrize("seed", range(3))
def test_c8_recursion_equals_naive(seed):
    B = random_braiding(random.Random(100 + seed))
    for n in range(1, 5):
        assert quantum_symmetrizer(n, B, None) == naive_symmetrizer(n, B)


@pytest.mark.criterion(8)
def test_c8_adjointness():
    P = evaluation_pair(s3_module())
    assert all(adjointness_holds(P, n) for n in range(1, 5))


@pytest.mark.criterion(8)
def test_c8_radical_equals_kernel():
    rep = radical_cross_check(evaluation_pair(s3_module()), 4)
    assert all(e["equal"] for e in rep["degrees"]) and rep["dims"] == [1, 3, 4, 3, 1]


@pytest.mark.criterion(8)
@pytest.mark.parametrize("name", ["s3_transpositions", "s3_cyclic_basis", "d3_sigma", "taft_2", "taft_3",
                                  "taft_4", "taft_5", "qls_2_3", "s4_transpositions"])
def test_c8_poincare_palindrome(name):
    code, rep = _cli("dims", name, "--max-deg", "14")
    assert rep["result"]["certificate"]["verdict"] == "finite"
    assert rep["result"]["palindromic"] is True
    assert poincare_check(rep["result"]["dims"])


# -- open cases: must finish and report inconclusive ------------------------
@pytest.mark.parametrize("name,dim", [("s4_transpositions", 6), ("s5_transpositions", 10),
                                      ("d5_sigma", 5), ("d7_sigma", 7)])
def test_open_cases_run_to_degree_four(name, dim):
    code, rep = _cli("dims", name, "--max-deg", "4")
    assert code == 0
    assert rep["result"]["certificate"]["verdict"] == "inconclusive"
    assert rep["result"]["dims"][1] == dim and len(rep["result"]["dims"]) == 5
