from fractions import Fraction

import pytest

from fkdim.errors import DomainError
from fkdim.families import CompleteMultipartite, Cycle, Grid, Path, Petersen, generate
from fkdim.fractional import (
    Extreme, ResolvingFunction, build_kresolving_lp, classify_extremes, default_samples,
    fractional_dimension, fractional_k_dimension, grid_samples, sweep_phi, verify_k_resolving,
)
from fkdim.graph import members, pair_system

F = Fraction


def g_(spec):
    return generate(spec)


# --- LP construction -------------------------------------------------------------------

def test_lp_shapes():
    lp = build_kresolving_lp(pair_system(g_(Path(2))), 2)
    assert lp.num_vars == 2
    assert [(sorted(r.vars), r.rhs) for r in lp.constraints] == [([0, 1], 2)]

    assert len(build_kresolving_lp(pair_system(g_(Path(5))), 4).constraints) == 10

    lp = build_kresolving_lp(pair_system(g_(Petersen())), 6)
    assert lp.num_vars == 10 and len(lp.constraints) == 45
    assert all(len(r.vars) == 6 for r in lp.constraints)


@pytest.mark.parametrize("k, msg", [(0, "below 1"), (F(1, 2), "below 1"), (5, "k exceeds kappa=4")])
def test_k_out_of_range(k, msg):
    with pytest.raises(DomainError, match=msg):
        fractional_k_dimension(g_(Path(5)), k)


# --- values --------------------------------------------------------------------------

@pytest.mark.parametrize(
    "spec, k, value",
    [(Petersen(), 3, 5), (Path(5), 4, 5), (Cycle(6), 4, 6)],
)
def test_fkdim_examples(spec, k, value):
    res = fractional_k_dimension(g_(spec), k)
    assert res.value == value
    assert res.certificate.total() == value


@pytest.mark.parametrize("spec, value", [(Path(9), 1), (Petersen(), F(5, 3)), (Cycle(7), F(7, 6))])
def test_fdim_examples(spec, value):
    assert fractional_dimension(g_(spec)).value == value


def test_to_json_uses_rational_strings():
    data = fractional_k_dimension(g_(Petersen()), F(7, 2)).to_json()
    assert data["k"] == "7/2" and data["value"] == "35/6" and data["kappa"] == 6
    assert all(isinstance(x, str) for x in data["certificate"])


# --- certificates ----------------------------------------------------------------------

def test_verify_k_resolving_examples():
    assert verify_k_resolving(pair_system(g_(Path(5))), [F(1)] * 5, 4)
    assert verify_k_resolving(pair_system(g_(Petersen())), [F(1, 6)] * 10, 1)
    assert not verify_k_resolving(pair_system(g_(Cycle(5))), [F(0)] * 5, 1)


def test_verify_k_resolving_size_mismatch():
    with pytest.raises(ValueError):
        verify_k_resolving(pair_system(g_(Path(3))), [F(1)], 1)


def test_resolving_function_range():
    with pytest.raises(ValueError):
        ResolvingFunction((F(3, 2),))
    f = ResolvingFunction((F(1, 2), F(1, 3), F(1)))
    assert f.total() == F(11, 6)
    assert f.weight(0b101) == F(3, 2)


def test_certificate_is_k_resolving_and_bounded():
    for spec in (Grid(3, 4), Petersen(), CompleteMultipartite((2, 3))):
        g = g_(spec)
        ps = pair_system(g)
        for k in (1, F(ps.kappa + 1, 2), ps.kappa):
            res = fractional_k_dimension(g, k, ps)
            assert verify_k_resolving(ps, res.certificate, k)
            assert all(0 <= x <= 1 for x in res.certificate.values)


def test_twin_pairs_force_weight():
    g = g_(CompleteMultipartite((2, 3)))
    ps = pair_system(g)
    res = fractional_k_dimension(g, 2, ps)
    for x, y in [(0, 1), (2, 3)]:
        assert res.certificate.weight(ps.rset(x, y)) >= 2
        assert members(ps.rset(x, y)) == [x, y]


# --- extremes -----------------------------------------------------------------------

def test_classifier_examples():
    c = classify_extremes(g_(Path(7)), F(3, 2))
    assert c.kind is Extreme.EQUALS_K and c.path_predicate and c.consistent

    c = classify_extremes(g_(Path(4)), 3)
    assert c.kind is Extreme.EQUALS_N and c.value == 4 and c.full_predicate and c.consistent

    c = classify_extremes(g_(Cycle(7)), 2)
    assert c.kind is Extreme.INTERIOR and c.value == F(7, 3)
    assert not c.path_predicate and not c.full_predicate


# --- sweeps -----------------------------------------------------------------------------

def test_sweep_examples():
    assert [v for _, v in sweep_phi(g_(Path(4)), [1, 2, F(5, 2), 3])] == [1, 2, 3, 4]
    assert [v for _, v in sweep_phi(g_(Grid(3, 3)), [1, 2, 3, 4])] == [2, 4, 6, 8]
    g = g_(Cycle(5))
    assert sweep_phi(g, [1]) == [(1, fractional_dimension(g).value)]


def test_sweep_keeps_input_order_and_names_bad_sample():
    rows = sweep_phi(g_(Path(5)), ["3", "1", "5/2"])
    assert [k for k, _ in rows] == [3, 1, F(5, 2)]
    with pytest.raises(DomainError, match="sample 0"):
        sweep_phi(g_(Path(4)), ["1", "0"])


def test_sample_grids():
    assert grid_samples(4, 4) == [1, 2, 3, 4]
    assert grid_samples(3, 5) == [1, F(3, 2), 2, F(5, 2), 3]
    assert grid_samples(6, 1) == [1]
    assert len(default_samples(4)) == 16
    with pytest.raises(DomainError):
        grid_samples(4, 0)
