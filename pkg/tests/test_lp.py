import random
from fractions import Fraction

import pytest

from fkdim.errors import LPStructureError, ParseError
from fkdim.families import Path, Petersen, generate
from fkdim.fractional import build_kresolving_lp
from fkdim.graph import pair_system
from fkdim.lp import (
    LinearProgram, Status, check_feasible, format_rational, parse_rational, prune_dominated,
    solve_min,
)
from oracles import lp_vertex_enumeration


def p5_lp(k=4):
    return build_kresolving_lp(pair_system(generate(Path(5))), k)


def random_lp(rng, negative_costs=False):
    n = rng.randint(1, 6)
    lo = -2 if negative_costs else 0
    cost = [rng.randint(lo, 4) for _ in range(n)]
    upper = [rng.choice([1, 1, 2, Fraction(1, 2), 3]) for _ in range(n)]
    rows = []
    for _ in range(rng.randint(1, 6)):
        vars_ = [j for j in range(n) if rng.random() < 0.5] or [rng.randrange(n)]
        rows.append((vars_, Fraction(rng.randint(0, 2 * len(vars_)), rng.choice([1, 2, 3]))))
    return cost, rows, upper


# --- rationals ---------------------------------------------------------------------

@pytest.mark.parametrize(
    "text, value",
    [("3", Fraction(3)), ("5/2", Fraction(5, 2)), ("-4/6", Fraction(-2, 3)), ("1.25", Fraction(5, 4)), (" 7 ", Fraction(7))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1//2", "nan", "inf"])
def test_parse_rational_errors(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(10, 4)) == "5/2"
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(0) == "0"


# --- spec examples -----------------------------------------------------------------

def test_simple_cover():
    lp = LinearProgram.build([1, 1], [([0, 1], 1)], [1, 1])
    sol = solve_min(lp)
    assert sol.status is Status.OPTIMAL and sol.value == 1


def test_p5_at_k4():
    sol = solve_min(p5_lp())
    assert sol.value == 5
    assert sol.assignment == (1,) * 5


def test_infeasible_single_variable():
    sol = solve_min(LinearProgram.build([1], [([0], 2)], [1]))
    assert sol.status is Status.INFEASIBLE
    assert not sol.optimal and sol.value is None


def test_check_feasible_examples():
    lp = p5_lp()
    assert check_feasible(lp, [Fraction(1)] * 5)
    assert not check_feasible(lp, [Fraction(0)] * 5)
    assert not check_feasible(lp, [Fraction(2)] + [Fraction(1)] * 4)
    with pytest.raises(ValueError):
        check_feasible(lp, [1, 1])


def test_no_constraints_and_negative_costs():
    sol = solve_min(LinearProgram.build([1, -2, 0], [], [1, 3, 1]))
    assert sol.value == -6
    assert sol.assignment[0] == 0 and sol.assignment[1] == 3


# --- structure -----------------------------------------------------------------------

@pytest.mark.parametrize(
    "lp",
    [
        LinearProgram(2, (Fraction(1),), (), (Fraction(1), Fraction(1))),
        LinearProgram(1, (Fraction(1),), (), ()),
        LinearProgram.build([1], [([0], 1)], [-1]),
        LinearProgram.build([1], [([3], 1)], [1]),
    ],
    ids=["objective-length", "bounds-length", "negative-bound", "var-out-of-range"],
)
def test_structural_errors(lp):
    with pytest.raises(LPStructureError):
        solve_min(lp)


def test_prune_dominated_removes_supersets_and_trivial_rows():
    lp = LinearProgram.build([1] * 3, [([0, 1], 1), ([0, 1, 2], 1), ([2], 0), ([0, 1, 2], 2)], [1] * 3)
    pruned = prune_dominated(lp)
    kept = [(sorted(r.vars), r.rhs) for r in pruned.constraints]
    assert kept == [([0, 1], 1), ([0, 1, 2], 2)]


# --- oracle comparison ---------------------------------------------------------------

@pytest.mark.parametrize("negative", [False, True])
def test_matches_vertex_enumeration(negative):
    rng = random.Random(1234 + negative)
    for _ in range(60):
        cost, rows, upper = random_lp(rng, negative)
        lp = LinearProgram.build(cost, rows, upper)
        expected = lp_vertex_enumeration(cost, rows, upper)
        for prune in (True, False):
            sol = solve_min(lp, prune=prune)
            if expected is None:
                assert sol.status is Status.INFEASIBLE
            else:
                assert sol.optimal and sol.value == expected
                assert check_feasible(lp, sol.assignment)


def test_deterministic():
    lp = build_kresolving_lp(pair_system(generate(Petersen())), Fraction(7, 2))
    first = solve_min(lp)
    for _ in range(3):
        assert solve_min(lp) == first


def test_monotone_in_rhs():
    rng = random.Random(99)
    for _ in range(40):
        cost, rows, upper = random_lp(rng)
        base = solve_min(LinearProgram.build(cost, rows, upper))
        i = rng.randrange(len(rows))
        bumped = list(rows)
        bumped[i] = (rows[i][0], rows[i][1] + Fraction(1, 2))
        more = solve_min(LinearProgram.build(cost, bumped, upper))
        if not base.optimal:
            assert not more.optimal
        elif more.optimal:
            assert more.value >= base.value


def test_pruning_preserves_optimum_on_graph_lps():
    for spec, k in [(Path(6), 3), (Petersen(), 2), (Path(5), Fraction(5, 2))]:
        lp = build_kresolving_lp(pair_system(generate(spec)), k)
        assert solve_min(lp, prune=True).value == solve_min(lp, prune=False).value


def test_degenerate_petersen_terminates():
    # every row has the same rhs and size: heavily degenerate without pruning
    lp = build_kresolving_lp(pair_system(generate(Petersen())), 1)
    sol = solve_min(lp, prune=False, max_pivots=5000)
    assert sol.value == Fraction(5, 3)


def test_pivot_cap_raises():
    lp = build_kresolving_lp(pair_system(generate(Petersen())), 1)
    with pytest.raises(RuntimeError):
        solve_min(lp, prune=False, max_pivots=1)
