import pytest

from pcwnc import UndecidedError, VotingSituation, borda, custom, k_approval, plurality, r_delta, solve, veto
from pcwnc.generators import random_profile


def test_example1(example1):
    d = solve(VotingSituation(example1, 3), k_approval(2), "x*")
    assert d.possible and d.method == "two-approval-flow"


def test_borda_example(borda_example):
    d = solve(VotingSituation(borda_example, 5), borda(), "d")
    assert not d and d.method == "borda-threshold"


def test_guard_trips_on_large_instance():
    p = random_profile(20, 50, 1)
    with pytest.raises(UndecidedError, match="undecided-by-polynomial-methods"):
        solve(VotingSituation(p, 3), k_approval(3), "c1")


@pytest.mark.parametrize(
    "rule, k, method",
    [
        (plurality(), 1, "plurality"),
        (veto(), 1, "veto"),
        (k_approval(1), 2, "plurality"),
        (k_approval(3), 1, "kapproval-one"),
        (k_approval(2), 2, "two-approval-flow"),
        (k_approval(3), 2, "kapproval-two"),
        (k_approval(3), 3, "oracle-kapproval"),
        (k_approval(9), 3, "kapproval-trivial"),
        (borda(), 2, "borda-threshold"),
        (custom({7: [10, 9, 8, 7, 5, 3, 0]}), 2, "convex-canonical"),
        (r_delta(), 2, "oracle"),
        (plurality(), 0, "cowinner-test"),
    ],
)
def test_method_selection(rule, k, method):
    p = random_profile(5, 3, 2)
    assert solve(VotingSituation(p, k), rule, "c1").method == method


def test_named_strategy(example1):
    sit = VotingSituation(example1, 3)
    assert solve(sit, k_approval(2), "x*", strategy="oracle-kapproval").method == "oracle-kapproval"
    with pytest.raises(ValueError):
        solve(sit, k_approval(2), "x*", strategy="magic")
