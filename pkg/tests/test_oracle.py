import pytest
from hypothesis import given, settings, strategies as st

from pcwnc import (
    SearchBudgetExceeded,
    VotingSituation,
    borda,
    custom,
    k_approval,
    parse_profile,
    plurality,
    r_delta,
    veto,
    verify_witness,
)
from pcwnc.generators import random_profile
from pcwnc.oracle import possible_oracle, possible_oracle_kapproval
from pcwnc.solvers import possible_plurality

RULES = [plurality(), veto(), borda(), k_approval(2), r_delta(), custom([2, 1, 1], "2-1-1")]


def test_borda_example(borda_example):
    assert possible_oracle(borda_example, borda(), "a", 1)
    assert not possible_oracle(borda_example, borda(), "a", 0)


def test_k0_is_cowinner_test(example1):
    assert possible_oracle(example1, k_approval(2), "x3", 0)
    assert not possible_oracle(example1, k_approval(2), "x2", 0)


def test_example1_frozen(example1):
    # every candidate's status for k = 0..4, from the pruned search
    expected = {
        0: ["x3"],
        1: ["x1", "x2", "x3"],
        2: ["x1", "x2", "x3", "x4"],
        3: ["x*", "x1", "x2", "x3", "x4", "x5"],
        4: ["x*", "x1", "x2", "x3", "x4", "x5"],
    }
    for k, winners in expected.items():
        assert [c for c in example1.candidates if possible_oracle_kapproval(example1, 2, c, k)] == winners


def test_zero_score_target_is_pruned_at_once():
    p = parse_profile("candidates: t,a,b\n3: a>b>t\n")
    d = possible_oracle_kapproval(p, 1, "t", 3)
    assert not d and "nodes" not in d.trace


def test_witness_is_first_in_canonical_order():
    p = parse_profile("candidates: a,b\n1: b>a\n1: a>b\n")
    d = possible_oracle(p, plurality(), "a", 1)
    assert d.witness.votes == (("y1", "b", "a"), ("a", "y1", "b"))


def test_guards(example1):
    with pytest.raises(SearchBudgetExceeded):
        possible_oracle(example1, borda(), "x*", 2)
    with pytest.raises(SearchBudgetExceeded):
        possible_oracle_kapproval(example1, 2, "x*", 3, node_budget=5)
    with pytest.raises(ValueError):
        possible_oracle_kapproval(example1, 7, "x*", 1)


@pytest.mark.parametrize("seed", range(200))
def test_plurality_formula(seed):
    p = random_profile(3, 4, seed)
    k = seed % 3
    for t in p.candidates:
        assert possible_oracle(p, plurality(), t, k).possible == possible_plurality(p, t, k).possible


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 4), st.integers(1, 4), st.integers(0, 2), st.integers(0, 2**32 - 1))
def test_two_oracles_agree(m, n, k, seed):
    p = random_profile(m, n, seed)
    for K in range(1, m):
        for t in p.candidates:
            assert possible_oracle_kapproval(p, K, t, k).possible == possible_oracle(p, k_approval(K), t, k).possible


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 1), st.integers(0, 2**32 - 1))
def test_monotone_and_sound(m, n, k, seed):
    p = random_profile(m, n, seed)
    for rule in RULES:
        for t in p.candidates:
            d = possible_oracle(p, rule, t, k)
            if d:
                assert verify_witness(VotingSituation(p, k), rule, t, d.witness)
                assert possible_oracle(p, rule, t, k + 1)
