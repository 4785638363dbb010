import math
from itertools import permutations

import pytest

from pcwnc import VotingSituation, k_approval, r_delta, scores, verify_witness
from pcwnc.errors import ProfileError
from pcwnc.generators import (
    ThreeDMInstance,
    lift_approval_depth,
    lift_new_candidate,
    random_3dm,
    random_profile,
    reduce_3dm_to_3approval,
    reduce_3dm_to_rdelta,
    solve_3dm,
)
from pcwnc.oracle import possible_oracle, possible_oracle_kapproval
from pcwnc.scoring import tally

CYCLIC3 = ThreeDMInstance(3, [(1, 1, 1), (2, 2, 2), (3, 3, 3), (1, 2, 3), (2, 3, 1), (3, 1, 2)])


def two_layer(n):
    """Union of the identity matching and a shifted one; every element occurs twice."""
    return ThreeDMInstance(n, [(i, i, i) for i in range(1, n + 1)] + [(i, i % n + 1, (i + 1) % n + 1) for i in range(1, n + 1)])


def test_random_profile_is_deterministic():
    assert random_profile(3, 2, 5) == random_profile(3, 2, 5)
    assert random_profile(1, 5, 0).votes == (("c1",),) * 5
    with pytest.raises(ValueError):
        random_profile(0, 3, 0)


def test_random_profile_top_frequencies():
    n, m = 1000, 4
    p = random_profile(m, n, 123)
    sigma = math.sqrt(n * (1 / m) * (1 - 1 / m))
    for c in p.candidates:
        assert abs(tally(p).top(c) - n / m) <= 5 * sigma


def test_solve_3dm_examples():
    assert solve_3dm(CYCLIC3) == ((1, 1, 1), (2, 2, 2), (3, 3, 3))
    shared = ThreeDMInstance(3, [(1, 1, 1), (1, 2, 2), (1, 3, 3)])
    assert solve_3dm(shared) is None
    with pytest.raises(ValueError):
        solve_3dm(ThreeDMInstance(7, [(1, 1, 1)]))


@pytest.mark.parametrize("seed", range(5))
def test_solve_3dm_stable_under_reordering(seed):
    inst = random_3dm(4, seed, positive=seed % 2 == 0)
    base = solve_3dm(inst) is not None
    for order in list(permutations(inst.triples))[:30]:
        assert (solve_3dm(ThreeDMInstance(4, order)) is not None) == base


def test_instance_validation():
    with pytest.raises(ValueError):
        ThreeDMInstance(2, [(1, 1, 3)])
    with pytest.raises(ValueError):
        ThreeDMInstance(2, [(1, 1, 1), (1, 1, 1)])
    assert CYCLIC3.restricted and CYCLIC3.is_matching([(1, 1, 1), (2, 2, 2), (3, 3, 3)])
    assert not CYCLIC3.is_matching([(1, 1, 1), (1, 2, 3), (3, 3, 3)])


@pytest.mark.parametrize("seed", range(6))
def test_random_3dm_declared_status(seed):
    assert solve_3dm(random_3dm(3, seed, positive=True)) is not None
    neg = random_3dm(3, seed, positive=False)
    assert neg.restricted and solve_3dm(neg) is None


def test_3approval_construction_counts():
    h = reduce_3dm_to_3approval(CYCLIC3)
    assert (h.profile.m, h.profile.n) == (52, 27)
    assert len(h.x1) == 9 and h.situation.k == 3
    table = scores(h.profile, k_approval(3))
    assert table["x*"] == 3 and all(table[x] == 4 for x in h.x1) and all(table[x] == 1 for x in h.x2)
    assert len(h.groups["N1"]) == 6 and len(h.groups["Nx*"]) == 3


def test_3approval_witness_and_oracle():
    h = reduce_3dm_to_3approval(CYCLIC3)
    w = h.witness_from_matching(solve_3dm(CYCLIC3))
    assert verify_witness(h.situation, h.rule, "x*", w)
    assert possible_oracle_kapproval(h.profile, 3, "x*", 3)
    with pytest.raises(ValueError):
        h.witness_from_matching([(1, 1, 1)])


@pytest.mark.parametrize("seed", range(4))
def test_3approval_negative_is_impossible(seed):
    h = reduce_3dm_to_3approval(random_3dm(3, seed, positive=False))
    assert not possible_oracle_kapproval(h.profile, 3, "x*", 3)


def test_degree_guard():
    with pytest.raises(ValueError, match="occur 2 or 3 times"):
        reduce_3dm_to_3approval(ThreeDMInstance(3, [(1, 1, 1), (2, 2, 2), (3, 3, 3)]))


def test_rdelta_construction():
    inst = two_layer(5)
    h = reduce_3dm_to_rdelta(inst)
    table = scores(h.profile, r_delta())
    assert table["x*"] == 15 and all(table[x] == 16 for x in h.x1) and all(table[x] <= 3 for x in h.x2)
    assert verify_witness(h.situation, h.rule, "x*", h.witness_from_matching(solve_3dm(inst)))
    with pytest.raises(ValueError, match="n' >= 5"):
        reduce_3dm_to_rdelta(two_layer(4))


def test_lift_new_candidate_counts():
    p = random_profile(4, 3, 0)
    target = next(c for c in p.candidates if tally(p).within(c, 3) == 2)
    lifted = lift_new_candidate(VotingSituation(p, 3), target)
    assert (lifted.profile.m, lifted.profile.n, lifted.k) == (4 + 1 + 8, 3 + 4, 4)


def test_lift_new_candidate_guards():
    from pcwnc import parse_profile

    p = parse_profile("candidates: a,b,c,d\n2: a>b>c>d\n")
    with pytest.raises(ValueError, match="never ranked"):
        lift_new_candidate(VotingSituation(p, 3), "d")
    with pytest.raises(ValueError, match="k >= 3"):
        lift_new_candidate(VotingSituation(p, 2), "a")


@pytest.mark.parametrize("seed", range(20))
def test_lift_new_candidate_preserves_answer(seed):
    p = random_profile(4, 3, seed)
    for t in p.candidates:
        if tally(p).within(t, 3) == 0:
            continue
        lifted = lift_new_candidate(VotingSituation(p, 3), t)
        before = possible_oracle_kapproval(p, 3, t, 3).possible
        assert possible_oracle_kapproval(lifted.profile, 3, t, 4).possible == before


def test_lift_depth_on_example(example1):
    lifted = lift_approval_depth(VotingSituation(example1, 3))
    table = scores(lifted.profile, k_approval(3))
    assert all(table[c] == 1 for c in lifted.profile.candidates if c.startswith("t"))
    twice = lift_approval_depth(lifted)
    assert scores(twice.profile, k_approval(4))["x*"] == scores(example1, k_approval(2))["x*"]
    assert twice.profile.candidates[-1].startswith("tt")


@pytest.mark.parametrize("seed", range(20))
def test_lift_depth_preserves_answer(seed):
    p = random_profile(2 + seed % 3, 1 + seed % 3, seed)
    for K in range(1, p.m):
        for k in (0, 1, 2):
            lifted = lift_approval_depth(VotingSituation(p, k))
            for t in p.candidates:
                before = possible_oracle(p, k_approval(K), t, k).possible
                assert possible_oracle(lifted.profile, k_approval(K + 1), t, k).possible == before


def test_metadata_declares_ground_truth():
    meta = reduce_3dm_to_3approval(CYCLIC3).metadata()
    assert meta["ground_truth"] is True and meta["m"] == 52 and meta["k"] == 3
