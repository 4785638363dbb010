import pytest

from pcwnc import Profile, VotingSituation, borda, cowinners, custom, k_approval, parse_rule, plurality, r_delta, scores, veto
from pcwnc.scoring import is_convex, tally, verify_witness


@pytest.mark.parametrize(
    "rule, m, expected",
    [
        (plurality(), 4, (1, 0, 0, 0)),
        (veto(), 4, (1, 1, 1, 0)),
        (k_approval(2), 4, (1, 1, 0, 0)),
        (k_approval(5), 3, (1, 1, 1)),
        (borda(), 4, (3, 2, 1, 0)),
        (r_delta(), 5, (3, 2, 1, 0, 0)),
        (r_delta(), 2, (3, 2)),
        (custom([4, 1]), 3, (4, 1, 0)),
    ],
)
def test_vectors(rule, m, expected):
    assert rule.vector(m) == expected


def test_custom_per_m_table_and_validation():
    rule = custom({3: [2, 1, 0]})
    assert rule.vector(3) == (2, 1, 0)
    with pytest.raises(ValueError):
        rule.vector(4)
    with pytest.raises(ValueError):
        custom([1, 2]).vector(2)


@pytest.mark.parametrize("token, name", [("plurality", "plurality"), ("kapproval:3", "kapproval:3"), ("rdelta", "rdelta")])
def test_parse_rule(token, name):
    assert parse_rule(token).name == name


@pytest.mark.parametrize("token", ["kapproval", "kapproval:0", "borda:2", "nope"])
def test_parse_rule_rejects(token):
    with pytest.raises(ValueError):
        parse_rule(token)


def test_parse_custom_file(tmp_path):
    path = tmp_path / "rule.json"
    path.write_text("[2, 1]")
    assert parse_rule(f"custom:{path}").vector(3) == (2, 1, 0)


def test_convexity():
    assert is_convex(borda().vector(6))
    assert is_convex(veto().vector(5))
    assert not is_convex(plurality().vector(3))
    assert is_convex(r_delta().vector(4))
    assert not is_convex(r_delta().vector(5))


def test_borda_scores(borda_example):
    assert scores(borda_example, borda()).scores == {"a": 8, "b": 9, "c": 4, "d": 3}
    assert cowinners(borda_example, borda()) == {"b"}


def test_tally(example1):
    tl = tally(example1)
    assert tl.within("x*", 2) == 4 and tl.within("x3", 2) == 8
    assert tl.top("x2") == 6 and tl.at("x4", 2) == 5
    assert tl.pairwise("x*", "x6") == 17


def test_verify_reasons(example1):
    sit = VotingSituation(example1, 0)
    assert verify_witness(sit, k_approval(2), "nobody", example1).reason == "unknown-target"
    assert verify_witness(sit, k_approval(2), "x*", example1).reason == "not-cowinner"
    assert verify_witness(sit, k_approval(2), "x3", example1)
    short = Profile(example1.candidates, example1.votes[:-1])
    assert verify_witness(sit, k_approval(2), "x3", short).reason == "vote-count-mismatch"
    swapped = list(example1.votes)
    swapped[0] = swapped[0][1:2] + swapped[0][:1] + swapped[0][2:]
    assert verify_witness(sit, k_approval(2), "x3", example1.with_votes(swapped)).reason == "projection-mismatch"
    assert verify_witness(VotingSituation(example1, 1), k_approval(2), "x3", example1).reason == "wrong-candidate-count"
