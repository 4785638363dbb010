import pytest
from hypothesis import given, strategies as st

from pcwnc import Profile, ProfileError, VotingSituation, parse_profile, project, serialize_profile
from pcwnc.generators import random_profile
from pcwnc.profile import extend_votes, fresh_prefix, is_new_candidate, new_candidate_names, place_on_top


def test_parse_round_trip(example1):
    assert parse_profile(serialize_profile(example1)) == example1


def test_multiplicities_expand():
    p = parse_profile("candidates: a,b\n# comment\n2: a>b\n\n1: b>a\n")
    assert p.votes == (("a", "b"), ("a", "b"), ("b", "a"))
    assert (p.n, p.m) == (3, 2)


def test_serialize_merges_only_consecutive_runs():
    p = Profile(("a", "b"), [("a", "b"), ("b", "a"), ("a", "b")])
    assert serialize_profile(p).count("1: a>b") == 2


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("candidates: a,b\n1: a>a\n", "duplicate candidate"),
        ("candidates: a,b\n1: a>c\n", "unknown candidate"),
        ("candidates: a,b,c\n1: a>b\n", "missing candidate"),
        ("candidates: a,a\n1: a>a\n", "duplicate candidate"),
        ("1: a>b\n", "first entry"),
        ("candidates: a,b\n", "no votes"),
        ("candidates: a,b\nx: a>b\n", "multiplicity"),
        ("candidates: a,y1\n1: a>y1\n", "reserved"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ProfileError, match=fragment):
        parse_profile(text)


def test_reserved_names_allowed_in_witness_files():
    p = parse_profile("candidates: a,y1\n1: y1>a\n", allow_new=True)
    assert p.candidates == ("a", "y1")


def test_situation_rejects_reserved_initial_names():
    p = parse_profile("candidates: a,y2\n1: a>y2\n", allow_new=True)
    with pytest.raises(ProfileError):
        VotingSituation(p, 1)


@pytest.mark.parametrize("k", [-1, 10**6 + 1])
def test_situation_bounds_k(example1, k):
    with pytest.raises(ValueError):
        VotingSituation(example1, k)


def test_new_candidate_names():
    assert new_candidate_names(3) == ("y1", "y2", "y3")
    assert is_new_candidate("y12") and not is_new_candidate("y0") and not is_new_candidate("yy")


def test_project_keeps_relative_order(example1):
    p = project(example1, ["x2", "x*"])
    assert p.candidates == ("x*", "x2")
    assert p.votes[2] == ("x2", "x*")
    with pytest.raises(ValueError):
        project(example1, [])


def test_extend_and_place():
    p = Profile(("a", "b"), [("a", "b")])
    w = extend_votes(p, ("y1", "y2"), [[(1, "y2")]])
    assert w.votes == (("a", "y2", "b", "y1"),)
    w = place_on_top(p, ("y1", "y2"), [("y2",)])
    assert w.votes == (("y2", "a", "b", "y1"),)


def test_fresh_prefix():
    assert fresh_prefix(["a", "b"], "t") == "t"
    assert fresh_prefix(["t1", "a"], "t") == "tt"


@given(m=st.integers(1, 6), n=st.integers(1, 6), seed=st.integers(0, 2**32 - 1))
def test_round_trip_random(m, n, seed):
    p = random_profile(m, n, seed)
    assert parse_profile(serialize_profile(p)) == p
