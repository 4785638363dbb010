"""K-approval with exactly two new candidates, by reduction to 2-approval."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import takewhile

from ..profile import Profile, fresh_prefix, is_new_candidate, place_on_top
from ..scoring import k_approval, tally
from .base import Decision, checked
from .two_approval import check_cowinner_two_approval


@dataclass(frozen=True)
class TwoNewStats:
    """Per candidate: ``U`` counts votes ranking it (K-1)-th right above the
    target; ``T`` adds the votes ranking it within the first K-2."""

    U: dict[str, int]
    T: dict[str, int]


def _check_depth(profile: Profile, K: int) -> None:
    if not 2 <= K < profile.m:
        raise ValueError(f"K must satisfy 2 <= K < m={profile.m}, got {K}")


def kapproval_two_precheck(profile: Profile, K: int, target: str) -> tuple[bool, TwoNewStats]:
    """Necessary condition: no rival can be held to x*'s score otherwise."""
    profile.require(target)
    _check_depth(profile, K)
    tl = tally(profile)
    U = {x: 0 for x in profile.candidates}
    for v in profile.votes:
        if v[K - 1] == target:
            U[v[K - 2]] += 1
    T = {x: tl.within(x, K - 2) + U[x] for x in profile.candidates}
    own = tl.within(target, K)
    ok = all(T[x] <= own for x in profile.candidates if x != target)
    return ok, TwoNewStats(U, T)


@dataclass(frozen=True)
class TwoApprovalReduction:
    """The 2-approval profile built from a K-approval one.

    Votes ``[0, n)`` mirror the original votes; then come the padding votes
    for rivals (``x z_j``) and for the target (``z'_j x*``).
    """

    profile: Profile
    n_mirrored: int
    n_rival_pads: int


def reduce_to_two_approval(profile: Profile, K: int, target: str) -> TwoApprovalReduction:
    _check_depth(profile, K)
    tl = tally(profile)
    rivals = [x for x in profile.candidates if x != target]
    pads = [(x, tl.within(x, K - 2)) for x in rivals]
    n_z = sum(c for _, c in pads)
    n_zp = tl.within(target, K - 2)
    stem = fresh_prefix(profile.candidates, "@")
    zs = [f"{stem}z{j}" for j in range(1, n_z + 1)]
    zps = [f"{stem}zp{j}" for j in range(1, n_zp + 1)]
    cands = tuple(profile.candidates) + tuple(zs) + tuple(zps)

    def vote(head):
        return tuple(head) + tuple(c for c in cands if c not in head)

    votes = [vote((v[K - 2], v[K - 1])) for v in profile.votes]
    z = iter(zs)
    for x, count in pads:
        votes.extend(vote((x, next(z))) for _ in range(count))
    votes.extend(vote((zp, target)) for zp in zps)
    return TwoApprovalReduction(Profile(cands, votes), profile.n, n_z)


def possible_kapproval_two(profile: Profile, K: int, target: str) -> Decision:
    profile.require(target)
    _check_depth(profile, K)
    own = tally(profile).within(target, K)
    if own == 0:
        return Decision(False, "kapproval-two", trace={"reason": "target-never-approved"})
    ok, stats = kapproval_two_precheck(profile, K, target)
    if not ok:
        return Decision(False, "kapproval-two", trace={"reason": "precheck", "T": stats.T})

    red = reduce_to_two_approval(profile, K, target)
    inner = check_cowinner_two_approval(red.profile, target, 2)
    trace = {"reduced_m": red.profile.m, "reduced_n": red.profile.n, "inner": inner.trace}
    if not inner:
        return Decision(False, "kapproval-two", trace=trace)

    tops = [list(takewhile(is_new_candidate, v))[:2] for v in inner.witness.votes]
    _normalise(red, target, tops)
    witness = place_on_top(profile, ("y1", "y2"), tops[: profile.n])
    return checked(Decision(True, "kapproval-two", witness, trace), profile, 2, k_approval(K), target)


def _normalise(red: TwoApprovalReduction, target: str, tops: list[list[str]]) -> None:
    """Move every new-candidate use off the padding votes, without raising
    any score that matters, so the mirrored votes alone carry the witness."""
    votes = red.profile.votes
    n1, n2 = red.n_mirrored, red.n_mirrored + red.n_rival_pads

    def top_two(i):
        return (tops[i] + list(votes[i]))[:2]

    for i in range(n2, len(votes)):
        tops[i] = []
    for i in range(n1, n2):
        pair = tops[i]
        tops[i] = []
        if len(pair) < 2:
            continue
        owner = votes[i][0]
        for j in range(n1):
            a, b = top_two(j)
            if a == owner and b != target and not tops[j]:
                tops[j] = list(pair)
            elif b == owner and not tops[j]:
                tops[j] = [pair[0]]
            elif b == owner and len(tops[j]) == 1:
                tops[j] = [pair[1] if pair[0] == tops[j][0] else pair[0]] + tops[j]
            else:
                continue
            break
