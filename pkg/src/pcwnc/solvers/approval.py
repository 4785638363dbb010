"""Closed-form tests for plurality, veto and K-approval with one new candidate."""

from __future__ import annotations

from ..profile import Profile, new_candidate_names, place_on_top
from ..scoring import k_approval, plurality, tally, veto
from .base import Decision, bottom_extension, checked, current_cowinner, round_robin


def possible_plurality(profile: Profile, target: str, k: int) -> Decision:
    """x* can cowin under plurality iff k * ntop(x*) covers every surplus."""
    profile.require(target)
    rule = plurality()
    if k == 0:
        return current_cowinner(profile, rule, target, 0, "plurality")
    tl = tally(profile)
    own = tl.top(target)
    surplus = {x: tl.top(x) - own for x in profile.candidates if tl.top(x) > own}
    total = sum(surplus.values())
    trace = {"ntop_target": own, "surplus": total}
    if k * own < total:
        return Decision(False, "plurality", trace=trace)

    names = new_candidate_names(k)
    tops: list[tuple[str, ...]] = [()] * profile.n
    cycle = round_robin(k)
    for x, need in surplus.items():
        chosen = [i for i, v in enumerate(profile.votes) if v[0] == x][:need]
        for i in chosen:
            tops[i] = (next(cycle),)
    witness = place_on_top(profile, names, tops)
    return checked(Decision(True, "plurality", witness, trace), profile, k, rule, target)


def possible_veto(profile: Profile, target: str, k: int) -> Decision:
    """With at least one new candidate nobody needs to veto x*."""
    profile.require(target)
    if k == 0:
        return current_cowinner(profile, veto(), target, 0, "veto")
    witness = bottom_extension(profile, k)
    return checked(Decision(True, "veto", witness), profile, k, veto(), target)


def possible_kapproval_one(profile: Profile, K: int, target: str) -> Decision:
    """K-approval, exactly one new candidate.

    Every candidate ahead of x* must be pushed out of the top K in enough
    votes ranking it exactly K-th, and the new candidate collects one point
    per push, which must not exceed x*'s score.
    """
    profile.require(target)
    if not 1 <= K <= profile.m:
        raise ValueError(f"K must satisfy 1 <= K <= m={profile.m}, got {K}")
    tl = tally(profile)
    own = tl.within(target, K)
    ahead = {x: tl.within(x, K) - own for x in profile.candidates if tl.within(x, K) > own}
    short = [x for x, d in ahead.items() if tl.at(x, K) < d]
    total = sum(ahead.values())
    trace = {"score_target": own, "surplus": total, "unreachable": short}
    if short or total > own:
        return Decision(False, "kapproval-one", trace=trace)

    tops: list[tuple[str, ...]] = [()] * profile.n
    for x, need in ahead.items():
        chosen = [i for i, v in enumerate(profile.votes) if v[K - 1] == x][:need]
        for i in chosen:
            tops[i] = ("y1",)
    witness = place_on_top(profile, ("y1",), tops)
    return checked(Decision(True, "kapproval-one", witness, trace), profile, 1, k_approval(K), target)


def necessary_kapproval(profile: Profile, K: int, k: int, target: str) -> bool:
    """Sufficient test for x* cowinning in every extension.

    True when every voter ranks x* within the first K - k positions, so no
    placement of the k new candidates can push it out of the approved set.
    The converse is not claimed.
    """
    profile.require(target)
    if K < 1:
        raise ValueError("K must be at least 1")
    if K <= k:
        return False
    return tally(profile).within(target, K - k) == profile.n


def possible_unbounded_kapproval(profile: Profile, K: int, target: str) -> Decision:
    """With as many new candidates as needed, being approved once suffices."""
    profile.require(target)
    own = tally(profile).within(target, K)
    if own == 0:
        return Decision(False, "unbounded-approved")
    # K fresh candidates atop every vote that does not approve x*
    losing = [i for i, v in enumerate(profile.votes) if target not in v[:K]]
    k = K * len(losing)
    names = new_candidate_names(k)
    tops: list[tuple[str, ...]] = [()] * profile.n
    for j, i in enumerate(losing):
        tops[i] = names[j * K:(j + 1) * K]
    witness = place_on_top(profile, names, tops)
    return checked(Decision(True, "unbounded-approved", witness, {"k": k}), profile, k, k_approval(K), target)
