"""Borda and other rules whose score gaps shrink towards the top.

For such rules the best use of the new candidates is to slot all of them
immediately below the target in every vote.
"""

from __future__ import annotations

import math

from ..profile import Profile, new_candidate_names
from ..scoring import ScoringRule, borda, cowinners, is_convex, scores, tally
from .base import Decision, checked
from .approval import possible_unbounded_kapproval, possible_veto


def min_k_borda(profile: Profile, target: str) -> int | float:
    """Smallest k making `target` a possible Borda cowinner (``math.inf`` if none).

    With k candidates slotted below the target, a rival z gains k points in
    every vote ranking it above the target, and the target gains k in all
    n votes, so the gap to z shrinks by k * N(target, z).
    """
    profile.require(target)
    table = scores(profile, borda())
    tl = tally(profile)
    need = 0
    for z in profile.candidates:
        if z == target:
            continue
        gap = table[z] - table[target]
        if gap <= 0:
            continue
        wins = tl.pairwise(target, z)
        if wins == 0:
            return math.inf
        need = max(need, -(-gap // wins))
    return need


def possible_borda(profile: Profile, target: str, k: int) -> Decision:
    threshold = min_k_borda(profile, target)
    if k < threshold:
        return Decision(False, "borda-threshold", trace={"min_k": threshold})
    witness = canonical_extension(profile, target, k)
    return checked(Decision(True, "borda-threshold", witness, {"min_k": threshold}), profile, k, borda(), target)


def canonical_extension(profile: Profile, target: str, k: int) -> Profile:
    """Every new candidate right below `target`, in index order."""
    new = new_candidate_names(k)
    votes = []
    for v in profile.votes:
        p = v.index(target) + 1
        votes.append(v[:p] + new + v[p:])
    return Profile(tuple(profile.candidates) + new, votes)


def possible_convex_scoring(profile: Profile, rule: ScoringRule, target: str, k: int) -> Decision:
    """Cowinner test on the canonical extension.

    Only valid when the rule's vector for m + k candidates has gaps that
    never grow towards the top; otherwise a ValueError is raised.
    """
    profile.require(target)
    vec = rule.vector(profile.m + k)
    if not is_convex(vec):
        raise ValueError(f"{rule.name} vector {vec} for m={profile.m + k} has a gap larger than the one below it")
    witness = canonical_extension(profile, target, k)
    if target not in cowinners(witness, rule):
        return Decision(False, "convex-canonical")
    return checked(Decision(True, "convex-canonical", witness), profile, k, rule, target)


def is_undominated(profile: Profile, target: str) -> bool:
    """No rival beats `target` in every vote."""
    tl = tally(profile)
    return all(tl.pairwise(target, z) >= 1 for z in profile.candidates if z != target)


def possible_unbounded(profile: Profile, rule: ScoringRule, target: str) -> Decision:
    """Possible cowinner when any number of new candidates may arrive.

    Supported: Borda (undominated targets), K-approval and plurality
    (approved at least once) and veto (always).
    """
    profile.require(target)
    if rule.kind == "borda":
        if not is_undominated(profile, target):
            return Decision(False, "unbounded-undominated")
        k = min_k_borda(profile, target)
        witness = canonical_extension(profile, target, k)
        return checked(Decision(True, "unbounded-undominated", witness, {"k": k}), profile, k, rule, target)
    if rule.kind in ("kapproval", "plurality"):
        return possible_unbounded_kapproval(profile, rule.param or 1, target)
    if rule.kind == "veto":
        dec = possible_veto(profile, target, 1)
        return Decision(True, "unbounded-veto", dec.witness, {"k": 1})
    raise ValueError(f"no unbounded-k characterisation for rule {rule.name}")
