"""Instance factories: random profiles, 3-dimensional matching and the
hardness constructions built from it, plus the two lifting transforms.

Every constructed profile is re-tallied and checked against the scores the
construction promises before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvariantError
from .profile import Profile, VotingSituation, fresh_prefix, place_on_top
from .scoring import ScoringRule, k_approval, r_delta, scores, tally

MAX_3DM_SIZE = 6


def random_profile(m: int, n: int, seed: int) -> Profile:
    """n independent uniform rankings of candidates ``c1..cm``."""
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    rng = np.random.default_rng(seed)
    cands = tuple(f"c{i}" for i in range(1, m + 1))
    votes = [tuple(cands[j] for j in rng.permutation(m)) for _ in range(n)]
    return Profile(cands, votes)


# -- 3-dimensional matching --------------------------------------------------


@dataclass(frozen=True)
class ThreeDMInstance:
    """Triples over ``A = {a1..an}``, ``B = {b1..bn}``, ``C = {c1..cn}``.

    Triples are stored as 1-based index triples ``(i, j, l)`` meaning
    ``(a_i, b_j, c_l)``.
    """

    n_prime: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n_prime < 1:
            raise ValueError("n_prime must be positive")
        triples = tuple(tuple(int(v) for v in t) for t in self.triples)
        object.__setattr__(self, "triples", triples)
        for t in triples:
            if len(t) != 3 or not all(1 <= v <= self.n_prime for v in t):
                raise ValueError(f"triple {t} is outside 1..{self.n_prime}")
        if len(set(triples)) != len(triples):
            raise ValueError("duplicate triple")

    @property
    def degrees(self) -> dict[str, int]:
        """Occurrences d(z) of every element, keyed ``a1``, ``b2``, ..."""
        d = {f"{s}{i}": 0 for s in "abc" for i in range(1, self.n_prime + 1)}
        for i, j, l in self.triples:
            d[f"a{i}"] += 1
            d[f"b{j}"] += 1
            d[f"c{l}"] += 1
        return d

    @property
    def restricted(self) -> bool:
        """Every element occurs two or three times."""
        return all(v in (2, 3) for v in self.degrees.values())

    def is_matching(self, chosen) -> bool:
        chosen = list(chosen)
        if len(chosen) != self.n_prime or not set(chosen) <= set(self.triples):
            return False
        return all(len({t[c] for t in chosen}) == self.n_prime for c in range(3))

    def to_json(self) -> dict:
        return {"n_prime": self.n_prime, "triples": [list(t) for t in self.triples]}


def solve_3dm(instance: ThreeDMInstance, max_size: int = MAX_3DM_SIZE):
    """A perfect matching as a sorted tuple of triples, or None.

    Backtracks over the lowest uncovered ``a_i``, trying its triples in
    sorted order.
    """
    n = instance.n_prime
    if n > max_size:
        raise ValueError(f"exhaustive 3-DM search is limited to n' <= {max_size}, got {n}")
    by_a = {i: sorted(t for t in instance.triples if t[0] == i) for i in range(1, n + 1)}
    used_b, used_c, chosen = set(), set(), []

    def go(i):
        if i > n:
            return True
        for t in by_a[i]:
            if t[1] in used_b or t[2] in used_c:
                continue
            used_b.add(t[1])
            used_c.add(t[2])
            chosen.append(t)
            if go(i + 1):
                return True
            chosen.pop()
            used_b.discard(t[1])
            used_c.discard(t[2])
        return False

    return tuple(sorted(chosen)) if go(1) else None


def _layered_3dm(n, rng) -> ThreeDMInstance:
    while True:
        triples = set()
        layers = [(rng.permutation(n) + 1, rng.permutation(n) + 1) for _ in range(3)]
        extra = rng.random(n) < 0.5
        for layer, (bs, cs) in enumerate(layers):
            for i in range(n):
                if layer < 2 or extra[i]:
                    triples.add((i + 1, int(bs[i]), int(cs[i])))
        inst = ThreeDMInstance(n, tuple(sorted(triples)))
        if inst.restricted:
            return inst


def random_3dm(
    n_prime: int,
    seed: int,
    positive: bool = True,
    swaps_per_base: int = 200,
    max_bases: int = 100,
) -> ThreeDMInstance:
    """Random instance where every element occurs two or three times.

    Positive instances are unions of two random perfect matchings plus a
    random partial third one.  Negative ones start from such a union and
    swap the third coordinates of two triples (which keeps every degree)
    until :func:`solve_3dm` finds no perfect matching; a walk that stalls
    restarts from a fresh union.

    Raises
    ------
    RuntimeError
        If no negative instance is reached within the attempt limits.
    """
    rng = np.random.default_rng(seed)
    n = n_prime
    if positive:
        return _layered_3dm(n, rng)
    for _ in range(max_bases):
        triples = list(_layered_3dm(n, rng).triples)
        for _ in range(swaps_per_base):
            p, q = rng.choice(len(triples), size=2, replace=False)
            (a1, b1, c1), (a2, b2, c2) = triples[p], triples[q]
            s1, s2 = (a1, b1, c2), (a2, b2, c1)
            if c1 == c2 or s1 in triples or s2 in triples:
                continue
            triples[p], triples[q] = s1, s2
            cand = ThreeDMInstance(n, tuple(sorted(triples)))
            if solve_3dm(cand) is None:
                return cand
    raise RuntimeError(f"no negative instance found from seed {seed}")


# -- hardness constructions ----------------------------------------------------


@dataclass(frozen=True)
class HardnessInstance:
    """A possible-cowinner instance built from a 3-DM instance.

    `groups` maps a voter-group label to the vote indices it owns;
    `triple_votes` maps each triple to the vote that encodes it.
    """

    situation: VotingSituation
    target: str
    rule: ScoringRule
    source: ThreeDMInstance
    x1: tuple[str, ...]
    x2: tuple[str, ...]
    groups: dict[str, tuple[int, ...]]
    triple_votes: dict[tuple[int, int, int], int] = field(default_factory=dict)
    construction: str = ""

    @property
    def profile(self) -> Profile:
        return self.situation.profile

    def witness_from_matching(self, matching) -> Profile:
        """The new candidates go on top of every matched triple's vote and
        to the bottom everywhere else."""
        if not self.source.is_matching(matching):
            raise ValueError("not a perfect matching of the source instance")
        names = self.situation.new_candidates
        tops = [()] * self.profile.n
        for t in matching:
            tops[self.triple_votes[tuple(t)]] = names
        return place_on_top(self.profile, names, tops)

    def metadata(self) -> dict:
        matching = solve_3dm(self.source) if self.source.n_prime <= MAX_3DM_SIZE else None
        return {
            "construction": self.construction,
            "rule": self.rule.name,
            "k": self.situation.k,
            "target": self.target,
            "m": self.profile.m,
            "n": self.profile.n,
            "source": self.source.to_json(),
            "groups": {g: list(v) for g, v in self.groups.items()},
            "ground_truth": None if self.source.n_prime > MAX_3DM_SIZE else matching is not None,
            "matching": None if matching is None else [list(t) for t in matching],
        }


def _check_source(instance: ThreeDMInstance, min_size: int) -> None:
    if instance.n_prime < min_size:
        raise ValueError(f"construction needs n' >= {min_size}, got {instance.n_prime}")
    bad = {z: d for z, d in instance.degrees.items() if d not in (2, 3)}
    if bad:
        z, d = next(iter(bad.items()))
        raise ValueError(f"every element must occur 2 or 3 times; {z} occurs {d} times")


class _Builder:
    """Accumulates candidates and top-prefixed votes; tails use declared order."""

    def __init__(self):
        self.candidates: list[str] = []
        self.heads: list[tuple[str, ...]] = []
        self.groups: dict[str, list[int]] = {}

    def add(self, *names):
        self.candidates.extend(names)

    def vote(self, group, *head):
        self.groups.setdefault(group, []).append(len(self.heads))
        self.heads.append(head)
        return len(self.heads) - 1

    def profile(self) -> Profile:
        votes = []
        for head in self.heads:
            lead = set(head)
            votes.append(head + tuple(c for c in self.candidates if c not in lead))
        return Profile(self.candidates, votes)


def _elements(n):
    return [f"a{i}" for i in range(1, n + 1)], [f"b{i}" for i in range(1, n + 1)], [f"c{i}" for i in range(1, n + 1)]


def _assert_scores(profile, rule, expected, label):
    table = scores(profile, rule)
    for c, check in expected:
        if not check(table[c]):
            raise InvariantError(f"{label}: score of {c} is {table[c]}, violating the construction")


def reduce_3dm_to_3approval(instance: ThreeDMInstance) -> HardnessInstance:
    """3-approval instance with three new candidates, cowinnable for ``x*``
    exactly when the source has a perfect matching.

    Scores under 3-approval: each element candidate n'+1, ``x*`` n', every
    padding candidate 1.
    """
    _check_source(instance, 3)
    n = instance.n_prime
    deg = instance.degrees
    A, B, C = _elements(n)
    bld = _Builder()
    bld.add("x*", *A, *B, *C)
    pads = [f"x*.{j}" for j in range(1, 2 * n + 1)]
    for z in A + B + C:
        pads += [f"{z}.{j}" for j in range(1, 2 * (n - deg[z] + 1) + 1)]
    bld.add(*pads)

    triple_votes = {}
    for t in instance.triples:
        i, j, l = t
        triple_votes[t] = bld.vote("N1", A[i - 1], B[j - 1], C[l - 1])
    for group, elems in (("NA", A), ("NB", B), ("NC", C)):
        for z in elems:
            for j in range(n - deg[z] + 1):
                bld.vote(group, z, f"{z}.{2 * j + 1}", f"{z}.{2 * j + 2}")
    for j in range(n):
        bld.vote("Nx*", "x*", f"x*.{2 * j + 1}", f"x*.{2 * j + 2}")

    profile = bld.profile()
    rule = k_approval(3)
    _assert_scores(
        profile,
        rule,
        [(z, lambda s: s == n + 1) for z in A + B + C] + [("x*", lambda s: s == n)] + [(p, lambda s: s == 1) for p in pads],
        "3-approval construction",
    )
    return HardnessInstance(
        VotingSituation(profile, 3),
        "x*",
        rule,
        instance,
        tuple(A + B + C),
        tuple(pads),
        {g: tuple(v) for g, v in bld.groups.items()},
        triple_votes,
        "3dm-3approval",
    )


def reduce_3dm_to_rdelta(instance: ThreeDMInstance) -> HardnessInstance:
    """Instance for the rule scoring 3, 2, 1 for the top three positions,
    with one new candidate.

    Scores: each element candidate 3n'+1, ``x*`` 3n', padding at most 3.
    """
    _check_source(instance, 5)
    n = instance.n_prime
    deg = instance.degrees
    A, B, C = _elements(n)
    copies = {}
    for z in A:
        copies[z] = 2 * (n - deg[z])
    for z in B:
        copies[z] = 2 * (3 * n - 2 * deg[z] + 1)
    for z in C:
        copies[z] = 2 * (3 * n - deg[z] + 1)
    bld = _Builder()
    bld.add("x*", *A, *B, *C)
    pads = [f"x*.{j}" for j in range(1, 2 * n + 1)]
    for z in A + B + C:
        pads += [f"{z}.{j}" for j in range(1, copies[z] + 1)]
    bld.add(*pads)

    triple_votes = {}
    for t in instance.triples:
        i, j, l = t
        triple_votes[t] = bld.vote("N1", A[i - 1], B[j - 1], C[l - 1])
    for z in A:
        base = n - deg[z] - 1
        for j in range(base):
            bld.vote("NA", z, f"{z}.{2 * j + 1}", f"{z}.{2 * j + 2}")
        for j in (1, 2):
            bld.vote("NA", f"{z}.{2 * base + j}", z, "x*")
    for z in B:
        for j in range(3 * n - 2 * deg[z] + 1):
            bld.vote("NB", f"{z}.{2 * j + 1}", f"{z}.{2 * j + 2}", z)
    for z in C:
        for j in range(3 * n - deg[z] + 1):
            bld.vote("NC", f"{z}.{2 * j + 1}", f"{z}.{2 * j + 2}", z)
    for j in range(n):
        bld.vote("Nx*", f"x*.{2 * j + 1}", f"x*.{2 * j + 2}", "x*")

    profile = bld.profile()
    rule = r_delta()
    _assert_scores(
        profile,
        rule,
        [(z, lambda s: s == 3 * n + 1) for z in A + B + C] + [("x*", lambda s: s == 3 * n)] + [(p, lambda s: s <= 3) for p in pads],
        "r-delta construction",
    )
    return HardnessInstance(
        VotingSituation(profile, 1),
        "x*",
        rule,
        instance,
        tuple(A + B + C),
        tuple(pads),
        {g: tuple(v) for g, v in bld.groups.items()},
        triple_votes,
        "3dm-rdelta",
    )


# -- lifting transforms ----------------------------------------------------------


def lift_new_candidate(situation: VotingSituation, target: str) -> VotingSituation:
    """3-approval instance with k new candidates -> equivalent one with k + 1.

    Adds a rival ``z`` scoring twice the target's score, spread over
    padding votes ``(t_i.1, t_i.2, z)``; one extra new candidate is exactly
    what it takes to hold ``z`` down.  Original votes keep their ranking,
    followed by the fresh candidates.
    """
    profile, k = situation.profile, situation.k
    profile.require(target)
    if k < 3:
        raise ValueError(f"lifting needs k >= 3 so that no original vote can absorb more than k new candidates, got k={k}")
    own = tally(profile).within(target, 3)
    if own == 0:
        raise ValueError(f"{target} is never ranked in a top 3, so the instance is trivially negative")
    if profile.m < 3:
        raise ValueError("3-approval lifting needs at least three candidates")
    z = fresh_prefix(profile.candidates, "z")
    stem = fresh_prefix(list(profile.candidates) + [z], "t")
    pairs = [(f"{stem}{i}.1", f"{stem}{i}.2") for i in range(1, 2 * own + 1)]
    fresh = (z,) + tuple(c for p in pairs for c in p)
    cands = tuple(profile.candidates) + fresh
    votes = [v + fresh for v in profile.votes]
    for t1, t2 in pairs:
        head = (t1, t2, z)
        votes.append(head + tuple(c for c in cands if c not in head))
    lifted = Profile(cands, votes)
    table = scores(lifted, k_approval(3))
    if table[z] != 2 * own or any(table[t] != 1 for p in pairs for t in p):
        raise InvariantError("lifted profile does not have the intended padding scores")
    return VotingSituation(lifted, k + 1)


def lift_approval_depth(situation: VotingSituation) -> VotingSituation:
    """K-approval instance -> (K+1)-approval instance with the same k.

    Every vote gets its own fresh candidate on top, which scores exactly 1.
    """
    profile = situation.profile
    stem = fresh_prefix(profile.candidates, "t")
    tops = [f"{stem}{i}" for i in range(1, profile.n + 1)]
    cands = tuple(profile.candidates) + tuple(tops)
    votes = [(t,) + v + tuple(o for o in tops if o != t) for t, v in zip(tops, profile.votes)]
    return VotingSituation(Profile(cands, votes), situation.k)


def random_metadata(m: int, n: int, seed: int) -> dict:
    return {"construction": "random", "m": m, "n": n, "seed": seed, "ground_truth": None}

