"""Scoring-rule families, position tallies, scores and witness checking."""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .profile import Profile, VotingSituation, project


@dataclass(frozen=True)
class ScoringRule:
    """A positional scoring rule defined for every number of candidates.

    `kind` is one of ``plurality``, ``veto``, ``kapproval``, ``borda``,
    ``rdelta`` or ``custom``; `param` carries K for K-approval.
    """

    kind: str
    param: int | None = None
    generator: Callable[[int], Sequence[int]] | None = field(default=None, compare=False, repr=False)
    label: str | None = None

    def vector(self, m: int) -> tuple[int, ...]:
        if m < 1:
            raise ValueError("a scoring vector needs at least one position")
        if self.kind == "plurality":
            vec = (1,) + (0,) * (m - 1) if m > 1 else (1,)
        elif self.kind == "veto":
            vec = (1,) * (m - 1) + (0,) if m > 1 else (1,)
        elif self.kind == "kapproval":
            ones = min(self.param, m)
            vec = (1,) * ones + (0,) * (m - ones)
        elif self.kind == "borda":
            vec = tuple(range(m - 1, -1, -1))
        elif self.kind == "rdelta":
            vec = ((3, 2, 1) + (0,) * m)[:m]
        elif self.kind == "custom":
            vec = tuple(int(s) for s in self.generator(m))
        else:
            raise ValueError(f"unknown rule kind {self.kind!r}")
        _check_vector(vec, m)
        return vec

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        if self.kind == "kapproval":
            return f"kapproval:{self.param}"
        return self.kind

    def __str__(self) -> str:
        return self.name


def _check_vector(vec: Sequence[int], m: int) -> None:
    if len(vec) != m:
        raise ValueError(f"scoring vector has length {len(vec)}, expected {m}")
    if any(s < 0 for s in vec):
        raise ValueError("scoring vector entries must be non-negative")
    if any(a < b for a, b in zip(vec, vec[1:])):
        raise ValueError(f"scoring vector {vec} is not non-increasing")


def plurality() -> ScoringRule:
    return ScoringRule("plurality")


def veto() -> ScoringRule:
    return ScoringRule("veto")


def k_approval(K: int) -> ScoringRule:
    if K < 1:
        raise ValueError("K must be at least 1")
    return ScoringRule("kapproval", K)


def borda() -> ScoringRule:
    return ScoringRule("borda")


def r_delta() -> ScoringRule:
    """The ``<3, 2, 1, 0, ..., 0>`` rule."""
    return ScoringRule("rdelta")


def custom(spec: Sequence[int] | Mapping[int, Sequence[int]], label: str = "custom") -> ScoringRule:
    """A rule from a zero-padded prefix, or from explicit per-m vectors."""
    if isinstance(spec, Mapping):
        table = {int(m): tuple(v) for m, v in spec.items()}

        def gen(m):
            if m not in table:
                raise ValueError(f"custom rule has no vector for m={m}")
            return table[m]
    else:
        prefix = tuple(int(s) for s in spec)

        def gen(m):
            return (prefix + (0,) * m)[:m]

    return ScoringRule("custom", generator=gen, label=label)


def parse_rule(token: str) -> ScoringRule:
    """Parse ``plurality``, ``veto``, ``kapproval:<K>``, ``borda``, ``rdelta``
    or ``custom:<json-file>``."""
    head, _, arg = token.partition(":")
    if head in ("plurality", "veto", "borda", "rdelta") and not arg:
        return {"plurality": plurality, "veto": veto, "borda": borda, "rdelta": r_delta}[head]()
    if head == "kapproval" and arg.isdigit() and int(arg) >= 1:
        return k_approval(int(arg))
    if head == "custom" and arg:
        with open(arg, encoding="utf-8") as fh:
            data = json.load(fh)
        return custom(data, label=token)
    raise ValueError(f"unrecognised rule {token!r}")


def is_convex(vec: Sequence[int]) -> bool:
    """Gaps between successive scores never grow towards the top."""
    gaps = [a - b for a, b in zip(vec, vec[1:])]
    return all(g <= h for g, h in zip(gaps, gaps[1:]))


class PositionTally:
    """Position counts n(P, i, x) and pairwise counts N_P(x, x').

    Positions are 1-based in the accessors, matching the usual notation.
    """

    def __init__(self, profile: Profile):
        self.profile = profile
        m = profile.m
        idx = profile.index
        pos = np.zeros((m, m), dtype=np.int64)
        pair = np.zeros((m, m), dtype=np.int64)
        for vote in profile.votes:
            order = [idx[c] for c in vote]
            pos[order, np.arange(m)] += 1
            rank = np.empty(m, dtype=np.int64)
            rank[order] = np.arange(m)
            pair += rank[:, None] < rank[None, :]
        self.by_position = pos
        self.pairwise_matrix = pair

    def at(self, x: str, i: int) -> int:
        """Number of votes ranking `x` in position `i` (1-based)."""
        return int(self.by_position[self.profile.index[x], i - 1])

    def top(self, x: str) -> int:
        return self.at(x, 1)

    def within(self, x: str, K: int) -> int:
        """S_K(x): votes ranking `x` among the first K positions."""
        if K <= 0:
            return 0
        return int(self.by_position[self.profile.index[x], :K].sum())

    def pairwise(self, x: str, z: str) -> int:
        """N_P(x, z): votes ranking `x` above `z`."""
        return int(self.pairwise_matrix[self.profile.index[x], self.profile.index[z]])


def tally(profile: Profile) -> PositionTally:
    return PositionTally(profile)


@dataclass(frozen=True)
class ScoreTable:
    scores: dict[str, int]

    @cached_property
    def best(self) -> int:
        return max(self.scores.values())

    @cached_property
    def cowinners(self) -> frozenset[str]:
        return frozenset(c for c, s in self.scores.items() if s == self.best)

    def deficits(self, target: str) -> dict[str, int]:
        base = self.scores[target]
        return {c: s - base for c, s in self.scores.items()}

    def __getitem__(self, c: str) -> int:
        return self.scores[c]


def scores(profile: Profile, rule: ScoringRule) -> ScoreTable:
    vec = np.asarray(rule.vector(profile.m), dtype=np.int64)
    totals = tally(profile).by_position @ vec
    return ScoreTable({c: int(totals[i]) for i, c in enumerate(profile.candidates)})


def cowinners(profile: Profile, rule: ScoringRule) -> frozenset[str]:
    return scores(profile, rule).cowinners


@dataclass(frozen=True)
class WitnessCheck:
    """Outcome of :func:`verify_witness`; truthy iff the witness is valid."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(situation: VotingSituation, rule: ScoringRule, target: str, witness: Profile) -> WitnessCheck:
    """Check that `witness` extends the situation's profile with exactly k new
    candidates and that `target` is among its cowinners under `rule`."""
    base = situation.profile
    if target not in base:
        return WitnessCheck(False, "unknown-target")
    missing = [c for c in base.candidates if c not in witness]
    if missing:
        return WitnessCheck(False, "projection-mismatch")
    if witness.m - base.m != situation.k:
        return WitnessCheck(False, "wrong-candidate-count")
    if witness.n != base.n:
        return WitnessCheck(False, "vote-count-mismatch")
    if project(witness, base.candidates).votes != base.votes:
        return WitnessCheck(False, "projection-mismatch")
    if target not in cowinners(witness, rule):
        return WitnessCheck(False, "not-cowinner")
    return WitnessCheck(True)
