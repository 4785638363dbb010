"""Candidates, votes and profiles, plus the line-oriented text format.

A profile is an ordered sequence of strict rankings over one shared set of
candidate names.  Candidate names are plain strings.  Names matching
``y<j>`` are reserved for new candidates and may only appear in extended
profiles (witnesses).

Text format::

    # comment
    candidates: a,b,c
    2: a>b>c
    1: c>a>b
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import ProfileError

MAX_NEW_CANDIDATES = 10**6

_NEW_NAME = re.compile(r"y[1-9][0-9]*\Z")
_BAD_CHARS = re.compile(r"[\s,>]")


def new_candidate_names(k: int) -> tuple[str, ...]:
    """Names of the k new candidates, in index order."""
    return tuple(f"y{j}" for j in range(1, k + 1))


def is_new_candidate(name: str) -> bool:
    return _NEW_NAME.match(name) is not None


def new_candidate_index(name: str) -> int:
    return int(name[1:])


def _check_name(name: str) -> None:
    if not isinstance(name, str) or not name:
        raise ProfileError(f"invalid candidate name {name!r}")
    if _BAD_CHARS.search(name):
        raise ProfileError(f"candidate name {name!r} contains whitespace, ',' or '>'")


@dataclass(frozen=True)
class Profile:
    """An immutable n-voter profile.

    Parameters
    ----------
    candidates : sequence of str
        Declared candidate order.  This order is used whenever an
        "arbitrary order" has to be fixed (tails of constructed votes,
        iteration order of solvers).
    votes : sequence of sequence of str
        Rankings, best first.  Each must rank every candidate exactly once.
    """

    candidates: tuple[str, ...]
    votes: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        cands = tuple(self.candidates)
        votes = tuple(tuple(v) for v in self.votes)
        object.__setattr__(self, "candidates", cands)
        object.__setattr__(self, "votes", votes)
        if not cands:
            raise ProfileError("profile has no candidates")
        for c in cands:
            _check_name(c)
        if len(set(cands)) != len(cands):
            dup = next(c for c in cands if cands.count(c) > 1)
            raise ProfileError(f"duplicate candidate {dup!r}")
        if not votes:
            raise ProfileError("profile has no votes")
        known = set(cands)
        for i, v in enumerate(votes):
            if len(set(v)) != len(v):
                dup = next(c for c in v if v.count(c) > 1)
                raise ProfileError(f"vote {i + 1}: duplicate candidate {dup!r} in vote")
            unknown = [c for c in v if c not in known]
            if unknown:
                raise ProfileError(f"vote {i + 1}: unknown candidate {unknown[0]!r}")
            if len(v) != len(cands):
                missing = [c for c in cands if c not in v]
                raise ProfileError(f"vote {i + 1}: missing candidate {missing[0]!r}")

    @property
    def n(self) -> int:
        return len(self.votes)

    @property
    def m(self) -> int:
        return len(self.candidates)

    @cached_property
    def index(self) -> dict[str, int]:
        """Candidate name -> position in the declared order."""
        return {c: i for i, c in enumerate(self.candidates)}

    @cached_property
    def ranks(self) -> tuple[dict[str, int], ...]:
        """Per vote, candidate -> 0-based position."""
        return tuple({c: p for p, c in enumerate(v)} for v in self.votes)

    def __contains__(self, name: object) -> bool:
        return name in self.index

    def require(self, name: str) -> None:
        if name not in self.index:
            raise ProfileError(f"unknown candidate {name!r}")

    def with_votes(self, votes: Iterable[Sequence[str]]) -> Profile:
        return Profile(self.candidates, tuple(tuple(v) for v in votes))

    def __str__(self) -> str:
        return serialize_profile(self)


@dataclass(frozen=True)
class VotingSituation:
    """An elicited profile over the initial candidates plus a count of new ones."""

    profile: Profile
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"k must be a non-negative integer, got {self.k!r}")
        if self.k > MAX_NEW_CANDIDATES:
            raise ValueError(f"k={self.k} exceeds the limit of {MAX_NEW_CANDIDATES}")
        reserved = [c for c in self.profile.candidates if is_new_candidate(c)]
        if reserved:
            raise ProfileError(f"initial candidate {reserved[0]!r} uses a reserved new-candidate name")

    @property
    def new_candidates(self) -> tuple[str, ...]:
        return new_candidate_names(self.k)


def parse_profile(text: str, allow_new: bool = False) -> Profile:
    """Parse the line-oriented profile format.

    Set `allow_new` to accept reserved ``y<j>`` names, as found in witness
    files.
    """
    candidates = None
    votes: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise ProfileError(f"line {lineno}: expected '<key>: <value>'")
        head, body = head.strip(), body.strip()
        if candidates is None:
            if head != "candidates":
                raise ProfileError(f"line {lineno}: first entry must be 'candidates:'")
            candidates = tuple(c.strip() for c in body.split(","))
            for c in candidates:
                _check_name(c)
                if not allow_new and is_new_candidate(c):
                    raise ProfileError(f"line {lineno}: {c!r} is reserved for new candidates")
            if len(set(candidates)) != len(candidates):
                dup = next(c for c in candidates if candidates.count(c) > 1)
                raise ProfileError(f"line {lineno}: duplicate candidate {dup!r}")
            continue
        if not head.isdigit() or int(head) < 1:
            raise ProfileError(f"line {lineno}: multiplicity must be a positive integer, got {head!r}")
        ranking = tuple(c.strip() for c in body.split(">"))
        if len(set(ranking)) != len(ranking):
            dup = next(c for c in ranking if ranking.count(c) > 1)
            raise ProfileError(f"line {lineno}: duplicate candidate {dup!r} in vote")
        votes.extend([ranking] * int(head))
    if candidates is None:
        raise ProfileError("missing 'candidates:' line")
    if not votes:
        raise ProfileError("profile has no votes")
    return Profile(candidates, votes)


def serialize_profile(profile: Profile) -> str:
    """Inverse of :func:`parse_profile`.

    Only runs of identical consecutive votes are merged, so vote order
    survives a round trip.
    """
    lines = ["candidates: " + ",".join(profile.candidates)]
    run_vote, run_len = None, 0
    for v in profile.votes + (None,):
        if v == run_vote:
            run_len += 1
            continue
        if run_vote is not None:
            lines.append(f"{run_len}: " + ">".join(run_vote))
        run_vote, run_len = v, 1
    return "\n".join(lines) + "\n"


def project(profile: Profile, keep: Iterable[str]) -> Profile:
    """Delete every candidate outside `keep` from every vote."""
    keep = set(keep)
    if not keep:
        raise ValueError("cannot project on an empty candidate set")
    extra = keep - set(profile.candidates)
    if extra:
        raise ValueError(f"candidates {sorted(extra)} are not in the profile")
    cands = tuple(c for c in profile.candidates if c in keep)
    votes = tuple(tuple(c for c in v if c in keep) for v in profile.votes)
    return Profile(cands, votes)


def extend_votes(profile: Profile, new: Sequence[str], placements: Sequence[Sequence[tuple[int, str]]]) -> Profile:
    """Build an extension from explicit insertions.

    ``placements[i]`` lists ``(position, name)`` pairs for vote i, where
    position is the 0-based rank the new candidate occupies in the
    extended vote.  New candidates not mentioned for a vote are appended
    at the bottom in the order given by `new`.
    """
    votes = []
    for v, place in zip(profile.votes, placements):
        slots: list[str | None] = [None] * (len(v) + len(new))
        used = set()
        for pos, name in place:
            if slots[pos] is not None:
                raise ValueError(f"two new candidates at position {pos}")
            slots[pos] = name
            used.add(name)
        rest = iter(list(v) + [y for y in new if y not in used])
        votes.append(tuple(s if s is not None else next(rest) for s in slots))
    return Profile(tuple(profile.candidates) + tuple(new), votes)


def place_on_top(profile: Profile, new: Sequence[str], tops: Sequence[Sequence[str]]) -> Profile:
    """Extension that puts ``tops[i]`` (best first) above vote i.

    All other new candidates go to the bottom, in the order of `new`.
    """
    votes = []
    for v, top in zip(profile.votes, tops):
        top = tuple(top)
        rest = tuple(y for y in new if y not in top)
        votes.append(top + v + rest)
    return Profile(tuple(profile.candidates) + tuple(new), votes)


def fresh_prefix(taken: Iterable[str], base: str) -> str:
    """A prefix no existing name starts with, built by repeating `base`."""
    taken = list(taken)
    prefix = base
    while any(c.startswith(prefix) for c in taken):
        prefix += base
    return prefix
