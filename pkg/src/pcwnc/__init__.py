"""Decide whether a candidate can still cowin once new candidates join an election."""

from .errors import InvariantError, ProfileError, SearchBudgetExceeded, UndecidedError
from .profile import Profile, VotingSituation, parse_profile, project, serialize_profile
from .scoring import (
    ScoringRule,
    borda,
    cowinners,
    custom,
    k_approval,
    parse_rule,
    plurality,
    r_delta,
    scores,
    veto,
    verify_witness,
)
from .solvers import Decision, min_k_borda, possible_unbounded
from .solvers.dispatch import solve
from .oracle import possible_oracle, possible_oracle_kapproval

__all__ = [
    "Decision",
    "InvariantError",
    "Profile",
    "ProfileError",
    "ScoringRule",
    "SearchBudgetExceeded",
    "UndecidedError",
    "VotingSituation",
    "borda",
    "cowinners",
    "custom",
    "k_approval",
    "min_k_borda",
    "parse_profile",
    "parse_rule",
    "plurality",
    "possible_oracle",
    "possible_oracle_kapproval",
    "possible_unbounded",
    "project",
    "r_delta",
    "scores",
    "serialize_profile",
    "solve",
    "veto",
    "verify_witness",
]
