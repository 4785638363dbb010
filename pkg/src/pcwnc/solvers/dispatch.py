"""Pick the right procedure for a rule and a number of new candidates."""

from __future__ import annotations

from ..errors import SearchBudgetExceeded, UndecidedError
from ..oracle import possible_oracle, possible_oracle_kapproval
from ..profile import VotingSituation
from ..scoring import ScoringRule, is_convex
from .approval import possible_kapproval_one, possible_plurality, possible_veto
from .base import Decision, bottom_extension, checked, current_cowinner
from .borda import possible_borda, possible_convex_scoring
from .two_approval import check_cowinner_two_approval
from .two_new import possible_kapproval_two

DEFAULT_MAX_STATES = 10**8

METHODS = (
    "plurality",
    "veto",
    "kapproval-one",
    "two-approval-flow",
    "kapproval-two",
    "borda-threshold",
    "convex-canonical",
    "oracle",
    "oracle-kapproval",
)


def _named(method, profile, rule, target, k, max_states):
    K = rule.param
    runners = {
        "plurality": lambda: possible_plurality(profile, target, k),
        "veto": lambda: possible_veto(profile, target, k),
        "kapproval-one": lambda: possible_kapproval_one(profile, K, target),
        "two-approval-flow": lambda: check_cowinner_two_approval(profile, target, k),
        "kapproval-two": lambda: possible_kapproval_two(profile, K, target),
        "borda-threshold": lambda: possible_borda(profile, target, k),
        "convex-canonical": lambda: possible_convex_scoring(profile, rule, target, k),
        "oracle": lambda: possible_oracle(profile, rule, target, k, max_states=max_states),
        "oracle-kapproval": lambda: possible_oracle_kapproval(profile, K, target, k),
    }
    return runners[method]()


def solve(
    situation: VotingSituation,
    rule: ScoringRule,
    target: str,
    strategy: str = "auto",
    max_states: int = DEFAULT_MAX_STATES,
) -> Decision:
    """Decide whether `target` is a possible cowinner.

    Parameters
    ----------
    strategy : str
        ``"auto"`` picks the polynomial procedure for the rule when one
        exists and falls back to exhaustive search otherwise; any name in
        :data:`METHODS` forces that procedure.
    max_states : int
        Size guard for the exhaustive fallback.

    Raises
    ------
    UndecidedError
        When only exhaustive search applies and the instance exceeds the
        guard.  No answer is guessed.
    """
    profile, k = situation.profile, situation.k
    profile.require(target)
    if strategy != "auto":
        if strategy not in METHODS:
            raise ValueError(f"unknown strategy {strategy!r}; expected 'auto' or one of {', '.join(METHODS)}")
        return _named(strategy, profile, rule, target, k, max_states)
    if k == 0:
        return current_cowinner(profile, rule, target, 0, "cowinner-test")

    kind = rule.kind
    if kind == "plurality":
        return possible_plurality(profile, target, k)
    if kind == "veto":
        return possible_veto(profile, target, k)
    if kind == "borda":
        return possible_borda(profile, target, k)
    if kind == "kapproval":
        return _solve_kapproval(profile, rule, target, k, max_states)
    if is_convex(rule.vector(profile.m + k)):
        return possible_convex_scoring(profile, rule, target, k)
    return _guarded_oracle(profile, rule, target, k, max_states)


def _solve_kapproval(profile, rule, target, k, max_states):
    K = rule.param
    if K >= profile.m:
        # every initial candidate is approved by everyone; new ones sit below
        witness = bottom_extension(profile, k)
        return checked(Decision(True, "kapproval-trivial", witness), profile, k, rule, target)
    if K == 1:
        return possible_plurality(profile, target, k)
    if k == 1:
        return possible_kapproval_one(profile, K, target)
    if K == 2:
        return check_cowinner_two_approval(profile, target, k)
    if k == 2:
        return possible_kapproval_two(profile, K, target)
    # each vote contributes 0..min(k, K) new approvals
    per_vote = min(k, K) + 1
    if per_vote**profile.n > max_states:
        raise UndecidedError(
            f"undecided-by-polynomial-methods: {rule.name} with k={k} needs exhaustive search over "
            f"{per_vote}^{profile.n} states, above the limit of {max_states}"
        )
    return possible_oracle_kapproval(profile, K, target, k)


def _guarded_oracle(profile, rule, target, k, max_states):
    try:
        return possible_oracle(profile, rule, target, k, max_states=max_states)
    except SearchBudgetExceeded as exc:
        raise UndecidedError(f"undecided-by-polynomial-methods: {exc}") from exc
