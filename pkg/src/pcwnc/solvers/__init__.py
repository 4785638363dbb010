from .base import Decision, bottom_extension
from .approval import (
    necessary_kapproval,
    possible_kapproval_one,
    possible_plurality,
    possible_unbounded_kapproval,
    possible_veto,
)
from .two_approval import (
    TwoApprovalState,
    build_flow_graph,
    check_cowinner_two_approval,
    classify_hmlp,
)
from .two_new import kapproval_two_precheck, possible_kapproval_two, reduce_to_two_approval
from .borda import (
    canonical_extension,
    is_undominated,
    min_k_borda,
    possible_borda,
    possible_convex_scoring,
    possible_unbounded,
)

__all__ = [
    "Decision",
    "bottom_extension",
    "build_flow_graph",
    "canonical_extension",
    "check_cowinner_two_approval",
    "classify_hmlp",
    "is_undominated",
    "kapproval_two_precheck",
    "min_k_borda",
    "necessary_kapproval",
    "possible_borda",
    "possible_convex_scoring",
    "possible_kapproval_one",
    "possible_kapproval_two",
    "possible_plurality",
    "possible_unbounded",
    "possible_unbounded_kapproval",
    "possible_veto",
    "reduce_to_two_approval",
    "TwoApprovalState",
]
