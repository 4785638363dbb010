"""2-approval with any number of new candidates, via integral max-flow.

Votes are classified by their current top two (``a`` first, ``b`` second),
for every initial candidate other than the target x*:

* HP(b): ``a`` is an initial candidate other than x*;
* MP(b): ``a`` is x* or a new candidate;
* LP(a): ``b`` is an initial candidate other than x*.

A vote can sit in HP(b) and LP(a) at the same time.  New candidates are
only ever put on top of votes; whatever is not placed goes to the bottom.
"""

from __future__ import annotations

from ..errors import InvariantError
from ..maxflow import FlowGraph, max_flow
from ..profile import Profile, new_candidate_names, place_on_top
from ..scoring import k_approval, tally
from .approval import possible_kapproval_one
from .base import Decision, checked, current_cowinner, round_robin

SOURCE, SINK = "s", "t"


class TwoApprovalState:
    """Mutable working profile for one run of the flow algorithm.

    Class memberships and scores are updated incrementally on every
    placement.  With ``debug=True`` each update is cross-checked against a
    full recomputation.
    """

    def __init__(self, profile: Profile, target: str, k: int, debug: bool = False):
        if profile.m < 2:
            raise ValueError("2-approval classification needs at least two initial candidates")
        profile.require(target)
        self.profile = profile
        self.target = target
        self.k = k
        self.debug = debug
        self.new = new_candidate_names(k)
        self._new_set = set(self.new)
        self.tops: list[list[str]] = [[] for _ in profile.votes]
        tl = tally(profile)
        self.scores = {c: tl.within(c, 2) for c in profile.candidates}
        self.scores.update({y: 0 for y in self.new})
        self.base_score = self.scores[target]
        self.T = 0
        others = [c for c in profile.candidates if c != target]
        self.hp: dict[str, set[int]] = {c: set() for c in others}
        self.mp: dict[str, set[int]] = {c: set() for c in others}
        self.lp: dict[str, set[int]] = {c: set() for c in others}
        for i in range(profile.n):
            self._enter(i)
        self.x_dot = [c for c in others if self.deficit(c) > 0]
        self.x1 = [c for c in self.x_dot if len(self.hp[c]) > self.deficit(c)]
        self.x2 = [c for c in self.x_dot if len(self.hp[c]) <= self.deficit(c)]
        self.rem: list[str] = []

    # -- views -----------------------------------------------------------
    def top_two(self, i: int) -> tuple[str, str]:
        seq = self.tops[i][:2] + list(self.profile.votes[i][:2])
        return seq[0], seq[1]

    def deficit(self, c: str) -> int:
        return self.scores[c] - self.scores[self.target]

    @property
    def new_scores(self) -> dict[str, int]:
        return {y: self.scores[y] for y in self.new}

    def _is_rival(self, c: str) -> bool:
        return c != self.target and c not in self._new_set

    def memberships(self, i: int) -> list[tuple[str, str]]:
        a, b = self.top_two(i)
        out = []
        if self._is_rival(b):
            if self._is_rival(a):
                out.append(("hp", b))
                out.append(("lp", a))
            else:
                out.append(("mp", b))
        return out

    def _enter(self, i: int) -> None:
        for cls, c in self.memberships(i):
            getattr(self, cls)[c].add(i)

    def _leave(self, i: int) -> None:
        for cls, c in self.memberships(i):
            getattr(self, cls)[c].discard(i)

    def recompute_classes(self) -> dict[str, dict[str, set[int]]]:
        fresh = {cls: {c: set() for c in self.hp} for cls in ("hp", "mp", "lp")}
        for i in range(self.profile.n):
            for cls, c in self.memberships(i):
                fresh[cls][c].add(i)
        return fresh

    # -- updates ---------------------------------------------------------
    def add_new_on_top(self, i: int) -> str:
        """Put the lowest-scoring new candidate (lowest index on ties) on top
        of vote `i`; returns its name.

        Names chosen here keep the new candidates' scores balanced but may
        repeat within a vote; :meth:`extension` turns the per-vote counts
        into distinct names.
        """
        if not 0 <= i < self.profile.n:
            raise IndexError(f"no vote with index {i}")
        if not self.new:
            raise ValueError("there are no new candidates to place")
        if len(self.tops[i]) >= 2:
            raise ValueError(f"vote {i} already has two new candidates on top")
        y = min(self.new, key=lambda c: self.scores[c])
        self._leave(i)
        _, dropped = self.top_two(i)
        self.scores[dropped] -= 1
        self.tops[i].insert(0, y)
        self.scores[y] += 1
        self.T += 1
        self._enter(i)
        if self.debug:
            fresh = self.recompute_classes()
            if fresh != {"hp": self.hp, "mp": self.mp, "lp": self.lp}:
                raise InvariantError("incremental HP/MP/LP classes diverged from recomputation")
        return y

    def extension(self) -> Profile:
        """Extension with the placed counts, names dealt cyclically in vote
        order so that no vote repeats a name and the scores stay balanced."""
        cycle = round_robin(self.k)
        tops = [tuple(next(cycle) for _ in placed) for placed in self.tops]
        return place_on_top(self.profile, self.new, tops)


def classify_hmlp(profile: Profile, target: str, k: int = 0, debug: bool = False) -> TwoApprovalState:
    """Initial HP/MP/LP classes, deficits and the X1/X2 split."""
    return TwoApprovalState(profile, target, k, debug=debug)


def build_flow_graph(state: TwoApprovalState) -> FlowGraph:
    """Flow network choosing which LP votes of X2 candidates to spend two
    new candidates on.

    Node ids are ``"s"``, ``"t"``, ``("cand", x)`` and ``("vote", i)``.
    If X1 or X2 is empty the graph has no edges.
    """
    if not state.x1 or not state.x2:
        return FlowGraph((SOURCE, SINK), ())
    nodes = [SOURCE, SINK]
    edges = []
    x1 = set(state.x1)
    for x in state.x1:
        nodes.append(("cand", x))
        edges.append((SOURCE, ("cand", x), state.deficit(x)))
    for x in state.x2:
        nodes.append(("cand", x))
    for x in state.x2:
        for i in sorted(state.lp[x]):
            nodes.append(("vote", i))
            edges.append((("vote", i), ("cand", x), 1))
            _, second = state.top_two(i)
            if second in x1:
                edges.append((("cand", second), ("vote", i), 1))
        edges.append((("cand", x), SINK, state.deficit(x)))
    return FlowGraph(nodes, edges)


def phase_one(st: TwoApprovalState) -> None:
    """A new candidate on top of every HP vote of every X2 candidate."""
    for x in st.x2:
        for i in sorted(st.hp[x]):
            st.add_new_on_top(i)


def phase_two(st: TwoApprovalState) -> None:
    """New candidates on MP votes while a deficit remains; X2 candidates
    brought down to the target's score move to REM."""
    for x in st.x2:
        for i in sorted(st.mp[x]):
            if st.deficit(x) <= 0:
                break
            st.add_new_on_top(i)
        if st.deficit(x) <= 0:
            st.rem.append(x)
    st.x2 = [x for x in st.x2 if x not in st.rem]


def check_cowinner_two_approval(profile: Profile, target: str, k: int, debug: bool = False) -> Decision:
    """Decide whether `target` can cowin under 2-approval after adding k new
    candidates; on success the returned witness is verified."""
    profile.require(target)
    rule = k_approval(2)
    if k == 0 or profile.m == 1:
        return current_cowinner(profile, rule, target, k, "cowinner-test")
    if k == 1:
        return possible_kapproval_one(profile, 2, target)

    st = TwoApprovalState(profile, target, k, debug=debug)
    trace = {"x1": list(st.x1), "x2_initial": list(st.x2)}

    phase_one(st)
    phase_two(st)
    trace.update(x2=list(st.x2), rem=list(st.rem), T=st.T)

    if max(st.new_scores.values()) > st.base_score:
        trace["stopped"] = "new-candidate-overflow"
        return Decision(False, "two-approval-flow", trace=trace)

    graph = build_flow_graph(st)
    flow = max_flow(graph)
    others = [c for c in profile.candidates if c != target]
    need = (
        sum(max(0, st.deficit(x)) for x in others)
        + sum(max(0, st.deficit(x)) for x in st.x2)
        - (k * st.base_score - st.T)
    )
    trace.update(flow_value=flow.value, threshold=need, graph=graph)
    if flow.value < need:
        return Decision(False, "two-approval-flow", trace=trace)

    witness = _complete(st, graph, flow)
    trace["placements"] = st.T
    if st.T > k * st.base_score:
        raise InvariantError("witness construction used more placements than the budget")
    return checked(Decision(True, "two-approval-flow", witness, trace), profile, k, rule, target)


def _complete(st: TwoApprovalState, graph: FlowGraph, flow) -> Profile:
    def place_two(i):
        st.add_new_on_top(i)
        st.add_new_on_top(i)

    # 1: LP votes carrying flow get two new candidates
    for (u, v, _), f in zip(graph.edges, flow.flows):
        if f and isinstance(u, tuple) and u[0] == "vote":
            place_two(u[1])
    # 2: leftover X2 deficits, two placements per unit
    for x in st.x2:
        need = st.deficit(x)
        if need <= 0:
            continue
        spare = sorted(st.lp[x])[:need]
        if len(spare) < need:
            raise InvariantError(f"not enough LP votes left to lower {x}")
        for i in spare:
            place_two(i)
    # 3: leftover X1 deficits, one placement atop an untouched HP vote
    for x in st.x1:
        need = st.deficit(x)
        if need <= 0:
            continue
        spare = sorted(st.hp[x])[:need]
        if len(spare) < need:
            raise InvariantError(f"not enough HP votes left to lower {x}")
        for i in spare:
            st.add_new_on_top(i)
    # 4: everything else at the bottom
    return st.extension()
