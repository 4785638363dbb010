"""Exhaustive ground truth for the possible-cowinner question.

Two searches are provided.  :func:`possible_oracle` works for any scoring
rule and walks every way of inserting the new candidates into every vote.
:func:`possible_oracle_kapproval` exploits that under K-approval only the
number of new candidates placed in a vote's top K matters.

Both searches raise instead of answering when they would exceed their
budget; they never report "impossible" without having proved it.
"""

from __future__ import annotations

from itertools import permutations

from .errors import SearchBudgetExceeded
from .profile import Profile, extend_votes, new_candidate_names, place_on_top
from .scoring import ScoringRule, k_approval, tally
from .solvers.base import Decision, checked, current_cowinner, round_robin

DEFAULT_MAX_STATES = 10**8
DEFAULT_NODE_BUDGET = 10**8


def _vote_outcomes(vote, k, vec, index):
    """Distinct score effects of inserting k new candidates into one vote.

    Yields ``(initial_gain, new_gain, pattern)`` in lexicographic order of
    the insertion positions ``(pos(y1), ..., pos(yk))``, keeping only the
    first pattern of each effect.
    """
    m = len(vote)
    seen = set()
    out = []
    for pos in permutations(range(m + k), k):
        taken = set(pos)
        gain = [0] * m
        rest = (p for p in range(m + k) if p not in taken)
        for c, p in zip(vote, rest):
            gain[index[c]] = vec[p]
        new_gain = tuple(vec[p] for p in pos)
        key = (tuple(gain), new_gain)
        if key in seen:
            continue
        seen.add(key)
        out.append((tuple(gain), new_gain, pos))
    return out


def count_oracle_states(profile: Profile, rule: ScoringRule, k: int) -> int:
    """Upper bound on the leaves the generic oracle may visit."""
    vec = rule.vector(profile.m + k)
    per_vote = len(_vote_outcomes(profile.votes[0], k, vec, profile.index))
    return per_vote**profile.n


def possible_oracle(
    profile: Profile,
    rule: ScoringRule,
    target: str,
    k: int,
    max_states: int = DEFAULT_MAX_STATES,
) -> Decision:
    """Decide by enumerating every extension (up to score symmetry).

    Parameters
    ----------
    max_states : int
        Refuse with :class:`SearchBudgetExceeded` when the number of
        distinct per-vote score effects raised to n exceeds this.

    Returns
    -------
    Decision
        Method ``"oracle"``; the witness is the first extension found in
        canonical order.
    """
    profile.require(target)
    if k == 0:
        return current_cowinner(profile, rule, target, 0, "oracle")
    vec = rule.vector(profile.m + k)
    outcomes = [_vote_outcomes(v, k, vec, profile.index) for v in profile.votes]
    if len(outcomes[0]) ** profile.n > max_states:
        raise SearchBudgetExceeded(
            f"exhaustive search needs {len(outcomes[0])}^{profile.n} states, above the limit of {max_states}"
        )

    t = profile.index[target]
    n, m = profile.n, profile.m
    # per remaining suffix: best the target can still gain, least each candidate must gain
    top_gain = [0] * (n + 1)
    low_gain = [[0] * m for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        top_gain[i] = top_gain[i + 1] + max(o[0][t] for o in outcomes[i])
        low_gain[i] = [low_gain[i + 1][c] + min(o[0][c] for o in outcomes[i]) for c in range(m)]

    failed = set()
    chosen = [None] * n

    def search(i, init, new):
        bound = init[t] + top_gain[i]
        if any(init[c] + low_gain[i][c] > bound for c in range(m)) or max(new) > bound:
            return False
        if i == n:
            return init[t] == max(init) and max(new) <= init[t]
        key = (i, init, tuple(sorted(new)))
        if key in failed:
            return False
        for gain, new_gain, pos in outcomes[i]:
            nxt = tuple(a + b for a, b in zip(init, gain))
            nnew = tuple(a + b for a, b in zip(new, new_gain))
            chosen[i] = pos
            if search(i + 1, nxt, nnew):
                return True
        failed.add(key)
        return False

    if not search(0, (0,) * m, (0,) * k):
        return Decision(False, "oracle", trace={"memo": len(failed)})
    names = new_candidate_names(k)
    witness = extend_votes(profile, names, [list(zip(pos, names)) for pos in chosen])
    return checked(Decision(True, "oracle", witness, {"memo": len(failed)}), profile, k, rule, target)


def _push_options(profile, K, target, k, start, slot):
    """Per vote, the useful counts s and the rivals each one pushes out."""
    options = []
    for v in profile.votes:
        limit = K - v.index(target) - 1 if target in v[:K] else K
        opts = [(0, ())]
        for s in range(1, min(k, K, limit) + 1):
            # pushing out a rival that never needed lowering is wasted budget
            if start[slot[v[K - s]]] <= 0:
                continue
            opts.append((s, tuple(slot[c] for c in v[K - s:K])))
        options.append(opts)
    return options


def possible_oracle_kapproval(
    profile: Profile,
    K: int,
    target: str,
    k: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Decision:
    """Pruned exhaustive search specialised to K-approval.

    Per vote only the count s of new candidates placed on top matters: they
    push out the originals ranked K-s+1..K.  Which new candidates are used
    is irrelevant, since the counts can be spread cyclically over y1..yk as
    long as no vote gets more than k and the total stays within k times the
    target's score.  Pushing the target itself out never helps, so it is
    never considered.

    Raises
    ------
    SearchBudgetExceeded
        When more than `node_budget` search nodes would be expanded.
    """
    profile.require(target)
    if not 1 <= K < profile.m:
        raise ValueError(f"K must satisfy 1 <= K < m={profile.m}, got {K}")
    rule = k_approval(K)
    if k == 0:
        return current_cowinner(profile, rule, target, 0, "oracle-kapproval")
    tl = tally(profile)
    own = tl.within(target, K)
    rivals = [c for c in profile.candidates if c != target]
    slot = {c: j for j, c in enumerate(rivals)}
    start = tuple(tl.within(c, K) - own for c in rivals)
    budget = k * own

    options = _push_options(profile, K, target, k, start, slot)

    n = profile.n
    # per suffix i and rival j: prefix sums of the sorted cheapest pushes
    # still available; their count bounds how far j can still be lowered
    suffix = [None] * (n + 1)
    suffix[n] = [(0,)] * len(rivals)
    pool = [[] for _ in rivals]
    for i in range(n - 1, -1, -1):
        best = {}
        for s, hit in options[i]:
            for j in hit:
                best[j] = min(best.get(j, s), s)
        for j, s in best.items():
            pool[j].append(s)
        row = []
        for j in range(len(rivals)):
            sums = [0]
            for s in sorted(pool[j]):
                sums.append(sums[-1] + s)
            row.append(tuple(sums))
        suffix[i] = row

    def hopeless(i, deficits, used):
        worst = 0
        for j, d in enumerate(deficits):
            if d <= 0:
                continue
            sums = suffix[i][j]
            if d >= len(sums):
                return True
            worst = max(worst, sums[d])
        return used + worst > budget

    failed = set()
    chosen = [0] * n
    nodes = 0

    def search(i, deficits, used):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetExceeded(f"pruned K-approval search exceeded {node_budget} nodes")
        if all(d <= 0 for d in deficits):
            for r in range(i, n):
                chosen[r] = 0
            return True
        if i == n:
            return False
        if hopeless(i, deficits, used):
            return False
        key = (i, deficits, used)
        if key in failed:
            return False
        for s, hit in options[i]:
            if used + s > budget:
                continue
            nxt = list(deficits)
            for j in hit:
                if nxt[j] > 0:
                    nxt[j] -= 1
            chosen[i] = s
            if search(i + 1, tuple(nxt), used + s):
                return True
        failed.add(key)
        return False

    clipped = tuple(max(0, d) for d in start)
    trace = {"score_target": own, "budget": budget}
    if own == 0 and any(clipped):
        return Decision(False, "oracle-kapproval", trace=trace)
    if not search(0, clipped, 0):
        trace["nodes"] = nodes
        return Decision(False, "oracle-kapproval", trace=trace)
    trace["nodes"] = nodes

    names = new_candidate_names(k)
    cycle = round_robin(k)
    tops = [tuple(next(cycle) for _ in range(s)) for s in chosen]
    witness = place_on_top(profile, names, tops)
    return checked(Decision(True, "oracle-kapproval", witness, trace), profile, k, rule, target)
