"""How many newcomers does each candidate need under Borda?

Each newcomer placed right below x* widens the gap between x* and everyone
ranked beneath it, so the number needed depends on pairwise counts.
"""

import math
from pathlib import Path

from pcwnc import VotingSituation, borda, parse_profile, scores, solve
from pcwnc.solvers import is_undominated, min_k_borda
from pcwnc.scoring import tally

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"


def main():
    p = parse_profile((DATA / "borda_example.profile").read_text())
    sc = scores(p, borda()).scores
    tl = tally(p)
    print("Borda scores:", dict(sc))
    for c in p.candidates:
        need = min_k_borda(p, c)
        print(f"\n{c}: needs {'never' if need == math.inf else need}, undominated={is_undominated(p, c)}")
        for z in p.candidates:
            if z != c and sc[z] > sc[c]:
                print(f"   gap to {z}: {sc[z] - sc[c]}, votes with {c} above {z}: {tl.pairwise(c, z)}")
        ladder = [solve(VotingSituation(p, k), borda(), c).possible for k in range(8)]
        print("   possible for k = 0..7:", "".join("1" if x else "." for x in ladder))


if __name__ == "__main__":
    main()
