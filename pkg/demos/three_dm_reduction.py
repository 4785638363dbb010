"""Walk through the 3-dimensional matching reduction to 3-approval.

A random instance with a perfect matching and one without are built, turned
into elections with three newcomers, and checked against exhaustive search.
"""

from pcwnc import k_approval, serialize_profile, verify_witness
from pcwnc.generators import random_3dm, reduce_3dm_to_3approval, solve_3dm
from pcwnc.oracle import possible_oracle_kapproval
from pcwnc.scoring import tally


def walk(positive, seed=1):
    inst = random_3dm(3, seed, positive=positive)
    print(f"== triples ({'with' if positive else 'without'} a perfect matching):", inst.triples)
    matching = solve_3dm(inst)
    print("matching:", matching)
    h = reduce_3dm_to_3approval(inst)
    tl = tally(h.profile)
    print(f"election: m={h.profile.m}, n={h.profile.n}, k={h.situation.k}")
    print("3-approval scores of x* / a1 / a1.1:", tl.within("x*", 3), tl.within("a1", 3), tl.within(h.x2[0], 3))
    search = possible_oracle_kapproval(h.profile, 3, "x*", 3)
    print("exhaustive search says possible:", search.possible)
    if matching is not None:
        w = h.witness_from_matching(matching)
        print("witness from matching verifies:", bool(verify_witness(h.situation, k_approval(3), "x*", w)))
        print("first lines of the witness:")
        print("\n".join(serialize_profile(w).splitlines()[:6]))
    print()


if __name__ == "__main__":
    walk(True)
    walk(False)
