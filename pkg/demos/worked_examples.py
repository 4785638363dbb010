"""Small worked examples: plurality, 2-approval with three newcomers, Borda.

Run with ``python3 demos/worked_examples.py``.
"""

from pathlib import Path

from pcwnc import VotingSituation, borda, k_approval, parse_profile, plurality, scores, serialize_profile, solve

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"


def show(title, profile, rule, k):
    print(f"== {title}: {rule.name}, k={k}")
    print("initial scores:", dict(scores(profile, rule).scores))
    for c in profile.candidates:
        d = solve(VotingSituation(profile, k), rule, c)
        print(f"  {c:>3}: possible={d.possible!s:<5} method={d.method}")
    print()


def main():
    p = parse_profile("candidates: a, b, c\n6: a > b > c\n4: b > c > a\n3: c > a > b\n")
    show("three candidates", p, plurality(), 1)

    ex = parse_profile((DATA / "example1.profile").read_text())
    show("seven candidates", ex, k_approval(2), 3)
    d = solve(VotingSituation(ex, 3), k_approval(2), "x*")
    print("flow trace:", {key: d.trace[key] for key in ("T", "flow_value", "threshold", "placements")})
    print("witness extension for x*:")
    print(serialize_profile(d.witness))

    b = parse_profile((DATA / "borda_example.profile").read_text())
    show("four candidates", b, borda(), 1)


if __name__ == "__main__":
    main()
