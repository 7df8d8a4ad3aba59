"""Indiscernibility: when two columns are the same point, and how close
two *different* points can get.

Run:  python3 demos/04_indiscernibility.py
"""

from catent import (
    INDISCERNIBLES,
    are_indiscernible,
    canonical_classes,
    induced_partition,
    load_fixture,
    nondiscreteness_demo,
    su_distance,
    symmetric_uncertainty,
)


def main() -> None:
    data = load_fixture(INDISCERNIBLES)
    digits, letters = data["digits"], data["letters"]
    print("two columns with different label sets:")
    print(f"  digits : {' '.join(str(l) for l in digits.labels)}")
    print(f"  letters: {' '.join(str(l) for l in letters.labels)}")
    print()

    p = induced_partition(digits, data)
    print("both induce the same partition of the ten rows:")
    for block, prob in zip(p.blocks, p.block_probs):
        print(f"  rows {sorted(block)}  (mass {prob})")
    print()

    print(f"are_indiscernible -> {are_indiscernible(digits, letters, data)}")
    q = induced_partition(letters, data)
    print(f"SU                -> {symmetric_uncertainty(p, q)} (exactly 1)")
    print(f"distance          -> {su_distance(digits, letters, data)} (exactly 0)")
    classes = canonical_classes(data)
    print(f"same canonical class -> {classes['digits'] == classes['letters']}")
    print()

    print("distance 0 happens only at indiscernibility, but positive")
    print("distances get arbitrarily small: nested indicator columns that")
    print("disagree on exactly one of n rows are distinct points whose")
    print("distance vanishes as n grows.")
    print()
    print("     n   disagreement 1/n   distance")
    for eps, dist in nondiscreteness_demo(steps=11):
        n = round(1.0 / eps)
        print(f"  {n:>5}   {eps:<16.6f}  {dist:.6f}")
    print()
    print("no ball of positive radius isolates a point, so the geometry of")
    print("the quotient space is not discrete.")


if __name__ == "__main__":
    main()
