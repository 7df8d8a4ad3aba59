"""The joint operation: a commutative monoid on columns, and a
1-Lipschitz one.

Pairing two columns row-wise is the natural "combine these features"
operation.  Up to indiscernibility it is associative and commutative,
any constant column is its identity, and it interacts with the
SU-distance through the contraction bound

    d(x*y, z*w) <= d(x, z) + d(y, w)

which makes combining features continuous: nearby inputs give nearby
joints.  Notably, this bound is provable even though the triangle
inequality for d itself is not (see demo 03).

Run:  python3 demos/05_monoid.py
"""

from catent import (
    INTERNSHIP,
    check_contractivity,
    check_monoid_laws,
    identity_variable,
    induced_partition,
    joint,
    load_fixture,
    su_distance,
)
from catent.algebra import are_indiscernible


def main() -> None:
    data = load_fixture(INTERNSHIP)
    x, y = data["Creativity"], data["AttentionType"]

    j = joint(x, y, data)
    print(f"joint column {j.name}: first rows {j.labels[:3]} ...")
    blocks = induced_partition(j, data).n_blocks
    print(f"it refines both parents: {blocks} blocks vs "
          f"{induced_partition(x, data).n_blocks} and "
          f"{induced_partition(y, data).n_blocks}")
    print()

    e = identity_variable(data)
    print("monoid laws, witnessed on one instance each:")
    xy_yx = are_indiscernible(joint(x, y, data), joint(y, x, data), data)
    print(f"  x*y ~ y*x               -> {xy_yx}")
    z = data["GotHired"]
    assoc = are_indiscernible(
        joint(joint(x, y, data), z, data), joint(x, joint(y, z, data), data), data
    )
    print(f"  (x*y)*z ~ x*(y*z)       -> {assoc}")
    ident = are_indiscernible(joint(x, e, data), x, data)
    print(f"  x*constant ~ x          -> {ident}")
    print()

    print("and validated exhaustively (exact class equality, no tolerance):")
    print(check_monoid_laws(data).summary())
    print()

    print("contraction bound on one quadruple:")
    z, w = data["Neatness"], data["GotHired"]
    lhs = su_distance(joint(x, y, data), joint(z, w, data), data)
    rhs = su_distance(x, z, data) + su_distance(y, w, data)
    print(f"  d(x*y, z*w) = {lhs:.4f}  <=  d(x,z) + d(y,w) = {rhs:.4f}")
    print()

    print("validated over all 6^4 = 1296 column quadruples:")
    print(check_contractivity(data).summary())


if __name__ == "__main__":
    main()
