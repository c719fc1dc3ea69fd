#!/usr/bin/env python3
"""Independent rank oracle for the strip-module quotient at a root of unity.

Computes, over exact rationals, the dimension of the quotient of the
two-dimensional strip module with no defects on four nodes at the loop
weight beta = -2 cos(pi/3) = -1 (the smallest root-of-unity case p' = 3):
the singular vector is the degree-two idempotent applied to the nested-arc
state, and the quotient dimension is

    dim V - rank(TL-orbit of the singular vector).

Everything is implemented directly on chord diagrams, independently of the
C++ library, to freeze the expected value into the test suite.
"""

from fractions import Fraction

BETA = Fraction(-1)  # -2 cos(pi/3)


def act_e(j, pairs):
    """TL generator e_j (1-indexed) on a perfect matching of {0..n-1}.

    Returns (factor, new_matching); closing an arc costs BETA."""
    a, b = j - 1, j
    m = {}
    for x, y in pairs:
        m[x] = y
        m[y] = x
    if m[a] == b:
        return BETA, pairs
    pa, pb = m[a], m[b]
    new = {(a, b), (min(pa, pb), max(pa, pb))}
    for x, y in pairs:
        if x not in (a, b, pa, pb) and y not in (a, b, pa, pb):
            new.add((x, y))
    return Fraction(1), frozenset(new)


def insert_arc(j, pairs):
    """Arc insertion at 1-indexed nodes (j, j+1): old nodes >= j shift right."""
    new = set()
    for x, y in pairs:
        x2 = x + 2 if x >= j - 1 else x
        y2 = y + 2 if y >= j - 1 else y
        new.add((min(x2, y2), max(x2, y2)))
    new.add((j - 1, j))
    return frozenset(new)


def echelonize(rows):
    ech = []
    for row in rows:
        r = row[:]
        for piv, erow in ech:
            if r[piv] != 0:
                f = r[piv]
                r = [a - f * b for a, b in zip(r, erow)]
        piv = next((i for i, a in enumerate(r) if a != 0), None)
        if piv is not None:
            inv = r[piv]
            ech.append((piv, [a / inv for a in r]))
    return [r for _, r in sorted(ech)]


def main():
    basis = [frozenset({(0, 1), (2, 3)}), frozenset({(0, 3), (1, 2)})]
    dim_v = len(basis)

    nested = insert_arc(2, insert_arc(1, frozenset()))
    assert nested == frozenset({(0, 3), (1, 2)})
    # degree-two idempotent: id + (1/[2]) e_1 with [2] = 2 cos(pi/3) = 1
    fac, rewired = act_e(1, nested)
    v0 = [Fraction(0)] * dim_v
    v0[basis.index(nested)] += 1
    v0[basis.index(rewired)] += fac

    rows = [v0]
    while True:
        extra = []
        for row in rows:
            for j in (1, 2, 3):
                out = [Fraction(0)] * dim_v
                for i, coeff in enumerate(row):
                    if coeff == 0:
                        continue
                    fac, newp = act_e(j, basis[i])
                    out[basis.index(newp)] += coeff * fac
                extra.append(out)
        new_rows = echelonize(rows + extra)
        if new_rows == rows:
            break
        rows = new_rows

    rank = len(rows)
    labels = ["+".join(f"({x+1}{y+1})" for x, y in sorted(b)) for b in basis]
    print(f"basis: {labels}")
    print(f"singular vector coordinates: {[str(c) for c in v0]}")
    print(f"relation rank at size 4: {rank}")
    print(f"quotient dimension: {dim_v - rank}")


if __name__ == "__main__":
    main()
