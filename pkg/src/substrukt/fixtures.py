"""Small named algebras used across the test-suite and the documentation."""

from __future__ import annotations

from .algebra import FiniteAlgebra


def boolean2() -> FiniteAlgebra:
    """The two-element Boolean/Heyting monoid: 0 < 1, fusion = meet."""
    return FiniteAlgebra(
        "boolean2", ("0", "1"),
        {"join": ((0, 1), (1, 1)), "meet": ((0, 0), (0, 1)),
         "fus": ((0, 0), (0, 1))},
        zero=0, one=1)


def chain3_nilpotent() -> FiniteAlgebra:
    """0 < a < 1 with a*a = 0: refutes contraction (a is not below a*a)."""
    return FiniteAlgebra(
        "chain3-nilpotent", ("0", "a", "1"),
        {"join": ((0, 1, 2), (1, 1, 2), (2, 2, 2)),
         "fus": ((0, 0, 0), (0, 0, 1), (0, 1, 2))},
        zero=0, one=2)


def chain4_min() -> FiniteAlgebra:
    """The four-element chain 0 < a < b < 1 with fusion = meet; a member of
    every structural subvariety."""
    n = 4
    jt = tuple(tuple(max(i, j) for j in range(n)) for i in range(n))
    mt = tuple(tuple(min(i, j) for j in range(n)) for i in range(n))
    return FiniteAlgebra("chain4-min", ("0", "a", "b", "1"),
                         {"join": jt, "meet": mt, "fus": mt}, zero=0, one=3)


def diamond() -> FiniteAlgebra:
    """0 < a,b < 1 with a,b incomparable and x*y = 0 off the unit: a
    monotone pointed monoid that is NOT distributive over join."""
    join = ((0, 1, 2, 3), (1, 1, 3, 3), (2, 3, 2, 3), (3, 3, 3, 3))
    fus = ((0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 2), (0, 1, 2, 3))
    return FiniteAlgebra("diamond", ("0", "a", "b", "1"),
                         {"join": join, "fus": fus}, zero=0, one=3)


def pm5_chain() -> FiniteAlgebra:
    """The five-element chain 0 < a < b < c < 1 with fusion = meet and both
    negations collapsing everything but 0."""
    n = 5
    jt = tuple(tuple(max(i, j) for j in range(n)) for i in range(n))
    mt = tuple(tuple(min(i, j) for j in range(n)) for i in range(n))
    neg = (4, 0, 0, 0, 0)
    return FiniteAlgebra("pm5-chain", ("0", "a", "b", "c", "1"),
                         {"join": jt, "meet": mt, "fus": mt,
                          "rneg": neg, "lneg": neg},
                         zero=0, one=4)
