"""Finite pointed ordered algebras: variety membership via equational bases,
residuals and pseudocomplements derived from the order, opposite algebras,
and enumeration up to isomorphism.

Elements are indices 0..n-1 with cosmetic names; the order is always derived
from the join table (a <= b iff a v b = b), never stored independently.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Optional

from .syntax import (Bin, Const, Formula, Language, Neg, Var, ONE, ZERO,
                     fus, join, limp, lneg, meet, rimp, rneg, var)
from .sequents import Equation, equation_variables, ineq

BINARY_OPS = ("join", "meet", "fus", "rimp", "limp")
UNARY_OPS = ("rneg", "lneg")


class AlgebraError(ValueError):
    pass


class NoMaximum(AlgebraError):
    """A residual/pseudocomplement does not exist; carries the failing pair."""

    def __init__(self, op, pair):
        super().__init__(f"no maximum for {op} at {pair}")
        self.op = op
        self.pair = pair


class SizeTooLarge(AlgebraError):
    pass


class FiniteAlgebra:
    """Named finite carrier with operation tables and distinguished 0, 1.

    The join table must be present and is validated to be a semilattice on
    construction; every other table is validated for shape only.
    """

    def __init__(self, name, elements, ops, zero, one):
        self.name = name
        self.elements = tuple(elements)
        n = len(self.elements)
        if n == 0:
            raise AlgebraError("empty carrier")
        self.n = n
        self.ops = {}
        for op, table in ops.items():
            if op in BINARY_OPS:
                table = tuple(tuple(int(v) for v in row) for row in table)
                if len(table) != n or any(len(row) != n for row in table):
                    raise AlgebraError(f"{op} table must be {n}x{n}")
                if any(not 0 <= v < n for row in table for v in row):
                    raise AlgebraError(f"{op} entry out of range")
            elif op in UNARY_OPS:
                table = tuple(int(v) for v in table)
                if len(table) != n or any(not 0 <= v < n for v in table):
                    raise AlgebraError(f"{op} table must have {n} entries")
            else:
                raise AlgebraError(f"unknown operation {op!r}")
            self.ops[op] = table
        self.zero = int(zero)
        self.one = int(one)
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise AlgebraError("consts out of range")
        if "join" not in self.ops:
            raise AlgebraError("join table is required")
        self._check_semilattice()
        jt = self.ops["join"]
        self._leq = tuple(tuple(jt[i][j] == j for j in range(n))
                          for i in range(n))

    def _check_semilattice(self):
        jt = self.ops["join"]
        for i in range(self.n):
            if jt[i][i] != i:
                raise AlgebraError(f"join not idempotent at {self.elements[i]}")
            for j in range(self.n):
                if jt[i][j] != jt[j][i]:
                    raise AlgebraError("join not commutative")
                for k in range(self.n):
                    if jt[jt[i][j]][k] != jt[i][jt[j][k]]:
                        raise AlgebraError("join not associative")

    # -- basic structure -------------------------------------------------

    def has(self, op):
        return op in self.ops

    def language(self) -> Language:
        return Language(frozenset(self.ops) | frozenset({"zero", "one"}))

    def leq(self, i, j):
        return self._leq[i][j]

    def apply(self, op, *args):
        table = self.ops[op]
        if op in UNARY_OPS:
            return table[args[0]]
        return table[args[0]][args[1]]

    def bottom(self) -> Optional[int]:
        for b in range(self.n):
            if all(self._leq[b][k] for k in range(self.n)):
                return b
        return None

    def top(self) -> Optional[int]:
        for t in range(self.n):
            if all(self._leq[k][t] for k in range(self.n)):
                return t
        return None

    def max_of(self, subset) -> Optional[int]:
        """The maximum of a subset under the join order, if it exists."""
        subset = list(subset)
        for m in subset:
            if all(self._leq[x][m] for x in subset):
                return m
        return None

    def meet_partial(self, i, j) -> Optional[int]:
        lower = [k for k in range(self.n)
                 if self._leq[k][i] and self._leq[k][j]]
        return self.max_of(lower) if lower else None

    def right_residual(self, i, j) -> Optional[int]:
        """max{z : i*z <= j} under the join order, if it exists."""
        ft = self.ops["fus"]
        candidates = [z for z in range(self.n) if self._leq[ft[i][z]][j]]
        return self.max_of(candidates) if candidates else None

    def left_residual(self, i, j) -> Optional[int]:
        """max{z : z*i <= j} under the join order, if it exists."""
        ft = self.ops["fus"]
        candidates = [z for z in range(self.n) if self._leq[ft[z][i]][j]]
        return self.max_of(candidates) if candidates else None

    def index_of(self, name) -> int:
        return self.elements.index(name)

    def encode(self):
        """Label-sensitive structural encoding (names ignored)."""
        parts = [self.n, self.zero, self.one]
        for op in sorted(self.ops):
            parts.append((op, self.ops[op]))
        return tuple(parts)

    def __repr__(self):
        return f"FiniteAlgebra({self.name!r}, n={self.n})"


# ---------------------------------------------------------------------------
# Term evaluation and satisfaction
# ---------------------------------------------------------------------------

def eval_term(a: FiniteAlgebra, t: Formula, assignment) -> int:
    if isinstance(t, Var):
        return assignment[t.name]
    if isinstance(t, Const):
        return a.zero if t.which == "zero" else a.one
    if isinstance(t, Neg):
        if t.op not in a.ops:
            raise AlgebraError(f"operation {t.op} not in algebra")
        return a.ops[t.op][eval_term(a, t.child, assignment)]
    if t.op not in a.ops:
        raise AlgebraError(f"operation {t.op} not in algebra")
    return a.ops[t.op][eval_term(a, t.left, assignment)][eval_term(a, t.right, assignment)]


def _assignments(a, names):
    names = sorted(names)
    for values in itertools.product(range(a.n), repeat=len(names)):
        yield dict(zip(names, values))


def holds(a, e: Equation, assignment) -> bool:
    return eval_term(a, e.lhs, assignment) == eval_term(a, e.rhs, assignment)


def satisfies_equation(a: FiniteAlgebra, e: Equation) -> bool:
    return all(holds(a, e, v) for v in _assignments(a, equation_variables(e)))


def equation_witnesses(a, e: Equation, cap=50):
    """All failing assignments (as name dicts), up to cap."""
    out = []
    for v in _assignments(a, equation_variables(e)):
        if not holds(a, e, v):
            out.append({k: a.elements[i] for k, i in v.items()})
            if len(out) >= cap:
                break
    return out


def satisfies_quasi(a: FiniteAlgebra, premises, conclusion: Equation) -> bool:
    names = set(equation_variables(conclusion))
    for p in premises:
        names |= equation_variables(p)
    for v in _assignments(a, names):
        if all(holds(a, p, v) for p in premises) and not holds(a, conclusion, v):
            return False
    return True


# ---------------------------------------------------------------------------
# Equational bases (stored as data, indexable by name)
# ---------------------------------------------------------------------------

_X, _Y, _Z = var("x"), var("y"), var("z")

SEMILATTICE_EQS = (
    ("join-assoc", Equation(join(join(_X, _Y), _Z), join(_X, join(_Y, _Z)))),
    ("join-comm", Equation(join(_X, _Y), join(_Y, _X))),
    ("join-idem", Equation(join(_X, _X), _X)),
)

LATTICE_EQS = SEMILATTICE_EQS + (
    ("meet-assoc", Equation(meet(meet(_X, _Y), _Z), meet(_X, meet(_Y, _Z)))),
    ("meet-comm", Equation(meet(_X, _Y), meet(_Y, _X))),
    ("meet-idem", Equation(meet(_X, _X), _X)),
    ("absorb-join", Equation(join(_X, meet(_X, _Y)), _X)),
    ("absorb-meet", Equation(meet(_X, join(_X, _Y)), _X)),
)

MONOID_EQS = (
    ("fus-assoc", Equation(fus(fus(_X, _Y), _Z), fus(_X, fus(_Y, _Z)))),
    ("one-left", Equation(fus(ONE, _X), _X)),
    ("one-right", Equation(fus(_X, ONE), _X)),
)

DISTRIB_EQS = (
    ("distrib-r", Equation(fus(join(_X, _Y), _Z), join(fus(_X, _Z), fus(_Y, _Z)))),
    ("distrib-l", Equation(fus(_Z, join(_X, _Y)), join(fus(_Z, _X), fus(_Z, _Y)))),
)

PSEUDOCOMPLEMENT_EQS = (
    ("pc-r1", Equation(rneg(ONE), ZERO)),
    ("pc-r2", ineq(ONE, rneg(ZERO))),
    ("pc-r3", ineq(fus(_X, rneg(fus(_Y, _X))), rneg(_Y))),
    ("pc-l1", Equation(lneg(ONE), ZERO)),
    ("pc-l2", ineq(ONE, lneg(ZERO))),
    ("pc-l3", ineq(fus(lneg(fus(_X, _Y)), _X), lneg(_Y))),
    ("pc-ra", ineq(rneg(join(_X, _Y)), rneg(_X))),
    ("pc-la", ineq(lneg(join(_X, _Y)), lneg(_X))),
)

RESIDUATION_EQS = (
    ("res-3r", ineq(fus(_X, meet(rimp(_X, _Z), _Y)), _Z)),
    ("res-3l", ineq(fus(meet(limp(_X, _Z), _Y), _X), _Z)),
    ("res-4r", ineq(_Y, rimp(_X, join(fus(_X, _Y), _Z)))),
    ("res-4l", ineq(_Y, limp(_X, join(fus(_Y, _X), _Z)))),
)

NEGATION_DEF_EQS = (
    ("neg-5r", Equation(rneg(_X), rimp(_X, ZERO))),
    ("neg-5l", Equation(lneg(_X), limp(_X, ZERO))),
)

SIGMA_EQS = {
    "e": ("sigma-e", Equation(fus(_X, _Y), fus(_Y, _X))),
    "wl": ("sigma-wl", Equation(join(_X, ONE), ONE)),
    "wr": ("sigma-wr", Equation(join(ZERO, _X), _X)),
    "c": ("sigma-c", Equation(join(_X, fus(_X, _X)), fus(_X, _X))),
}

FAMILY_OPS = {
    "Msl": frozenset({"join", "fus"}),
    "Ml": frozenset({"join", "meet", "fus"}),
    "PMsl": frozenset({"join", "fus", "rneg", "lneg"}),
    "PMl": frozenset({"join", "meet", "fus", "rneg", "lneg"}),
    "RL": frozenset({"join", "meet", "fus", "rimp", "limp"}),
    "FL": frozenset({"join", "meet", "fus", "rimp", "limp", "rneg", "lneg"}),
}

FAMILY_EQS = {
    "Msl": SEMILATTICE_EQS + MONOID_EQS + DISTRIB_EQS,
    "Ml": LATTICE_EQS + MONOID_EQS + DISTRIB_EQS,
    "PMsl": SEMILATTICE_EQS + MONOID_EQS + DISTRIB_EQS + PSEUDOCOMPLEMENT_EQS,
    "PMl": LATTICE_EQS + MONOID_EQS + DISTRIB_EQS + PSEUDOCOMPLEMENT_EQS,
    "RL": LATTICE_EQS + MONOID_EQS + RESIDUATION_EQS,
    "FL": LATTICE_EQS + MONOID_EQS + RESIDUATION_EQS + NEGATION_DEF_EQS,
}

IMPLICATION_FREE_FAMILY = {
    "core": "Msl", "core-meet": "Ml", "core-neg": "PMsl",
    "core-meet-neg": "PMl", "full": "FL",
}


def family_of_language(lang: Language) -> str:
    for preset, fam in IMPLICATION_FREE_FAMILY.items():
        if Language.preset(preset) == lang:
            return fam
    raise AlgebraError("language is not one of the five named presets")


def language_of_family(family: str) -> Language:
    return Language(FAMILY_OPS[family] | frozenset({"zero", "one"}))


@dataclass(frozen=True)
class VarietyId:
    family: str
    sigma: frozenset = frozenset()

    def __post_init__(self):
        if self.family not in FAMILY_OPS:
            raise AlgebraError(f"unknown family {self.family!r}")

    def __str__(self):
        suffix = ",".join(s for s in ("e", "wl", "wr", "c") if s in self.sigma)
        return f"{self.family}[{suffix}]" if suffix else self.family


def variety_equations(v: VarietyId):
    eqs = list(FAMILY_EQS[v.family])
    for code in ("e", "wl", "wr", "c"):
        if code in v.sigma:
            eqs.append(SIGMA_EQS[code])
    return eqs


@dataclass(frozen=True)
class VarietyReport:
    ok: bool
    variety: VarietyId
    missing_ops: tuple = ()
    violations: tuple = ()  # ((equation name, (witness dicts, ...)), ...)

    def __bool__(self):
        return self.ok


def check_variety(a: FiniteAlgebra, v: VarietyId) -> VarietyReport:
    missing = tuple(sorted(FAMILY_OPS[v.family] - frozenset(a.ops)))
    if missing:
        return VarietyReport(False, v, missing_ops=missing)
    violations = []
    for name, eq in variety_equations(v):
        witnesses = equation_witnesses(a, eq)
        if witnesses:
            violations.append((name, tuple(witnesses)))
    return VarietyReport(not violations, v, violations=tuple(violations))


# ---------------------------------------------------------------------------
# Derived operations, opposites
# ---------------------------------------------------------------------------

def derive_residuals(a: FiniteAlgebra) -> FiniteAlgebra:
    """Extend with rimp/limp where every residual set has a maximum.

    rimp[x][y] is x\\y = max{z : x*z <= y}; limp[x][y] is y/x.
    """
    if "fus" not in a.ops:
        raise AlgebraError("fus table required to derive residuals")
    rt, lt = [], []
    for x in range(a.n):
        r_row, l_row = [], []
        for y in range(a.n):
            r = a.right_residual(x, y)
            if r is None:
                raise NoMaximum("rimp", (a.elements[x], a.elements[y]))
            l = a.left_residual(x, y)
            if l is None:
                raise NoMaximum("limp", (a.elements[x], a.elements[y]))
            r_row.append(r)
            l_row.append(l)
        rt.append(tuple(r_row))
        lt.append(tuple(l_row))
    ops = dict(a.ops)
    ops["rimp"] = tuple(rt)
    ops["limp"] = tuple(lt)
    return FiniteAlgebra(a.name + "+res", a.elements, ops, a.zero, a.one)


def derive_pseudocomplements(a: FiniteAlgebra) -> FiniteAlgebra:
    """Extend with rneg/lneg: rneg(x) = max{z : x*z <= 0}, lneg(x) mirrored."""
    if "fus" not in a.ops:
        raise AlgebraError("fus table required to derive pseudocomplements")
    rn, ln = [], []
    for x in range(a.n):
        r = a.right_residual(x, a.zero)
        if r is None:
            raise NoMaximum("rneg", (a.elements[x],))
        l = a.left_residual(x, a.zero)
        if l is None:
            raise NoMaximum("lneg", (a.elements[x],))
        rn.append(r)
        ln.append(l)
    ops = dict(a.ops)
    ops["rneg"] = tuple(rn)
    ops["lneg"] = tuple(ln)
    return FiniteAlgebra(a.name + "+pc", a.elements, ops, a.zero, a.one)


def opposite(a: FiniteAlgebra) -> FiniteAlgebra:
    """Fusion transposed, the implications and negations swapped."""
    ops = {}
    for op, table in a.ops.items():
        if op == "fus":
            ops["fus"] = tuple(tuple(table[j][i] for j in range(a.n))
                               for i in range(a.n))
        elif op == "rimp":
            ops["limp"] = table
        elif op == "limp":
            ops["rimp"] = table
        elif op == "rneg":
            ops["lneg"] = table
        elif op == "lneg":
            ops["rneg"] = table
        else:
            ops[op] = table
    return FiniteAlgebra(a.name + "^op", a.elements, ops, a.zero, a.one)


# ---------------------------------------------------------------------------
# Property equivalences (exchange/weakening/contraction, Props. 5-8 style)
# ---------------------------------------------------------------------------

_T = var("t")

PROPERTY_EQUIVALENCES = {
    "e": (([ineq(fus(_X, _Y), _Z)], ineq(fus(_Y, _X), _Z)),
          Equation(fus(_X, _Y), fus(_Y, _X))),
    "wl": (([ineq(fus(_X, _Y), _Z)], ineq(fus(fus(_X, _T), _Y), _Z)),
           Equation(join(_X, ONE), ONE)),
    "wr": (([ineq(_X, ZERO)], ineq(_X, _Y)),
           Equation(join(ZERO, _X), _X)),
    "c": (([ineq(fus(_X, _X), _Y)], ineq(_X, _Y)),
          Equation(join(_X, fus(_X, _X)), fus(_X, _X))),
}


def check_property_equivalences(a: FiniteAlgebra):
    """For each structural property, check that the quasi-inequation holds
    iff the corresponding equation does.  Divergence signals a bug."""
    report = {}
    for code, ((premises, conclusion), equation) in PROPERTY_EQUIVALENCES.items():
        q = satisfies_quasi(a, premises, conclusion)
        e = satisfies_equation(a, equation)
        report[code] = {"quasi": q, "equation": e, "agree": q == e}
    return report


# ---------------------------------------------------------------------------
# Enumeration up to isomorphism
# ---------------------------------------------------------------------------

def _transitive(leq, n):
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                for k in range(n):
                    if leq[j][k] and not leq[i][k]:
                        return False
    return True


def _join_table_from_leq(leq, n):
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            uppers = [k for k in range(n) if leq[i][k] and leq[j][k]]
            lub = None
            for m in uppers:
                if all(leq[m][u] for u in uppers):
                    lub = m
                    break
            if lub is None:
                return None
            row.append(lub)
        table.append(tuple(row))
    return tuple(table)


def semilattice_orders(n):
    """All join-semilattice join tables on 0..n-1 whose order respects the
    numeric labeling (every poset has such a labeling, so no isomorphism
    class is lost)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(pairs, bits):
            leq[i][j] = b
        if not _transitive(leq, n):
            continue
        table = _join_table_from_leq(leq, n)
        if table is not None:
            yield table, tuple(tuple(row) for row in leq)


def monoid_tables(leq, unit, n, distributive=True, value_order=None):
    """DFS over monotone associative unit tables, optionally distributive
    over the join induced by leq."""
    jt = _join_table_from_leq(leq, n)
    table = [[None] * n for _ in range(n)]
    for k in range(n):
        table[unit][k] = k
        table[k][unit] = k
    cells = [(i, j) for i in range(n) for j in range(n)
             if i != unit and j != unit]
    order = value_order if value_order is not None else list(range(n))

    def consistent(i, j):
        v = table[i][j]
        for i2 in range(n):
            for j2 in range(n):
                w = table[i2][j2]
                if w is None:
                    continue
                if leq[i][i2] and leq[j][j2] and not leq[v][w]:
                    return False
                if leq[i2][i] and leq[j2][j] and not leq[w][v]:
                    return False
        for x in range(n):
            for y in range(n):
                xy = table[x][y]
                for z in range(n):
                    yz = table[y][z]
                    if xy is not None and table[xy][z] is not None \
                            and yz is not None and table[x][yz] is not None:
                        if table[xy][z] != table[x][yz]:
                            return False
        if distributive:
            for x in range(n):
                for y in range(n):
                    for z in range(n):
                        xz, yz = table[x][z], table[y][z]
                        j1 = table[jt[x][y]][z]
                        if xz is not None and yz is not None and j1 is not None:
                            if j1 != jt[xz][yz]:
                                return False
                        zx, zy = table[z][x], table[z][y]
                        j2 = table[z][jt[x][y]]
                        if zx is not None and zy is not None and j2 is not None:
                            if j2 != jt[zx][zy]:
                                return False
        return True

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[k]
        for v in order:
            table[i][j] = v
            if consistent(i, j):
                yield from fill(k + 1)
        table[i][j] = None

    yield from fill(0)


def _relabel_binary(table, perm, inv, n):
    return tuple(tuple(perm[table[inv[i]][inv[j]]] for j in range(n))
                 for i in range(n))


def _relabel_unary(table, perm, inv, n):
    return tuple(perm[table[inv[i]]] for i in range(n))


def canonical_key(a: FiniteAlgebra):
    """Lexicographically minimal relabeling over all carrier permutations."""
    n = a.n
    names = sorted(a.ops)
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        encoded = [perm[a.zero], perm[a.one]]
        for op in names:
            t = a.ops[op]
            if op in UNARY_OPS:
                encoded.append(_relabel_unary(t, perm, inv, n))
            else:
                encoded.append(_relabel_binary(t, perm, inv, n))
        encoded = tuple(encoded)
        if best is None or encoded < best:
            best = encoded
    return (n, tuple(names), best)


def _default_names(n):
    return tuple(f"e{i}" for i in range(n))


def _meet_table(a: FiniteAlgebra):
    rows = []
    for i in range(a.n):
        row = []
        for j in range(a.n):
            m = a.meet_partial(i, j)
            if m is None:
                return None
            row.append(m)
        rows.append(tuple(row))
    return tuple(rows)


def _extend_for_family(base: FiniteAlgebra, family):
    """Derive the family's extra operations, or None when they don't exist."""
    ops = dict(base.ops)
    need = FAMILY_OPS[family]
    work = FiniteAlgebra(base.name, base.elements, ops, base.zero, base.one)
    if "meet" in need:
        mt = _meet_table(work)
        if mt is None:
            return None
        ops["meet"] = mt
    try:
        if "rimp" in need:
            with_res = derive_residuals(work)
            ops["rimp"] = with_res.ops["rimp"]
            ops["limp"] = with_res.ops["limp"]
        if "rneg" in need:
            with_pc = derive_pseudocomplements(work)
            ops["rneg"] = with_pc.ops["rneg"]
            ops["lneg"] = with_pc.ops["lneg"]
    except NoMaximum:
        return None
    return FiniteAlgebra(base.name, base.elements, ops, base.zero, base.one)


def enumerate_algebras(v: VarietyId, size: int):
    """All members of the variety on a carrier of exactly `size` elements,
    up to isomorphism (canonical-form pruning).  size <= 5."""
    if size > 5:
        raise SizeTooLarge("enumeration is capped at carrier size 5")
    if size < 1:
        return
    seen = set()
    names = _default_names(size)
    count = 0
    for jt, leq in semilattice_orders(size):
        for unit in range(size):
            for ft in monoid_tables(leq, unit, size, distributive=True):
                for zero in range(size):
                    base = FiniteAlgebra(f"enum{count}", names,
                                         {"join": jt, "fus": ft}, zero, unit)
                    full = _extend_for_family(base, v.family)
                    if full is None:
                        continue
                    if not check_variety(full, v).ok:
                        continue
                    key = canonical_key(full)
                    if key in seen:
                        continue
                    seen.add(key)
                    count += 1
                    yield full


def enumerate_algebras_upto(v: VarietyId, max_size: int):
    for size in range(1, max_size + 1):
        yield from enumerate_algebras(v, size)


def reduct(a: FiniteAlgebra, lang: Language) -> FiniteAlgebra:
    ops = {op: t for op, t in a.ops.items() if op in lang}
    return FiniteAlgebra(a.name + "|" + "".join(sorted(o[0] for o in ops)),
                         a.elements, ops, a.zero, a.one)


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def to_json_dict(a: FiniteAlgebra) -> dict:
    return {
        "elements": list(a.elements),
        "consts": {"zero": a.elements[a.zero], "one": a.elements[a.one]},
        "ops": {op: (list(t) if op in UNARY_OPS else [list(r) for r in t])
                for op, t in a.ops.items()},
    }


def from_json_dict(d: dict, name="algebra") -> FiniteAlgebra:
    elements = [str(e) for e in d["elements"]]
    index = {e: i for i, e in enumerate(elements)}

    def resolve(v):
        if isinstance(v, str):
            if v not in index:
                raise AlgebraError(f"unknown element {v!r}")
            return index[v]
        return int(v)

    ops = {}
    for op, table in d.get("ops", {}).items():
        if op in UNARY_OPS:
            ops[op] = [resolve(v) for v in table]
        else:
            ops[op] = [[resolve(v) for v in row] for row in table]
    consts = d.get("consts", {})
    zero = resolve(consts["zero"])
    one = resolve(consts["one"])
    return FiniteAlgebra(name, elements, ops, zero, one)


def load_algebra(path) -> FiniteAlgebra:
    with open(path) as fh:
        return from_json_dict(json.load(fh), name=str(path))


def dump_algebra(a: FiniteAlgebra, path):
    with open(path, "w") as fh:
        json.dump(to_json_dict(a), fh, indent=2)
        fh.write("\n")
