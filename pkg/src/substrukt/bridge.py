"""The Gentzen-algebra bridge: equation-side consequence, countermodel
search, filters in slice form, Leibniz congruences, and the
filter-congruence correspondence.

A filter on a finite algebra is represented by its two slices: s1, the
(1,1)-slice (a binary relation), and s0, the (1,0)-slice (a subset).  A
tuple (x0..xk, delta) belongs to the represented filter iff the collapsed
pair (x0*...*xk, delta) is in a slice; closure under the sequent rules then
reduces to element-quantified conditions, and `filter_closed_expanded`
re-checks them by honest tuple expansion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .sequents import Sequent, tau
from .algebra import (FiniteAlgebra, VarietyId, check_variety, eval_term,
                      enumerate_algebras, holds, language_of_family)
from .syntax import Language
from .sequents import equation_variables, sequent_variables


@dataclass(frozen=True)
class FilterSlices:
    s1: frozenset  # pairs (x, y)
    s0: frozenset  # elements x

    def __le__(self, other):
        return self.s1 <= other.s1 and self.s0 <= other.s0


def canonical_filter(a: FiniteAlgebra) -> FilterSlices:
    """s1 = the order relation, s0 = the down-set of 0."""
    s1 = frozenset((x, y) for x in range(a.n) for y in range(a.n)
                   if a.leq(x, y))
    s0 = frozenset(x for x in range(a.n) if a.leq(x, a.zero))
    return FilterSlices(s1, s0)


def filter_member(a: FiniteAlgebra, slices: FilterSlices, xs, delta) -> bool:
    """Membership of an arbitrary tuple via the product collapse."""
    p = a.one
    ft = a.ops["fus"]
    for x in xs:
        p = ft[p][x]
    return p in slices.s0 if delta is None else (p, delta) in slices.s1


def _missing(a: FiniteAlgebra, slices: FilterSlices, sigma, lang):
    """Slice members required by one application of some rule but absent.

    The conditions quantify sequence metavariables by their products, which
    range over the whole carrier (plus 1 for the empty sequence), so this is
    exact for the represented filters.
    """
    n = a.n
    ft = a.ops["fus"]
    s1, s0 = slices.s1, slices.s0
    need1, need0 = set(), set()

    def want1(p, y):
        if (p, y) not in s1:
            need1.add((p, y))

    def want0(p):
        if p not in s0:
            need0.add(p)

    def mem(p, delta):
        return p in s0 if delta is None else (p, delta) in s1

    def want(p, delta):
        want0(p) if delta is None else want1(p, delta)

    deltas = [None] + list(range(n))

    # axioms
    for x in range(n):
        want1(x, x)
    want1(a.one, a.one)
    want0(a.zero)

    # cut
    for (g, x) in s1:
        for u in range(n):
            for v in range(n):
                old = ft[ft[u][x]][v]
                new = ft[ft[u][g]][v]
                if old in s0:
                    want0(new)
                for y in range(n):
                    if (old, y) in s1:
                        want1(new, y)

    jt = a.ops["join"]
    for u in range(n):
        for v in range(n):
            for x in range(n):
                for y in range(n):
                    for delta in deltas:
                        if mem(ft[ft[u][x]][v], delta) and \
                                mem(ft[ft[u][y]][v], delta):
                            want(ft[ft[u][jt[x][y]]][v], delta)
    for (g, x) in s1:
        for y in range(n):
            want1(g, jt[x][y])
            want1(g, jt[y][x])

    # fusion: left introduction is a no-op under the collapse
    for (g, x) in s1:
        for (h, y) in s1:
            want1(ft[g][h], ft[x][y])

    if "meet" in lang:
        mt = a.ops["meet"]
        for u in range(n):
            for v in range(n):
                for x in range(n):
                    for y in range(n):
                        for delta in deltas:
                            if mem(ft[ft[u][x]][v], delta):
                                want(ft[ft[u][mt[x][y]]][v], delta)
                                want(ft[ft[u][mt[y][x]]][v], delta)
        for (g, x) in s1:
            for y in range(n):
                if (g, y) in s1:
                    want1(g, mt[x][y])

    if "rimp" in lang:
        rt, lt = a.ops["rimp"], a.ops["limp"]
        for (g, x) in s1:
            for u in range(n):
                for v in range(n):
                    for y in range(n):
                        lhs_r = ft[ft[ft[u][g]][rt[x][y]]][v]
                        lhs_l = ft[ft[ft[u][lt[x][y]]][g]][v]
                        for delta in deltas:
                            if mem(ft[ft[u][y]][v], delta):
                                want(lhs_r, delta)
                                want(lhs_l, delta)
        for g in range(n):
            for x in range(n):
                for y in range(n):
                    if (ft[x][g], y) in s1:
                        want1(g, rt[x][y])
                    if (ft[g][x], y) in s1:
                        want1(g, lt[x][y])

    if "rneg" in lang:
        rn, ln = a.ops["rneg"], a.ops["lneg"]
        for (g, x) in s1:
            want0(ft[g][rn[x]])
            want0(ft[ln[x]][g])
        for g in range(n):
            for x in range(n):
                if ft[x][g] in s0:
                    want1(g, rn[x])
                if ft[g][x] in s0:
                    want1(g, ln[x])

    # (=>0) and the structural rules
    for g in s0:
        want1(g, a.zero)
    if "e" in sigma:
        for u in range(n):
            for v in range(n):
                for x in range(n):
                    for y in range(n):
                        for delta in deltas:
                            if mem(ft[ft[ft[u][x]][y]][v], delta):
                                want(ft[ft[ft[u][y]][x]][v], delta)
    if "wl" in sigma:
        for u in range(n):
            for v in range(n):
                for x in range(n):
                    for delta in deltas:
                        if mem(ft[u][v], delta):
                            want(ft[ft[u][x]][v], delta)
    if "wr" in sigma:
        for g in s0:
            for x in range(n):
                want1(g, x)
    if "c" in sigma:
        for u in range(n):
            for v in range(n):
                for x in range(n):
                    for delta in deltas:
                        if mem(ft[ft[ft[u][x]][x]][v], delta):
                            want(ft[ft[u][x]][v], delta)
    return need1, need0


def is_filter(a: FiniteAlgebra, slices: FilterSlices, sigma, lang) -> bool:
    need1, need0 = _missing(a, slices, sigma, lang)
    return not need1 and not need0


def filter_closure(a: FiniteAlgebra, slices: FilterSlices, sigma, lang) -> FilterSlices:
    s1, s0 = set(slices.s1), set(slices.s0)
    while True:
        need1, need0 = _missing(a, FilterSlices(frozenset(s1), frozenset(s0)),
                                sigma, lang)
        if not need1 and not need0:
            return FilterSlices(frozenset(s1), frozenset(s0))
        s1 |= need1
        s0 |= need0


def all_filters(a: FiniteAlgebra, sigma, lang):
    """Every filter in slice form, generated bottom-up from the least one."""
    bottom = filter_closure(a, FilterSlices(frozenset(), frozenset()),
                            sigma, lang)
    atoms = [("s1", (x, y)) for x in range(a.n) for y in range(a.n)]
    atoms += [("s0", x) for x in range(a.n)]
    found = {(bottom.s1, bottom.s0): bottom}
    frontier = [bottom]
    while frontier:
        current = frontier.pop()
        for kind, atom in atoms:
            if kind == "s1":
                if atom in current.s1:
                    continue
                seed = FilterSlices(current.s1 | {atom}, current.s0)
            else:
                if atom in current.s0:
                    continue
                seed = FilterSlices(current.s1, current.s0 | {atom})
            closed = filter_closure(a, seed, sigma, lang)
            key = (closed.s1, closed.s0)
            if key not in found:
                found[key] = closed
                frontier.append(closed)
    return sorted(found.values(), key=lambda f: (len(f.s1), len(f.s0),
                                                 sorted(f.s1), sorted(f.s0)))


# -- honest tuple expansion, for the validation suite ------------------------

def _tuples_upto(n, max_len):
    for length in range(max_len + 1):
        yield from itertools.product(range(n), repeat=length)


def filter_closed_expanded(a: FiniteAlgebra, slices: FilterSlices, sigma,
                           lang, max_len=3) -> bool:
    """Re-check slice closure by expanding rules on genuine tuples, every
    sequent in an instance having antecedent length <= max_len."""
    n = a.n
    deltas = [None] + list(range(n))

    def mem(xs, delta):
        return filter_member(a, slices, xs, delta)

    # axioms
    for x in range(n):
        if not mem((x,), x):
            return False
    if not mem((), a.one) or not mem((a.zero,), None):
        return False

    def seqs(max_total):
        return list(_tuples_upto(n, max_total))

    small = seqs(max_len)
    for gamma in small:
        for sg in small:
            if len(sg) + 1 > max_len:
                continue
            for pi in small:
                if len(sg) + 1 + len(pi) > max_len:
                    continue
                if len(sg) + len(gamma) + len(pi) > max_len:
                    continue
                for x in range(n):
                    if not mem(gamma, x):
                        continue
                    for delta in deltas:
                        if mem(sg + (x,) + pi, delta) and \
                                not mem(sg + gamma + pi, delta):
                            return False  # cut

    for sg in small:
        for pi in small:
            room = max_len - len(sg) - len(pi)
            if room < 1:
                continue
            for delta in deltas:
                jt = a.ops["join"]
                for x in range(n):
                    for y in range(n):
                        if mem(sg + (x,) + pi, delta) and \
                                mem(sg + (y,) + pi, delta) and \
                                not mem(sg + (jt[x][y],) + pi, delta):
                            return False  # or-l
                if "meet" in lang:
                    mt = a.ops["meet"]
                    for x in range(n):
                        for y in range(n):
                            if mem(sg + (x,) + pi, delta):
                                if not mem(sg + (mt[x][y],) + pi, delta):
                                    return False  # and-l1
                                if not mem(sg + (mt[y][x],) + pi, delta):
                                    return False  # and-l2
                if room >= 2:
                    ft = a.ops["fus"]
                    for x in range(n):
                        for y in range(n):
                            if mem(sg + (x, y) + pi, delta) and \
                                    not mem(sg + (ft[x][y],) + pi, delta):
                                return False  # fus-l
                    if "e" in sigma:
                        for x in range(n):
                            for y in range(n):
                                if mem(sg + (x, y) + pi, delta) and \
                                        not mem(sg + (y, x) + pi, delta):
                                    return False
                    if "c" in sigma:
                        for x in range(n):
                            if mem(sg + (x, x) + pi, delta) and \
                                    not mem(sg + (x,) + pi, delta):
                                return False
                if mem(sg + pi, delta):
                    if not mem(sg + (a.one,) + pi, delta):
                        return False  # one-l
                    if "wl" in sigma:
                        for x in range(n):
                            if not mem(sg + (x,) + pi, delta):
                                return False

    jt = a.ops["join"]
    for gamma in small:
        for x in range(n):
            if mem(gamma, x):
                for y in range(n):
                    if not mem(gamma, jt[x][y]) or not mem(gamma, jt[y][x]):
                        return False  # or-r
                if "meet" in lang:
                    mt = a.ops["meet"]
                    for y in range(n):
                        if mem(gamma, y) and not mem(gamma, mt[x][y]):
                            return False  # and-r
        if mem(gamma, None):
            if not mem(gamma, a.zero):
                return False  # zero-r
            if "wr" in sigma:
                for x in range(n):
                    if not mem(gamma, x):
                        return False

    ft = a.ops["fus"]
    for gamma in small:
        for pi in small:
            if len(gamma) + len(pi) > max_len:
                continue
            for x in range(n):
                if not mem(gamma, x):
                    continue
                for y in range(n):
                    if mem(pi, y) and not mem(gamma + pi, ft[x][y]):
                        return False  # fus-r

    if "rimp" in lang:
        rt, lt = a.ops["rimp"], a.ops["limp"]
        for gamma in small:
            if len(gamma) + 1 > max_len:
                continue
            for x in range(n):
                for y in range(n):
                    if mem((x,) + gamma, y) and not mem(gamma, rt[x][y]):
                        return False  # rimp-r
                    if mem(gamma + (x,), y) and not mem(gamma, lt[x][y]):
                        return False  # limp-r
        for gamma in small:
            if not any(mem(gamma, x) for x in range(n)):
                continue
            for sg in small:
                for pi in small:
                    total = len(sg) + len(gamma) + 1 + len(pi)
                    if total > max_len or len(sg) + 1 + len(pi) > max_len:
                        continue
                    for x in range(n):
                        if not mem(gamma, x):
                            continue
                        for y in range(n):
                            for delta in deltas:
                                if mem(sg + (y,) + pi, delta):
                                    if not mem(sg + gamma + (rt[x][y],) + pi,
                                               delta):
                                        return False  # rimp-l
                                    if not mem(sg + (lt[x][y],) + gamma + pi,
                                               delta):
                                        return False  # limp-l

    if "rneg" in lang:
        rn, ln = a.ops["rneg"], a.ops["lneg"]
        for gamma in small:
            if len(gamma) + 1 > max_len:
                continue
            for x in range(n):
                if mem(gamma, x):
                    if not mem(gamma + (rn[x],), None):
                        return False  # rneg-l
                    if not mem((ln[x],) + gamma, None):
                        return False  # lneg-l
                if mem((x,) + gamma, None) and not mem(gamma, rn[x]):
                    return False  # rneg-r
                if mem(gamma + (x,), None) and not mem(gamma, ln[x]):
                    return False  # lneg-r
    return True


# ---------------------------------------------------------------------------
# Countermodels and semantic consequence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Found:
    algebra: FiniteAlgebra
    assignment: dict

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotFound:
    max_size: int

    def __bool__(self):
        return False


def _tau_equation(s: Sequent):
    (eq,) = tau(s)
    return eq


def countermodel(s: Sequent, v: VarietyId, max_size: int):
    """Search the enumerated variety members for a failure of tau(s)."""
    eq = _tau_equation(s)
    names = sorted(equation_variables(eq))
    for size in range(1, max_size + 1):
        for a in _enumerated(v, size):
            for values in itertools.product(range(a.n), repeat=len(names)):
                assignment = dict(zip(names, values))
                if not holds(a, eq, assignment):
                    named = {k: a.elements[i] for k, i in assignment.items()}
                    return Found(a, named)
    return NotFound(max_size)


@dataclass(frozen=True)
class SemRefuted:
    algebra: FiniteAlgebra
    assignment: dict


@dataclass(frozen=True)
class NoCountermodelUpTo:
    max_size: int
    regime: str  # "fep" when wl in sigma, else "bounded"


def entails_semantically(hyps, goal: Sequent, v: VarietyId, max_size: int):
    """Quasi-equation check tau[hyps] => tau(goal) over all enumerated
    members up to max_size."""
    hyp_eqs = [_tau_equation(h) for h in sorted(hyps, key=str)]
    goal_eq = _tau_equation(goal)
    names = set(equation_variables(goal_eq))
    for eq in hyp_eqs:
        names |= equation_variables(eq)
    names = sorted(names)
    for size in range(1, max_size + 1):
        for a in _enumerated(v, size):
            for values in itertools.product(range(a.n), repeat=len(names)):
                assignment = dict(zip(names, values))
                if all(holds(a, eq, assignment) for eq in hyp_eqs) and \
                        not holds(a, goal_eq, assignment):
                    named = {k: a.elements[i] for k, i in assignment.items()}
                    return SemRefuted(a, named)
    regime = "fep" if "wl" in v.sigma else "bounded"
    return NoCountermodelUpTo(max_size, regime)


_ENUM_CACHE = {}


def _enumerated(v: VarietyId, size: int):
    key = (v, size)
    if key not in _ENUM_CACHE:
        _ENUM_CACHE[key] = tuple(enumerate_algebras(v, size))
    return _ENUM_CACHE[key]


# ---------------------------------------------------------------------------
# Congruences and the Leibniz operator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Congruence:
    blocks: tuple  # tuple of sorted tuples, sorted by least member

    def block_index(self):
        out = {}
        for k, block in enumerate(self.blocks):
            for x in block:
                out[x] = k
        return out

    def pairs(self):
        return frozenset((x, y) for block in self.blocks
                         for x in block for y in block)

    def __le__(self, other):
        return self.pairs() <= other.pairs()


@dataclass(frozen=True)
class NotACongruence:
    operation: str
    witness: tuple


def partition_from_pairs(n, pairs) -> Congruence:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    blocks = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return Congruence(tuple(tuple(sorted(b))
                            for _, b in sorted(blocks.items())))


def _compatible(a: FiniteAlgebra, pairs) -> Optional[tuple]:
    """None when pairs (an equivalence) respects every operation, else a
    witness (op, (x, y, c))."""
    for op, table in a.ops.items():
        if op in ("rneg", "lneg"):
            for (x, y) in pairs:
                if (table[x], table[y]) not in pairs:
                    return (op, (x, y))
        else:
            for (x, y) in pairs:
                for c in range(a.n):
                    if (table[x][c], table[y][c]) not in pairs:
                        return (op, (x, y, c))
                    if (table[c][x], table[c][y]) not in pairs:
                        return (op, (x, y, c))
    return None


def leibniz_congruence(a: FiniteAlgebra, r: FilterSlices):
    """Theta_R = {(x,y) : (x,y) and (y,x) both in the (1,1)-slice}; for
    cut-closed filters this is the Leibniz congruence."""
    theta = frozenset((x, y) for (x, y) in r.s1 if (y, x) in r.s1)
    for x in range(a.n):
        if (x, x) not in theta:
            return NotACongruence("reflexivity", (x,))
    for (x, y) in theta:
        for z in range(a.n):
            if (y, z) in theta and (x, z) not in theta:
                return NotACongruence("transitivity", (x, y, z))
    witness = _compatible(a, theta)
    if witness is not None:
        return NotACongruence(*witness)
    return partition_from_pairs(a.n, theta)


def all_partitions(n):
    """All set partitions of range(n), via restricted growth strings."""
    def rec(i, assignment, used):
        if i == n:
            blocks = {}
            for x, b in enumerate(assignment):
                blocks.setdefault(b, []).append(x)
            yield Congruence(tuple(tuple(b) for _, b in sorted(blocks.items())))
            return
        for b in range(used + 1):
            yield from rec(i + 1, assignment + [b], max(used, b + 1))
    yield from rec(0, [], 0)


def all_congruences(a: FiniteAlgebra):
    out = []
    for part in all_partitions(a.n):
        if _compatible(a, part.pairs()) is None:
            out.append(part)
    return out


def quotient_algebra(a: FiniteAlgebra, cong: Congruence) -> FiniteAlgebra:
    index = cong.block_index()
    reps = [block[0] for block in cong.blocks]
    names = tuple("{" + ",".join(a.elements[x] for x in block) + "}"
                  for block in cong.blocks)
    ops = {}
    for op, table in a.ops.items():
        if op in ("rneg", "lneg"):
            ops[op] = tuple(index[table[r]] for r in reps)
        else:
            ops[op] = tuple(tuple(index[table[r][s]] for s in reps)
                            for r in reps)
    return FiniteAlgebra(a.name + "/~", names, ops,
                         index[a.zero], index[a.one])


def k_congruences(a: FiniteAlgebra, v: VarietyId):
    return [c for c in all_congruences(a)
            if check_variety(quotient_algebra(a, c), v).ok]


@dataclass(frozen=True)
class CorrespondenceReport:
    ok: bool
    n_filters: int
    n_congruences: int
    failures: tuple = ()

    def __bool__(self):
        return self.ok


def filter_congruence_correspondence(a: FiniteAlgebra, v: VarietyId) -> CorrespondenceReport:
    """Enumerate the filters and the variety congruences and verify that the
    Leibniz operator is an inclusion-preserving bijection between them."""
    if a.n > 4:
        raise ValueError("correspondence check is capped at 4 elements")
    lang = language_of_family(v.family)
    filters = all_filters(a, v.sigma, lang)
    congs = k_congruences(a, v)
    failures = []
    images = []
    for f in filters:
        omega = leibniz_congruence(a, f)
        if isinstance(omega, NotACongruence):
            failures.append(f"Leibniz of a filter is not a congruence: {omega}")
            continue
        images.append(omega)
    if len(set(c.blocks for c in images)) != len(filters):
        failures.append("Leibniz operator is not injective on filters")
    if set(c.blocks for c in images) != set(c.blocks for c in congs):
        failures.append("Leibniz images differ from the variety congruences")
    for f1, o1 in zip(filters, images):
        for f2, o2 in zip(filters, images):
            if (f1 <= f2) != (o1 <= o2):
                failures.append("Leibniz operator is not an order isomorphism")
                break
        else:
            continue
        break
    return CorrespondenceReport(not failures, len(filters), len(congs),
                                tuple(failures))
