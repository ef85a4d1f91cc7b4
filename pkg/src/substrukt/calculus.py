"""Rule schemata of the full Lambek calculus and its structural extensions,
proof trees, proof checking, and backward rule-instance enumeration.

A ProofTree node stores enough instance data (position indices, side
formulas) to recompute its conclusion from its premises deterministically;
`derive_conclusion` is the single source of truth for what each rule does.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Optional

from .syntax import (Bin, Const, Formula, Language, Neg, FULL, ZERO, ONE,
                     format_formula, fus, join, limp, lneg, meet,
                     mirror_formula, rimp, rneg)
from .sequents import (Sequent, check_sequent_language, format_sequent, fuse,
                       mirror_sequent, parse_sequent, rho, tau)

SIGMA_LETTERS = ("e", "wl", "wr", "c")


def parse_sigma(text) -> frozenset:
    """Parse a comma list of structural-rule codes; `w` expands to wl,wr."""
    out = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if part == "w":
            out.update(("wl", "wr"))
        elif part in SIGMA_LETTERS:
            out.add(part)
        else:
            raise ValueError(f"unknown structural code {part!r}")
    return frozenset(out)


def format_sigma(sigma) -> str:
    return ",".join(s for s in SIGMA_LETTERS if s in sigma) or "(none)"


class RuleId(enum.Enum):
    AXIOM = "axiom"
    CUT = "cut"
    OR_L = "or-l"
    OR_R1 = "or-r1"
    OR_R2 = "or-r2"
    AND_L1 = "and-l1"
    AND_L2 = "and-l2"
    AND_R = "and-r"
    FUS_L = "fus-l"
    FUS_R = "fus-r"
    RIMP_L = "rimp-l"
    RIMP_R = "rimp-r"
    LIMP_L = "limp-l"
    LIMP_R = "limp-r"
    RNEG_L = "rneg-l"
    RNEG_R = "rneg-r"
    LNEG_L = "lneg-l"
    LNEG_R = "lneg-r"
    ONE_L = "one-l"
    ONE_R = "one-r"
    ZERO_L = "zero-l"
    ZERO_R = "zero-r"
    EXCH_L = "exch-l"
    WEAK_L = "weak-l"
    WEAK_R = "weak-r"
    CONTR_L = "contr-l"
    HYPOTHESIS = "hypothesis"

    @property
    def label(self):
        return self.value


_RULES_BY_LABEL = {r.value: r for r in RuleId}

_STRUCTURAL_CORE = frozenset({RuleId.AXIOM, RuleId.CUT, RuleId.ONE_L,
                              RuleId.ONE_R, RuleId.ZERO_L, RuleId.ZERO_R})

_INTRO_RULES = {
    "join": (RuleId.OR_L, RuleId.OR_R1, RuleId.OR_R2),
    "meet": (RuleId.AND_L1, RuleId.AND_L2, RuleId.AND_R),
    "fus": (RuleId.FUS_L, RuleId.FUS_R),
    "rimp": (RuleId.RIMP_L, RuleId.RIMP_R),
    "limp": (RuleId.LIMP_L, RuleId.LIMP_R),
    "rneg": (RuleId.RNEG_L, RuleId.RNEG_R),
    "lneg": (RuleId.LNEG_L, RuleId.LNEG_R),
}

_SIGMA_RULES = {"e": RuleId.EXCH_L, "wl": RuleId.WEAK_L,
                "wr": RuleId.WEAK_R, "c": RuleId.CONTR_L}


@dataclass(frozen=True)
class CalculusId:
    """FL_sigma[Psi]: a structural-rule set over a sublanguage."""

    sigma: frozenset
    lang: Language

    def __post_init__(self):
        bad = self.sigma - frozenset(SIGMA_LETTERS)
        if bad:
            raise ValueError(f"unknown structural codes: {sorted(bad)}")

    def __str__(self):
        return f"FL[{format_sigma(self.sigma)}]"


def calculus(sigma="", lang=FULL) -> CalculusId:
    if isinstance(sigma, str):
        sigma = parse_sigma(sigma)
    return CalculusId(frozenset(sigma), lang)


def rules_of(cal: CalculusId) -> frozenset:
    """All rules of FL_sigma[Psi]; (=>0) is kept even when wr subsumes it."""
    rules = set(_STRUCTURAL_CORE)
    for connective, intro in _INTRO_RULES.items():
        if connective in cal.lang:
            rules.update(intro)
    for code in cal.sigma:
        rules.add(_SIGMA_RULES[code])
    return frozenset(rules)


@dataclass(frozen=True)
class ProofTree:
    conclusion: Sequent
    rule: RuleId
    premises: tuple = ()
    data: tuple = ()

    def height(self):
        if not self.premises:
            return 1
        return 1 + max(p.height() for p in self.premises)

    def size(self):
        return 1 + sum(p.size() for p in self.premises)


class InstanceError(ValueError):
    """A (rule, data, premises) triple does not form a rule instance."""


def _need(cond, message):
    if not cond:
        raise InstanceError(message)


def derive_conclusion(rule: RuleId, data: tuple, premises: tuple) -> Sequent:
    """Recompute the conclusion a rule instance produces from its premises.

    Raises InstanceError when the premises do not fit the schema.  Leaf rules
    (Axiom, =>1, 0=>, Hypothesis) are validated by `check_leaf` instead.
    """
    arity = RULE_ARITY[rule]
    _need(len(premises) == arity, f"{rule.label} takes {arity} premises")
    if arity >= 1:
        a, d = premises[0].antecedent, premises[0].succedent
    if rule is RuleId.OR_L:
        (i,) = data
        a2, d2 = premises[1].antecedent, premises[1].succedent
        _need(d == d2 and len(a) == len(a2), "or-l premises must share context")
        _need(0 <= i < len(a), "or-l position out of range")
        _need(a[:i] == a2[:i] and a[i + 1:] == a2[i + 1:], "or-l contexts differ")
        return Sequent(a[:i] + (join(a[i], a2[i]),) + a[i + 1:], d)
    if rule is RuleId.OR_R1:
        (side,) = data
        _need(d is not None, "or-r1 needs a succedent")
        return Sequent(a, join(d, side))
    if rule is RuleId.OR_R2:
        (side,) = data
        _need(d is not None, "or-r2 needs a succedent")
        return Sequent(a, join(side, d))
    if rule is RuleId.AND_L1:
        i, side = data
        _need(0 <= i < len(a), "and-l1 position out of range")
        return Sequent(a[:i] + (meet(a[i], side),) + a[i + 1:], d)
    if rule is RuleId.AND_L2:
        i, side = data
        _need(0 <= i < len(a), "and-l2 position out of range")
        return Sequent(a[:i] + (meet(side, a[i]),) + a[i + 1:], d)
    if rule is RuleId.AND_R:
        a2, d2 = premises[1].antecedent, premises[1].succedent
        _need(a == a2, "and-r premises must share the antecedent")
        _need(d is not None and d2 is not None, "and-r needs succedents")
        return Sequent(a, meet(d, d2))
    if rule is RuleId.FUS_L:
        (i,) = data
        _need(0 <= i <= len(a) - 2, "fus-l needs two adjacent formulas")
        return Sequent(a[:i] + (fus(a[i], a[i + 1]),) + a[i + 2:], d)
    if rule is RuleId.FUS_R:
        a2, d2 = premises[1].antecedent, premises[1].succedent
        _need(d is not None and d2 is not None, "fus-r needs succedents")
        return Sequent(a + a2, fus(d, d2))
    if rule is RuleId.RIMP_L:
        (j,) = data
        a2, d2 = premises[1].antecedent, premises[1].succedent
        _need(d is not None, "rimp-l first premise needs a succedent")
        _need(0 <= j < len(a2), "rimp-l position out of range")
        return Sequent(a2[:j] + a + (rimp(d, a2[j]),) + a2[j + 1:], d2)
    if rule is RuleId.LIMP_L:
        (j,) = data
        a2, d2 = premises[1].antecedent, premises[1].succedent
        _need(d is not None, "limp-l first premise needs a succedent")
        _need(0 <= j < len(a2), "limp-l position out of range")
        return Sequent(a2[:j] + (limp(d, a2[j]),) + a + a2[j + 1:], d2)
    if rule is RuleId.RIMP_R:
        _need(len(a) >= 1 and d is not None, "rimp-r needs a leading formula")
        return Sequent(a[1:], rimp(a[0], d))
    if rule is RuleId.LIMP_R:
        _need(len(a) >= 1 and d is not None, "limp-r needs a trailing formula")
        return Sequent(a[:-1], limp(a[-1], d))
    if rule is RuleId.RNEG_L:
        _need(d is not None, "rneg-l premise needs a succedent")
        return Sequent(a + (rneg(d),), None)
    if rule is RuleId.RNEG_R:
        _need(len(a) >= 1 and d is None, "rneg-r needs an empty succedent")
        return Sequent(a[1:], rneg(a[0]))
    if rule is RuleId.LNEG_L:
        _need(d is not None, "lneg-l premise needs a succedent")
        return Sequent((lneg(d),) + a, None)
    if rule is RuleId.LNEG_R:
        _need(len(a) >= 1 and d is None, "lneg-r needs an empty succedent")
        return Sequent(a[:-1], lneg(a[-1]))
    if rule is RuleId.ONE_L:
        (i,) = data
        _need(0 <= i <= len(a), "one-l position out of range")
        return Sequent(a[:i] + (ONE,) + a[i:], d)
    if rule is RuleId.ZERO_R:
        _need(d is None, "zero-r premise must have an empty succedent")
        return Sequent(a, ZERO)
    if rule is RuleId.EXCH_L:
        (i,) = data
        _need(0 <= i <= len(a) - 2, "exch-l position out of range")
        return Sequent(a[:i] + (a[i + 1], a[i]) + a[i + 2:], d)
    if rule is RuleId.WEAK_L:
        i, side = data
        _need(0 <= i <= len(a), "weak-l position out of range")
        return Sequent(a[:i] + (side,) + a[i:], d)
    if rule is RuleId.WEAK_R:
        (side,) = data
        _need(d is None, "weak-r premise must have an empty succedent")
        return Sequent(a, side)
    if rule is RuleId.CONTR_L:
        (i,) = data
        _need(0 <= i <= len(a) - 2, "contr-l position out of range")
        _need(a[i] == a[i + 1], "contr-l needs adjacent duplicates")
        return Sequent(a[:i + 1] + a[i + 2:], d)
    if rule is RuleId.CUT:
        (j,) = data
        a2, d2 = premises[1].antecedent, premises[1].succedent
        _need(d is not None, "cut first premise needs a succedent")
        _need(0 <= j < len(a2) and a2[j] == d, "cut formula must match")
        return Sequent(a2[:j] + a + a2[j + 1:], d2)
    raise InstanceError(f"{rule.label} is a leaf rule")


RULE_ARITY = {
    RuleId.AXIOM: 0, RuleId.ONE_R: 0, RuleId.ZERO_L: 0, RuleId.HYPOTHESIS: 0,
    RuleId.CUT: 2, RuleId.OR_L: 2, RuleId.AND_R: 2, RuleId.FUS_R: 2,
    RuleId.RIMP_L: 2, RuleId.LIMP_L: 2,
    RuleId.OR_R1: 1, RuleId.OR_R2: 1, RuleId.AND_L1: 1, RuleId.AND_L2: 1,
    RuleId.FUS_L: 1, RuleId.RIMP_R: 1, RuleId.LIMP_R: 1, RuleId.RNEG_L: 1,
    RuleId.RNEG_R: 1, RuleId.LNEG_L: 1, RuleId.LNEG_R: 1, RuleId.ONE_L: 1,
    RuleId.ZERO_R: 1, RuleId.EXCH_L: 1, RuleId.WEAK_L: 1, RuleId.WEAK_R: 1,
    RuleId.CONTR_L: 1,
}


def check_leaf(rule: RuleId, conclusion: Sequent, hyps) -> Optional[str]:
    """Validate a 0-premise node; returns an error string or None."""
    a, d = conclusion.antecedent, conclusion.succedent
    if rule is RuleId.AXIOM:
        if len(a) == 1 and d == a[0]:
            return None
        return "axiom must be phi => phi"
    if rule is RuleId.ONE_R:
        if a == () and d == ONE:
            return None
        return "one-r must be => 1"
    if rule is RuleId.ZERO_L:
        if a == (ZERO,) and d is None:
            return None
        return "zero-l must be 0 =>"
    if rule is RuleId.HYPOTHESIS:
        if conclusion in hyps:
            return None
        return "hypothesis-not-declared"
    return f"{rule.label} is not a leaf rule"


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    reason: Optional[str] = None
    path: tuple = ()
    node: Optional[Sequent] = None

    def __bool__(self):
        return self.ok


def check_proof(tree: ProofTree, cal: CalculusId, hyps=frozenset()) -> CheckResult:
    """Accepts iff every node is a correct instance of a rule of cal, or a
    declared hypothesis at a Hypothesis leaf.  Rejects with the first
    offending node (in preorder) and the reason."""
    hyps = frozenset(hyps)
    allowed = rules_of(cal)
    stack = [(tree, ())]
    while stack:
        node, path = stack.pop()
        rule = node.rule
        if rule is not RuleId.HYPOTHESIS and rule not in allowed:
            return CheckResult(False, f"rule-not-in-calculus: {rule.label}",
                               path, node.conclusion)
        try:
            check_sequent_language(node.conclusion, cal.lang)
        except Exception as exc:
            return CheckResult(False, f"conclusion outside language: {exc}",
                               path, node.conclusion)
        if RULE_ARITY[rule] != len(node.premises):
            return CheckResult(False, f"arity mismatch for {rule.label}",
                               path, node.conclusion)
        if RULE_ARITY[rule] == 0:
            err = check_leaf(rule, node.conclusion, hyps)
            if err:
                return CheckResult(False, err, path, node.conclusion)
        else:
            try:
                derived = derive_conclusion(
                    rule, node.data, tuple(p.conclusion for p in node.premises))
            except InstanceError as exc:
                return CheckResult(False, f"instance mismatch: {exc}",
                                   path, node.conclusion)
            if derived != node.conclusion:
                return CheckResult(False, "instance mismatch: conclusion differs",
                                   path, node.conclusion)
        for k, prem in enumerate(reversed(node.premises)):
            stack.append((prem, path + (len(node.premises) - 1 - k,)))
    return CheckResult(True)


# ---------------------------------------------------------------------------
# Backward rule-instance enumeration (sequence-level; Cut excluded)
# ---------------------------------------------------------------------------

def rule_instances_backward(goal: Sequent, cal: CalculusId,
                            include_exchange=True):
    """All (rule, data, premises) triples whose instance concludes `goal`.

    Cut is excluded (cut-free search).  Every antecedent split, deletion,
    duplication and adjacent transposition is enumerated; exchange instances
    can be suppressed for multiset-normalized search.
    """
    rules = rules_of(cal)
    a, d = goal.antecedent, goal.succedent
    out = []

    def emit(rule, data, premises):
        if rule in rules:
            out.append((rule, data, tuple(premises)))

    if len(a) == 1 and d == a[0]:
        emit(RuleId.AXIOM, (), ())
    if a == () and d == ONE:
        emit(RuleId.ONE_R, (), ())
    if a == (ZERO,) and d is None:
        emit(RuleId.ZERO_L, (), ())

    for i, f in enumerate(a):
        rest_l, rest_r = a[:i], a[i + 1:]
        if isinstance(f, Bin):
            if f.op == "join":
                emit(RuleId.OR_L, (i,),
                     [Sequent(rest_l + (f.left,) + rest_r, d),
                      Sequent(rest_l + (f.right,) + rest_r, d)])
            elif f.op == "meet":
                emit(RuleId.AND_L1, (i, f.right),
                     [Sequent(rest_l + (f.left,) + rest_r, d)])
                emit(RuleId.AND_L2, (i, f.left),
                     [Sequent(rest_l + (f.right,) + rest_r, d)])
            elif f.op == "fus":
                emit(RuleId.FUS_L, (i,),
                     [Sequent(rest_l + (f.left, f.right) + rest_r, d)])
            elif f.op == "rimp":
                # conclusion Sigma, Gamma, phi\psi, Pi => Delta
                for j in range(i + 1):
                    emit(RuleId.RIMP_L, (j,),
                         [Sequent(a[j:i], f.left),
                          Sequent(a[:j] + (f.right,) + rest_r, d)])
            elif f.op == "limp":
                # conclusion Sigma, psi/phi, Gamma, Pi => Delta
                for k in range(i + 1, len(a) + 1):
                    emit(RuleId.LIMP_L, (i,),
                         [Sequent(a[i + 1:k], f.left),
                          Sequent(rest_l + (f.right,) + a[k:], d)])
        if f == ONE:
            emit(RuleId.ONE_L, (i,), [Sequent(rest_l + rest_r, d)])
        if RuleId.WEAK_L in rules:
            emit(RuleId.WEAK_L, (i, f), [Sequent(rest_l + rest_r, d)])
        if RuleId.CONTR_L in rules:
            emit(RuleId.CONTR_L, (i,),
                 [Sequent(a[:i + 1] + (f,) + a[i + 1:], d)])

    if d is not None:
        if isinstance(d, Bin):
            if d.op == "join":
                emit(RuleId.OR_R1, (d.right,), [Sequent(a, d.left)])
                emit(RuleId.OR_R2, (d.left,), [Sequent(a, d.right)])
            elif d.op == "meet":
                emit(RuleId.AND_R, (), [Sequent(a, d.left), Sequent(a, d.right)])
            elif d.op == "fus":
                for k in range(len(a) + 1):
                    emit(RuleId.FUS_R, (),
                         [Sequent(a[:k], d.left), Sequent(a[k:], d.right)])
            elif d.op == "rimp":
                emit(RuleId.RIMP_R, (), [Sequent((d.left,) + a, d.right)])
            elif d.op == "limp":
                emit(RuleId.LIMP_R, (), [Sequent(a + (d.left,), d.right)])
        elif isinstance(d, Neg):
            if d.op == "rneg":
                emit(RuleId.RNEG_R, (), [Sequent((d.child,) + a, None)])
            else:
                emit(RuleId.LNEG_R, (), [Sequent(a + (d.child,), None)])
        if d == ZERO:
            emit(RuleId.ZERO_R, (), [Sequent(a, None)])
        if RuleId.WEAK_R in rules:
            emit(RuleId.WEAK_R, (d,), [Sequent(a, None)])
    else:
        if len(a) >= 1 and isinstance(a[-1], Neg) and a[-1].op == "rneg":
            emit(RuleId.RNEG_L, (), [Sequent(a[:-1], a[-1].child)])
        if len(a) >= 1 and isinstance(a[0], Neg) and a[0].op == "lneg":
            emit(RuleId.LNEG_L, (), [Sequent(a[1:], a[0].child)])

    if include_exchange and RuleId.EXCH_L in rules:
        for i in range(len(a) - 1):
            emit(RuleId.EXCH_L, (i,),
                 [Sequent(a[:i] + (a[i + 1], a[i]) + a[i + 2:], d)])
    return out


# ---------------------------------------------------------------------------
# Mirror images of proofs
# ---------------------------------------------------------------------------

_MIRROR_RULE = {
    RuleId.RIMP_L: RuleId.LIMP_L, RuleId.LIMP_L: RuleId.RIMP_L,
    RuleId.RIMP_R: RuleId.LIMP_R, RuleId.LIMP_R: RuleId.RIMP_R,
    RuleId.RNEG_L: RuleId.LNEG_L, RuleId.LNEG_L: RuleId.RNEG_L,
    RuleId.RNEG_R: RuleId.LNEG_R, RuleId.LNEG_R: RuleId.RNEG_R,
}


def mirror_proof(tree: ProofTree) -> ProofTree:
    """The node-by-node mirror image of a proof; each instance maps to an
    instance of its partner rule, so the result checks in the same calculus
    (with mirrored hypotheses)."""
    rule = tree.rule
    prems = tuple(mirror_proof(p) for p in tree.premises)
    concl = mirror_sequent(tree.conclusion)
    n = len(tree.conclusion.antecedent)
    data = tree.data
    new_rule = _MIRROR_RULE.get(rule, rule)
    if rule in (RuleId.CUT, RuleId.RIMP_L, RuleId.LIMP_L):
        (j,) = data
        data = (len(tree.premises[1].conclusion.antecedent) - 1 - j,)
    elif rule in (RuleId.OR_L, RuleId.CONTR_L):
        (i,) = data
        data = (n - 1 - i,)
    elif rule is RuleId.FUS_L:
        (i,) = data
        data = (n - 1 - i,)
    elif rule is RuleId.EXCH_L:
        (i,) = data
        data = (n - 2 - i,)
    elif rule is RuleId.ONE_L:
        (i,) = data
        data = (n - 1 - i,)
    elif rule in (RuleId.AND_L1, RuleId.AND_L2):
        i, side = data
        data = (n - 1 - i, mirror_formula(side))
    elif rule in (RuleId.OR_R1, RuleId.OR_R2, RuleId.WEAK_R):
        (side,) = data
        data = (mirror_formula(side),)
    elif rule is RuleId.WEAK_L:
        i, side = data
        data = (n - 1 - i, mirror_formula(side))
    elif rule is RuleId.FUS_R:
        prems = (prems[1], prems[0])
    return ProofTree(concl, new_rule, prems, data)


# ---------------------------------------------------------------------------
# Constructive interderivability proofs (algebraization round-trip)
# ---------------------------------------------------------------------------

class LemmaKind(enum.Enum):
    LEMMA10_FORWARD = "lemma10-forward"
    LEMMA10_BACKWARD = "lemma10-backward"
    LEMMA11 = "lemma11"
    LEMMA12_FORWARD_MAIN = "lemma12-forward-main"
    LEMMA12_FORWARD_AUX = "lemma12-forward-aux"
    LEMMA12_BACKWARD = "lemma12-backward"


def _axiom(f) -> ProofTree:
    return ProofTree(Sequent((f,), f), RuleId.AXIOM)


def _hyp(s: Sequent) -> ProofTree:
    return ProofTree(s, RuleId.HYPOTHESIS)


def _cut(left: ProofTree, right: ProofTree, j: int) -> ProofTree:
    concl = derive_conclusion(RuleId.CUT, (j,),
                              (left.conclusion, right.conclusion))
    return ProofTree(concl, RuleId.CUT, (left, right), (j,))


def _apply(rule, data, *premises) -> ProofTree:
    concl = derive_conclusion(rule, data, tuple(p.conclusion for p in premises))
    return ProofTree(concl, rule, tuple(premises), data)


def lemma10_forward(phi, psi) -> ProofTree:
    """From the hypothesis (phi => psi), the sequent (phi \\/ psi => psi)."""
    return _apply(RuleId.OR_L, (0,), _hyp(Sequent((phi,), psi)), _axiom(psi))


def lemma10_backward(phi, psi) -> ProofTree:
    """From the hypothesis (phi \\/ psi => psi), the sequent (phi => psi)."""
    up = _apply(RuleId.OR_R1, (psi,), _axiom(phi))
    return _cut(up, _hyp(Sequent((join(phi, psi),), psi)), 0)


def lemma11(gamma) -> ProofTree:
    """The hypothesis-free derivation of (Gamma => prod Gamma)."""
    gamma = tuple(gamma)
    if not gamma:
        return ProofTree(Sequent((), ONE), RuleId.ONE_R)
    tree = _axiom(gamma[0])
    for f in gamma[1:]:
        tree = _apply(RuleId.FUS_R, (), tree, _axiom(f))
    return tree


def _fuse_antecedent(tree: ProofTree) -> ProofTree:
    """From a proof of (Gamma => Delta), a proof of (prod Gamma => Delta) by
    repeated (*=>), or (1=>) when Gamma is empty."""
    m = len(tree.conclusion.antecedent)
    if m == 0:
        return _apply(RuleId.ONE_L, (0,), tree)
    for _ in range(m - 1):
        tree = _apply(RuleId.FUS_L, (0,), tree)
    return tree


def _fused_target(s: Sequent):
    """(prod Gamma => target) data for rho-tau(s): target is the succedent
    formula, or 0 for an empty succedent."""
    return fuse(s.antecedent), s.succedent if s.succedent is not None else ZERO


def lemma12_forward_main(s: Sequent) -> ProofTree:
    """From hypothesis s, the first element of rho(tau(s)):
    (prod Gamma \\/ target => target)."""
    product, target = _fused_target(s)
    tree = _fuse_antecedent(_hyp(s))
    if s.succedent is None:
        tree = _apply(RuleId.ZERO_R, (), tree)
    # now tree proves (prod Gamma => target); widen with Lemma 10
    return _apply(RuleId.OR_L, (0,), tree, _axiom(target))


def lemma12_forward_aux(s: Sequent) -> ProofTree:
    """The hypothesis-free second element of rho(tau(s)):
    (target => prod Gamma \\/ target)."""
    product, target = _fused_target(s)
    return _apply(RuleId.OR_R2, (product,), _axiom(target))


def lemma12_backward(s: Sequent) -> ProofTree:
    """From the hypotheses rho(tau(s)), the sequent s itself."""
    product, target = _fused_target(s)
    # (prod Gamma => target) via Lemma 10 against the main hypothesis
    tree = lemma10_backward(product, target)
    # cut with (Gamma => prod Gamma)
    tree = _cut(lemma11(s.antecedent), tree, 0)
    if s.succedent is None:
        # (Gamma => 0) and (0 =>) give (Gamma =>)
        tree = _cut(tree, ProofTree(Sequent((ZERO,), None), RuleId.ZERO_L), 0)
    return tree


def build_lemma_proofs(kind: LemmaKind, **args) -> ProofTree:
    """Dispatch to the constructive derivations above."""
    if kind is LemmaKind.LEMMA10_FORWARD:
        return lemma10_forward(args["phi"], args["psi"])
    if kind is LemmaKind.LEMMA10_BACKWARD:
        return lemma10_backward(args["phi"], args["psi"])
    if kind is LemmaKind.LEMMA11:
        return lemma11(args["gamma"])
    if kind is LemmaKind.LEMMA12_FORWARD_MAIN:
        return lemma12_forward_main(args["seq"])
    if kind is LemmaKind.LEMMA12_FORWARD_AUX:
        return lemma12_forward_aux(args["seq"])
    if kind is LemmaKind.LEMMA12_BACKWARD:
        return lemma12_backward(args["seq"])
    raise ValueError(f"unknown lemma kind {kind}")


def lemma12_roundtrip(s: Sequent):
    """(forward trees proving each element of rho(tau(s)) from s,
    backward tree proving s from rho(tau(s)))."""
    forward = [lemma12_forward_main(s)]
    aux = lemma12_forward_aux(s)
    if aux.conclusion != forward[0].conclusion:
        forward.append(aux)
    return forward, lemma12_backward(s)


# ---------------------------------------------------------------------------
# S-expression serialization
# ---------------------------------------------------------------------------

def format_proof_sexp(tree: ProofTree) -> str:
    parts = [tree.rule.label, f'"{format_sequent(tree.conclusion)}"']
    parts.extend(format_proof_sexp(p) for p in tree.premises)
    return "(" + " ".join(parts) + ")"


_SEXP_TOKEN = re.compile(r'\(|\)|"[^"]*"|[a-z0-9-]+')


def parse_proof_sexp(text, lang=FULL) -> ProofTree:
    """Parse `(rule "sequent" premise*)`, re-inferring the instance data."""
    tokens = _SEXP_TOKEN.findall(text)
    pos = 0

    def node():
        nonlocal pos
        if tokens[pos] != "(":
            raise ValueError("expected '('")
        pos += 1
        rule = _RULES_BY_LABEL.get(tokens[pos])
        if rule is None:
            raise ValueError(f"unknown rule {tokens[pos]!r}")
        pos += 1
        if not tokens[pos].startswith('"'):
            raise ValueError("expected a quoted sequent")
        concl = parse_sequent(tokens[pos][1:-1], lang)
        pos += 1
        premises = []
        while tokens[pos] == "(":
            premises.append(node())
        if tokens[pos] != ")":
            raise ValueError("expected ')'")
        pos += 1
        data = _infer_data(rule, concl, tuple(p.conclusion for p in premises))
        return ProofTree(concl, rule, tuple(premises), data)

    tree = node()
    if pos != len(tokens):
        raise ValueError("trailing input after proof")
    return tree


def _infer_data(rule, conclusion, premise_seqs):
    """Find instance data making (rule, data, premises) conclude conclusion."""
    if RULE_ARITY[rule] == 0:
        return ()
    for data in _candidate_data(rule, conclusion, premise_seqs):
        try:
            if derive_conclusion(rule, data, premise_seqs) == conclusion:
                return data
        except InstanceError:
            continue
    raise ValueError(f"no {rule.label} instance matches the given premises")


def _candidate_data(rule, conclusion, premise_seqs):
    a = conclusion.antecedent
    if rule in (RuleId.OR_L, RuleId.FUS_L, RuleId.ONE_L, RuleId.EXCH_L,
                RuleId.CONTR_L):
        return [(i,) for i in range(len(a) + 1)]
    if rule in (RuleId.CUT, RuleId.RIMP_L, RuleId.LIMP_L):
        return [(j,) for j in range(len(premise_seqs[1].antecedent))]
    if rule is RuleId.OR_R1 and isinstance(conclusion.succedent, Bin):
        return [(conclusion.succedent.right,)]
    if rule is RuleId.OR_R2 and isinstance(conclusion.succedent, Bin):
        return [(conclusion.succedent.left,)]
    if rule in (RuleId.AND_L1, RuleId.AND_L2):
        out = []
        for i, f in enumerate(a):
            if isinstance(f, Bin) and f.op == "meet":
                out.append((i, f.right if rule is RuleId.AND_L1 else f.left))
        return out
    if rule is RuleId.WEAK_L:
        return [(i, a[i]) for i in range(len(a))]
    if rule is RuleId.WEAK_R and conclusion.succedent is not None:
        return [(conclusion.succedent,)]
    return [()]
