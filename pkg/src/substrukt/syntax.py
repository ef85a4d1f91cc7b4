"""Formula ASTs, propositional languages, substitution and the mirror transform.

Connective names: join (``\\/``), meet (``/\\``), fus (``*``), rimp (``\\``),
limp (``/``), rneg (``rn``), lneg (``ln``), zero (``0``), one (``1``).

Orientation convention (fixed throughout): ``rimp(a, b)`` is the right
implication a\\b and ``limp(a, b)`` is the left implication b/a, i.e. the
denominator comes first in both constructors.  ``rneg(a)`` abbreviates a\\0,
``lneg(a)`` abbreviates 0/a.

Concrete grammar (precedence, loosest to tightest: implications, \\/, /\\, *;
the implications are non-associative, the rest associate to the left)::

    formula := disj (("\\" | "/") disj)?
    disj    := conj ("\\/" conj)*
    conj    := prod ("/\\" prod)*
    prod    := atom ("*" atom)*
    atom    := var | "0" | "1" | "rn(" formula ")" | "ln(" formula ")"
             | "(" formula ")"

Variables match ``[a-z][a-z0-9_]*``; ``rn`` and ``ln`` are reserved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping

BINARY_CONNECTIVES = ("join", "meet", "fus", "rimp", "limp")
UNARY_CONNECTIVES = ("rneg", "lneg")
CONSTANTS = ("zero", "one")
ALL_CONNECTIVES = frozenset(BINARY_CONNECTIVES + UNARY_CONNECTIVES + CONSTANTS)
CORE_CONNECTIVES = frozenset({"join", "fus", "zero", "one"})


class FormulaSyntaxError(ValueError):
    """Raised on malformed formula/sequent text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LanguageError(ValueError):
    """Raised when a formula uses a connective outside the ambient language."""


@dataclass(frozen=True)
class Language:
    """A sublanguage of the full connective set, always containing the core."""

    connectives: frozenset

    def __post_init__(self):
        bad = self.connectives - ALL_CONNECTIVES
        if bad:
            raise ValueError(f"unknown connectives: {sorted(bad)}")
        if not CORE_CONNECTIVES <= self.connectives:
            missing = CORE_CONNECTIVES - self.connectives
            raise ValueError(f"language must contain the core; missing {sorted(missing)}")
        if ("rimp" in self.connectives) != ("limp" in self.connectives):
            raise ValueError("rimp and limp must be both present or both absent")

    def __contains__(self, connective):
        return connective in self.connectives

    @staticmethod
    def of(*connectives):
        return Language(frozenset(connectives) | CORE_CONNECTIVES)

    @staticmethod
    def preset(name):
        try:
            return _PRESETS[name]
        except KeyError:
            raise ValueError(f"unknown language preset {name!r}; "
                             f"choose from {sorted(_PRESETS)}") from None


_PRESETS = {
    "core": Language.of(),
    "core-meet": Language.of("meet"),
    "core-neg": Language.of("rneg", "lneg"),
    "core-meet-neg": Language.of("meet", "rneg", "lneg"),
    "full": Language(ALL_CONNECTIVES),
}

FULL = _PRESETS["full"]
CORE = _PRESETS["core"]

PRESET_NAMES = tuple(_PRESETS)


class Formula:
    """Base class; concrete nodes are Var, Const, Bin, Neg (all frozen)."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Const(Formula):
    which: str  # "zero" | "one"


@dataclass(frozen=True)
class Bin(Formula):
    op: str  # join | meet | fus | rimp | limp
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Neg(Formula):
    op: str  # rneg | lneg
    child: Formula


ZERO = Const("zero")
ONE = Const("one")


def var(name):
    return Var(name)


def join(left, right):
    return Bin("join", left, right)


def meet(left, right):
    return Bin("meet", left, right)


def fus(left, right):
    return Bin("fus", left, right)


def rimp(denominator, numerator):
    """The right implication denominator \\ numerator."""
    return Bin("rimp", denominator, numerator)


def limp(denominator, numerator):
    """The left implication numerator / denominator."""
    return Bin("limp", denominator, numerator)


def rneg(child):
    return Neg("rneg", child)


def lneg(child):
    return Neg("lneg", child)


def connectives_of(f) -> frozenset:
    """All connective names (including constants) occurring in f."""
    out = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Const):
            out.add(node.which)
        elif isinstance(node, Bin):
            out.add(node.op)
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Neg):
            out.add(node.op)
            stack.append(node.child)
    return frozenset(out)


def variables_of(f) -> frozenset:
    out = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, Bin):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Neg):
            stack.append(node.child)
    return frozenset(out)


def subformulas(f) -> frozenset:
    """All subtrees of f, including f itself."""
    out = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if node in out:
            continue
        out.add(node)
        if isinstance(node, Bin):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Neg):
            stack.append(node.child)
    return frozenset(out)


def in_language(f, lang: Language) -> bool:
    return connectives_of(f) <= lang.connectives


def check_language(f, lang: Language):
    bad = connectives_of(f) - lang.connectives
    if bad:
        raise LanguageError(f"{sorted(bad)[0]} not in language")


_MIRROR_NEG = {"rneg": "lneg", "lneg": "rneg"}


def mirror_formula(f) -> Formula:
    """The mirror image: fusion reversed, the two implications and the two
    negations swapped, variables and constants fixed."""
    if isinstance(f, (Var, Const)):
        return f
    if isinstance(f, Neg):
        return Neg(_MIRROR_NEG[f.op], mirror_formula(f.child))
    left, right = mirror_formula(f.left), mirror_formula(f.right)
    if f.op in ("join", "meet"):
        return Bin(f.op, left, right)
    if f.op == "fus":
        return Bin("fus", right, left)
    if f.op == "rimp":  # a\b  ->  b/a, i.e. limp with the same (denom, numer)
        return Bin("limp", left, right)
    return Bin("rimp", left, right)


def apply_subst(subst: Mapping[str, Formula], f) -> Formula:
    """Homomorphic replacement of variables; identity outside the domain."""
    if isinstance(f, Var):
        return subst.get(f.name, f)
    if isinstance(f, Const):
        return f
    if isinstance(f, Neg):
        return Neg(f.op, apply_subst(subst, f.child))
    return Bin(f.op, apply_subst(subst, f.left), apply_subst(subst, f.right))


def match_formula(pattern, target, binding=None):
    """One-sided matching: extend `binding` so that pattern[binding] == target.

    Variables of `pattern` act as metavariables.  Returns the extended binding
    dict, or None when there is no match.
    """
    if binding is None:
        binding = {}
    if isinstance(pattern, Var):
        seen = binding.get(pattern.name)
        if seen is None:
            binding[pattern.name] = target
            return binding
        return binding if seen == target else None
    if isinstance(pattern, Const):
        return binding if pattern == target else None
    if isinstance(pattern, Neg):
        if isinstance(target, Neg) and target.op == pattern.op:
            return match_formula(pattern.child, target.child, binding)
        return None
    if isinstance(target, Bin) and target.op == pattern.op:
        binding = match_formula(pattern.left, target.left, binding)
        if binding is None:
            return None
        return match_formula(pattern.right, target.right, binding)
    return None


def formula_key(f):
    """Deterministic total order key, used to canonicalize multisets."""
    if isinstance(f, Var):
        return (0, f.name)
    if isinstance(f, Const):
        return (1, f.which)
    if isinstance(f, Neg):
        return (2, f.op, formula_key(f.child))
    return (3, f.op, formula_key(f.left), formula_key(f.right))


# ---------------------------------------------------------------------------
# Tokenizer and recursive-descent parser
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<or>\\/)
  | (?P<and>/\\)
  | (?P<rimp>\\)
  | (?P<limp>/)
  | (?P<star>\*)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<zero>0)
  | (?P<one>1)
  | (?P<ident>[a-z][a-z0-9_]*)
""", re.VERBOSE)

_RESERVED = {"rn": "rneg", "ln": "lneg"}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, lang):
        self.tokens = tokens
        self.lang = lang
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, what):
        tok = self.advance()
        if tok[0] != kind:
            raise FormulaSyntaxError(f"expected {what}, found {tok[1] or 'end of input'}", tok[2])
        return tok

    def require(self, connective, pos):
        if connective not in self.lang:
            raise LanguageError(f"{connective} not in language (at position {pos})")

    def formula(self):
        left = self.disj()
        kind, _, pos = self.peek()
        if kind in ("rimp", "limp"):
            self.advance()
            self.require("rimp" if kind == "rimp" else "limp", pos)
            right = self.disj()
            # non-associative level: another implication here needs parentheses
            nxt = self.peek()
            if nxt[0] in ("rimp", "limp"):
                raise FormulaSyntaxError("implications are non-associative; parenthesize", nxt[2])
            if kind == "rimp":
                return rimp(left, right)  # left \ right
            return limp(right, left)     # left / right: numerator first in text
        return left

    def disj(self):
        node = self.conj()
        while self.peek()[0] == "or":
            _, _, pos = self.advance()
            self.require("join", pos)
            node = join(node, self.conj())
        return node

    def conj(self):
        node = self.prod()
        while self.peek()[0] == "and":
            _, _, pos = self.advance()
            self.require("meet", pos)
            node = meet(node, self.prod())
        return node

    def prod(self):
        node = self.atom()
        while self.peek()[0] == "star":
            _, _, pos = self.advance()
            self.require("fus", pos)
            node = fus(node, self.atom())
        return node

    def atom(self):
        kind, text, pos = self.advance()
        if kind == "zero":
            return ZERO
        if kind == "one":
            return ONE
        if kind == "lpar":
            node = self.formula()
            self.expect("rpar", "')'")
            return node
        if kind == "ident":
            if text in _RESERVED:
                op = _RESERVED[text]
                self.expect("lpar", f"'(' after {text}")
                self.require(op, pos)
                child = self.formula()
                self.expect("rpar", "')'")
                return Neg(op, child)
            return Var(text)
        raise FormulaSyntaxError(f"expected a formula, found {text or 'end of input'}", pos)


def parse_formula(text, lang=FULL) -> Formula:
    parser = _Parser(_tokenize(text), lang)
    node = parser.formula()
    tok = parser.peek()
    if tok[0] != "eof":
        raise FormulaSyntaxError(f"trailing input {tok[1]!r}", tok[2])
    return node


_PREC = {"rimp": 0, "limp": 0, "join": 1, "meet": 2, "fus": 3}
_OP_TEXT = {"join": "\\/", "meet": "/\\", "fus": "*"}


def format_formula(f, primes=False) -> str:
    """Render f; the default form round-trips through parse_formula.

    With primes=True the negations render postfix/prefix (x', 'x) for
    display; that form is not parseable.
    """
    return _fmt(f, 0, primes)


def _fmt(f, min_prec, primes):
    """Render f, parenthesizing when its precedence falls below min_prec."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Const):
        return "0" if f.which == "zero" else "1"
    if isinstance(f, Neg):
        if primes:
            inner = _fmt(f.child, 99, primes)
            return f"{inner}'" if f.op == "rneg" else f"'{inner}"
        name = "rn" if f.op == "rneg" else "ln"
        return f"{name}({_fmt(f.child, 0, primes)})"
    prec = _PREC[f.op]
    if f.op == "rimp":  # non-associative: both children need strictly higher
        body = f"{_fmt(f.left, prec + 1, primes)} \\ {_fmt(f.right, prec + 1, primes)}"
    elif f.op == "limp":
        body = f"{_fmt(f.right, prec + 1, primes)} / {_fmt(f.left, prec + 1, primes)}"
    else:
        # left-associative: equal precedence allowed on the left only
        left = _fmt(f.left, prec, primes)
        right = _fmt(f.right, prec + 1, primes)
        body = f"{left} {_OP_TEXT[f.op]} {right}"
    return f"({body})" if prec < min_prec else body
