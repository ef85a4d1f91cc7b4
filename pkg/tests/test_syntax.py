import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from substrukt.syntax import (Bin, Language, LanguageError, FormulaSyntaxError,
                              Neg, Var, ZERO, ONE, apply_subst, format_formula,
                              fus, join, limp, lneg, meet, mirror_formula,
                              parse_formula, rimp, rneg, subformulas, var)

p, q, r = var("p"), var("q"), var("r")


def formulas(lang=Language.preset("full")):
    ops = sorted(lang.connectives - {"zero", "one"})
    leaves = st.sampled_from([p, q, r, ZERO, ONE])

    def extend(children):
        branches = []
        for op in ops:
            if op in ("rneg", "lneg"):
                branches.append(st.builds(lambda c, o=op: Neg(o, c), children))
            else:
                branches.append(st.builds(
                    lambda l_, r_, o=op: Bin(o, l_, r_), children, children))
        return st.one_of(branches)
    return st.recursive(leaves, extend, max_leaves=12)


def test_grammar_base_cases():
    assert parse_formula("p \\/ q") == join(p, q)
    assert parse_formula("rn(p * q)") == rneg(fus(p, q))
    assert parse_formula("ln(p)") == lneg(p)
    assert parse_formula("0") == ZERO
    assert parse_formula("1") == ONE


def test_implication_orientation():
    # a \ b has denominator a; a / b has numerator a, denominator b
    assert parse_formula("p \\ q") == rimp(p, q)
    assert parse_formula("p / q") == limp(q, p)
    assert format_formula(rimp(p, q)) == "p \\ q"
    assert format_formula(limp(p, q)) == "q / p"


def test_precedence_stack():
    # rn/ln > * > /\ > \/ > implications
    assert parse_formula("p * q /\\ r") == meet(fus(p, q), r)
    assert parse_formula("p /\\ q \\/ r") == join(meet(p, q), r)
    assert parse_formula("p \\/ q \\ r") == rimp(join(p, q), r)
    assert parse_formula("p * q * r") == fus(fus(p, q), r)


def test_implications_non_associative():
    with pytest.raises(FormulaSyntaxError):
        parse_formula("p \\ q \\ r")
    with pytest.raises(FormulaSyntaxError):
        parse_formula("p \\ q / r")
    parse_formula("p \\ (q / r)")
    parse_formula("(p \\ q) / r")


def test_connective_not_in_language():
    core = Language.preset("core")
    with pytest.raises(LanguageError, match="rimp not in language"):
        parse_formula("p \\ q", core)
    with pytest.raises(LanguageError, match="meet not in language"):
        parse_formula("p /\\ q", core)
    with pytest.raises(LanguageError, match="rneg not in language"):
        parse_formula("rn(p)", core)


def test_syntax_error_has_position():
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula("p \\/ )")
    assert err.value.position == 5


def test_language_presets():
    with pytest.raises(ValueError):
        Language(frozenset({"join", "fus", "zero", "one", "rimp"}))
    with pytest.raises(ValueError):
        Language(frozenset({"join", "fus"}))
    assert "meet" in Language.preset("core-meet")
    assert "rneg" not in Language.preset("core-meet")


def test_mirror_table():
    assert mirror_formula(rimp(p, q)) == limp(p, q)
    assert mirror_formula(fus(p, rneg(q))) == fus(lneg(q), p)
    assert mirror_formula(join(p, q)) == join(p, q)
    assert mirror_formula(meet(rneg(p), q)) == meet(lneg(p), q)


def test_subformulas():
    assert subformulas(p) == {p}
    assert subformulas(fus(p, q)) == {p, q, fus(p, q)}
    assert subformulas(rneg(p)) == {p, rneg(p)}


def test_apply_subst():
    assert apply_subst({"p": q}, p) == q
    assert apply_subst({}, fus(p, q)) == fus(p, q)
    assert apply_subst({"p": ZERO}, join(p, ONE)) == join(ZERO, ONE)


@given(formulas())
def test_mirror_involution(f):
    assert mirror_formula(mirror_formula(f)) == f


@given(formulas())
def test_parse_print_roundtrip(f):
    assert parse_formula(format_formula(f)) == f


@given(formulas(), formulas(), formulas())
@settings(max_examples=50)
def test_mirror_commutes_with_substitution(f, s1, s2):
    subst = {"p": s1, "q": s2}
    mirrored_subst = {k: mirror_formula(v) for k, v in subst.items()}
    assert mirror_formula(apply_subst(subst, f)) == \
        apply_subst(mirrored_subst, mirror_formula(f))
