import pytest

from substrukt.syntax import parse_formula, var, rimp, meet, ONE
from substrukt.calculus import calculus
from substrukt.hilbert import (HilbertProof, ProofLine, axioms_to_sequents,
                               check_hilbert_proof, hilbert_system,
                               instantiate_schema, matching_calculus,
                               parse_hilbert_proof, preset_hfl, preset_hfle,
                               preset_van_alten_raftery, rules_to_sequents)

p, q = var("p"), var("q")
HFL = preset_hfl()


def test_modus_ponens_accepts():
    proof = HilbertProof((
        ProofLine(p, ("hyp",)),
        ProofLine(rimp(p, q), ("hyp",)),
        ProofLine(q, ("rule", "mp", (0, 1))),
    ))
    assert check_hilbert_proof(proof, HFL, {p, rimp(p, q)})


def test_axiom_instance_accepts():
    proof = HilbertProof((ProofLine(rimp(p, p), ("axiom", "id", None)),))
    assert check_hilbert_proof(proof, HFL)
    with_subst = HilbertProof((ProofLine(rimp(p, p),
                                         ("axiom", "id", {"phi": p})),))
    assert check_hilbert_proof(with_subst, HFL)
    wrong = HilbertProof((ProofLine(rimp(p, q), ("axiom", "id", None)),))
    res = check_hilbert_proof(wrong, HFL)
    assert not res and res.reason == "bad-instance"


def test_forward_reference_rejected():
    proof = HilbertProof((
        ProofLine(q, ("rule", "mp", (1, 2))),
        ProofLine(p, ("hyp",)),
        ProofLine(rimp(p, q), ("hyp",)),
    ))
    res = check_hilbert_proof(proof, HFL, {p, rimp(p, q)})
    assert not res and res.reason == "bad-index" and res.line == 0


def test_undeclared_hypothesis():
    proof = HilbertProof((ProofLine(p, ("hyp",)),))
    res = check_hilbert_proof(proof, HFL)
    assert not res and res.reason == "hypothesis-not-declared"


def test_unknown_names():
    res = check_hilbert_proof(
        HilbertProof((ProofLine(p, ("axiom", "nope", None)),)), HFL)
    assert "unknown-axiom" in res.reason
    res = check_hilbert_proof(
        HilbertProof((ProofLine(p, ("rule", "nope", ())),)), HFL)
    assert "unknown-rule" in res.reason


def test_parse_text_format():
    text = """
    1. p \\ p [axiom id]
    2. p [hyp]
    3. p /\\ 1 [adj-u 2]
    """
    proof = parse_hilbert_proof(text)
    assert len(proof.lines) == 3
    assert proof.lines[2].formula == meet(p, ONE)
    assert proof.lines[2].justification == ("rule", "adj-u", (1,))
    assert check_hilbert_proof(proof, HFL, {p})


def test_rule_instance_needs_consistent_binding():
    # mp premise formulas must match under one substitution
    proof = HilbertProof((
        ProofLine(p, ("hyp",)),
        ProofLine(rimp(q, q), ("hyp",)),
        ProofLine(q, ("rule", "mp", (0, 1))),
    ))
    res = check_hilbert_proof(proof, HFL, {p, rimp(q, q)})
    assert not res and res.reason == "bad-instance"


def test_instantiate_schema_uses_fresh_variables():
    inst = instantiate_schema(HFL.axiom("pf"))
    assert inst == parse_formula("(p \\ q) \\ ((r \\ p) \\ (r \\ q))")


@pytest.mark.parametrize("factory", [preset_hfl, preset_hfle,
                                     preset_van_alten_raftery])
def test_presets_fully_proved(factory):
    sys = factory()
    cal = matching_calculus(sys)
    report = axioms_to_sequents(sys, cal)
    assert report.all_proved, report.verdicts
    assert all(v == "proved" for _, v in rules_to_sequents(sys, cal))


def test_sigma_schemata_proved_under_matching_sigma():
    for sigma in ("wl", "wr", "c"):
        sys = hilbert_system(frozenset({sigma}))
        cal = matching_calculus(sys)
        report = axioms_to_sequents(sys, cal)
        assert report.all_proved, (sigma, report.verdicts)


def test_sigma_schema_fails_without_its_rule():
    # the left-weakening schema is not a theorem of plain FL
    from substrukt.search import prove, Proved
    from substrukt.sequents import rho_prime
    sys = hilbert_system(frozenset({"wl"}))
    schema = dict(sys.axioms)["sigma-wl"]
    goal = rho_prime(instantiate_schema(schema))
    assert not isinstance(prove(goal, calculus("")), Proved)
