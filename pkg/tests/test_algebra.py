import itertools
import json
import random

import pytest

from substrukt.syntax import Language, fus, join, limp, meet, rimp, var
from substrukt.sequents import Equation, ineq
from substrukt.algebra import (AlgebraError, FiniteAlgebra, NoMaximum,
                               SizeTooLarge, VarietyId, canonical_key,
                               check_property_equivalences, check_variety,
                               derive_pseudocomplements, derive_residuals,
                               enumerate_algebras, eval_term, from_json_dict,
                               opposite, reduct, satisfies_equation,
                               satisfies_quasi, to_json_dict)
from substrukt.corpus import random_formula, random_pomonoid
from substrukt import fixtures

x, y, z = var("x"), var("y"), var("z")


def test_construction_validates_semilattice():
    with pytest.raises(AlgebraError, match="commutative"):
        FiniteAlgebra("bad", ("0", "1"),
                      {"join": ((0, 0), (1, 1)), "fus": ((0, 0), (0, 1))}, 0, 1)
    with pytest.raises(AlgebraError, match="idempotent"):
        FiniteAlgebra("bad", ("0", "1"),
                      {"join": ((1, 1), (1, 1)), "fus": ((0, 0), (0, 1))}, 0, 1)


def test_eval_term():
    b2 = fixtures.boolean2()
    assert eval_term(b2, join(x, y), {"x": 0, "y": 1}) == 1
    assert eval_term(b2, fus(x, var("one") if False else x), {"x": 1}) == 1
    c3 = fixtures.chain3_nilpotent()
    assert eval_term(c3, fus(x, x), {"x": 1}) == 0  # a*a = 0


def test_satisfies_equation():
    b2 = fixtures.boolean2()
    assert satisfies_equation(b2, Equation(fus(x, y), fus(y, x)))
    d = fixtures.diamond()
    assert not satisfies_equation(
        d, Equation(fus(join(x, y), z), join(fus(x, z), fus(y, z))))
    c3 = fixtures.chain3_nilpotent()
    assert not satisfies_equation(c3, ineq(x, fus(x, x)))


def test_prop2_diamond_witness():
    rep = check_variety(fixtures.diamond(), VarietyId("Msl"))
    assert not rep.ok
    names = [n for n, _ in rep.violations]
    assert "distrib-r" in names
    witnesses = dict(rep.violations)["distrib-r"]
    assert {"x": "a", "y": "b", "z": "b"} in witnesses


def test_chain4_in_every_sigma():
    c4 = fixtures.chain4_min()
    for sigma in itertools.chain.from_iterable(
            itertools.combinations(("e", "wl", "wr", "c"), k)
            for k in range(5)):
        assert check_variety(c4, VarietyId("Ml", frozenset(sigma))).ok


def test_pm5_fixture():
    pm5 = fixtures.pm5_chain()
    for sigma in [frozenset(), frozenset({"e", "wl", "wr", "c"})]:
        assert check_variety(pm5, VarietyId("PMl", sigma)).ok
    derived = derive_pseudocomplements(fixtures.chain4_min())
    # in a residuated structure rneg(1) = 0
    assert derived.ops["rneg"][derived.one] == derived.zero


def test_derive_residuals_boolean():
    r = derive_residuals(fixtures.boolean2())
    assert r.ops["rimp"][1][0] == 0  # 1 \ 0 = 0
    assert r.ops["rimp"][0][0] == 1 and r.ops["rimp"][0][1] == 1


def test_derive_residuals_heyting_chain():
    c4 = fixtures.chain4_min()
    r = derive_residuals(c4)
    for i in range(4):
        for j in range(4):
            expected = 3 if i <= j else j  # Heyting arrow on a chain
            assert r.ops["rimp"][i][j] == expected
            assert r.ops["limp"][i][j] == expected


def test_derive_residuals_diamond_error():
    with pytest.raises(NoMaximum) as err:
        derive_residuals(fixtures.diamond())
    assert err.value.pair == ("a", "0")
    # independent check: R^0(a) = {0,a,b} has no maximum
    d = fixtures.diamond()
    a_idx = d.index_of("a")
    candidates = [z_ for z_ in range(d.n)
                  if d.leq(d.ops["fus"][a_idx][z_], d.zero)]
    assert sorted(candidates) == [0, 1, 2]
    assert d.max_of(candidates) is None


def test_law_of_residuation_exhaustive():
    for base in (fixtures.boolean2(), fixtures.chain4_min(),
                 fixtures.chain3_nilpotent()):
        a = derive_residuals(base)
        ft, rt, lt = a.ops["fus"], a.ops["rimp"], a.ops["limp"]
        for i in range(a.n):
            for j in range(a.n):
                for k in range(a.n):
                    assert a.leq(ft[i][j], k) == a.leq(j, rt[i][k])
                    assert a.leq(ft[i][j], k) == a.leq(i, lt[j][k])


def test_pseudocomplements_equal_residuals_into_zero():
    base = fixtures.chain3_nilpotent()
    withres = derive_residuals(base)
    withpc = derive_pseudocomplements(base)
    for i in range(base.n):
        assert withpc.ops["rneg"][i] == withres.ops["rimp"][i][base.zero]
        assert withpc.ops["lneg"][i] == withres.ops["limp"][i][base.zero]


def test_opposite():
    a = derive_residuals(fixtures.chain3_nilpotent())
    op = opposite(a)
    assert opposite(op).ops == a.ops
    assert op.ops["rimp"] == a.ops["limp"]
    for i in range(a.n):
        for j in range(a.n):
            assert op.ops["fus"][i][j] == a.ops["fus"][j][i]


def test_opposite_mirror_evaluation():
    # eval(opposite(a), mirror t, v) == eval(a, t, v)
    from substrukt.syntax import mirror_formula
    rng = random.Random(31)
    algebras = [derive_residuals(fixtures.chain4_min()),
                derive_pseudocomplements(fixtures.chain3_nilpotent()),
                fixtures.pm5_chain()]
    for a in algebras:
        lang = a.language()
        for _ in range(60):
            t = random_formula(rng, depth=3, lang=lang)
            v = {name: rng.randrange(a.n) for name in ("p", "q", "r")}
            assert eval_term(opposite(a), mirror_formula(t), v) == \
                eval_term(a, t, v)


def test_opposite_validity_mirror():
    from substrukt.sequents import mirror_equation
    rng = random.Random(12)
    a = derive_residuals(fixtures.chain3_nilpotent())
    for _ in range(40):
        e = Equation(random_formula(rng, 2, lang=a.language()),
                     random_formula(rng, 2, lang=a.language()))
        assert satisfies_equation(a, e) == \
            satisfies_equation(opposite(a), mirror_equation(e))


def test_property_equivalences():
    # every pointed po-monoid of size <= 3, monotone but maybe not distributive
    rng = random.Random(77)
    for _ in range(80):
        a = random_pomonoid(rng, rng.randint(1, 3))
        rep = check_property_equivalences(a)
        assert all(v["agree"] for v in rep.values()), (a.ops, rep)
    b2 = fixtures.boolean2()
    rep = check_property_equivalences(b2)
    assert all(v["quasi"] and v["equation"] for v in rep.values())
    c3 = fixtures.chain3_nilpotent()
    rep = check_property_equivalences(c3)
    assert not rep["c"]["quasi"] and not rep["c"]["equation"]
    assert rep["c"]["agree"]


def _brute_force_count(n, family):
    """Independent unpruned enumeration divided into isomorphism orbits."""
    from substrukt.algebra import FAMILY_OPS
    found = set()
    tables = itertools.product(range(n), repeat=n * n)
    all_joins = []
    for flat in itertools.product(range(n), repeat=n * n):
        t = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
        all_joins.append(t)
    for jt in all_joins:
        try:
            FiniteAlgebra("x", tuple(map(str, range(n))), {"join": jt}, 0, 0)
        except AlgebraError:
            continue
        for flat in itertools.product(range(n), repeat=n * n):
            ft = tuple(tuple(flat[i * n + j] for j in range(n))
                       for i in range(n))
            for zero in range(n):
                for one in range(n):
                    a = FiniteAlgebra("x", tuple(map(str, range(n))),
                                      {"join": jt, "fus": ft}, zero, one)
                    if check_variety(a, VarietyId(family)).ok:
                        found.add(canonical_key(a))
    return len(found)


def test_enumeration_counts_against_oracle():
    assert len(list(enumerate_algebras(VarietyId("Msl"), 1))) == \
        _brute_force_count(1, "Msl")
    assert len(list(enumerate_algebras(VarietyId("Msl"), 2))) == \
        _brute_force_count(2, "Msl")


def test_enumeration_fl_ewc():
    ewc = frozenset({"e", "wl", "wr", "c"})
    algs = list(enumerate_algebras(VarietyId("FL", ewc), 2))
    assert len(algs) == 1  # the two-element Boolean/Heyting algebra
    a = algs[0]
    assert a.ops["fus"] == a.ops["meet"]
    with pytest.raises(SizeTooLarge):
        next(enumerate_algebras(VarietyId("Msl"), 6))


def test_enumerated_members_validate():
    for fam in ("Msl", "PMsl", "FL"):
        v = VarietyId(fam)
        for a in enumerate_algebras(v, 3):
            assert check_variety(a, v).ok


def test_generalized_distributivity_on_residuated():
    # finite fus distributes over joins of subsets (checked to size 3)
    a = derive_residuals(fixtures.chain4_min())
    jt, ft = a.ops["join"], a.ops["fus"]

    def big_join(values):
        out = values[0]
        for v_ in values[1:]:
            out = jt[out][v_]
        return out
    elements = range(a.n)
    for k1 in (1, 2, 3):
        for xs in itertools.combinations(elements, k1):
            for k2 in (1, 2):
                for ys in itertools.combinations(elements, k2):
                    lhs = ft[big_join(list(xs))][big_join(list(ys))]
                    rhs = big_join([ft[i][j] for i in xs for j in ys])
                    assert lhs == rhs


def test_residual_infima_laws():
    # (x v y) \ c = (x\c) /\ (y\c), and c \ (x /\ y) = (c\x) /\ (c\y)
    a = derive_residuals(fixtures.chain4_min())
    jt, mt, rt = a.ops["join"], a.ops["meet"], a.ops["rimp"]
    for i in range(a.n):
        for j in range(a.n):
            for c in range(a.n):
                assert rt[jt[i][j]][c] == mt[rt[i][c]][rt[j][c]]
                assert rt[c][mt[i][j]] == mt[rt[c][i]][rt[c][j]]


def test_bottom_behaviour():
    # bottom \ a is the top; a * bottom = bottom in residuated algebras
    a = derive_residuals(fixtures.chain4_min())
    bot, top = a.bottom(), a.top()
    for i in range(a.n):
        assert a.ops["rimp"][bot][i] == top
        assert a.ops["fus"][i][bot] == bot
        assert a.ops["fus"][bot][i] == bot


def test_pseudocomplement_laws():
    # x * rneg(x) <= 0; antitone; double-negation expansion
    for base in (fixtures.chain3_nilpotent(), fixtures.chain4_min()):
        a = derive_pseudocomplements(base)
        rn, ln, ft = a.ops["rneg"], a.ops["lneg"], a.ops["fus"]
        for i in range(a.n):
            assert a.leq(ft[i][rn[i]], a.zero)
            assert a.leq(ft[ln[i]][i], a.zero)
            assert a.leq(i, ln[rn[i]])
            assert rn[ln[rn[i]]] == rn[i]
            for j in range(a.n):
                if a.leq(i, j):
                    assert a.leq(rn[j], rn[i])


def test_pseudocomplement_join_to_meet():
    # rneg(x v y) is the meet of the negations when meets exist
    a = derive_pseudocomplements(fixtures.chain4_min())
    rn, jt = a.ops["rneg"], a.ops["join"]
    for i in range(a.n):
        for j in range(a.n):
            assert rn[jt[i][j]] == a.meet_partial(rn[i], rn[j])


def test_satisfies_quasi():
    c3 = fixtures.chain3_nilpotent()
    assert satisfies_quasi(c3, [ineq(x, y)], ineq(fus(x, z), fus(y, z)))
    assert not satisfies_quasi(c3, [ineq(fus(x, x), y)], ineq(x, y))


def test_json_roundtrip(tmp_path):
    a = derive_residuals(fixtures.chain4_min())
    d = to_json_dict(a)
    b = from_json_dict(json.loads(json.dumps(d)))
    assert b.ops == a.ops and b.zero == a.zero and b.one == a.one
    # names are accepted in table entries too
    d2 = {"elements": ["u", "v"],
          "consts": {"zero": "u", "one": "v"},
          "ops": {"join": [["u", "v"], ["v", "v"]],
                  "fus": [["u", "u"], ["u", "v"]]}}
    c = from_json_dict(d2)
    assert c.ops["join"] == ((0, 1), (1, 1))
    with pytest.raises(AlgebraError):
        from_json_dict({"elements": ["u"], "consts": {"zero": "w", "one": "u"},
                        "ops": {"join": [["u"]]}})


def test_reduct():
    a = derive_residuals(fixtures.chain4_min())
    r = reduct(a, Language.preset("core"))
    assert set(r.ops) == {"join", "fus"}
