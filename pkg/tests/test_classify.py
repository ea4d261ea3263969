import json
import random

import pytest

from galoiscensus.classify import (
    classify, classify_irreducible, alternating_test, quintic_is_solvable, classify_quintic,
    classify_sextic, classify_cubic_quartic, verdict_document, group_cycle_types, resolvent_cubic,
    GROUPS, FULL, ALT, PROVED, CONDITIONAL, PROBABILISTIC, SCHEMA, SOLVABLE_QUINTIC,
)
from galoiscensus.polycore import IntPoly, disc_resultant, is_irreducible, cycle_type_samples, is_perfect_square
from galoiscensus.symres import sextic_resolvent_of

import oracles


def P(*c):
    return IntPoly(list(c))


# ------------------------------------------------------------ alternating

def test_alternating_cubic_with_square_disc():
    assert alternating_test(P(0, -3, 1))


def test_alternating_x3_minus_2():
    assert disc_resultant(P(0, 0, -2)) == -108
    assert not alternating_test(P(0, 0, -2))


def test_alternating_x2_plus_1():
    assert not alternating_test(P(0, 1))


@pytest.mark.parametrize("c", [(0, -1, 0), (0, 0, 0)])
def test_alternating_rejects_reducible_or_inseparable(c):
    with pytest.raises(ValueError):
        alternating_test(IntPoly(c))


# ------------------------------------------------------------- quintics

def test_demoivre_member_is_solvable_with_root_witness():
    f = P(0, 10, 0, 20, 2)
    s = quintic_is_solvable(f)
    assert s.solvable
    theta = sextic_resolvent_of(f)
    assert oracles.poly_eval(theta.ascending(), s.witness) == 0


def test_x5_minus_x_minus_1_is_not_solvable():
    assert not quintic_is_solvable(P(0, 0, 0, -1, -1)).solvable


def test_x5_plus_20x_plus_16_is_a5():
    f = P(0, 0, 0, 20, 16)
    assert not quintic_is_solvable(f).solvable
    g, cert = classify_quintic(f)
    assert g.label == "A5" and cert.level == PROVED
    # the witness in the evidence must be a genuine {1,1,3} cycle type
    wit = dict(cert.evidence)["cycle_type_witness"]
    prime = int(wit.split(":")[0][2:])
    assert oracles.factor_degrees_mod_p([0, 0, 0, 20, 16], prime) == (1, 1, 3)


def test_demoivre_member_is_agl():
    g, cert = classify_quintic(P(0, 10, 0, 20, 2))
    assert g.label == "AGL(1,F5)" and g.ntk == "5T3" and cert.level == PROVED


def test_x5_minus_x_minus_1_is_s5_proved():
    g, cert = classify_quintic(P(0, 0, 0, -1, -1))
    assert g.label == "S5" and cert.level == PROVED


def test_real_cyclic_quintic_is_c5_probabilistic():
    g, cert = classify_quintic(P(1, -4, -3, 3, 1))
    assert g.label == "C5" and cert.level == PROBABILISTIC
    assert dict(cert.evidence)["cycle_type_samples"] == 50


def test_dihedral_quintic_is_d5_proved():
    # X^5 - 5X + 12 has Galois group D5
    g, cert = classify_quintic(P(0, 0, 0, -5, 12))
    assert g.label == "D5" and cert.level == PROVED


def test_quintic_rejects_reducible():
    with pytest.raises(ValueError):
        classify_quintic(P(0, 0, 0, 0, -1))


def test_quintic_structural_consistency_on_random_corpus():
    rng = random.Random(11)
    seen = set()
    for _ in range(300):
        f = IntPoly([rng.randint(-6, 6) for _ in range(5)])
        if not is_irreducible(f):
            continue
        g, cert = classify_quintic(f)
        seen.add(g.label)
        square = is_perfect_square(disc_resultant(f))
        if g.label == "AGL(1,F5)":
            assert not square
        if g.label in ("D5", "C5"):
            assert square
        assert g.flags["in_A_n"] == square
        assert g.flags["solvable"] == (g.label in SOLVABLE_QUINTIC)
    assert {"S5"} <= seen


# -------------------------------------------------------------- sextics

def test_x6_plus_x_plus_1_is_s6():
    g, cert = classify_sextic(P(0, 0, 0, 0, 1, 1))
    assert g.label == "S6" and cert.level == PROVED
    assert not any(g.flags[k] for k in ("in_G72", "in_G48", "in_H120"))


def test_ninth_cyclotomic_sets_solvable_flags():
    g, cert = classify_sextic(P(0, 0, 1, 0, 0, 1))
    assert g.flags["in_G72"]
    assert g.label in ("G72", "G48") and cert.level == CONDITIONAL


def test_sextic_rejects_reducible():
    with pytest.raises(ValueError):
        classify_sextic(P(0, 0, 0, 0, 0, -1))


def test_a6_sextic():
    # X^6 + 24X - 20: square discriminant and no resolvent roots (the
    # sympy cross-check below confirms order 360)
    f = P(0, 0, 0, 0, 24, -20)
    g, cert = classify_sextic(f)
    assert is_perfect_square(disc_resultant(f))
    assert g.label == "A6" and g.flags["in_A_n"] and cert.level == PROVED


# ------------------------------------------------------ cubics, quartics

@pytest.mark.parametrize("c,label", [
    ((0, -3, 1), "C3"), ((0, 0, -2), "S3"),
    ((0, 0, 0, 1), "V4"), ((0, 0, -1, -1), "S4"), ((1, 1, 1, 1), "C4"),
    ((0, 0, 0, -2), "D4"), ((0, 0, 8, 12), "A4"),
])
def test_cubic_quartic_labels(c, label):
    g, cert = classify_cubic_quartic(IntPoly(c))
    assert g.label == label and cert.level == PROVED


def test_x4_minus_x_minus_1_disc():
    assert disc_resultant(P(0, 0, -1, -1)) == -283


def test_resolvent_cubic_shares_discriminant():
    rng = random.Random(5)
    for _ in range(50):
        f = IntPoly([rng.randint(-9, 9) for _ in range(4)])
        assert disc_resultant(resolvent_cubic(f)) == disc_resultant(f)


# ----------------------------------------------------------- properties

def test_alternating_test_agrees_with_sample_parity():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.choice([3, 4, 5, 6])
        f = IntPoly([rng.randint(-7, 7) for _ in range(n)])
        if not is_irreducible(f):
            continue
        alt = alternating_test(f)
        for s in cycle_type_samples(f, 20):
            even = sum(d - 1 for d in s.degrees) % 2 == 0
            assert even or not alt


def test_classification_is_deterministic():
    for c in [(0, 0, 0, -1, -1), (1, -4, -3, 3, 1), (0, 0, 1, 0, 0, 1)]:
        a = verdict_document(IntPoly(c), *classify(IntPoly(c)))
        b = verdict_document(IntPoly(c), *classify(IntPoly(c)))
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_classify_irreducible_agrees_with_classify():
    for c in [(0, 0, 0, 20, 16), (0, 10, 0, 20, 2), (0, 0, 0, 0, 1, 1), (0, 0, 8, 12)]:
        assert classify_irreducible(IntPoly(c)) == classify(IntPoly(c))


def test_group_tables_are_consistent():
    for n, table in GROUPS.items():
        assert FULL[n] in table and ALT[n] in table
        for label, (ntk, order) in table.items():
            assert ntk.startswith("%dT" % n)
            types = group_cycle_types(n, label)
            assert all(sum(t) == n for t in types)
            assert (1,) * n in types
            # every transitive group contains a fixed-point-free element
            assert any(1 not in t for t in types)


def test_label_consistent_with_flags():
    g, _ = classify(P(0, 0, 0, 0, 24, -20))
    assert g.flags["in_A_n"]
    g, _ = classify(P(0, 0, 0, 0, 1, 1))
    assert not g.flags["in_A_n"]


def test_verdict_document_schema_and_big_integers():
    f = P(0, 0, 0, 10 ** 6, 10 ** 7)
    doc = verdict_document(f, *classify(f))
    assert doc["schema"] == SCHEMA
    assert set(doc) == {"schema", "degree", "coeffs", "label", "ntk", "level", "flags", "evidence"}
    assert doc["coeffs"] == ["0", "0", "0", "1000000", "10000000"]
    assert isinstance(dict(doc["evidence"])["disc"], str)
    json.dumps(doc)


# ------------------------------------------------- reference cross-check

_ORDER_TO_LABEL = {
    3: {3: "C3", 6: "S3"},
    4: {8: "D4", 12: "A4", 24: "S4"},
    5: {5: "C5", 10: "D5", 20: "AGL(1,F5)", 60: "A5", 120: "S5"},
}


def _sympy_label(c):
    sympy = pytest.importorskip("sympy")
    from sympy.polys.numberfields.galoisgroups import galois_group
    X = sympy.symbols("X")
    G, alt = galois_group(sympy.Poly([1] + list(c), X), by_name=False)
    order = G.order()
    n = len(c)
    if n == 4 and order == 4:
        return "C4" if G.is_cyclic else "V4"
    if n == 6:
        return order, alt
    return _ORDER_TO_LABEL[n][order]


def test_classifier_matches_sympy_on_random_corpus():
    pytest.importorskip("sympy")
    rng = random.Random(99)
    checked = 0
    while checked < 60:
        n = rng.choice([3, 4, 5])
        c = [rng.randint(-8, 8) for _ in range(n)]
        f = IntPoly(c)
        if not is_irreducible(f):
            continue
        checked += 1
        assert classify(f)[0].label == _sympy_label(c), c


@pytest.mark.parametrize("c", [
    (0, 0, 0, 0, 1, 1), (0, 0, 1, 0, 0, 1), (0, 0, 0, 0, 0, 2), (0, 0, 3, 0, 0, 3),
    (1, 1, 1, 1, 1, 1), (0, 0, 0, 0, 24, -20), (0, -3, 0, 0, 0, 1),
])
def test_sextic_containers_agree_with_sympy(c):
    order, alt = _sympy_label(c)
    g, _ = classify(IntPoly(c))
    assert g.flags["in_A_n"] == alt
    assert (g.label in ("A6", "S6")) == (order in (360, 720))
    assert g.order % order == 0
