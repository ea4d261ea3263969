import random

import pytest
from hypothesis import given, settings, strategies as st

from galoiscensus.geom import (
    convex_hull, newton_polygon, vertex_gcd, absolutely_irreducible_bcg, polygon_document,
    count_points_curve, count_points_surface, theta_surface, theta_curve, LopsidedBox,
    BudgetError, CERTIFIED, INCONCLUSIVE, q_irreducible_monic,
)
from galoiscensus.symres import MPoly, parse_mpoly, load_resolvent

import oracles


def bi(text, names=("x", "y")):
    return parse_mpoly(text, variables=names)


# ------------------------------------------------------- printed instances

THETA_G = "102400 - 108544 y - 3200000 e^4 y + 44800 y^2 - 8960 y^3 + 880 y^4 - 40 y^5 + y^6"
F10_G = "y^10 + 123 a^2 y^5 + 129 y^4 + 66 a^2 y^2 - 64 y + a^4"
F15_G = ("32 a^6 + 1296 a^2 y + 792 a^4 y^2 - 1728 y^3 - 96 a^2 y^4 - 353 a^4 y^5"
         " - 1232 y^6 + 288 a^2 y^7 + 453 y^9 - 21 a^2 y^10 - 42 y^12 + y^15")
PSI_G = ("y^6 - 42 y^5 + 360 y^4 - (1360 - 46656 a^5) y^3 + (2640 - 34992 a^5) y^2"
         " - 2592 y + 1024")


@pytest.mark.parametrize("text,names,vertices", [
    (THETA_G, ("e", "y"), {(0, 0), (0, 6), (4, 1)}),
    (F10_G, ("a", "y"), {(0, 1), (0, 10), (4, 0)}),
    (F15_G, ("a", "y"), {(6, 0), (0, 3), (0, 15), (2, 1)}),
    (PSI_G, ("a", "y"), {(0, 0), (5, 2), (5, 3), (0, 6)}),
])
def test_printed_specializations_are_certified(text, names, vertices):
    res = absolutely_irreducible_bcg(bi(text, names))
    assert res.verdict == CERTIFIED and res.irreducible_over_q
    assert set(res.polygon.hull_vertices) == vertices
    assert res.gcd == 1


def test_theta_curve_is_the_printed_polynomial():
    assert theta_curve() == bi(THETA_G, ("e", "y"))


def test_generated_decic_specialization_has_printed_polygon():
    # the generated resolvent carries one more interior monomial (a y^7 term)
    # than the printed formula; the hull is unchanged
    P = load_resolvent("f10").specialize_partial({"a1": 0, "a2": 0, "a3": 0, "a4": 0, "a6": 1})
    printed = bi(F10_G, ("a", "y"))
    assert set(P.terms) - set(printed.terms) == {(0, 7)}
    assert newton_polygon(P).hull_vertices == newton_polygon(printed).hull_vertices


def test_generated_degree_15_specialization_is_the_printed_polynomial():
    P = load_resolvent("f15").specialize_partial({"a1": 0, "a2": 0, "a3": 0, "a4": 0, "a6": 1})
    assert P.rename(("a", "y")) == bi(F15_G, ("a", "y"))


def test_polygon_document():
    doc = polygon_document(absolutely_irreducible_bcg(theta_curve()))
    assert doc == {"support_size": 8, "vertices": [[0, 0], [4, 1], [0, 6]],
                   "gcd": 1, "verdict": "certified"}


# --------------------------------------------------------- small examples

def test_single_monomial_hull():
    assert newton_polygon(bi("x^2 y^3")).hull_vertices == ((2, 3),)


def test_gcd_two_is_inconclusive():
    res = absolutely_irreducible_bcg(bi("x^2 y^2 + x^2 + y^2 + 1"))
    assert res.gcd == 2 and res.verdict == INCONCLUSIVE


def test_reducible_product_is_inconclusive():
    P = bi("(y^2 - x)*(y^3 + x + 1)")
    res = absolutely_irreducible_bcg(P)
    assert res.verdict == INCONCLUSIVE and not res.irreducible_over_q


def test_non_absolutely_irreducible_is_not_certified():
    # y^2 + x^2 = (y + ix)(y - ix) is irreducible over Q only
    res = absolutely_irreducible_bcg(bi("y^2 + x^2"))
    assert res.verdict == INCONCLUSIVE


def test_convex_hull_drops_collinear_points():
    assert convex_hull([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (1, 1)]) == [(0, 0), (2, 0), (2, 2), (0, 2)]


def test_vertex_gcd():
    assert vertex_gcd(newton_polygon(bi("x^4 + y^6 + x^2 y^2"))) == 2


def test_bivariate_required():
    with pytest.raises(ValueError):
        newton_polygon(parse_mpoly("x + y + z"))


# -------------------------------------------------------------- properties

@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=3, max_size=8),
       st.data())
def test_hull_invariant_under_interior_monomials(points, data):
    terms = {p: 1 for p in points}
    P = MPoly(("x", "y"), terms)
    before = newton_polygon(P).hull_vertices
    hull = convex_hull(points)
    if len(hull) < 3:
        return
    # an interior lattice point is a rational convex combination; try a few
    extra = {}
    for _ in range(5):
        i, j, k = data.draw(st.tuples(*(st.integers(0, len(hull) - 1),) * 3))
        s = (hull[i][0] + hull[j][0] + hull[k][0], hull[i][1] + hull[j][1] + hull[k][1])
        if s[0] % 3 == 0 and s[1] % 3 == 0:
            extra[(s[0] // 3, s[1] // 3)] = data.draw(st.integers(1, 9))
    extra.update(terms)
    Q = MPoly(("x", "y"), extra)
    assert newton_polygon(Q).hull_vertices == before


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=3),
       st.lists(st.integers(-5, 5), min_size=2, max_size=3))
def test_products_are_never_certified(u, v):
    # (y^k + ... in x) * (y^m + ... in x) is reducible
    def factor(cs):
        terms = {(0, len(cs)): 1}
        for i, c in enumerate(cs):
            if c:
                terms[(i + 1, i)] = terms.get((i + 1, i), 0) + c
        return MPoly(("x", "y"), terms)
    P = factor(u) * factor(v)
    assert absolutely_irreducible_bcg(P).verdict == INCONCLUSIVE


def test_q_irreducibility_without_monic_variable_is_undecided():
    assert q_irreducible_monic(bi("2 y^2 + 3 x^2 + 1"))[0] is None
    # monic of degree one in x, so irreducible at once
    assert q_irreducible_monic(bi("2 y^2 + x"))[0] is True


# ------------------------------------------------------------ point counts

CURVES = ["y^2 - x^3 - 1", "x y - 6", "y^3 - x^2 + x", "x^2 + y^2 - 25", "x^2 y + y^3 - 3 x - 4",
          "2 y^2 - x^2 - 1"]


@pytest.mark.parametrize("text", CURVES)
@pytest.mark.parametrize("box", [(5, 5), (40, 3), (3, 200), (100, 100)])
def test_curve_count_matches_brute_force(text, box):
    P = bi(text)
    expected = oracles.brute_points_2d(lambda x, y: P.evaluate({"x": x, "y": y}), *box)
    assert count_points_curve(P, box) == expected


def test_curve_simple_counts():
    assert count_points_curve(bi("x - y^2"), (100, 10)) == 21
    assert count_points_curve(bi("x y - 1"), (5, 5)) == 2


def test_curve_count_is_monotone_in_box():
    P = bi("y^2 - x^3 + 2 x")
    counts = [count_points_curve(P, (B, B * B)) for B in (2, 4, 8, 16, 32)]
    assert counts == sorted(counts)


def test_curve_count_zero_in_x_is_every_value():
    # x (y - 1) vanishes on the whole line x = 0
    assert count_points_curve(bi("x y - x"), (3, 7)) == 15 + 6


def test_surface_plane():
    B = 3
    assert count_points_surface(parse_mpoly("y", variables=("d", "e", "y")), (B, B, B)) == (2 * B + 1) ** 2


def test_surface_empty():
    P = parse_mpoly("y^2 + d^2 + e^2 + 1", variables=("d", "e", "y"))
    assert count_points_surface(P, (5, 5, 5)) == 0


def test_surface_matches_triple_loop():
    P = parse_mpoly("y^2 - d e - 1", variables=("d", "e", "y"))
    box = (4, 3, 6)
    expected = sum(1 for d in range(-4, 5) for e in range(-3, 4) for y in range(-6, 7)
                   if y * y - d * e - 1 == 0)
    assert count_points_surface(P, box) == expected


def test_surface_distinguished_variable():
    P = parse_mpoly("d^2 - e - y", variables=("d", "e", "y"))
    with pytest.raises(ValueError):
        count_points_surface(P, (3, 3, 3))
    Q = parse_mpoly("y - d^2 + e", variables=("d", "e", "y"))
    expected = sum(1 for d in range(-3, 4) for e in range(-3, 4) if abs(d * d - e) <= 3)
    assert count_points_surface(Q, (3, 3, 3)) == expected


def test_theta_surface_small_box():
    # Y_{0,0,0} in the box |d|, |e| <= 8, |y| <= 64; checked by a triple loop
    g = theta_surface()
    assert count_points_surface(g, (8, 8, 64)) == 35


def test_theta_surface_triple_loop_oracle():
    g = theta_surface()
    count = 0
    for d in range(-8, 9):
        for e in range(-8, 9):
            for y in range(-64, 65):
                v = (y ** 3 - 20 * d * y * y + 240 * d * d * y + 320 * d ** 3) ** 2 \
                    - 1024 * (256 * d ** 5 + 3125 * e ** 4) * y
                count += v == 0
    assert count == 35
    # the closed form agrees with the generated resolvent at a few points
    rng = random.Random(2)
    for _ in range(20):
        d, e, y = (rng.randint(-9, 9) for _ in range(3))
        v = (y ** 3 - 20 * d * y * y + 240 * d * d * y + 320 * d ** 3) ** 2 \
            - 1024 * (256 * d ** 5 + 3125 * e ** 4) * y
        assert g.evaluate({"d": d, "e": e, "y": y}) == v


def test_lopsided_box_validation():
    with pytest.raises(ValueError):
        LopsidedBox((3, 0))
    assert LopsidedBox((1, 2)).volume == 15


def test_curve_budget():
    with pytest.raises(BudgetError):
        count_points_curve(bi("y^2 - x"), (10 ** 6, 10), budget=1000)


def test_surface_budget():
    with pytest.raises(BudgetError):
        count_points_surface(theta_surface(), (100, 100, 100), budget=1000)


def test_surface_zero_polynomial():
    with pytest.raises(ValueError):
        count_points_surface(MPoly(("d", "e", "y"), {}), (2, 2, 2))
