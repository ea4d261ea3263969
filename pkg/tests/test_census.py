import itertools
import json
from collections import Counter

import numpy as np
import pytest

from galoiscensus.census import (
    run_census, demoivre_census, demoivre_poly, fit_exponent, BudgetExceeded, CensusReport,
)
from galoiscensus.census import runner, engine
from galoiscensus.census.tables import partitions, pattern_table, subset_sum_mask, _encode
from galoiscensus.classify import classify_irreducible
from galoiscensus.polycore import IntPoly, is_irreducible
from galoiscensus.symres import sextic_resolvent

import oracles


def _oracle_census(n, H):
    """Reference counts from the one-polynomial-at-a-time pipeline."""
    reducible = 0
    classes = Counter()
    for c in itertools.product(range(-H, H + 1), repeat=n):
        f = IntPoly(c)
        if not is_irreducible(f):
            reducible += 1
            continue
        classes[classify_irreducible(f)[0].label] += 1
    return reducible, classes


# ----------------------------------------------------------- small boxes

def test_cubic_height_one_rational_root_oracle():
    rep = run_census(3, 1)
    # a monic cubic is reducible iff it has an integer root, which divides a3
    red = sum(1 for c in itertools.product(range(-1, 2), repeat=3)
              if oracles.brute_integer_roots(list(c)))
    assert (rep.total, rep.reducible, rep.irreducible) == (27, 15, 12) and red == 15


def test_quintic_height_zero():
    rep = run_census(5, 0)
    assert (rep.total, rep.reducible, rep.irreducible) == (1, 1, 0)


@pytest.mark.parametrize("n", [4, 5])
def test_reducible_count_matches_factor_search_oracle(n):
    rep = run_census(n, 1, mode="reducible_only")
    red = sum(oracles.brute_is_reducible(list(c))
              for c in itertools.product(range(-1, 2), repeat=n))
    assert rep.reducible == red


@pytest.mark.parametrize("n,H", [(3, 3), (4, 2), (5, 1), (5, 2), (6, 1)])
def test_engine_matches_per_polynomial_pipeline(n, H):
    rep = run_census(n, H)
    reducible, classes = _oracle_census(n, H)
    assert rep.reducible == reducible
    assert {k: v for k, v in rep.per_class.items() if v} == dict(classes)


def test_report_invariants():
    rep = run_census(4, 3)
    assert rep.reducible + rep.irreducible == rep.total == 7 ** 4
    assert sum(rep.per_class.values()) == rep.irreducible
    assert rep.non_full == rep.irreducible - rep.per_class["S4"]


def test_box_monotonicity():
    prev = None
    for H in range(0, 4):
        rep = run_census(4, H)
        cur = [rep.total, rep.reducible, rep.irreducible] + [rep.per_class[k] for k in sorted(rep.per_class)]
        if prev is not None:
            assert all(a <= b for a, b in zip(prev, cur))
        prev = cur


# ---------------------------------------------------------------- modes

def test_solvable_only_matches_full_mode_and_contains_demoivre():
    full = run_census(5, 4)
    solv = run_census(5, 4, mode="solvable_only")
    assert solv.solvable == full.solvable
    assert solv.reducible == full.reducible
    assert solv.solvable >= demoivre_census(4)[0]
    assert set(solv.per_class) == {"C5", "D5", "AGL(1,F5)", "insolvable"}
    for k in ("C5", "D5", "AGL(1,F5)"):
        assert solv.per_class[k] == full.per_class[k]


def test_reducible_only_mode():
    rep = run_census(5, 2, mode="reducible_only")
    assert rep.reducible == 1313 and rep.per_class == {} and rep.solvable is None


def test_solvable_only_needs_quintics():
    with pytest.raises(ValueError):
        run_census(4, 1, mode="solvable_only")


@pytest.mark.parametrize("bad", [dict(n=7, H=1), dict(n=5, H=-1), dict(n=5, H=1, mode="x"),
                                 dict(n=5, H=1, shards=0)])
def test_rejects_bad_parameters(bad):
    with pytest.raises(ValueError):
        run_census(**bad)


# ------------------------------------------------------- witness and ratio

def test_every_solvable_witness_re_evaluates_to_zero():
    rep = run_census(5, 4)
    assert len(rep.witnesses) == rep.solvable
    ratio = 0
    for coeffs, roots in rep.witnesses:
        theta = sextic_resolvent(*coeffs)
        assert roots
        for y in roots:
            assert oracles.poly_eval(theta.ascending(), y) == 0
            ratio = max(ratio, abs(y))
    from fractions import Fraction
    assert Fraction(rep.max_resolvent_root_ratio) == Fraction(ratio, 16)


# ----------------------------------------------------------- determinism

@pytest.fixture
def small_blocks(monkeypatch):
    # force many outer blocks so that shards and units really split the box
    monkeypatch.setattr(engine, "BLOCK_LIMIT", 100)


def test_shard_and_worker_independence(small_blocks):
    single = run_census(5, 3, shards=1)
    assert single.shard_info["blocks"] > 16
    for shards, workers in [(4, 1), (16, 1), (4, 2)]:
        other = run_census(5, 3, shards=shards, workers=workers)
        assert other.shard_info["units"] > 1
        assert other.canonical_json() == single.canonical_json()
        assert other.to_csv() == single.to_csv()


def test_split_blocks_agree_with_single_block(monkeypatch):
    whole = run_census(5, 3)
    monkeypatch.setattr(engine, "BLOCK_LIMIT", 100)
    assert run_census(5, 3, shards=4).canonical_json() == whole.canonical_json()


def test_checkpoint_resume_gives_identical_report(tmp_path, monkeypatch, small_blocks):
    path = str(tmp_path / "ck.json")
    reference = run_census(4, 6, shards=4)
    assert reference.shard_info["units"] > 5
    monkeypatch.setattr(runner, "CHECKPOINT_INTERVAL", -1.0)

    class Stop(Exception):
        pass

    def stop_after_five(done, total):
        if done == 5:
            raise Stop()

    with pytest.raises(Stop):
        run_census(4, 6, shards=4, checkpoint=path, progress=stop_after_five)
    with open(path) as fh:
        state = json.load(fh)
    assert state["schema"] == runner.CHECKPOINT_SCHEMA
    # the callback fires before the save, so four units are on disk
    assert state["units_done"] == 4 and not state["complete"]
    assert len(state["last_outer"]) >= 1
    resumed = run_census(4, 6, shards=4, checkpoint=path)
    assert resumed.shard_info["resumed_units"] == 4
    assert resumed.canonical_json() == reference.canonical_json()
    with open(path) as fh:
        assert json.load(fh)["complete"]


def test_checkpoint_for_other_parameters_is_refused(tmp_path):
    path = str(tmp_path / "ck.json")
    run_census(3, 2, checkpoint=path)
    with pytest.raises(ValueError):
        run_census(3, 3, checkpoint=path)


# ---------------------------------------------------------------- budget

def test_budget_refusal_states_requirement():
    with pytest.raises(BudgetExceeded) as info:
        run_census(5, 3, budget=1000)
    assert info.value.required == 7 ** 5 and info.value.budget == 1000
    assert "16807" in str(info.value)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv(runner.BUDGET_ENV, "100")
    with pytest.raises(BudgetExceeded):
        run_census(3, 2)
    monkeypatch.setenv(runner.BUDGET_ENV, "junk")
    with pytest.raises(ValueError):
        run_census(3, 2)


def test_default_budget_is_two_to_the_thirty(monkeypatch):
    monkeypatch.delenv(runner.BUDGET_ENV, raising=False)
    assert runner.default_budget() == 2 ** 30


# ---------------------------------------------------------------- output

def test_csv_layout():
    rep = run_census(3, 1)
    lines = rep.to_csv().splitlines()
    assert lines[0] == "n,H,class,count"
    assert lines[1:4] == ["3,1,total,27", "3,1,reducible,15", "3,1,irreducible,12"]


def test_json_report_round_trip_and_schema():
    rep = run_census(3, 2)
    doc = json.loads(rep.to_json())
    assert doc["schema"] == runner.REPORT_SCHEMA
    assert "run" in doc and "run" not in json.loads(rep.canonical_json())
    assert doc["per_class"] == rep.per_class


# --------------------------------------------------------------- de Moivre

def test_demoivre_height_one_has_no_irreducible_member():
    # s = 0 only, and X^5 + t for |t| <= 1 always has the root -t
    count, pairs = demoivre_census(1)
    assert count == 0 and pairs == []
    assert all(oracles.brute_integer_roots([0, 0, 0, 0, t]) for t in (-1, 0, 1))


def test_demoivre_height_twenty_against_factor_search():
    count, pairs = demoivre_census(20)
    ref = []
    for s in range(-2, 3):
        if 5 * s * s > 20:
            continue
        for t in range(-20, 21):
            c = list(demoivre_poly(s, t).coeffs)
            if not oracles.brute_is_reducible(c):
                ref.append((s, t))
    assert pairs == ref and count == len(ref) == 188


def test_demoivre_members_are_agl():
    _, pairs = demoivre_census(20)
    for s, t in pairs:
        assert classify_irreducible(demoivre_poly(s, t))[0].label == "AGL(1,F5)"


# ------------------------------------------------------------- exponents

def test_fit_exponent_exact_square_law():
    fit = fit_exponent([(2, 4), (4, 16), (8, 64)])
    assert fit.slope == pytest.approx(2.0, abs=1e-12)
    assert max(abs(r) for r in fit.residuals) < 1e-12


def test_fit_exponent_exact_cube_law():
    assert fit_exponent([(2, 8), (4, 64), (8, 512)]).slope == pytest.approx(3.0, abs=1e-12)


@pytest.mark.parametrize("series", [[(2, 4), (4, 16)], [(2, 4), (2, 5), (4, 16)],
                                    [(2, 0), (4, 1), (8, 2)]])
def test_fit_exponent_rejects_degenerate_series(series):
    with pytest.raises(ValueError):
        fit_exponent(series)


# ---------------------------------------------------------------- tables

def test_partitions_counts():
    assert [len(partitions(n)) for n in range(1, 7)] == [1, 2, 3, 5, 7, 11]


def test_subset_sum_mask():
    assert subset_sum_mask((1, 4)) == (1 << 1) | (1 << 4)
    assert subset_sum_mask((5,)) == 0


@pytest.mark.parametrize("n,p", [(4, 3), (5, 5), (5, 7), (6, 3)])
def test_pattern_table_matches_naive_factorisation(n, p):
    table = pattern_table(n, p)
    pats = partitions(n)
    rng = np.random.default_rng(p * 10 + n)
    rows = rng.integers(0, p, size=(300, n))
    idx = _encode(rows, p)
    for row, i in zip(rows, idx):
        c = [int(v) for v in row]
        disc = oracles.disc_sylvester(c)
        if disc % p == 0:
            assert table[i] == -1
        else:
            assert pats[table[i]] == oracles.factor_degrees_mod_p(c, p)


def test_root_count_screen_is_independent_of_batch():
    # 47 divides the discriminant of the first quintic; the screen must keep
    # looking at later primes (83 gives three roots) even when it is alone
    rows = np.array([[-3, 0, 0, 2, 1], [1, 1, 1, 1, 1]], dtype=np.int64)
    D = engine._vector_quintic_disc([rows[:, i] for i in range(5)])
    assert D[0] == oracles.disc_sylvester([-3, 0, 0, 2, 1])
    together = engine.insolvable_by_root_counts(rows, D)
    alone = engine.insolvable_by_root_counts(rows[:1], D[:1])
    assert together[0] and alone[0]
    assert oracles.factor_degrees_mod_p([-3, 0, 0, 2, 1], 83) in ((1, 1, 3), (1, 1, 1, 2))


def test_demoivre_census_is_independent_of_shards():
    assert demoivre_census(30) == demoivre_census(30, shards=7)
