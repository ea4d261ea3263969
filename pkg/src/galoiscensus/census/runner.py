"""Sharded, resumable census runs and their reports.

The blocks of a run (one per choice of the outer coefficients, in odometer
order) are split into ``shards`` contiguous ranges, and each shard into a
few work units.  Units are processed in order, either in this process or
by a pool of worker processes, and their tallies are folded in unit order.
The fold only sums counts, takes a maximum and concatenates witness lists
that are already in enumeration order, so the report does not depend on
the shard or worker count.

Checkpoint sidecar (JSON, ``schema`` = CHECKPOINT_SCHEMA)::

    {"schema": ..., "n": 5, "H": 16, "mode": "full", "shards": 8,
     "units": 64, "units_done": 17, "last_outer": [-14, 3],
     "tally": {...}, "complete": false}

``units_done`` counts finished units (a prefix of the unit list) and
``last_outer`` is the last outer coefficient tuple they covered.  A resumed
run with the same parameters skips the finished units.
"""

import csv
import io
import json
import multiprocessing
import os
import time
from dataclasses import dataclass, field

from .engine import BlockContext, Tally, run_block, max_ratio, MODES
from ..classify import FULL

REPORT_SCHEMA = "galoiscensus.census/1"
CHECKPOINT_SCHEMA = "galoiscensus.checkpoint/1"
DEFAULT_BUDGET = 2 ** 30
BUDGET_ENV = "GALOIS_CENSUS_BUDGET"
UNITS_PER_SHARD = 8
CHECKPOINT_INTERVAL = 10.0


class BudgetExceeded(ValueError):
    """The box holds more tuples than the configured budget."""

    def __init__(self, required, budget):
        super().__init__("census needs %d tuples but the budget is %d; raise it with "
                         "--budget or %s" % (required, budget, BUDGET_ENV))
        self.required = required
        self.budget = budget


def default_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError("%s must be an integer, got %r" % (BUDGET_ENV, raw))
    if value < 1:
        raise ValueError("%s must be positive" % BUDGET_ENV)
    return value


@dataclass
class CensusReport:
    n: int
    H: int
    mode: str
    total: int
    reducible: int
    irreducible: int
    non_full: object
    solvable: object
    per_class: dict
    max_resolvent_root_ratio: object
    witnesses: list
    diagnostics: dict
    shard_info: dict = field(default_factory=dict)
    seconds: float = 0.0

    def canonical(self):
        """Everything that is a function of (n, H, mode) alone."""
        return {
            "schema": REPORT_SCHEMA,
            "n": self.n,
            "H": self.H,
            "mode": self.mode,
            "total": self.total,
            "reducible": self.reducible,
            "irreducible": self.irreducible,
            "non_full": self.non_full,
            "solvable": self.solvable,
            "per_class": dict(sorted(self.per_class.items())),
            "max_resolvent_root_ratio": self.max_resolvent_root_ratio,
            "solvable_witnesses": self.witnesses,
            "diagnostics": dict(sorted(self.diagnostics.items())),
        }

    def to_dict(self):
        doc = self.canonical()
        doc["run"] = {"shard_info": self.shard_info, "seconds": round(self.seconds, 3)}
        return doc

    def canonical_json(self):
        return json.dumps(self.canonical(), sort_keys=True, indent=1) + "\n"

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    def csv_rows(self):
        rows = [("total", self.total), ("reducible", self.reducible),
                ("irreducible", self.irreducible)]
        rows += sorted(self.per_class.items())
        if self.non_full is not None:
            rows.append(("non_full", self.non_full))
        if self.solvable is not None:
            rows.append(("solvable", self.solvable))
        return [(self.n, self.H, name, count) for name, count in rows]

    def to_csv(self, header=True):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(("n", "H", "class", "count"))
        w.writerows(self.csv_rows())
        return buf.getvalue()


def _plan(ctx, shards):
    """Work units as (shard, first block, end block) with contiguous ranges."""
    blocks = ctx.block_count()
    units = []
    for s in range(shards):
        lo, hi = s * blocks // shards, (s + 1) * blocks // shards
        size = hi - lo
        pieces = min(UNITS_PER_SHARD, size)
        for u in range(pieces):
            units.append((s, lo + u * size // pieces, lo + (u + 1) * size // pieces))
    return units


def _outer_at(ctx, index):
    side = 2 * ctx.H + 1
    out = []
    for _ in range(ctx.k):
        out.append(index % side - ctx.H)
        index //= side
    return tuple(reversed(out))


_WORKER_CTX = None


def _run_unit(args):
    ctx, (shard, lo, hi) = _WORKER_CTX, args
    tally = Tally(ctx.labels)
    for b in range(lo, hi):
        tally.add(run_block(ctx, _outer_at(ctx, b)))
    return tally


def _load_checkpoint(path, key):
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        state = json.load(fh)
    if state.get("schema") != CHECKPOINT_SCHEMA:
        raise ValueError("checkpoint %s has an unknown schema %r" % (path, state.get("schema")))
    for k, v in key.items():
        if state.get(k) != v:
            raise ValueError("checkpoint %s was written for %s=%r, not %r" % (path, k, state.get(k), v))
    return state


def _save_checkpoint(path, key, units_done, last_outer, tally, complete):
    doc = dict(key)
    doc.update({"schema": CHECKPOINT_SCHEMA, "units_done": units_done,
                "last_outer": list(last_outer) if last_outer is not None else None,
                "tally": tally.to_state(), "complete": complete})
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(doc, fh, sort_keys=True)
    os.replace(tmp, path)


def run_census(n, H, mode="full", shards=1, workers=1, budget=None, checkpoint=None,
               progress=None):
    """Exhaustive census of monic X^n + a_1 X^(n-1) + ... + a_n with every
    |a_i| <= H.  See CensusReport for the fields."""
    if n not in (3, 4, 5, 6):
        raise ValueError("census supports degrees 3 to 6, got %d" % n)
    if H < 0:
        raise ValueError("height must be non-negative")
    if mode not in MODES:
        raise ValueError("unknown mode %r (choose from %s)" % (mode, ", ".join(MODES)))
    if shards < 1 or workers < 1:
        raise ValueError("shards and workers must be positive")
    total = (2 * H + 1) ** n
    budget = default_budget() if budget is None else budget
    if total > budget:
        raise BudgetExceeded(total, budget)

    global _WORKER_CTX
    start = time.time()
    ctx = BlockContext(n, H, mode)
    units = _plan(ctx, shards)
    key = {"n": n, "H": H, "mode": mode, "shards": shards, "units": len(units)}
    state = _load_checkpoint(checkpoint, key)
    tally = Tally(ctx.labels)
    done = 0
    if state is not None:
        tally = Tally.from_state(state["tally"])
        done = state["units_done"]
    todo = units[done:]
    last_save = time.time()

    _WORKER_CTX = ctx
    pool = None
    if workers > 1 and len(todo) > 1:
        method = "fork" if "fork" in multiprocessing.get_all_start_methods() else None
        pool = multiprocessing.get_context(method).Pool(workers)
        results = pool.imap(_run_unit, todo)
    else:
        results = map(_run_unit, todo)
    try:
        for unit, part in zip(todo, results):
            tally.add(part)
            done += 1
            if progress:
                progress(done, len(units))
            if checkpoint and (time.time() - last_save > CHECKPOINT_INTERVAL):
                _save_checkpoint(checkpoint, key, done, _outer_at(ctx, unit[2] - 1), tally, False)
                last_save = time.time()
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    if checkpoint:
        last = _outer_at(ctx, units[-1][2] - 1) if units else None
        _save_checkpoint(checkpoint, key, done, last, tally, True)

    if tally.reducible + tally.irreducible != total:
        raise AssertionError("census lost tuples: %d + %d != %d"
                             % (tally.reducible, tally.irreducible, total))
    per_class = dict(tally.per_class)
    if mode != "reducible_only" and sum(per_class.values()) != tally.irreducible:
        raise AssertionError("per-class counts do not add up to the irreducible count")
    non_full = None
    solvable = None
    if mode == "full":
        non_full = tally.irreducible - per_class[FULL[n]]
    if n == 5 and mode != "reducible_only":
        solvable = sum(v for k, v in per_class.items() if k in ("C5", "D5", "AGL(1,F5)"))
    return CensusReport(
        n=n, H=H, mode=mode, total=total, reducible=tally.reducible,
        irreducible=tally.irreducible, non_full=non_full, solvable=solvable,
        per_class=per_class, max_resolvent_root_ratio=max_ratio(tally, H),
        witnesses=tally.witnesses, diagnostics={"python_fallbacks": dict(tally.fallbacks)},
        shard_info={"shards": shards, "workers": workers, "units": len(units),
                    "blocks": ctx.block_count(), "resumed_units": state["units_done"] if state else 0},
        seconds=time.time() - start)
