"""Exhaustive checks, brute-force oracles and the greedy conjecture sweep.

Every sweep is split into shards: a shard is a pure function from a slice
of the search space to a :class:`VerificationReport`, and reports merge
associatively. Shards can run in a process pool, and long sweeps can
append finished shards to a JSON-lines checkpoint and resume from it.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Iterator, Optional

from . import core, galeryser, scores
from .constructions import (
    ExtensionResult,
    embed_regular,
    embed_type1,
    embed_type2,
    greedy_type2,
    plus_two,
)
from .core import TYPE_I, TYPE_II, Tournament, is_regular
from .formats import to_dict

log = logging.getLogger(__name__)

EMBEDDERS = {"inductive": embed_regular, "type1": embed_type1, "type2": embed_type2}


@dataclass
class Failure:
    input: dict
    kind: str
    violated: str

    def to_dict(self) -> dict:
        return {"input": self.input, "kind": self.kind, "violated": self.violated}

    def sort_key(self):
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass
class VerificationReport:
    scope: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    per_order: dict[int, dict[str, int]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, order: int, ok: bool = True) -> None:
        self.checked += 1
        row = self.per_order.setdefault(order, {"checked": 0, "failures": 0})
        row["checked"] += 1
        if not ok:
            row["failures"] += 1

    def fail(self, t: Optional[Tournament], kind: str, violated: str, payload: Optional[dict] = None) -> None:
        data = payload if payload is not None else (to_dict(t) if t is not None else {})
        self.failures.append(Failure(data, kind, violated))

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        out = VerificationReport(self.scope)
        out.checked = self.checked + other.checked
        out.failures = sorted(self.failures + other.failures, key=Failure.sort_key)
        out.elapsed = self.elapsed + other.elapsed
        for src in (self.per_order, other.per_order):
            for k, row in src.items():
                dst = out.per_order.setdefault(k, {"checked": 0, "failures": 0})
                dst["checked"] += row["checked"]
                dst["failures"] += row["failures"]
        return out

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "scope": self.scope,
            "passed": self.passed,
            "checked": self.checked,
            "failures": [f.to_dict() for f in sorted(self.failures, key=Failure.sort_key)],
            "per_order": {str(k): dict(v) for k, v in sorted(self.per_order.items())},
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        """Serialize; timing is off by default so reruns are byte-identical."""
        return json.dumps(self.to_dict(timing), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        rep = cls(d["scope"], d["checked"])
        rep.failures = [Failure(f["input"], f["kind"], f["violated"]) for f in d["failures"]]
        rep.per_order = {int(k): dict(v) for k, v in d["per_order"].items()}
        rep.elapsed = d.get("elapsed", 0.0)
        return rep

    def table(self) -> str:
        lines = [f"{self.scope}: {'PASS' if self.passed else 'FAIL'}  "
                 f"({self.checked} checked, {len(self.failures)} failures, {self.elapsed:.2f}s)"]
        lines.append(f"  {'order':>5}  {'checked':>9}  {'failures':>8}")
        for k, row in sorted(self.per_order.items()):
            lines.append(f"  {k:>5}  {row['checked']:>9}  {row['failures']:>8}")
        for f in self.failures[:10]:
            lines.append(f"  ! {f.kind}: {f.violated}  input={json.dumps(f.input)}")
        if len(self.failures) > 10:
            lines.append(f"  ... {len(self.failures) - 10} more")
        return "\n".join(lines)


def merge_all(scope: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    out = VerificationReport(scope)
    for r in reports:
        out = out.merge(r)
    out.scope = scope
    return out


def enumerate_labeled(n: int) -> Iterator[Tournament]:
    """Every labeled tournament of order ``n``, in edge-bitmask order.

    Bit ``p`` of the mask orients the ``p``-th pair ``(i, j)``, ``i < j``,
    in lexicographic order: set means ``i -> j``.
    """
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield tournament_from_mask(n, mask, pairs)


def tournament_from_mask(n: int, mask: int, pairs=None) -> Tournament:
    if pairs is None:
        pairs = list(itertools.combinations(range(n), 2))
    rows = [0] * n
    for p, (i, j) in enumerate(pairs):
        if mask >> p & 1:
            rows[i] |= 1 << j
        else:
            rows[j] |= 1 << i
    return Tournament(n, tuple(rows))


def random_tournament(n: int, rng) -> Tournament:
    return tournament_from_mask(n, rng.getrandbits(comb(n, 2)) if n > 1 else 0)


def verify_extension(t: Tournament, result: ExtensionResult, expected_kind: str) -> VerificationReport:
    """Check a construction's output against its contract.

    Checks, each reported under its own name: ``tournament``, ``regular``,
    ``embedding``, ``order`` (2n+1 for type1/type2/greedy) and ``certify``
    (Type-I/Type-II at the trace witness).
    """
    rep = VerificationReport(f"verify_extension[{expected_kind}]")
    out = result.output
    bad = []
    if not core.validate_tournament_matrix(out.adjacency()):
        bad.append("tournament")
    if not is_regular(out):
        bad.append("regular")
    if not core.is_embedding(t, out, result.embedding):
        bad.append("embedding")
    if expected_kind in ("type1", "type2", "greedy") and out.n != 2 * t.n + 1:
        bad.append("order")
    # the empty tournament is its own (vacuously regular) extension
    if expected_kind == "inductive" and out.n % 2 == 0 and out.n != 0:
        bad.append("order")
    if expected_kind in ("type1", "type2") and "regular" not in bad:
        kind = TYPE_I if expected_kind == "type1" else TYPE_II
        witness = result.trace.witness[0] if result.trace.witness else None
        if witness is None or not 0 <= witness < out.n or core.certify_type(out, kind, witness) is None:
            bad.append("certify")
    for b in bad:
        rep.fail(t, expected_kind, b)
    rep.count(t.n, not bad)
    return rep


def _embedding_shard(args) -> VerificationReport:
    n, lo, hi, kinds = args
    rep = VerificationReport("embeddings")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(lo, hi):
        t = tournament_from_mask(n, mask, pairs)
        for kind in kinds:
            r = verify_extension(t, EMBEDDERS[kind](t), kind)
            rep.checked += 1
            rep.failures += r.failures
            row = rep.per_order.setdefault(n, {"checked": 0, "failures": 0})
            row["checked"] += 1
            row["failures"] += bool(r.failures)
    return rep


def _run_shards(fn: Callable, units: list, workers: int) -> list[VerificationReport]:
    if workers <= 1 or len(units) <= 1:
        return [fn(u) for u in units]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, units))


def sweep_embeddings(n_max: int, kinds=("inductive", "type1", "type2"), shards: int = 1,
                     n_min: int = 0) -> VerificationReport:
    """Run the three regular-extension constructions on every labeled tournament."""
    start = time.perf_counter()
    units = []
    for n in range(n_min, n_max + 1):
        total = 1 << comb(n, 2)
        step = max(1, -(-total // max(1, shards * 4)))
        for lo in range(0, total, step):
            units.append((n, lo, min(total, lo + step), tuple(kinds)))
    rep = merge_all(f"embeddings n<={n_max} kinds={','.join(kinds)}", _run_shards(_embedding_shard, units, shards))
    rep.elapsed = time.perf_counter() - start
    return rep


def _complete(n_total: int, fixed_rows: list[int], fixed_n: int) -> Optional[Tournament]:
    """Search for a regular tournament on ``n_total`` vertices extending
    the first ``fixed_n`` rows (which already hold the fixed arrows)."""
    half = (n_total - 1) // 2
    rows = list(fixed_rows) + [0] * (n_total - fixed_n)
    out = [core.popcount(r) for r in rows]
    inn = [0] * n_total
    for i in range(n_total):
        for j in core.iter_bits(rows[i]):
            inn[j] += 1
    pairs = [(i, j) for i in range(n_total) for j in range(i + 1, n_total) if not (i < fixed_n and j < fixed_n)]
    if any(o > half for o in out) or any(x > half for x in inn):
        return None

    def go(p: int) -> bool:
        if p == len(pairs):
            return all(o == half for o in out)
        i, j = pairs[p]
        for a, b in ((i, j), (j, i)):
            if out[a] == half or inn[b] == half:
                continue
            rows[a] |= 1 << b
            out[a] += 1
            inn[b] += 1
            if go(p + 1):
                return True
            rows[a] &= ~(1 << b)
            out[a] -= 1
            inn[b] -= 1
        return False

    if go(0):
        return Tournament.from_rows(rows)
    return None


def min_regular_extension_oracle(t: Tournament) -> tuple[int, Tournament]:
    """Smallest odd N >= n such that some regular N-tournament contains ``t``.

    Exhaustive: ``t`` is fixed on labels 0..n-1 and every completion of the
    remaining arrows is searched, with degree caps as the only pruning.
    """
    if t.n > 4:
        raise ValueError(f"oracle is limited to order <= 4, got {t.n}")
    if t.n == 0:
        return 0, t
    big = t.n if t.n % 2 else t.n + 1
    while True:
        found = _complete(big, list(t.rows), t.n)
        if found is not None:
            return big, found
        big += 2


def oracle_report(n_max: int = 4) -> VerificationReport:
    """Constructions never beat the brute-force minimum, and the oracle's
    own example is a valid extension."""
    rep = VerificationReport(f"oracle n<={n_max}")
    start = time.perf_counter()
    builders = {"inductive": embed_regular, "type1": embed_type1, "type2": embed_type2, "greedy": greedy_type2}
    for n in range(0, n_max + 1):
        for t in enumerate_labeled(n):
            order, example = min_regular_extension_oracle(t)
            ok = True
            chk = verify_extension(t, ExtensionResult(example, tuple(range(t.n)), _oracle_trace()), "oracle")
            if chk.failures:
                ok = False
                rep.failures += chk.failures
            if t.n and example.n != order:
                ok = False
                rep.fail(t, "oracle", "example order")
            for kind, f in builders.items():
                if f(t).output.n < order:
                    ok = False
                    rep.fail(t, kind, f"order below oracle minimum {order}")
            rep.count(n, ok)
    rep.elapsed = time.perf_counter() - start
    return rep


def _oracle_trace():
    from .constructions import ConstructionTrace

    return ConstructionTrace("oracle")


def _greedy_shard(args) -> VerificationReport:
    n, tail, tie_break = args
    rep = VerificationReport("greedy")
    for s in scores.enumerate_scores(n, tail):
        res = greedy_type2(scores.realize(s), tie_break=tie_break)
        ok = bool(res.regular_verdict)
        if not ok:
            rep.fail(None, "greedy", "not regular", payload={"scores": list(s)})
        rep.count(n, ok)
    return rep


def _shard_units(n_max: int, tie_break: str, n_min: int = 1, depth: int = 2) -> list:
    units = []
    for n in range(n_min, n_max + 1):
        for tail in scores.score_tails(n, depth if n > 8 else 0):
            units.append((n, tail, tie_break))
    return units


def verify_greedy_over_scores(n_max: int, shards: int = 1, checkpoint: Optional[str] = None,
                              tie_break: str = "stable", n_min: int = 1) -> VerificationReport:
    """Run the greedy Type-II construction on one realization of every score
    sequence of order ``n_min..n_max`` and report non-regular outcomes.

    With ``checkpoint`` set, finished shards are appended to that file as
    JSON lines and skipped on the next call.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    start = time.perf_counter()
    units = _shard_units(n_max, tie_break, n_min)
    done: dict[str, VerificationReport] = {}
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            for line in fh:
                if line.strip():
                    rec = json.loads(line)
                    done[rec["unit"]] = VerificationReport.from_dict(rec["report"])
    todo = [u for u in units if _unit_key(u) not in done]
    log.info("greedy sweep n<=%d: %d shards, %d from checkpoint", n_max, len(units), len(units) - len(todo))
    if checkpoint:
        with open(checkpoint, "a") as fh:
            for u, rep in zip(todo, _iter_shards(_greedy_shard, todo, shards)):
                done[_unit_key(u)] = rep
                fh.write(json.dumps({"unit": _unit_key(u), "report": rep.to_dict()}, sort_keys=True) + "\n")
                fh.flush()
    else:
        for u, rep in zip(todo, _iter_shards(_greedy_shard, todo, shards)):
            done[_unit_key(u)] = rep
    scope = f"greedy-over-scores n<={n_max} tie_break={tie_break}"
    rep = merge_all(scope, (done[_unit_key(u)] for u in units))
    rep.elapsed = time.perf_counter() - start
    return rep


def _unit_key(u) -> str:
    n, tail, tie_break = u
    return f"{n}:{scores.format_scores(tail)}:{tie_break}"


def _iter_shards(fn, units, workers):
    if workers <= 1 or len(units) <= 1:
        for u in units:
            yield fn(u)
        return
    with ProcessPoolExecutor(max_workers=workers) as ex:
        yield from ex.map(fn, units)


def verify_greedy_over_labeled(n_max: int, tie_break: str = "stable") -> VerificationReport:
    """Greedy conjecture over every labeled tournament (tournament space)."""
    rep = VerificationReport(f"greedy-over-labeled n<={n_max} tie_break={tie_break}")
    start = time.perf_counter()
    for n in range(1, n_max + 1):
        for t in enumerate_labeled(n):
            ok = bool(greedy_type2(t, tie_break=tie_break).regular_verdict)
            if not ok:
                rep.fail(t, "greedy", "not regular")
            rep.count(n, ok)
    rep.elapsed = time.perf_counter() - start
    return rep


def greedy_decoupling_report(n_max: int = 5) -> VerificationReport:
    """The greedy verdict of every labeled tournament equals the verdict of
    the canonical realization of its score sequence."""
    rep = VerificationReport(f"greedy-score-decoupling n<={n_max}")
    cache: dict[tuple, bool] = {}
    for n in range(1, n_max + 1):
        for t in enumerate_labeled(n):
            s = core.score_sequence(t)
            if s not in cache:
                cache[s] = bool(greedy_type2(scores.realize(s)).regular_verdict)
            ok = bool(greedy_type2(t).regular_verdict) == cache[s]
            if not ok:
                rep.fail(t, "greedy", "verdict differs from score-sequence verdict")
            rep.count(n, ok)
    return rep


def plus_two_report(orders=(3, 5, 7)) -> VerificationReport:
    """plus_two on every labeled regular tournament of the given orders."""
    rep = VerificationReport(f"plus_two orders={','.join(map(str, orders))}")
    start = time.perf_counter()
    for n in orders:
        for t in regular_labeled(n):
            res = plus_two(t)
            out = res.output
            bad = []
            if out.n != n + 2:
                bad.append("order")
            if not is_regular(out) or any(d != (n + 1) // 2 for d in out.outdegrees()):
                bad.append("regular")
            if not core.is_embedding(t, out, res.embedding):
                bad.append("embedding")
            for b in bad:
                rep.fail(t, "plus_two", b)
            rep.count(n, not bad)
    rep.elapsed = time.perf_counter() - start
    return rep


def regular_labeled(n: int) -> Iterator[Tournament]:
    """Filter :func:`enumerate_labeled` down to the regular tournaments."""
    return (t for t in enumerate_labeled(n) if is_regular(t))


def scores_chain_report(n_max: int = 10) -> VerificationReport:
    """Condition flags, strict slack at the repeat, step invariance of the
    capped-sum condition and Griggs-Reid termination for every score sequence of order <= n_max."""
    rep = VerificationReport(f"score-conditions n<={n_max}")
    start = time.perf_counter()
    for n in range(1, n_max + 1):
        for s in scores.enumerate_scores(n):
            bad = []
            flags = scores.evaluate_conditions(s)
            if not flags.star:
                bad.append("star")
            if not flags.ddagger:
                bad.append("ddagger")
            if not flags.dagger:
                bad.append("dagger")
            if not scores.is_transitive_sequence(s):
                if scores.claim_a_slack(s) <= 0:
                    bad.append("slack not strict at repeat")
                step = scores.griggs_reid_step(s)
                if scores.evaluate_conditions(step.output).ddagger != flags.ddagger:
                    bad.append("step changed ddagger")
            chain = scores.griggs_reid_chain(s)
            if chain[-1] != tuple(range(n)):
                bad.append("griggs-reid endpoint")
            if any(scores.prec(a, b) >= 0 for a, b in zip(chain, chain[1:])):
                bad.append("griggs-reid not increasing")
            if any(not scores.is_landau(x) for x in chain):
                bad.append("griggs-reid left score sequences")
            for b in bad:
                rep.fail(None, "scores", b, payload={"scores": list(s)})
            rep.count(n, not bad)
    rep.elapsed = time.perf_counter() - start
    return rep


def gale_ryser_oracle_report(max_dim: int = 4, max_entry: int = 4) -> VerificationReport:
    """``feasible`` and ``realize01`` against exhaustive search over all
    0-1 matrices, for every (P, Q) with m, n <= max_dim and entries <= max_entry."""
    rep = VerificationReport(f"gale-ryser m,n<={max_dim} entries<={max_entry}")
    start = time.perf_counter()
    for m in range(1, max_dim + 1):
        for n in range(1, max_dim + 1):
            reachable = _all_sum_pairs(m, n)
            for p in itertools.product(range(max_entry + 1), repeat=m):
                for q in itertools.combinations_with_replacement(range(max_entry, -1, -1), n):
                    truth = (p, q) in reachable
                    bad = []
                    if galeryser.feasible(p, q, 1) != truth:
                        bad.append("feasible disagrees with exhaustive search")
                    try:
                        c = galeryser.realize01(p, q)
                        got = galeryser.row_col_sums(c) == (p, q)
                        if not truth or not got:
                            bad.append("realize01 output invalid")
                    except galeryser.InfeasibleError:
                        if truth:
                            bad.append("realize01 refused a feasible pair")
                    for b in bad:
                        rep.fail(None, "galeryser", b, payload={"P": list(p), "Q": list(q)})
                    rep.count(max(m, n), not bad)
    rep.elapsed = time.perf_counter() - start
    return rep


def _all_sum_pairs(m: int, n: int) -> set:
    out = set()
    for bits in range(1 << (m * n)):
        rows = [(bits >> (i * n)) & ((1 << n) - 1) for i in range(m)]
        p = tuple(core.popcount(r) for r in rows)
        q = tuple(sum(r >> j & 1 for r in rows) for j in range(n))
        out.add((p, q))
    return out


def core_properties_report(n_max: int = 5) -> VerificationReport:
    """Degree, parity, regularity-equivalence and inversion properties over
    every labeled tournament of order <= n_max."""
    rep = VerificationReport(f"core-properties n<={n_max}")
    for n in range(0, n_max + 1):
        for t in enumerate_labeled(n):
            bad = []
            trips = [core.degrees(t, v) for v in range(n)]
            if any(d.indeg + d.outdeg != n - 1 for d in trips):
                bad.append("degree sum")
            if any((d.charge % 2) != ((n - 1) % 2) for d in trips):
                bad.append("charge parity")
            half = (n - 1) / 2
            preds = [
                is_regular(t),
                len({d.outdeg for d in trips}) <= 1,
                len({d.indeg for d in trips}) <= 1,
                all(d.indeg == half for d in trips),
                all(d.outdeg == half for d in trips),
                all(d.charge == 0 for d in trips),
            ]
            if len(set(preds)) != 1:
                bad.append("regularity equivalences")
            inv = core.invert(t)
            if core.invert(inv) != t:
                bad.append("inversion involution")
            if core.score_sequence(inv) != tuple(sorted(n - 1 - s for s in core.score_sequence(t))):
                bad.append("inversion scores")
            if not core.validate_tournament_matrix(t.adjacency()) or (inv.adjacency() != t.adjacency().T).any():
                bad.append("matrix identity")
            for b in bad:
                rep.fail(t, "core", b)
            rep.count(n, not bad)
    return rep


def _fault_injection_report() -> VerificationReport:
    t = core.transitive(3)
    res = embed_type1(t)
    rows = list(res.output.rows)
    # flip the arrow between vertex 0 and vertex 1
    rows[1] &= ~1
    rows[0] |= 1 << 1
    bad = ExtensionResult(Tournament.from_rows(rows), res.embedding, res.trace)
    rep = verify_extension(t, bad, "type1")
    rep.scope = "fault-injection"
    return rep


FAMILIES = {
    "core": lambda cfg: core_properties_report(min(cfg["n_max"], 5)),
    "scores": lambda cfg: scores_chain_report(min(cfg["n_max"], 10)),
    "galeryser": lambda cfg: gale_ryser_oracle_report(min(cfg["n_max"], 4), 4),
    "plus_two": lambda cfg: plus_two_report(tuple(x for x in (3, 5, 7) if x <= max(cfg["n_max"], 3))),
    "embeddings": lambda cfg: sweep_embeddings(min(cfg["n_max"], 6), shards=cfg["shards"]),
    "greedy": lambda cfg: verify_greedy_over_scores(cfg["greedy_n_max"], shards=cfg["shards"]),
    "decoupling": lambda cfg: greedy_decoupling_report(min(cfg["n_max"], 5)),
    "oracle": lambda cfg: oracle_report(min(cfg["n_max"], 4)),
}

DEFAULT_CONFIG = {
    "families": list(FAMILIES),
    "n_max": 6,
    "greedy_n_max": 12,
    "shards": 1,
    "fault_injection": False,
}


def run_suite(config: Optional[dict] = None) -> VerificationReport:
    """Run the selected property families and merge their reports.

    ``n_max`` caps every family at the smaller of itself and the family's
    own ceiling.
    """
    cfg = dict(DEFAULT_CONFIG)
    if config:
        unknown = set(config) - set(DEFAULT_CONFIG)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(config)
    bad_fams = set(cfg["families"]) - set(FAMILIES)
    if bad_fams:
        raise ValueError(f"unknown families: {sorted(bad_fams)}")
    start = time.perf_counter()
    parts = []
    for fam in cfg["families"]:
        r = FAMILIES[fam](cfg)
        log.info("%s", r.table())
        parts.append(r)
    if cfg["fault_injection"]:
        parts.append(_fault_injection_report())
    rep = merge_all("suite " + ",".join(cfg["families"]), parts)
    rep.elapsed = time.perf_counter() - start
    return rep
