"""Regular extensions of tournaments.

Every construction returns an :class:`ExtensionResult`: the new tournament,
the label map from the input into it, and a trace of the choices made.
Outputs put the input block first, so the embedding is the identity on
``0..n-1`` unless stated otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import galeryser
from .core import (
    NotRegularError,
    Tournament,
    degrees,
    delete_vertex,
    invert,
    is_regular,
    iter_bits,
    popcount,
)

KINDS = ("plus_two", "pad", "inductive", "type1", "type2", "greedy")


@dataclass
class ConstructionTrace:
    kind: str
    witness: Optional[tuple[int, ...]] = None
    balancing_set: Optional[tuple[int, ...]] = None
    partition: Optional[dict] = None
    matrixC: Optional[np.ndarray] = None
    relabel_log: Optional[list[tuple[int, ...]]] = None
    notes: dict = field(default_factory=dict)
    inner: Optional["ConstructionTrace"] = None

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.balancing_set is not None:
            d["balancing_set"] = list(self.balancing_set)
        if self.partition is not None:
            d["partition"] = {k: (list(v) if isinstance(v, (tuple, list)) else v)
                              for k, v in self.partition.items()}
        if self.matrixC is not None:
            d["matrixC"] = self.matrixC.astype(int).tolist()
        if self.relabel_log is not None:
            d["relabel_log"] = [list(x) for x in self.relabel_log]
        if self.notes:
            d["notes"] = dict(self.notes)
        if self.inner is not None:
            d["inner"] = self.inner.to_dict()
        return d


@dataclass
class ExtensionResult:
    output: Tournament
    embedding: tuple[int, ...]
    trace: ConstructionTrace
    regular_verdict: Optional[bool] = None

    def to_dict(self, trace: bool = False) -> dict:
        from .formats import to_dict

        d = {"output": to_dict(self.output), "embedding": list(self.embedding)}
        if self.regular_verdict is not None:
            d["regular"] = self.regular_verdict
        if trace:
            d["trace"] = self.trace.to_dict()
        return d


class _Builder:
    """Mutable row bitsets used while a construction is being assembled."""

    def __init__(self, n: int):
        self.rows = [0] * n

    def arrow(self, i: int, j: int) -> None:
        self.rows[i] |= 1 << j

    def copy_from(self, t: Tournament, relabel) -> None:
        for i in range(t.n):
            for j in iter_bits(t.rows[i]):
                self.arrow(relabel[i], relabel[j])

    def finish(self) -> Tournament:
        return Tournament.from_rows(self.rows)


def _require_regular(r: Tournament) -> None:
    if r.n % 2 == 0:
        raise NotRegularError(f"regular tournaments have odd order; got order {r.n}")
    if not is_regular(r):
        raise NotRegularError("input is not regular")


def plus_two(r: Tournament) -> ExtensionResult:
    """Grow a regular tournament of order 2k+1 to one of order 2k+3.

    Fixed choices: the pivot is vertex 0, X is the next k labels and Y the
    last k; the two new vertices get labels n (a) and n+1 (b).
    """
    _require_regular(r)
    n = r.n
    k = (n - 1) // 2
    v, xs, ys = 0, tuple(range(1, k + 1)), tuple(range(k + 1, n))
    a, b = n, n + 1
    g = _Builder(n + 2)
    g.copy_from(r, range(n))
    for x in xs:
        g.arrow(a, x)
        g.arrow(x, b)
    for y in ys:
        g.arrow(b, y)
        g.arrow(y, a)
    g.arrow(a, v)
    g.arrow(v, b)
    g.arrow(b, a)
    trace = ConstructionTrace("plus_two", witness=(v,), partition={"X": xs, "Y": ys, "a": a, "b": b})
    return ExtensionResult(g.finish(), tuple(range(n)), trace)


def pad_to_order(r: Tournament, m: int) -> ExtensionResult:
    """Embed a regular tournament into a regular one of odd order ``m``."""
    if m % 2 == 0:
        raise ValueError(f"target order must be odd, got {m}")
    if m < r.n:
        raise ValueError(f"target order {m} is smaller than the input order {r.n}")
    _require_regular(r)
    cur = r
    steps = 0
    while cur.n < m:
        cur = plus_two(cur).output
        steps += 1
    trace = ConstructionTrace("pad", notes={"steps": steps, "order": m})
    return ExtensionResult(cur, tuple(range(r.n)), trace)


def _odd_at_least(x: int) -> int:
    return x if x % 2 else x + 1


def embed_regular(t: Tournament) -> ExtensionResult:
    """Embed any tournament in a regular one by induction on the order.

    The pivot is the highest label v. A negative charge at v is handled by
    running on the inversion and inverting back. Otherwise T - v goes into
    a regular R (recursively, then padded), v is balanced against the
    lowest-labeled vertices B of R - T', and a new vertex u mirrors v.

    Output layout: input labels 0..n-1, then the rest of R in label order,
    then u last.
    """
    n = t.n
    if n <= 1 or is_regular(t):
        return ExtensionResult(t, tuple(range(n)), ConstructionTrace("inductive", notes={"noop": True}))
    v = n - 1
    m = degrees(t, v).charge
    if m < 0:
        res = embed_regular(invert(t))
        res.trace.notes["inverted"] = True
        return ExtensionResult(invert(res.output), res.embedding, res.trace)

    inner = embed_regular(delete_vertex(t, v))
    target = max(inner.output.n, _odd_at_least(n - 1 + m))
    padded = pad_to_order(inner.output, target)
    r = padded.output
    # T' sits on labels inner.embedding[i] of r (padding keeps labels)
    image = inner.embedding
    taken = set(image)
    rest = [x for x in range(r.n) if x not in taken]

    # new labels: T' -> 0..n-2, v -> n-1, rest of R -> n.., u -> last
    relabel = {}
    for i, x in enumerate(image):
        relabel[x] = i
    for i, x in enumerate(rest):
        relabel[x] = n + i
    u = n + len(rest)
    s = [relabel[x] for x in rest]
    bset, s0, xy = s[:m], s[m], s[m + 1:]
    half = len(xy) // 2
    if len(xy) != 2 * half:
        raise AssertionError("|S| - m should be odd")
    xs, ys = xy[:half], xy[half:]

    g = _Builder(u + 1)
    g.copy_from(r, relabel)
    ind_v = [w for w in range(n - 1) if t.has_edge(w, v)]
    out_v = [w for w in range(n - 1) if t.has_edge(v, w)]
    for w in ind_v:
        g.arrow(w, v)
        g.arrow(u, w)
    for w in out_v:
        g.arrow(v, w)
        g.arrow(w, u)
    for b in bset:
        g.arrow(v, b)
        g.arrow(b, u)
    g.arrow(v, s0)
    g.arrow(s0, u)
    g.arrow(u, v)
    for x in xs:
        g.arrow(u, x)
        g.arrow(x, v)
    for y in ys:
        g.arrow(v, y)
        g.arrow(y, u)

    out = g.finish()
    trace = ConstructionTrace(
        "inductive",
        witness=(v, u),
        balancing_set=tuple(bset),
        partition={"s0": s0, "X": tuple(xs), "Y": tuple(ys)},
        notes={"charge": m, "padded_order": r.n},
        inner=inner.trace,
    )
    return ExtensionResult(out, tuple(range(n)), trace)


def embed_type1(t: Tournament) -> ExtensionResult:
    """Double the tournament with a mirrored copy and a balancing vertex.

    Layout: v_i = i, u_i = n + i, w = 2n. Ind(w) is the V block and Out(w)
    the U block, which is an isomorphic copy of V.
    """
    n = t.n
    w = 2 * n
    g = _Builder(2 * n + 1)
    for i in range(n):
        for j in iter_bits(t.rows[i]):
            g.arrow(i, j)
            g.arrow(n + i, n + j)
            g.arrow(n + j, i)
            g.arrow(j, n + i)
        g.arrow(i, w)
        g.arrow(w, n + i)
        g.arrow(n + i, i)
    trace = ConstructionTrace("type1", witness=(w,), partition={"V": tuple(range(n)), "U": tuple(range(n, 2 * n))})
    return ExtensionResult(g.finish(), tuple(range(n)), trace)


def _inverted_copy_with_hub(t: Tournament) -> _Builder:
    # V block, U = inversion of V (u_i -> u_j iff v_j -> v_i), w -> V, U -> w
    n = t.n
    w = 2 * n
    g = _Builder(2 * n + 1)
    for i in range(n):
        for j in iter_bits(t.rows[i]):
            g.arrow(i, j)
            g.arrow(n + j, n + i)
        g.arrow(w, i)
        g.arrow(n + i, w)
    return g


def embed_type2(t: Tournament) -> ExtensionResult:
    """Type-II extension with the V-U arrows read off a Gale-Ryser matrix.

    Layout as in :func:`embed_type1`; here Out(w) = V and Ind(w) = U, the
    inversion of V. ``trace.matrixC[i, j] == 1`` means ``v_i -> u_j``.
    """
    n = t.n
    out = t.outdegrees()
    r = [n - s for s in out]
    order = sorted(range(n), key=lambda i: (-r[i], i))
    sums = [r[i] for i in order]
    try:
        c_sorted = galeryser.realize01(sums, sums)
    except galeryser.InfeasibleError as e:
        raise AssertionError(f"Gale-Ryser realization failed for r = {tuple(r)}") from e
    c = np.zeros((n, n), dtype=np.uint8)
    for a, i in enumerate(order):
        for b, j in enumerate(order):
            c[i, j] = c_sorted[a, b]
    rows_c, cols_c = galeryser.row_col_sums(c)
    if list(rows_c) != r or list(cols_c) != r:
        raise AssertionError("un-permuted matrix lost its sums")
    # complement block (J - C)^T gives each u_j exactly s_j arrows into V
    comp = (1 - c.astype(np.int64)).T
    if [int(x) for x in comp.sum(axis=1)] != out:
        raise AssertionError("complement block row sums differ from the scores")

    g = _inverted_copy_with_hub(t)
    for i in range(n):
        for j in range(n):
            if c[i, j]:
                g.arrow(i, n + j)
            else:
                g.arrow(n + j, i)
    trace = ConstructionTrace(
        "type2",
        witness=(2 * n,),
        matrixC=c,
        partition={"V": tuple(range(n)), "U": tuple(range(n, 2 * n))},
    )
    return ExtensionResult(g.finish(), tuple(range(n)), trace)


TIE_BREAKS = ("stable", "reverse", "label")


def greedy_type2(t: Tournament, tie_break: str = "stable") -> ExtensionResult:
    """Greedy Type-II extension.

    V is processed in nondecreasing outdegree order (ties by label). Each
    v_i sends arrows to the r_i = n - out(v_i) vertices of U that currently
    have the smallest indegree; U is then re-sorted by indegree. Indegrees
    count arrows from inside U as well as from V.

    ``tie_break`` orders equal indegrees during the re-sort: ``stable``
    keeps the previous order, ``reverse`` flips it, ``label`` uses the
    u label. The output is always a tournament; ``regular_verdict`` says
    whether it came out regular.
    """
    if tie_break not in TIE_BREAKS:
        raise ValueError(f"unknown tie_break {tie_break!r}; expected one of {TIE_BREAKS}")
    n = t.n
    out = t.outdegrees()
    vs = sorted(range(n), key=lambda i: (out[i], i))
    g = _inverted_copy_with_hub(t)
    # ind_U(u_j) = out_V(v_j)
    ind = {n + j: popcount(t.rows[j]) for j in range(n)}
    us = [n + j for j in vs]
    log = []
    for vi in vs:
        ri = n - out[vi]
        for pos, uj in enumerate(us):
            if pos < ri:
                g.arrow(vi, uj)
                ind[uj] += 1
            else:
                g.arrow(uj, vi)
        prev = {uj: p for p, uj in enumerate(us)}
        if tie_break == "stable":
            us.sort(key=lambda x: (ind[x], prev[x]))
        elif tie_break == "reverse":
            us.sort(key=lambda x: (ind[x], -prev[x]))
        else:
            us.sort(key=lambda x: (ind[x], x))
        log.append(tuple(us))
    res = g.finish()
    for vi in vs:
        if popcount(res.rows[vi]) != n:
            raise AssertionError(f"v-side outdegree of {vi} is not {n}")
    trace = ConstructionTrace(
        "greedy",
        witness=(2 * n,),
        relabel_log=log,
        partition={"V": tuple(range(n)), "U": tuple(range(n, 2 * n)), "order": tuple(vs)},
        notes={"tie_break": tie_break},
    )
    return ExtensionResult(res, tuple(range(n)), trace, regular_verdict=is_regular(res))


CONSTRUCTIONS = {
    "regular": embed_regular,
    "type1": embed_type1,
    "type2": embed_type2,
    "greedy": greedy_type2,
}
