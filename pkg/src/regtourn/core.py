"""Tournament representation and the basic predicates on it.

A tournament on ``n`` labeled vertices ``0..n-1`` is stored as a tuple of
row bitsets: bit ``j`` of ``rows[i]`` is set iff ``i -> j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

TYPE_I = "type1"
TYPE_II = "type2"


class TournamentError(ValueError):
    """Raised when an edge list or matrix does not describe a tournament."""


class SelfLoopError(TournamentError):
    pass


class DuplicateEdgeError(TournamentError):
    pass


class MissingEdgeError(TournamentError):
    pass


class LabelRangeError(TournamentError):
    pass


class NotRegularError(ValueError):
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Tournament:
    n: int
    rows: tuple[int, ...]
    _cols: tuple[int, ...] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise TournamentError(f"expected {self.n} rows, got {len(self.rows)}")
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            for j in iter_bits(row):
                cols[j] |= 1 << i
        object.__setattr__(self, "_cols", tuple(cols))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Tournament":
        """Build from row bitsets, checking the tournament axioms."""
        rows = tuple(int(r) for r in rows)
        n = len(rows)
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise LabelRangeError(f"row {i} has bits outside 0..{n - 1}")
            if row >> i & 1:
                raise SelfLoopError(f"self-loop at vertex {i}")
        t = cls(n, rows)
        for i in range(n):
            both = rows[i] & t._cols[i]
            if both:
                j = next(iter_bits(both))
                raise DuplicateEdgeError(f"both {i}->{j} and {j}->{i} present")
            missing = full & ~(rows[i] | t._cols[i] | (1 << i))
            if missing:
                j = next(iter_bits(missing))
                raise MissingEdgeError(f"missing edge between {i} and {j}")
        return t

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def out_mask(self, v: int) -> int:
        return self.rows[v]

    def in_mask(self, v: int) -> int:
        return self._cols[v]

    def out_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._cols[v]))

    def outdegrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        """All arrows as ``(i, j)`` pairs, sorted."""
        return [(i, j) for i in range(self.n) for j in iter_bits(self.rows[i])]

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for i, j in self.edges():
            a[i, j] = 1
        return a

    def __len__(self):
        return self.n


class DegreeTriple(NamedTuple):
    indeg: int
    outdeg: int
    charge: int


@dataclass(frozen=True)
class TypeWitness:
    vertex: int
    kind: str
    iso: tuple[int, ...]
    # labels of Ind(v) and Out(v), in increasing order; iso maps positions
    # in ``ind`` to positions in ``out``
    ind: tuple[int, ...] = ()
    out: tuple[int, ...] = ()


def build(n: int, edges: Iterable[Sequence[int]]) -> Tournament:
    """Build a tournament from an explicit list of arrows.

    Every unordered pair of distinct labels in ``0..n-1`` must appear exactly
    once, in one orientation.
    """
    if n < 0:
        raise LabelRangeError(f"negative order {n}")
    rows = [0] * n
    for e in edges:
        i, j = (int(x) for x in e)
        if not (0 <= i < n and 0 <= j < n):
            raise LabelRangeError(f"edge ({i}, {j}) has a label outside 0..{n - 1}")
        if i == j:
            raise SelfLoopError(f"self-loop at vertex {i}")
        if rows[i] >> j & 1:
            raise DuplicateEdgeError(f"edge {i}->{j} listed twice")
        if rows[j] >> i & 1:
            raise DuplicateEdgeError(f"both {i}->{j} and {j}->{i} listed")
        rows[i] |= 1 << j
    for i, j in itertools.combinations(range(n), 2):
        if not (rows[i] >> j & 1 or rows[j] >> i & 1):
            raise MissingEdgeError(f"missing edge between {i} and {j}")
    return Tournament(n, tuple(rows))


def from_matrix(m) -> Tournament:
    a = np.asarray(m)
    if not validate_tournament_matrix(a):
        raise TournamentError("matrix is not a tournament matrix (A + A^T != J - I)")
    rows = tuple(sum(1 << int(j) for j in np.flatnonzero(a[i])) for i in range(a.shape[0]))
    return Tournament(a.shape[0], rows)


def transitive(n: int) -> Tournament:
    """Transitive tournament where ``i -> j`` iff ``i > j``; vertex ``i`` has score ``i``."""
    return Tournament(n, tuple((1 << i) - 1 for i in range(n)))


def cycle3() -> Tournament:
    return build(3, [(0, 1), (1, 2), (2, 0)])


def rotational(n: int, conn: Iterable[int]) -> Tournament:
    """Circulant tournament on Z_n with ``i -> i + c`` for every ``c`` in ``conn``."""
    conn = set(c % n for c in conn)
    rows = []
    for i in range(n):
        rows.append(sum(1 << ((i + c) % n) for c in conn))
    return Tournament.from_rows(rows)


def degrees(t: Tournament, v: int) -> DegreeTriple:
    if not 0 <= v < t.n:
        raise LabelRangeError(f"vertex {v} out of range for order {t.n}")
    out = popcount(t.rows[v])
    ind = popcount(t.in_mask(v))
    return DegreeTriple(ind, out, ind - out)


def charge(t: Tournament, v: int) -> int:
    return degrees(t, v).charge


def score_sequence(t: Tournament) -> tuple[int, ...]:
    return tuple(sorted(t.outdegrees()))


def invert(t: Tournament) -> Tournament:
    return Tournament(t.n, t._cols)


def induced(t: Tournament, subset: Iterable[int]) -> tuple[Tournament, dict[int, int]]:
    """Subtournament on ``subset``; returns it with the old -> new label map.

    New labels follow the increasing order of the old ones.
    """
    verts = sorted(set(subset))
    for v in verts:
        if not 0 <= v < t.n:
            raise LabelRangeError(f"vertex {v} out of range for order {t.n}")
    relabel = {old: new for new, old in enumerate(verts)}
    rows = []
    for old in verts:
        row = 0
        for j in iter_bits(t.rows[old]):
            if j in relabel:
                row |= 1 << relabel[j]
        rows.append(row)
    return Tournament(len(verts), tuple(rows)), relabel


def delete_vertex(t: Tournament, v: int) -> Tournament:
    return induced(t, (u for u in range(t.n) if u != v))[0]


def is_regular(t: Tournament) -> bool:
    if t.n % 2 == 0:
        return t.n == 0
    half = (t.n - 1) // 2
    return all(popcount(r) == half for r in t.rows)


def validate_tournament_matrix(m) -> bool:
    """True iff ``m`` is a 0/1 matrix with ``M + M^T = J - I``."""
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size and not np.isin(a, (0, 1)).all():
        raise ValueError("matrix entries must be 0 or 1")
    n = a.shape[0]
    a = a.astype(np.int64)
    return bool(np.array_equal(a + a.T, np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)))


def is_embedding(small: Tournament, big: Tournament, mapping: Sequence[int]) -> bool:
    """Check that ``mapping`` is an injective, arrow-preserving map ``small -> big``."""
    if len(mapping) != small.n or len(set(mapping)) != small.n:
        return False
    if any(not 0 <= x < big.n for x in mapping):
        return False
    for i in range(small.n):
        for j in range(small.n):
            if i != j and small.has_edge(i, j) != big.has_edge(mapping[i], mapping[j]):
                return False
    return True


def _local_invariant(t: Tournament, v: int, outdeg: list[int]) -> tuple:
    outs = sorted(outdeg[u] for u in iter_bits(t.rows[v]))
    ins = sorted(outdeg[u] for u in iter_bits(t.in_mask(v)))
    return (outdeg[v], tuple(outs), tuple(ins))


def are_isomorphic(t1: Tournament, t2: Tournament) -> Optional[tuple[int, ...]]:
    """Return the lexicographically least isomorphism ``t1 -> t2``, or None.

    Plain backtracking: vertices of ``t1`` are assigned in label order, each
    to the smallest free vertex of ``t2`` whose local invariant matches and
    whose arrows agree with every earlier assignment.
    """
    if t1.n != t2.n:
        return None
    n = t1.n
    d1, d2 = t1.outdegrees(), t2.outdegrees()
    if sorted(d1) != sorted(d2):
        return None
    inv1 = [_local_invariant(t1, v, d1) for v in range(n)]
    inv2 = [_local_invariant(t2, v, d2) for v in range(n)]
    if sorted(inv1) != sorted(inv2):
        return None
    candidates = [[u for u in range(n) if inv2[u] == inv1[v]] for v in range(n)]

    mapping = [-1] * n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        for u in candidates[v]:
            if used >> u & 1:
                continue
            ok = True
            for p in range(v):
                if t1.has_edge(p, v) != t2.has_edge(mapping[p], u):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = u
            used |= 1 << u
            if extend(v + 1):
                return True
            used &= ~(1 << u)
        mapping[v] = -1
        return False

    if extend(0):
        return tuple(mapping)
    return None


def certify_type(t: Tournament, kind: str, vertex: Optional[int] = None) -> Optional[TypeWitness]:
    """Find a vertex certifying Type-I or Type-II regularity.

    Scans vertices in label order (or only ``vertex`` when given) and returns
    the first witness found.
    """
    if kind not in (TYPE_I, TYPE_II):
        raise ValueError(f"unknown kind {kind!r}; expected {TYPE_I!r} or {TYPE_II!r}")
    if not is_regular(t):
        raise NotRegularError("certify_type needs a regular tournament")
    verts = range(t.n) if vertex is None else [vertex]
    for v in verts:
        ind_labels = tuple(iter_bits(t.in_mask(v)))
        out_labels = tuple(iter_bits(t.rows[v]))
        ind_t, _ = induced(t, ind_labels)
        out_t, _ = induced(t, out_labels)
        if kind == TYPE_II:
            out_t = invert(out_t)
        iso = are_isomorphic(ind_t, out_t)
        if iso is not None:
            return TypeWitness(v, kind, iso, ind_labels, out_labels)
    return None
