"""Score sequences: Landau's condition, the r-sequence conditions, the
Griggs-Reid operation, enumeration and realization.

Sequences are plain tuples of ints. Indices in the public API are 1-based
where they name a position in a sequence (``t`` of a Griggs-Reid step),
mirroring the usual mathematical convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .core import Tournament


class ScoreError(ValueError):
    pass


class TransitiveError(ScoreError):
    """Raised when the Griggs-Reid step is asked to act on (0, 1, ..., n-1)."""


class ConditionFlags(NamedTuple):
    star: bool
    dagger: bool
    ddagger: bool


@dataclass(frozen=True)
class GriggsReidStep:
    t: int
    m: int
    output: tuple[int, ...]

    @property
    def monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.output, self.output[1:]))

    def canonical(self) -> tuple[int, ...]:
        return tuple(sorted(self.output))


def _check_monotone(s: Sequence[int]) -> None:
    if any(a > b for a, b in zip(s, s[1:])):
        raise ScoreError(f"sequence {tuple(s)} is not nondecreasing")


def is_landau(s: Sequence[int]) -> bool:
    _check_monotone(s)
    n = len(s)
    total = 0
    for k, x in enumerate(s, start=1):
        if x < 0:
            return False
        total += x
        if total < comb(k, 2):
            return False
    return total == comb(n, 2)


def r_of(s: Sequence[int]) -> tuple[int, ...]:
    n = len(s)
    return tuple(n - x for x in s)


def _ddagger_slack(r: Sequence[int], k: int) -> int:
    """``sum min(r_i, k) - (nk - C(k, 2))``; nonnegative iff (‡) holds at k."""
    n = len(r)
    return sum(min(x, k) for x in r) - (n * k - comb(k, 2))


def evaluate_conditions(s: Sequence[int]) -> ConditionFlags:
    r = r_of(s)
    n = len(r)
    star = dagger = ddagger = True
    prefix = 0
    for k in range(1, n + 1):
        prefix += r[k - 1]
        bound = n * k - comb(k, 2)
        capped = sum(min(x, k) for x in r)
        star &= prefix <= bound
        dagger &= prefix <= capped
        ddagger &= bound <= capped
    return ConditionFlags(star, dagger, ddagger)


def is_transitive_sequence(s: Sequence[int]) -> bool:
    return tuple(s) == tuple(range(len(s)))


def griggs_reid_step(s: Sequence[int]) -> GriggsReidStep:
    """Apply the Griggs-Reid operation at the smallest repeated position.

    The result is returned positionally; see ``GriggsReidStep.monotone``.
    """
    s = tuple(s)
    if not is_landau(s):
        raise ScoreError(f"{s} is not a score sequence")
    t0 = next((i for i in range(len(s) - 1) if s[i] == s[i + 1]), None)
    if t0 is None:
        raise TransitiveError(f"{s} is transitive; there is no repeated entry")
    m = s.count(s[t0])
    out = list(s)
    out[t0] -= 1
    out[t0 + m - 1] += 1
    return GriggsReidStep(t0 + 1, m, tuple(out))


def claim_a_slack(s: Sequence[int]) -> int:
    """Slack of (‡) at ``k = r_t``, with ``t`` the smallest repeat index."""
    step = griggs_reid_step(s)
    r = r_of(s)
    return _ddagger_slack(r, r[step.t - 1])


def prec(a: Sequence[int], b: Sequence[int]) -> int:
    """Compare from the last differing index: -1 if a < b, 0 if equal, 1 if a > b."""
    if len(a) != len(b):
        raise ScoreError(f"length mismatch: {len(a)} vs {len(b)}")
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


def prec_key(s: Sequence[int]) -> tuple[int, ...]:
    """Sort key realizing the ≺ order."""
    return tuple(reversed(s))


def griggs_reid_chain(s: Sequence[int]) -> list[tuple[int, ...]]:
    """Iterate the Griggs-Reid step until the transitive sequence."""
    chain = [tuple(s)]
    while not is_transitive_sequence(chain[-1]):
        chain.append(griggs_reid_step(chain[-1]).output)
    return chain


def _fill(n: int, tail: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # tail holds s_{k+1..n}; choose s_k next, smallest first
    k = n - len(tail)
    if k == 0:
        if sum(tail) == comb(n, 2):
            yield tail
        return
    cap = tail[0] if tail else n - 1
    rest = comb(n, 2) - sum(tail)
    for x in range(0, cap + 1):
        # after fixing s_k = x, prefix of length k-1 has values <= x and
        # must sum to rest - x while meeting Landau; possible iff
        # C(k-1, 2) <= rest - x <= (k-1) * x, and s_k itself needs
        # rest >= C(k, 2) which the same bounds imply
        left = rest - x
        if left < comb(k - 1, 2) or left > (k - 1) * x:
            continue
        yield from _fill(n, (x,) + tail)


def enumerate_scores(n: int, tail: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Yield every score sequence of length ``n`` in ascending ≺ order.

    Sequences are built from the last entry backwards with exact feasibility
    pruning, so the ≺ order falls out of trying smaller values first. A fixed
    ``tail`` restricts the stream to sequences ending in it (used to shard).
    """
    if n < 1:
        raise ScoreError("order must be at least 1")
    tail = tuple(tail)
    if len(tail) > n:
        return
    if tail:
        _check_monotone(tail)
        if tail[-1] > n - 1:
            return
        k = n - len(tail)
        rest = comb(n, 2) - sum(tail)
        if not (comb(k, 2) <= rest <= k * tail[0]) and k > 0:
            return
        # Landau on the suffix: the top j entries total at most C(n,2) - C(n-j,2)
        acc = 0
        for j, x in enumerate(reversed(tail), start=1):
            acc += x
            if acc > comb(n, 2) - comb(n - j, 2):
                return
    yield from _fill(n, tail)


def score_tails(n: int, depth: int) -> list[tuple[int, ...]]:
    """All tails of length ``depth`` that start at least one score sequence."""
    depth = min(depth, n)
    seen = []
    for s in enumerate_scores(n):
        t = s[n - depth:]
        if not seen or seen[-1] != t:
            seen.append(t)
    return seen


def realize(s: Sequence[int]) -> Tournament:
    """Deterministically build a tournament with score sequence ``s``.

    Vertex ``i`` receives score ``s[i]``. The vertex with the largest
    remaining demand beats the lowest-demand opponents and loses to the
    rest; a backtracking search takes over if the greedy ever stalls.
    """
    s = tuple(s)
    if not is_landau(s):
        raise ScoreError(f"{s} does not satisfy Landau's condition")
    rows = _greedy_realize(s)
    if rows is None:
        rows = _backtrack_realize(s)
    t = Tournament.from_rows(rows)
    if t.outdegrees() != list(s):
        raise AssertionError(f"realization of {s} produced outdegrees {t.outdegrees()}")
    return t


def _greedy_realize(s: tuple[int, ...]):
    n = len(s)
    rows = [0] * n
    need = list(s)
    alive = list(range(n))
    while alive:
        # largest remaining demand, ties to the highest label
        v = max(alive, key=lambda x: (need[x], x))
        others = [u for u in alive if u != v]
        wins = need[v]
        if wins > len(others):
            return None
        # beat the lowest-demand opponents; ties beat the lowest label
        others.sort(key=lambda x: (need[x], x))
        for u in others[:wins]:
            rows[v] |= 1 << u
        for u in others[wins:]:
            rows[u] |= 1 << v
            need[u] -= 1
            if need[u] < 0:
                return None
        alive.remove(v)
    return rows


def _backtrack_realize(s: tuple[int, ...]):
    n = len(s)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows = [0] * n
    out = [0] * n
    left = [n - 1] * n  # undecided pairs per vertex

    def go(p: int) -> bool:
        if p == len(pairs):
            return out == list(s)
        i, j = pairs[p]
        for a, b in ((i, j), (j, i)):
            if out[a] + 1 > s[a]:
                continue
            # b loses this pair; it must still be able to reach its score
            if out[b] + left[b] - 1 < s[b]:
                continue
            rows[a] |= 1 << b
            out[a] += 1
            left[i] -= 1
            left[j] -= 1
            if go(p + 1):
                return True
            rows[a] &= ~(1 << b)
            out[a] -= 1
            left[i] += 1
            left[j] += 1
        return False

    if not go(0):
        raise ScoreError(f"no tournament realizes {s}")
    return rows


def format_scores(s: Sequence[int]) -> str:
    return ",".join(str(x) for x in s)


def parse_scores(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as e:
        raise ScoreError(f"bad score sequence {text!r}") from e
