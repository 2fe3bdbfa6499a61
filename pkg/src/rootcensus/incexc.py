"""Exact set-system statistics: intersection sums t_k, exact-membership
counts b_k, and the conversion between them.

For a collection of n subsets of a finite universe, t_k is the sum of
|A_{i1} cap ... cap A_{ik}| over all k-subsets of the collection, and b_k is
the number of universe elements lying in exactly k of the sets.  The
conversion from t to b is computed both by the top-down recursion

    b_{n-k} = t_{n-k} - sum_{i=1}^{k} C(n-k+i, i) * b_{n-k+i}

and by the alternating closed form

    b_{n-k} = sum_{i=0}^{k} (-1)^i C(n-k+i, i) * t_{n-k+i}

with t_0 taken to be the universe size; the two must agree, and a negative
intermediate value means the t vector never came from an actual set system.

This module is the oracle side of the census: the first two moments of the
outcome distribution equal t_1 and t_1 + 2*t_2, which is how the engines'
frequency vectors get tied back to countable intersections.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb


@dataclass(frozen=True)
class SetSystem:
    universe_size: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.universe_size < 0:
            raise ValueError("universe size must be nonnegative")
        for s in self.sets:
            if list(s) != sorted(set(s)):
                raise ValueError(f"set {s} is not sorted and duplicate-free")
            if s and (s[0] < 0 or s[-1] >= self.universe_size):
                raise ValueError(f"set {s} escapes the universe")

    @property
    def n(self) -> int:
        return len(self.sets)

    @staticmethod
    def make(universe_size: int, sets) -> "SetSystem":
        return SetSystem(universe_size, tuple(tuple(sorted(set(s))) for s in sets))

    @staticmethod
    def random(rng, n: int, universe_size: int) -> "SetSystem":
        sets = []
        for _ in range(n):
            members = [e for e in range(universe_size) if rng.random() < 0.5]
            sets.append(tuple(members))
        return SetSystem(universe_size, tuple(sets))


@dataclass(frozen=True)
class BTVectors:
    """t_1..t_n and b_0..b_n for one set system."""

    n: int
    universe_size: int
    t: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.t) != self.n or len(self.b) != self.n + 1:
            raise ValueError("vector length mismatch")
        if any(v < 0 for v in self.t) or any(v < 0 for v in self.b):
            raise ValueError("negative count")
        if sum(self.b) != self.universe_size:
            raise ValueError("b does not partition the universe")

    @staticmethod
    def of(sys: SetSystem) -> "BTVectors":
        return BTVectors(sys.n, sys.universe_size, t_vector(sys), b_direct(sys))


def t_vector(sys: SetSystem) -> tuple[int, ...]:
    """t_k = sum over all k-subsets of the collection of the intersection
    cardinality, for k = 1..n.  Direct enumeration; n stays small here."""
    if sys.n < 1:
        raise ValueError("need at least one set")
    as_sets = [frozenset(s) for s in sys.sets]
    out = []
    for k in range(1, sys.n + 1):
        total = 0
        for combo in combinations(as_sets, k):
            inter = combo[0]
            for s in combo[1:]:
                inter = inter & s
                if not inter:
                    break
            total += len(inter)
        out.append(total)
    return tuple(out)


def b_direct(sys: SetSystem) -> tuple[int, ...]:
    """b_k = number of universe elements in exactly k sets (membership
    histogram; the oracle the algebraic conversion is checked against)."""
    count = [0] * sys.universe_size
    for s in sys.sets:
        for e in s:
            count[e] += 1
    hist = [0] * (sys.n + 1)
    for c in count:
        hist[c] += 1
    return tuple(hist)


def _b_recursive(t: tuple[int, ...], n: int, universe_size: int) -> list[int]:
    full = (universe_size,) + tuple(t)  # t_0 := |U|
    b = [0] * (n + 1)
    for k in range(n + 1):  # computes b_n first, then down to b_0
        j = n - k
        acc = full[j]
        for i in range(1, k + 1):
            acc -= comb(j + i, i) * b[j + i]
        b[j] = acc
    return b


def _b_closed(t: tuple[int, ...], n: int, universe_size: int) -> list[int]:
    full = (universe_size,) + tuple(t)
    b = [0] * (n + 1)
    for k in range(n + 1):
        j = n - k
        b[j] = sum((-1) ** i * comb(j + i, i) * full[j + i] for i in range(k + 1))
    return b


def b_from_t(t, n: int, universe_size: int) -> tuple[int, ...]:
    """Convert intersection sums to exact-membership counts (b_0..b_n).

    Runs both the recursive and the closed alternating form and insists they
    match; raises if any b_k comes out negative, which certifies that the t
    vector is not realizable by a set system on this universe.
    """
    t = tuple(t)
    if len(t) != n:
        raise ValueError(f"expected {n} intersection sums, got {len(t)}")
    rec = _b_recursive(t, n, universe_size)
    closed = _b_closed(t, n, universe_size)
    assert rec == closed, "recursive and closed-form conversions disagree"
    if any(v < 0 for v in rec):
        raise ValueError(f"inconsistent t vector: negative exact count in {rec}")
    return tuple(rec)


@dataclass(frozen=True)
class MomentReport:
    first_lhs: int
    first_rhs: int
    second_lhs: int
    second_rhs: int

    @property
    def first_ok(self) -> bool:
        return self.first_lhs == self.first_rhs

    @property
    def second_ok(self) -> bool:
        return self.second_lhs == self.second_rhs

    @property
    def passed(self) -> bool:
        return self.first_ok and self.second_ok


def moment_check(b, t) -> MomentReport:
    """First and second moment identities: sum i*b_i = t_1 and
    sum i^2*b_i = t_1 + 2*t_2 (t_2 taken as 0 for a single set)."""
    b = tuple(b)
    t = tuple(t)
    if len(b) != len(t) + 1:
        raise ValueError("expected b_0..b_n alongside t_1..t_n")
    first = sum(i * v for i, v in enumerate(b))
    second = sum(i * i * v for i, v in enumerate(b))
    t1 = t[0] if t else 0
    t2 = t[1] if len(t) > 1 else 0
    return MomentReport(first, t1, second, t1 + 2 * t2)


def parse_system_file(text: str) -> SetSystem:
    """CLI format: first line "universe_size n", then exactly n lines of
    sorted indices (a blank line is an empty set)."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty set-system file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be: <universe_size> <n_sets>")
    universe_size, n = int(head[0]), int(head[1])
    body = lines[1 : n + 1]
    if len(body) != n:
        raise ValueError(f"expected {n} set lines, found {len(body)}")
    sets = tuple(tuple(int(tok) for tok in line.split()) for line in body)
    return SetSystem(universe_size, sets)


def format_system_file(sys: SetSystem) -> str:
    lines = [f"{sys.universe_size} {sys.n}"]
    lines.extend(" ".join(str(e) for e in s) for s in sys.sets)
    return "\n".join(lines) + "\n"
