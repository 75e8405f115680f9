"""The Wythoff sequences A, B and generalized Beatty sequences p*A + q*Id + r."""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from itertools import islice, takewhile
from math import isqrt
from typing import Iterator


def wythoff_A(n: int) -> int:
    """A(n) = floor(n*phi), n >= 1, without floating point.

    floor(n*phi) = floor((n + sqrt(5 n^2)) / 2) and sqrt(5 n^2) is never an
    integer for n >= 1, so the integer square root gives the exact floor.
    """
    if n < 1:
        raise ValueError(f"Wythoff sequences are indexed from 1, got {n}")
    return (n + isqrt(5 * n * n)) // 2


def wythoff_B(n: int) -> int:
    """B(n) = floor(n*phi^2) = A(n) + n, n >= 1."""
    return wythoff_A(n) + n


class OverlapError(RuntimeError):
    """Two branches of a supposedly disjoint union produced the same value."""


@dataclass(frozen=True)
class GBS:
    """The generalized Beatty sequence n -> p*A(n) + q*n + r for n >= 1."""

    p: int
    q: int
    r: int

    def __call__(self, n: int) -> int:
        return self.p * wythoff_A(n) + self.q * n + self.r

    def compose_A(self) -> "GBS":
        """Parameters of V∘A, i.e. n -> V(A(n))."""
        return GBS(self.p + self.q, self.p, self.r - self.p)

    def compose_B(self) -> "GBS":
        """Parameters of V∘B, i.e. n -> V(B(n))."""
        return GBS(2 * self.p + self.q, self.p + self.q, self.r)

    def is_increasing(self) -> bool:
        # consecutive differences are p+q or 2p+q (A steps by 1 or 2)
        return self.p + self.q > 0 and 2 * self.p + self.q > 0

    def iter_terms(self) -> Iterator[int]:
        n = 1
        while True:
            yield self(n)
            n += 1

    def terms(self, count: int) -> list[int]:
        return [self(n) for n in range(1, count + 1)]

    def __str__(self) -> str:
        parts = [(self.p, "A"), (self.q, "Id")]
        parts = [(c, s) for c, s in parts if c]
        if self.r or not parts:
            parts.append((self.r, ""))
        out = []
        for i, (c, sym) in enumerate(parts):
            sign = "-" if c < 0 else ("+" if i else "")
            mag = abs(c)
            body = sym if sym and mag == 1 else f"{mag}{sym}"
            out.append(sign + body)
        return "".join(out)


@dataclass(frozen=True)
class OccurrenceSet:
    """A finite union of strictly increasing, pairwise disjoint GBS branches.

    Enumeration is a k-way merge of the branch streams.  Disjointness is not
    assumed: a collision between branches raises OverlapError, because the
    constructions that produce these unions guarantee disjoint branches and a
    duplicate means the construction is wrong.
    """

    branches: tuple[GBS, ...]

    def __post_init__(self):
        if not self.branches:
            raise ValueError("occurrence set needs at least one branch")
        for b in self.branches:
            if not b.is_increasing():
                raise ValueError(f"branch {b} is not strictly increasing")

    def __iter__(self) -> Iterator[int]:
        heap = [(b(1), i, 2) for i, b in enumerate(self.branches)]
        heapify(heap)
        last = None
        while heap:
            value, i, nxt = heappop(heap)
            if value == last:
                raise OverlapError(
                    f"branches of {self} are not disjoint: {value} repeats"
                )
            last = value
            yield value
            heappush(heap, (self.branches[i](nxt), i, nxt + 1))

    def terms(self, count: int) -> list[int]:
        """First `count` terms of the merged increasing union."""
        return list(islice(iter(self), count))

    def terms_below(self, bound: int) -> list[int]:
        """All terms of the union that are < bound, in increasing order."""
        return list(takewhile(lambda v: v < bound, iter(self)))

    def __str__(self) -> str:
        return " u ".join(str(b) for b in self.branches)
