"""The binary operations ``*`` on LR_1 and on LR_1 x N.

Argument order follows the convention ``star_lr1(X, Y) == Y * X``: the
first argument is the tableau of the sub-object, the second that of the
quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import Partition, pointwise_sum
from .tableau import ExtTableau, LRTableau, empty_rows, ext


@dataclass
class StarTrace:
    """Loop state of ``star_lr1``: ``counters[i]`` is n_i, with n_0 = 0."""

    counters: list[int] = field(default_factory=lambda: [0])
    overlap: int = 0

    def counter(self, i: int) -> int:
        return self.counters[i]


def star_lr1(X: LRTableau, Y: LRTableau, trace: StarTrace | None = None) -> LRTableau:
    """Return ``Y * X``."""
    bx, gx = X.beta, X.gamma
    by, gy = Y.beta, Y.gamma
    if trace is None:
        trace = StarTrace()
    lx, ly = len(bx), len(by)
    overlap = min(lx, ly)
    trace.overlap = overlap
    beta = []
    n = 0
    for i in range(overlap):
        beta.append(bx[i] + gy.part(i))
        if by[i] != gy.part(i):
            n += 1
        trace.counters.append(n)
    if lx > overlap:
        for i in range(overlap, lx):
            beta.append(bx[i])
            trace.counters.append(n)
    else:
        for i in range(overlap, ly):
            # the guard uses the running counter n_{i-1}
            if gy.part(i) == by[i] and n > 0:
                beta.append(by[i] + 1)
                n -= 1
            else:
                beta.append(by[i])
            trace.counters.append(n)
    beta.extend([1] * n)
    return LRTableau(pointwise_sum(gx, gy), Partition(beta))


def fill(X: LRTableau, n: int) -> tuple[LRTableau, int]:
    """Compute ``(emptyset, n) * (X, 0)``.

    Puts an entry into up to ``n`` entry-free rows of ``X``, scanning from
    the last row upward; returns the new tableau and the unused budget.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    free_rows = set(empty_rows(X))
    gamma = [X.gamma.part(i) for i in range(len(X.beta))]
    for row in range(len(X.beta), 0, -1):
        if row in free_rows and n > 0:
            gamma[row - 1] -= 1
            n -= 1
    return LRTableau(Partition(gamma), X.beta), n


def star_ext(Xm: ExtTableau | LRTableau, Yn: ExtTableau | LRTableau,
             trace: StarTrace | None = None) -> ExtTableau:
    """Return ``(Y, n) * (X, m)``."""
    Xm, Yn = ext(Xm), ext(Yn)
    T, s = fill(Xm.tab, Yn.free)
    return ExtTableau(star_lr1(T, Yn.tab, trace), s + Xm.free)
