"""Objects of H_1 as multisets of pickets, and their Hom arithmetic.

A picket ``P(eps, m)`` is ``P0^m`` (eps=0, no subspace), ``P1^m`` (eps=1,
the subspace is the socle of a Jordan block of length m) or ``P1^0`` (a
one-dimensional source mapping to zero).  Every object of H_1 is a direct
sum of pickets, so an object is just a sorted tuple of them.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import total_ordering

from .errors import IncomparableInvariants, InvalidPicket, ParseError
from .partitions import Partition, partitions_of
from .tableau import ExtTableau, LRTableau


@total_ordering
@dataclass(frozen=True)
class Picket:
    eps: int
    m: int

    def __post_init__(self) -> None:
        if self.eps not in (0, 1):
            raise InvalidPicket(f"eps must be 0 or 1, got {self.eps}")
        if self.m < 0 or (self.eps == 0 and self.m == 0):
            raise InvalidPicket(f"P{self.eps}^{self.m} is not a picket")

    @property
    def sort_key(self) -> tuple[int, int]:
        # longer blocks first; for equal length the entry-free picket first
        return (-self.m, self.eps)

    def __lt__(self, other: Picket) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"P{self.eps}^{self.m}"


def P0(m: int) -> Picket:
    return Picket(0, m)


def P1(m: int) -> Picket:
    return Picket(1, m)


@dataclass(frozen=True)
class H1Object:
    """Isomorphism class of an object of H_1 (a finite multiset of pickets)."""

    pickets: tuple[Picket, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pickets", tuple(sorted(self.pickets)))

    @classmethod
    def of(cls, *pickets: Picket) -> H1Object:
        return cls(pickets)

    def __add__(self, other: H1Object) -> H1Object:
        """Direct sum."""
        return H1Object(self.pickets + other.pickets)

    def __mul__(self, k: int) -> H1Object:
        return H1Object(self.pickets * k)

    def __iter__(self) -> Iterator[Picket]:
        return iter(self.pickets)

    def __len__(self) -> int:
        return len(self.pickets)

    @property
    def a(self) -> int:
        """Dimension of the semisimple source."""
        return sum(p.eps for p in self.pickets)

    @property
    def b(self) -> int:
        """Dimension of the target operator."""
        return sum(p.m for p in self.pickets)

    @property
    def free(self) -> int:
        """Multiplicity of P1^0."""
        return sum(1 for p in self.pickets if p.m == 0)

    @property
    def in_s1(self) -> bool:
        return self.free == 0

    def s1_part(self) -> H1Object:
        return H1Object(tuple(p for p in self.pickets if p.m > 0))

    def count(self, picket: Picket) -> int:
        return self.pickets.count(picket)

    def contains_summand(self, other: H1Object) -> bool:
        mine, theirs = Counter(self.pickets), Counter(other.pickets)
        return all(mine[p] >= k for p, k in theirs.items())

    def __str__(self) -> str:
        return format_object(self)


ZERO = H1Object()


def free_object(n: int) -> H1Object:
    """(P1^0)^n."""
    return H1Object((P1(0),) * n)


_PICKET_RE = re.compile(r"\s*P([01])\^(\d+)\s*$")


def parse_picket(text: str) -> Picket:
    match = _PICKET_RE.match(text)
    if not match:
        raise ParseError(f"expected P0^m or P1^m, got {text.strip()!r}", text, 0)
    try:
        return Picket(int(match.group(1)), int(match.group(2)))
    except InvalidPicket as exc:
        raise ParseError(str(exc), text, 0) from None


def parse_object(text: str) -> H1Object:
    """Parse ``P0^7+P1^7+P1^0``; ``0`` or an empty string is the zero object."""
    if text.strip() in ("", "0"):
        return ZERO
    pickets = []
    pos = 0
    for chunk in text.split("+"):
        try:
            pickets.append(parse_picket(chunk))
        except ParseError as exc:
            raise ParseError(str(exc).split(" (at")[0], text, pos) from None
        pos += len(chunk) + 1
    return H1Object(tuple(pickets))


def format_object(M: H1Object) -> str:
    return "+".join(map(str, M.pickets)) if M.pickets else "0"


# -- tableau correspondence ---------------------------------------------------

def gamma(M: H1Object) -> LRTableau:
    """The LR-tableau of the P1^0-free part of ``M``."""
    beta = Partition(sorted((p.m for p in M if p.m > 0), reverse=True))
    inner = Partition(sorted((p.m - p.eps for p in M if p.m > 0), reverse=True))
    return LRTableau(inner, beta)


def gamma_hat(M: H1Object) -> ExtTableau:
    return ExtTableau(gamma(M), M.free)


def from_ext_tableau(t: ExtTableau | LRTableau) -> H1Object:
    """Inverse of ``gamma_hat``: row i is P0^{beta_i} or, if it holds an entry, P1^{beta_i}."""
    if isinstance(t, LRTableau):
        t = ExtTableau(t, 0)
    pickets = [Picket(int(b != t.gamma.part(i)), b) for i, b in enumerate(t.beta)]
    pickets += [P1(0)] * t.free
    return H1Object(tuple(pickets))


# -- Hom dimensions ----------------------------------------------------------

def hom_dim_picket(P: Picket, Q: Picket) -> int:
    """dim Hom(P, Q) between pickets."""
    if P.m == 0:
        return 1 if Q.m == 0 else 0
    if Q.m == 0:
        return P.eps
    if P.eps == 1 and Q.eps == 0:
        return min(P.m - 1, Q.m)
    return min(P.m, Q.m)


def hom_dim(M: H1Object, N: H1Object) -> int:
    return sum(hom_dim_picket(P, Q) for P in M for Q in N)


def end_dim(M: H1Object) -> int:
    return hom_dim(M, M)


def probe_pickets(bound: int) -> list[Picket]:
    """P1^0 and P0^l, P1^l for 1 <= l <= bound."""
    return [P1(0)] + [Picket(e, l) for l in range(1, bound + 1) for e in (0, 1)]


def hom_leq(M: H1Object, N: H1Object) -> bool:
    """Hom-order tested against pickets on both sides.

    Table entries are constant in the test picket's length once it exceeds
    every block length of M and N, so lengths up to max+1 suffice.
    """
    if (M.a, M.b) != (N.a, N.b):
        raise IncomparableInvariants(
            f"hom-order compares objects with equal (a, b); got {(M.a, M.b)} and {(N.a, N.b)}"
        )
    bound = max((p.m for p in (*M, *N)), default=0) + 1
    for P in probe_pickets(bound):
        U = H1Object((P,))
        if hom_dim(U, M) > hom_dim(U, N) or hom_dim(M, U) > hom_dim(N, U):
            return False
    return True


# -- enumeration --------------------------------------------------------------

def s1_objects(b: int) -> Iterator[H1Object]:
    """All P1^0-free objects with target dimension ``b``."""
    for beta in partitions_of(b):
        yield from _choose_eps(Counter(beta))


def _choose_eps(lengths: Counter) -> Iterator[H1Object]:
    items = sorted(lengths.items(), reverse=True)

    def rec(i: int) -> Iterator[tuple[Picket, ...]]:
        if i == len(items):
            yield ()
            return
        m, k = items[i]
        for ones in range(k + 1):
            head = (P0(m),) * (k - ones) + (P1(m),) * ones
            for tail in rec(i + 1):
                yield head + tail

    for pickets in rec(0):
        yield H1Object(pickets)


def h1_objects(max_b: int, max_free: int) -> Iterator[H1Object]:
    """Objects with b <= max_b and at most ``max_free`` copies of P1^0."""
    for b in range(max_b + 1):
        for S in s1_objects(b):
            for k in range(max_free + 1):
                yield S + free_object(k)


def objects_with(a: int, b: int) -> Iterator[H1Object]:
    """All objects of H_a^b."""
    for S in s1_objects(b):
        if S.a <= a:
            yield S + free_object(a - S.a)


def tableaux_upto(max_weight: int) -> Iterable[LRTableau]:
    """Every tableau with weight(beta) <= max_weight."""
    for b in range(max_weight + 1):
        for S in s1_objects(b):
            yield gamma(S)

