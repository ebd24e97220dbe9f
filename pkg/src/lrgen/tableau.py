"""LR-tableaux whose entries all equal 1, stored as a pair (gamma, beta).

``gamma`` is the inner shape and ``beta`` the outer one; the skew shape
beta/gamma holds at most one box per row.  Rows are 1-based in everything
user-facing (``entry_rows``, ``empty_rows``, CLI output).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import LRGenError, NotContained, NotHorizontalStrip, ParseError
from .partitions import Partition, contains, dual, format_partition, parse_partition


@dataclass(frozen=True)
class LRTableau:
    gamma: Partition
    beta: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", Partition(self.gamma))
        object.__setattr__(self, "beta", Partition(self.beta))
        if not contains(self.beta, self.gamma):
            raise NotContained(
                f"gamma={format_partition(self.gamma)} is not contained in "
                f"beta={format_partition(self.beta)}"
            )
        for i, b in enumerate(self.beta):
            if b > self.gamma.part(i) + 1:
                raise NotHorizontalStrip(
                    f"row {i + 1}: beta_{i + 1}={b} > gamma_{i + 1}+1={self.gamma.part(i) + 1}"
                )

    @property
    def entries(self) -> int:
        """Number of boxes labelled 1."""
        return self.beta.weight - self.gamma.weight

    def __str__(self) -> str:
        return serialize(self)


EMPTY = LRTableau(Partition(), Partition())


@dataclass(frozen=True)
class ExtTableau:
    """A tableau together with a free counter (an element of LR_1 x N)."""

    tab: LRTableau
    free: int = 0

    def __post_init__(self) -> None:
        if self.free < 0:
            raise LRGenError(f"free counter must be >= 0, got {self.free}")

    @property
    def beta(self) -> Partition:
        return self.tab.beta

    @property
    def gamma(self) -> Partition:
        return self.tab.gamma

    def __str__(self) -> str:
        return serialize(self)


def make(gamma, beta) -> LRTableau:
    return LRTableau(Partition(gamma), Partition(beta))


def ext(t: LRTableau | ExtTableau, free: int = 0) -> ExtTableau:
    """Promote a plain tableau to (t, free); extended tableaux pass through."""
    if isinstance(t, ExtTableau):
        return t
    return ExtTableau(t, free)


def entry_rows(t: LRTableau) -> list[int]:
    return [i + 1 for i, b in enumerate(t.beta) if b == t.gamma.part(i) + 1]


def empty_rows(t: LRTableau) -> list[int]:
    return [i + 1 for i, b in enumerate(t.beta) if b == t.gamma.part(i)]


def render(t: LRTableau | ExtTableau, convention: Literal["definition", "paper"] = "definition") -> str:
    """ASCII drawing: ``.`` for inner boxes, ``1`` for entries, one row per line.

    The ``paper`` convention draws the transposed diagram, so its row lengths
    are ``dual(beta)``.
    """
    if isinstance(t, ExtTableau):
        t = t.tab
    if convention == "definition":
        lines = ["." * t.gamma.part(i) + "1" * (b - t.gamma.part(i)) for i, b in enumerate(t.beta)]
    elif convention == "paper":
        lines = []
        for j, length in enumerate(dual(t.beta), start=1):
            lines.append("".join("." if t.gamma.part(i) >= j else "1" for i in range(length)))
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return "\n".join(lines)


def serialize(t: LRTableau | ExtTableau) -> str:
    if isinstance(t, ExtTableau):
        return f"{serialize(t.tab)};free={t.free}"
    return f"beta={format_partition(t.beta)};gamma={format_partition(t.gamma)}"


def parse(text: str) -> LRTableau | ExtTableau:
    """Parse ``beta=<p>;gamma=<p>[;free=<n>]`` (keys in any order)."""
    fields: dict[str, str] = {}
    pos = 0
    for chunk in text.split(";"):
        if chunk.strip():
            key, sep, value = chunk.partition("=")
            key = key.strip()
            if not sep:
                raise ParseError(f"expected key=value, got {chunk.strip()!r}", text, pos)
            if key not in ("beta", "gamma", "free"):
                raise ParseError(f"unknown key {key!r}", text, pos)
            if key in fields:
                raise ParseError(f"duplicate key {key!r}", text, pos)
            fields[key] = value
        pos += len(chunk) + 1
    for key in ("beta", "gamma"):
        if key not in fields:
            raise ParseError(f"missing {key}=", text, len(text))
    beta = parse_partition(fields["beta"])
    gamma = parse_partition(fields["gamma"])
    tab = LRTableau(gamma, beta)
    if "free" not in fields:
        return tab
    free = fields["free"].strip()
    if not free.isdigit():
        raise ParseError(f"free must be a non-negative integer, got {free!r}", text, text.find("free"))
    return ExtTableau(tab, int(free))
