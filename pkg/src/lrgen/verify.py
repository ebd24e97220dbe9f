"""Batch verification drivers used by ``lrgen verify`` and the test-suite."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from .generic import generic_extension
from .oracle import (
    F2, FieldParam, all_extensions, brute_generic_ext, check_ext_vanishing, hom_dim_matrix,
    identify, realize,
)
from .pickets import (
    H1Object, P0, P1, from_ext_tableau, gamma_hat, h1_objects, hom_dim, hom_dim_picket, hom_leq,
    probe_pickets, s1_objects, tableaux_upto,
)
from .star import star_lr1
from .tableau import ExtTableau


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(describe())

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.checked} checks, {len(self.failures)} failures)"


def ordered_pairs(max_b: int, max_free: int) -> Iterator[tuple[H1Object, H1Object]]:
    objects = list(h1_objects(max_b, max_free))
    for N in objects:
        for M in objects:
            if N.b + M.b <= max_b:
                yield N, M


def table_suite(max_len: int = 5, primes: tuple[int, ...] = (2, 3)) -> SuiteResult:
    """Matrix Hom dimensions between pickets against the closed-form table."""
    res = SuiteResult("table")
    for p in primes:
        fp = FieldParam(p)
        for P in probe_pickets(max_len):
            for Q in probe_pickets(max_len):
                U, W = H1Object((P,)), H1Object((Q,))
                got, want = hom_dim_matrix(U, W, fp), hom_dim_picket(P, Q)
                res.check(got == want, lambda: f"p={p} [{P},{Q}]: matrix {got} != table {want}")
    return res


def roundtrip_suite(max_weight: int = 8, max_free: int = 3, max_b: int = 5,
                    fp: FieldParam = F2) -> SuiteResult:
    res = SuiteResult("roundtrip")
    for tab in tableaux_upto(max_weight):
        for free in range(max_free + 1):
            t = ExtTableau(tab, free)
            M = from_ext_tableau(t)
            res.check(gamma_hat(M) == t, lambda: f"gamma_hat(from_ext_tableau({t})) != itself")
            res.check(from_ext_tableau(gamma_hat(M)) == M, lambda: f"from_ext_tableau(gamma_hat({M})) != itself")
    for M in h1_objects(max_b, max_free):
        got = identify(realize(M, fp))
        res.check(got == M, lambda: f"identify(realize({M})) = {got}")
    return res


def main_suite(max_b: int = 5, max_free: int = 3, fp: FieldParam = F2) -> SuiteResult:
    """Oracle generic extension against the tableau computation on every pair."""
    res = SuiteResult("main")
    for N, M in ordered_pairs(max_b, max_free):
        oracle = brute_generic_ext(N, M, fp, max_b)
        combinatorial = generic_extension(N, M)
        res.check(oracle == combinatorial,
                  lambda: f"N={N} M={M}: oracle {oracle} != combinatorial {combinatorial}")
    return res


def fields_suite(max_b: int = 4, max_free: int = 2, primes: tuple[int, int] = (2, 3)) -> SuiteResult:
    res = SuiteResult("fields")
    f1, f2 = map(FieldParam, primes)
    for N, M in ordered_pairs(max_b, max_free):
        x, y = brute_generic_ext(N, M, f1, max_b), brute_generic_ext(N, M, f2, max_b)
        res.check(x == y, lambda: f"N={N} M={M}: p={f1.p} gives {x}, p={f2.p} gives {y}")
    return res


def random_tableaux(count: int, max_weight: int, seed: int) -> Iterator[tuple]:
    pool = list(tableaux_upto(max_weight))
    rng = random.Random(seed)
    for _ in range(count):
        yield rng.choice(pool), rng.choice(pool), rng.choice(pool)


def assoc_suite(samples: int = 10_000, max_weight: int = 12, seed: int = 0) -> SuiteResult:
    res = SuiteResult("assoc")
    for A, B, C in random_tableaux(samples, max_weight, seed):
        left = star_lr1(C, star_lr1(B, A))   # (A*B)*C
        right = star_lr1(star_lr1(C, B), A)  # A*(B*C)
        res.check(left == right, lambda: f"A={A} B={B} C={C}: {left} != {right}")
    return res


def lemmas_suite(max_b: int = 5, fp: FieldParam = F2) -> SuiteResult:
    """Hom vanishing from P1^0, split extensions by P1^0, and two hom-order facts."""
    res = SuiteResult("lemmas")
    free1 = H1Object((P1(0),))
    for b in range(max_b + 1):
        for M in s1_objects(b):
            table, matrix = hom_dim(free1, M), hom_dim_matrix(free1, M, fp)
            res.check(table == 0 and matrix == 0, lambda: f"[P1^0,{M}]: table {table}, matrix {matrix}")
            res.check(check_ext_vanishing(M, fp, max_b), lambda: f"non-split extension of {M} by P1^0")
    for m in range(1, max_b + 1):
        for k in range(1, m):
            lo, hi = H1Object((P0(m), P1(k))), H1Object((P1(m), P0(k)))
            res.check(hom_leq(lo, hi), lambda: f"{lo} not <=hom {hi}")
        lo, hi = H1Object((P1(m),)), H1Object((P0(m), P1(0)))
        res.check(hom_leq(lo, hi), lambda: f"{lo} not <=hom {hi}")
    return res


def minimality_suite(max_b: int = 4, max_free: int = 1, fp: FieldParam = F2) -> SuiteResult:
    """The tableau answer is hom-below every extension found by the oracle."""
    res = SuiteResult("minimality")
    for N, M in ordered_pairs(max_b, max_free):
        G = generic_extension(N, M)
        for U in all_extensions(N, M, fp, max_b):
            res.check(hom_leq(G, U), lambda: f"N={N} M={M}: {G} not <=hom {U}")
    return res


SUITES = {
    "table": table_suite,
    "roundtrip": roundtrip_suite,
    "main": main_suite,
    "assoc": assoc_suite,
    "lemmas": lemmas_suite,
    "fields": fields_suite,
    "minimality": minimality_suite,
}
