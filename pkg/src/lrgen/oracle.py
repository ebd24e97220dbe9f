"""Brute-force linear-algebra oracle for extensions in H_1 over F_p.

Objects are realized as explicit matrices (a Jordan matrix ``J`` and the map
``f``), isomorphism classes are recovered from rank data alone, and the
extensions of ``N`` by ``M`` are found by exhaustive search.  Nothing here
uses the tableau operations; only the final translation of rank invariants
into picket form goes through the tableau/picket bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf
from .errors import InvalidField, NonUniqueMinimum, NotNilpotent, SearchSpaceTooLarge
from .gf import Matrix, Vector
from .partitions import Partition, dual
from .pickets import H1Object, free_object, from_ext_tableau, objects_with
from .tableau import ExtTableau, LRTableau

MAX_HOM_DIM = 20
MAX_B = 6


@dataclass(frozen=True)
class FieldParam:
    p: int = 2

    def __post_init__(self) -> None:
        if not gf.is_prime(self.p) or self.p > 7:
            raise InvalidField(f"p must be a prime <= 7, got {self.p}")


F2 = FieldParam(2)


@dataclass(frozen=True)
class MatObject:
    """Concrete object (F_p^a, F_p^b, f) with a nilpotent operator J on F_p^b.

    ``f`` is a b x a matrix; J f = 0 because the source carries the zero
    operator.
    """

    p: int
    a: int
    J: Matrix
    f: Matrix

    def __post_init__(self) -> None:
        b = len(self.J)
        if any(len(row) != b for row in self.J):
            raise ValueError("J must be square")
        if len(self.f) != b or any(len(row) != self.a for row in self.f):
            raise ValueError(f"f must be {b} x {self.a}")
        if b and self.a and any(any(row) for row in gf.matmul(self.J, self.f, self.p)):
            raise ValueError("J f != 0: f is not a module homomorphism")

    @property
    def b(self) -> int:
        return len(self.J)

    @property
    def beta(self) -> Partition:
        return jordan_type(self.J, self.p)

    def image(self) -> Matrix:
        """RREF basis of the column space of f."""
        return gf.span(gf.columns(self.f, self.a), self.p) if self.b else ()


def realize(M: H1Object, fp: FieldParam = F2) -> MatObject:
    """Block-diagonal realization; each block's basis runs from its top down to its socle."""
    b = M.b
    J = [[0] * b for _ in range(b)]
    cols: list[list[int]] = []
    start = 0
    for P in M:
        for i in range(start, start + P.m - 1):
            J[i + 1][i] = 1
        if P.eps:
            col = [0] * b
            if P.m:
                col[start + P.m - 1] = 1
            cols.append(col)
        start += P.m
    f = tuple(tuple(col[r] for col in cols) for r in range(b))
    return MatObject(fp.p, len(cols), tuple(map(tuple, J)), f)


def induced_type(J: Matrix, V: Matrix, W: Matrix, p: int) -> Partition:
    """Jordan type of J acting on span(V)/span(W).

    Both subspaces must be J-invariant with W inside V.  Uses
    #{blocks of size >= i} = dim J^{i-1}(V/W) - dim J^i(V/W).
    """
    base = len(W)
    dims = [len(V) - base]
    current = V
    for _ in range(len(J) + 1):
        if dims[-1] == 0:
            break
        current = gf.span([gf.apply(J, v, p) for v in current], p)
        dims.append(len(gf.span_sum(current, W, p)) - base)
    else:
        raise NotNilpotent("operator is not nilpotent")
    at_least = [dims[i] - dims[i + 1] for i in range(len(dims) - 1)]
    return dual(Partition(at_least))


def jordan_type(A: Matrix, p: int) -> Partition:
    n = len(A)
    return induced_type(A, gf.identity(n), (), p)


def _from_invariants(beta: Partition, gamma: Partition, free: int) -> H1Object:
    return from_ext_tableau(ExtTableau(LRTableau(gamma, beta), free))


def identify(X: MatObject) -> H1Object:
    """Isomorphism class from (dim ker f, type of J, type of J modulo im f)."""
    image = X.image()
    V = gf.identity(X.b)
    beta = induced_type(X.J, V, (), X.p)
    gamma = induced_type(X.J, V, image, X.p)
    return _from_invariants(beta, gamma, X.a - len(image))


# -- morphisms ---------------------------------------------------------------

def hom_space(X: MatObject, Y: MatObject) -> list[tuple[Matrix, Matrix]]:
    """Basis of Hom(X, Y) as pairs (phi1: a_X -> a_Y, phi2: b_X -> b_Y).

    Solves phi2 J_X = J_Y phi2 and phi2 f_X = f_Y phi1.
    """
    if X.p != Y.p:
        raise ValueError("objects over different fields")
    p = X.p
    n1 = Y.a * X.a
    n2 = Y.b * X.b

    def v1(i: int, j: int) -> int:
        return i * X.a + j

    def v2(i: int, j: int) -> int:
        return n1 + i * X.b + j

    equations = []
    for i in range(Y.b):
        for j in range(X.b):
            row = [0] * (n1 + n2)
            for k in range(X.b):
                row[v2(i, k)] += X.J[k][j]
            for k in range(Y.b):
                row[v2(k, j)] -= Y.J[i][k]
            equations.append(row)
        for j in range(X.a):
            row = [0] * (n1 + n2)
            for k in range(X.b):
                row[v2(i, k)] += X.f[k][j]
            for k in range(Y.a):
                row[v1(k, j)] -= Y.f[i][k]
            equations.append(row)
    basis = []
    for x in gf.nullspace(equations, n1 + n2, p):
        phi1 = tuple(tuple(x[v1(i, j)] for j in range(X.a)) for i in range(Y.a))
        phi2 = tuple(tuple(x[v2(i, j)] for j in range(X.b)) for i in range(Y.b))
        basis.append((phi1, phi2))
    return basis


def hom_dim_matrix(M: H1Object, N: H1Object, fp: FieldParam = F2) -> int:
    return len(hom_space(realize(M, fp), realize(N, fp)))


@lru_cache(maxsize=None)
def end_dim_matrix(U: H1Object, fp: FieldParam = F2) -> int:
    X = realize(U, fp)
    return len(hom_space(X, X))


def _quotient_coords(basis: Matrix, n: int, p: int):
    """Coordinates on F_p^n / span(basis) w.r.t. the non-pivot unit vectors."""
    pivots = gf.pivots_of(basis)
    keep = [c for c in range(n) if c not in pivots]

    def coords(v: Vector) -> Vector:
        r = gf.reduce(v, basis, pivots, p)
        return tuple(r[c] for c in keep)

    return keep, coords


def cokernel(X: MatObject, Y: MatObject, phi: tuple[Matrix, Matrix]) -> MatObject:
    """The quotient object Y / phi(X), written in a complement basis."""
    p = Y.p
    phi1, phi2 = phi
    A = gf.span(gf.columns(phi1, X.a), p) if Y.a else ()
    B = gf.span(gf.columns(phi2, X.b), p) if Y.b else ()
    src_keep, _ = _quotient_coords(A, Y.a, p)
    tgt_keep, tgt = _quotient_coords(B, Y.b, p)

    def unit(n: int, c: int) -> Vector:
        return tuple(int(i == c) for i in range(n))

    J_cols = [tgt(gf.apply(Y.J, unit(Y.b, c), p)) for c in tgt_keep]
    f_cols = [tgt(gf.apply(Y.f, unit(Y.a, c), p)) for c in src_keep]
    k = len(tgt_keep)
    J = tuple(tuple(col[r] for col in J_cols) for r in range(k))
    f = tuple(tuple(col[r] for col in f_cols) for r in range(k))
    return MatObject(p, len(src_keep), J, f)


def _combinations(basis: list[tuple[Matrix, Matrix]], p: int, chunk: int = 4096):
    """Every F_p-linear combination of the basis morphisms."""
    shapes = [(len(m), len(m[0]) if m else 0) for m in basis[0]]
    flat = np.array([[x for m in pair for row in m for x in row] for pair in basis], dtype=np.int64)
    d = len(basis)
    for start in range(0, p**d, chunk):
        idx = np.arange(start, min(start + chunk, p**d))
        digits = (idx[:, None] // p ** np.arange(d)[None, :]) % p
        for vec in ((digits @ flat) % p).tolist():
            out, pos = [], 0
            for rows, cols in shapes:
                out.append(tuple(tuple(vec[pos + i * cols: pos + (i + 1) * cols]) for i in range(rows)))
                pos += rows * cols
            yield tuple(out)


def _is_injective(phi: tuple[Matrix, Matrix], X: MatObject, p: int) -> bool:
    phi1, phi2 = phi
    ok1 = X.a == 0 or gf.rank(phi1, p) == X.a
    ok2 = X.b == 0 or gf.rank(phi2, p) == X.b
    return ok1 and ok2


def is_extension_by_morphisms(U: H1Object, N: H1Object, M: H1Object, fp: FieldParam = F2,
                              max_hom_dim: int = MAX_HOM_DIM) -> bool:
    """Search all of Hom(M, U) for an injection whose cokernel is N."""
    X, Y = realize(M, fp), realize(U, fp)
    basis = hom_space(X, Y)
    if len(basis) > max_hom_dim:
        raise SearchSpaceTooLarge(
            f"Hom({M}, {U}) has dimension {len(basis)} > {max_hom_dim}"
        )
    if not basis:
        zero = (gf.zeros(Y.a, X.a), gf.zeros(Y.b, X.b))
        candidates = [zero]
    else:
        candidates = _combinations(basis, fp.p)
    for phi in candidates:
        if _is_injective(phi, X, fp.p) and identify(cokernel(X, Y, phi)) == N:
            return True
    return False


# -- sub-objects ---------------------------------------------------------------

@lru_cache(maxsize=None)
def extension_pairs(U: H1Object, fp: FieldParam = F2) -> frozenset[tuple[H1Object, H1Object]]:
    """All (sub, quotient) isomorphism-class pairs over the sub-objects of U.

    A sub-object is (A, B) with B a J-invariant subspace of the target and
    f(A) inside B.  Its class depends only on B, C = f(A) and
    k = dim(A & ker f), so those triples are enumerated instead of A.
    """
    X = realize(U, fp)
    p, b = fp.p, X.b
    image = X.image()
    kernel = X.a - len(image)
    V = gf.identity(b)
    pairs = set()
    for B in gf.all_subspaces(b, p):
        pivots = gf.pivots_of(B)
        if not all(gf.in_span(gf.apply(X.J, v, p), B, pivots, p) for v in B):
            continue
        beta_sub = induced_type(X.J, B, (), p)
        beta_quot = induced_type(X.J, V, B, p)
        gamma_quot = induced_type(X.J, V, gf.span_sum(B, image, p), p)
        D = gf.intersection(B, image, b, p)
        for C in _subspaces_of(D, b, p):
            gamma_sub = induced_type(X.J, B, C, p)
            for k in range(kernel + 1):
                sub = _from_invariants(beta_sub, gamma_sub, k)
                quot = _from_invariants(beta_quot, gamma_quot, kernel + len(D) - len(C) - k)
                pairs.add((sub, quot))
    return frozenset(pairs)


def _subspaces_of(D: Matrix, n: int, p: int):
    for coeffs in gf.all_subspaces(len(D), p):
        yield gf.span([tuple(sum(c * d[j] for c, d in zip(row, D)) % p for j in range(n))
                       for row in coeffs], p)


# -- extensions ----------------------------------------------------------------

def all_extensions(N: H1Object, M: H1Object, fp: FieldParam = F2, max_b: int = MAX_B,
                   method: str = "subobjects", max_hom_dim: int = MAX_HOM_DIM) -> set[H1Object]:
    """Isomorphism classes U in H_1 admitting 0 -> M -> U -> N -> 0."""
    b = M.b + N.b
    if b > max_b:
        raise SearchSpaceTooLarge(f"b = {b} exceeds the bound {max_b}")
    found = set()
    for U in objects_with(M.a + N.a, b):
        if method == "subobjects":
            ok = (M, N) in extension_pairs(U, fp)
        elif method == "morphisms":
            ok = is_extension_by_morphisms(U, N, M, fp, max_hom_dim)
        else:
            raise ValueError(f"unknown method {method!r}")
        if ok:
            found.add(U)
    return found


def brute_generic_ext(N: H1Object, M: H1Object, fp: FieldParam = F2, max_b: int = MAX_B,
                      method: str = "subobjects") -> H1Object:
    """The extension of N by M with the smallest endomorphism dimension."""
    exts = all_extensions(N, M, fp, max_b, method)
    dims = {U: end_dim_matrix(U, fp) for U in exts}
    best = min(dims.values())
    winners = sorted((U for U, d in dims.items() if d == best), key=lambda U: U.pickets)
    if len(winners) > 1:
        raise NonUniqueMinimum(
            f"extensions of {N} by {M} with end_dim {best}: {', '.join(map(str, winners))}"
        )
    return winners[0]


def check_ext_vanishing(M: H1Object, fp: FieldParam = F2, max_b: int = MAX_B) -> bool:
    """True iff every extension 0 -> P1^0 -> U -> M -> 0 splits."""
    P = free_object(1)
    return all_extensions(M, P, fp, max_b) == {M + P}


def dump_matrices(X: MatObject) -> str:
    def block(name: str, A: Matrix, ncols: int) -> list[str]:
        rows = [" ".join(map(str, row)) for row in A] if ncols else []
        return [f"{name} ({len(A)}x{ncols})", *rows]

    return "\n".join([f"p={X.p} a={X.a} b={X.b}", *block("J", X.J, X.b), *block("f", X.f, X.a)])
