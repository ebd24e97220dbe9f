"""Small dense linear algebra over a prime field F_p.

Matrices are tuples of row tuples of ints in ``range(p)``; vectors are
tuples.  Everything here is sized for the oracle (dimensions below ~100),
so plain Python beats numpy's per-call overhead.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import combinations, product

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    work = [[x % p for x in row] for row in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = pow(work[r][c], p - 2, p)
        row = [x * inv % p for x in work[r]]
        work[r] = row
        for i in range(len(work)):
            if i != r and work[i][c]:
                k = work[i][c]
                work[i] = [(x - k * y) % p for x, y in zip(work[i], row)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[0])


def nullspace(A: Sequence[Sequence[int]], ncols: int, p: int) -> list[Vector]:
    """Basis of {x : A x = 0} for an m x ncols matrix ``A``."""
    R, pivots = rref(A, p) if A else ((), ())
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for row, pc in zip(R, pivots):
            x[pc] = -row[fc] % p
        basis.append(tuple(x))
    return basis


def matmul(A: Matrix, B: Matrix, p: int) -> Matrix:
    cols = list(zip(*B))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in A)


def apply(A: Matrix, v: Vector, p: int) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in A)


def columns(A: Matrix, ncols: int) -> list[Vector]:
    return [tuple(row[j] for row in A) for j in range(ncols)]


def zeros(m: int, n: int) -> Matrix:
    return tuple((0,) * n for _ in range(m))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def span(vectors: Sequence[Vector], p: int) -> Matrix:
    """Canonical basis (RREF) of the span."""
    return rref(vectors, p)[0]


def span_sum(U: Matrix, W: Matrix, p: int) -> Matrix:
    return span((*U, *W), p)


def reduce(v: Vector, basis: Matrix, pivots: Sequence[int], p: int) -> Vector:
    """Reduce ``v`` modulo the span of an RREF ``basis``."""
    v = list(v)
    for row, c in zip(basis, pivots):
        if v[c]:
            k = v[c]
            v = [(x - k * y) % p for x, y in zip(v, row)]
    return tuple(v)


def in_span(v: Vector, basis: Matrix, pivots: Sequence[int], p: int) -> bool:
    return not any(reduce(v, basis, pivots, p))


def pivots_of(basis: Matrix) -> tuple[int, ...]:
    return tuple(next(c for c, x in enumerate(row) if x) for row in basis)


def intersection(U: Matrix, W: Matrix, n: int, p: int) -> Matrix:
    """Basis of the intersection of two subspaces of F_p^n."""
    if not U or not W:
        return ()
    # solve sum x_i u_i = sum y_j w_j
    gens = [*U, *(tuple(-x % p for x in w) for w in W)]
    A = tuple(zip(*gens))
    sols = nullspace(A, len(gens), p)
    vecs = [tuple(sum(x[i] * U[i][c] for i in range(len(U))) % p for c in range(n)) for x in sols]
    return span(vecs, p)


def subspaces(n: int, k: int, p: int) -> Iterator[Matrix]:
    """All k-dimensional subspaces of F_p^n, each as its RREF basis."""
    for pivots in combinations(range(n), k):
        slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
        for values in product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), x in zip(slots, values):
                rows[r][c] = x
            yield tuple(tuple(row) for row in rows)


def all_subspaces(n: int, p: int) -> Iterator[Matrix]:
    for k in range(n + 1):
        yield from subspaces(n, k, p)


def all_vectors(n: int, p: int) -> Iterator[Vector]:
    return product(range(p), repeat=n)
