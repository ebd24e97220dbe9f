"""Generic extensions in H_1 computed through the tableau operations.

``generic_extension(N, M)`` is the generic extension of ``N`` by ``M``: the
middle term of ``0 -> M -> U -> N -> 0`` with the smallest endomorphism
ring.  ``M`` plays the role of the first argument of ``star_ext``.
"""

from __future__ import annotations

from .errors import NotInS1
from .pickets import H1Object, from_ext_tableau, gamma, gamma_hat
from .star import fill, star_ext, star_lr1
from .tableau import ExtTableau


def generic_extension(N: H1Object, M: H1Object) -> H1Object:
    return from_ext_tableau(star_ext(gamma_hat(M), gamma_hat(N)))


def _require_s1(*objects: H1Object) -> None:
    for X in objects:
        if not X.in_s1:
            raise NotInS1(f"{X} has a P1^0 summand")


def generic_extension_s1(N: H1Object, M: H1Object) -> H1Object:
    """Same as ``generic_extension`` on P1^0-free objects, via ``star_lr1`` only."""
    _require_s1(N, M)
    return from_ext_tableau(star_lr1(gamma(M), gamma(N)))


def generic_extension_by_free(M: H1Object, n: int) -> H1Object:
    """Generic extension of (P1^0)^n by a P1^0-free ``M``."""
    _require_s1(M)
    tab, leftover = fill(gamma(M), n)
    return from_ext_tableau(ExtTableau(tab, leftover))
