from itertools import product

import pytest
from hypothesis import given

from lrgen.errors import IncomparableInvariants, InvalidPicket, ParseError
from lrgen.pickets import (
    ZERO, H1Object, P0, P1, Picket, end_dim, format_object, free_object, from_ext_tableau, gamma,
    gamma_hat, hom_dim, hom_dim_picket, hom_leq, objects_with, parse_object, s1_objects,
)
from lrgen.partitions import contains
from lrgen.tableau import EMPTY, ExtTableau, make

from conftest import ext_tableaux, h1_objects

BIG = H1Object.of(P0(7), P1(7), P1(5), P1(2), P1(2), P0(1), P1(0), P1(0))


def test_picket_validation():
    with pytest.raises(InvalidPicket):
        Picket(0, 0)
    with pytest.raises(InvalidPicket):
        Picket(2, 1)
    with pytest.raises(InvalidPicket):
        Picket(1, -1)


def test_gamma_hat_examples():
    assert gamma_hat(BIG) == ExtTableau(make((7, 6, 4, 1, 1, 1), (7, 7, 5, 2, 2, 1)), 2)
    assert gamma_hat(ZERO) == ExtTableau(EMPTY, 0)
    assert gamma_hat(H1Object.of(P1(3))) == ExtTableau(make((2,), (3,)), 0)


def test_from_ext_tableau_examples():
    assert from_ext_tableau(ExtTableau(make((7, 6, 4, 1, 1, 1), (7, 7, 5, 2, 2, 1)), 2)) == BIG
    assert from_ext_tableau(ExtTableau(EMPTY, 3)) == free_object(3)
    assert from_ext_tableau(ExtTableau(make((2, 1), (2, 2)), 0)) == H1Object.of(P0(2), P1(2))


@given(ext_tableaux())
def test_bijection_from_tableaux(t):
    assert gamma_hat(from_ext_tableau(t)) == t


@given(h1_objects())
def test_bijection_from_objects(M):
    assert from_ext_tableau(gamma_hat(M)) == M
    assert (M.a, M.b) == (gamma(M).entries + M.free, gamma(M).beta.weight)


def test_format_and_parse():
    text = "P0^7+P1^7+P1^5+P1^2+P1^2+P0^1+P1^0+P1^0"
    assert format_object(BIG) == text
    assert parse_object(text) == BIG
    assert parse_object(" P1^0 + P0^2 ") == H1Object.of(P0(2), P1(0))
    assert parse_object("0") == ZERO
    for bad in ("P2^1", "P0^0", "P1^", "Q1^2", "P1^1++P0^1"):
        with pytest.raises(ParseError):
            parse_object(bad)


@pytest.mark.parametrize("P, Q, expected", [
    (P1(3), P0(2), 2),
    (P1(0), P1(0), 1),
    (P1(0), P0(5), 0),
    (P0(4), P0(2), 2),
    (P0(2), P1(3), 2),
    (P0(3), P1(0), 0),
    (P1(4), P1(2), 2),
    (P1(4), P1(0), 1),
    (P1(0), P1(3), 0),
    (P1(1), P0(4), 0),
])
def test_table_entries(P, Q, expected):
    assert hom_dim_picket(P, Q) == expected


def test_hom_dim_examples():
    M = H1Object.of(P0(1), P1(1))
    assert hom_dim(M, M) == 3
    assert end_dim(M) == 3
    assert end_dim(H1Object.of(P1(1))) == 1
    assert end_dim(ZERO) == 0
    assert hom_dim(ZERO, BIG) == 0
    for b in range(5):
        for S in s1_objects(b):
            assert hom_dim(free_object(1), S) == 0


@given(h1_objects(3), h1_objects(3), h1_objects(3))
def test_hom_dim_additive(A, B, C):
    assert hom_dim(A + B, C) == hom_dim(A, C) + hom_dim(B, C)
    assert hom_dim(A, B + C) == hom_dim(A, B) + hom_dim(A, C)


def test_hom_leq_examples():
    assert hom_leq(H1Object.of(P0(3), P1(1)), H1Object.of(P1(3), P0(1)))
    assert hom_leq(H1Object.of(P1(2)), H1Object.of(P0(2), P1(0)))
    assert hom_leq(BIG, BIG)
    assert not hom_leq(H1Object.of(P1(3), P0(1)), H1Object.of(P0(3), P1(1)))
    with pytest.raises(IncomparableInvariants):
        hom_leq(H1Object.of(P1(2)), H1Object.of(P0(2)))


def small_classes():
    for a, b in product(range(4), range(5)):
        yield list(objects_with(a, b))


def test_hom_leq_is_partial_order():
    for objs in small_classes():
        leq = {(U, V): hom_leq(U, V) for U in objs for V in objs}
        for U, V in leq:
            if leq[U, V] and leq[V, U]:
                assert U == V
            for W in objs:
                if leq[U, V] and leq[V, W]:
                    assert leq[U, W]


def test_free_summand_is_inherited_upward():
    for objs in small_classes():
        for U in objs:
            for V in objs:
                if U.free and hom_leq(U, V):
                    assert hom_dim(free_object(1), V) >= 1
                    assert V.free >= 1


def test_socle_summands_survive_shrinking_gamma():
    for b in range(1, 6):
        objs = list(s1_objects(b))
        for M in objs:
            for N in objs:
                gM, gN = gamma(M), gamma(N)
                if gM.beta == gN.beta and contains(gM.gamma, gN.gamma):
                    for P in set(M):
                        if P.eps == 1:
                            assert P in set(N), (M, N, P)
