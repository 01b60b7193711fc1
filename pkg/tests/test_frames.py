from __future__ import annotations

import random
from fractions import Fraction

import pytest

from twistorcheck import (
    Bivector, NotAComplexStructure, Vector4,
    as_skew_map, bivector_of_skew, dot, from_split_basis, hat, to_split_basis,
    wedge,
)
from twistorcheck.frames import (
    E1, E2, E3, E4, HALF,
    I_MINUS, I_PLUS, J_MINUS, J_PLUS, K_MINUS, K_PLUS,
    basis_wedge, identity_map, squares_to_minus_identity,
)

SPLIT = (I_PLUS, J_PLUS, K_PLUS, I_MINUS, J_MINUS, K_MINUS)


def rand_bivector(rng):
    return Bivector(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                          for _ in range(6)))


def test_wedge_basis_cases():
    assert wedge(E1, E2) == basis_wedge(1, 2)
    assert wedge(E3, E1) == -1 * basis_wedge(1, 3)
    assert wedge(E1 + E2, E1 - E2) == -2 * basis_wedge(1, 2)


def test_wedge_is_alternating_and_bilinear():
    rng = random.Random("wedge")
    for _ in range(50):
        u = Vector4(tuple(Fraction(rng.randint(-5, 5)) for _ in range(4)))
        v = Vector4(tuple(Fraction(rng.randint(-5, 5)) for _ in range(4)))
        w = Vector4(tuple(Fraction(rng.randint(-5, 5)) for _ in range(4)))
        assert wedge(u, u).is_zero()
        assert wedge(u, v) == -1 * wedge(v, u)
        assert wedge(u, v + w) == wedge(u, v) + wedge(u, w)


def test_split_basis_coordinates():
    assert to_split_basis(wedge(E1, E3)) == (0, HALF, 0, 0, HALF, 0)
    assert to_split_basis(wedge(E2, E4)) == (0, -HALF, 0, 0, HALF, 0)
    assert to_split_basis(I_PLUS) == (1, 0, 0, 0, 0, 0)


def test_split_basis_round_trip():
    rng = random.Random("split")
    for _ in range(100):
        b = rand_bivector(rng)
        assert from_split_basis(to_split_basis(b)) == b
        assert as_skew_map(from_split_basis(to_split_basis(b))) == as_skew_map(b)


def test_action_convention():
    ip = as_skew_map(I_PLUS)
    assert ip.apply(E1) == E2
    assert squares_to_minus_identity(ip)
    assert as_skew_map(J_PLUS).apply(E1) == E3
    assert as_skew_map(K_PLUS).apply(E1) == E4


def test_quaternion_relations():
    maps = {name: as_skew_map(b)
            for name, b in (("i", I_PLUS), ("j", J_PLUS), ("k", K_PLUS))}
    assert bivector_of_skew(maps["i"].compose(maps["j"])) == K_PLUS
    assert bivector_of_skew(maps["j"].compose(maps["k"])) == I_PLUS
    assert bivector_of_skew(maps["k"].compose(maps["i"])) == J_PLUS
    for m in maps.values():
        assert squares_to_minus_identity(m)


def test_self_dual_and_anti_self_dual_commute():
    rng = random.Random("commute")
    for _ in range(50):
        cp = [Fraction(rng.randint(-5, 5)) for _ in range(3)]
        cm = [Fraction(rng.randint(-5, 5)) for _ in range(3)]
        p = as_skew_map(from_split_basis((cp[0], cp[1], cp[2], 0, 0, 0)))
        q = as_skew_map(from_split_basis((0, 0, 0, cm[0], cm[1], cm[2])))
        comm = p.commutator(q)
        assert all(x == 0 for row in comm.rows for x in row)


def test_hat_values():
    assert hat(I_PLUS, I_PLUS).is_zero()
    assert hat(I_PLUS, HALF * (J_PLUS + J_MINUS)) == K_PLUS
    assert hat(I_PLUS, K_PLUS) == -2 * J_PLUS
    assert hat(I_PLUS, J_PLUS) == 2 * K_PLUS


def test_hat_kills_the_anti_self_dual_part():
    for b in (I_MINUS, J_MINUS, K_MINUS):
        assert hat(I_PLUS, b).is_zero()


def test_hat_image_lies_in_the_vertical_plane():
    rng = random.Random("hat")
    for _ in range(50):
        image = to_split_basis(hat(I_PLUS, rand_bivector(rng)))
        assert image[0] == 0 and image[3] == 0 and image[4] == 0 and image[5] == 0


def test_hat_is_twice_left_multiplication_on_the_vertical_plane():
    rng = random.Random("hat2")
    ip = as_skew_map(I_PLUS)
    for _ in range(20):
        a = Fraction(rng.randint(-5, 5))
        b = Fraction(rng.randint(-5, 5))
        p = from_split_basis((0, a, b, 0, 0, 0))
        left = bivector_of_skew(ip.compose(as_skew_map(p)))
        assert hat(I_PLUS, p) == 2 * left


def test_hat_rejects_non_complex_structures():
    with pytest.raises(NotAComplexStructure):
        hat(J_PLUS + K_PLUS, I_PLUS)
    with pytest.raises(NotAComplexStructure):
        hat(2 * I_PLUS, J_PLUS)


def test_identity_map_fixture():
    ident = identity_map()
    assert ident.apply(E3) == E3
    assert dot(E1, E1) == 1 and dot(E1, E2) == 0
