"""Sign extension: cocycle relations, lifts, torus phases, involution sums."""

import random
from fractions import Fraction
from itertools import product as iproduct

import pytest

from vftk.frames import e8_frame_representatives, frame_stabilizer
from vftk.hatgroup import (
    HatElement,
    all_lifts,
    frame_index_characters,
    frame_symbol_action,
    involution_class,
    lift_automorphism,
    lifted_frame_stabilizer,
    miyamoto_involutions,
    standard_cocycle,
    torus_action_on_frame,
    weight_one_dim,
)
from vftk.lattices import IntegralLattice, e8_lattice

A2 = IntegralLattice.from_gram([[2, -1], [-1, 2]])
A2_ROT = ((0, 1), (-1, -1))  # order-3 isometry of A2


def random_even_lattice(rng, n):
    """Random even (not necessarily definite) lattice of rank n."""
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2 * rng.randrange(1, 4)
        for j in range(i):
            g[i][j] = g[j][i] = rng.randrange(-2, 3)
    return IntegralLattice.from_gram(g)


def random_vec(rng, n):
    return tuple(rng.randrange(-3, 4) for _ in range(n))


def test_cocycle_needs_even_lattice():
    with pytest.raises(ValueError):
        standard_cocycle(IntegralLattice.from_gram([[1]]))


def test_cocycle_square_and_commutator_relations():
    rng = random.Random(2)
    lattices = [e8_lattice()] + [random_even_lattice(rng, rng.randrange(1, 5)) for _ in range(5)]
    for lat in lattices:
        c = standard_cocycle(lat)
        n = lat.rank
        for _ in range(25):
            x, y = random_vec(rng, n), random_vec(rng, n)
            # eps(x,x) realizes the square sign
            assert c.epsilon(x, x) == (-1) ** (lat.norm(x) // 2 % 2)
            # antisymmetry defect realizes the commutator sign
            assert c.epsilon(x, y) * c.epsilon(y, x) == (-1) ** (int(lat.inner(x, y)) % 2)
            # bilinearity
            z = random_vec(rng, n)
            xy = tuple(a + b for a, b in zip(x, y))
            assert c.epsilon(xy, z) == c.epsilon(x, z) * c.epsilon(y, z)
            assert c.epsilon(z, xy) == c.epsilon(z, x) * c.epsilon(z, y)


def test_hat_group_law():
    c = standard_cocycle(A2)
    rng = random.Random(7)
    e = c.identity_element()
    for _ in range(40):
        a = HatElement(rng.choice((1, -1)), random_vec(rng, 2))
        b = HatElement(rng.choice((1, -1)), random_vec(rng, 2))
        d = HatElement(rng.choice((1, -1)), random_vec(rng, 2))
        assert c.product(c.product(a, b), d) == c.product(a, c.product(b, d))
        assert c.product(a, e) == a and c.product(e, a) == a
        assert c.product(a, c.inverse(a)) == e
        sq = c.square(a)
        assert sq.vec == tuple(2 * v for v in a.vec)
        assert sq.sign == (-1) ** (A2.norm(a.vec) // 2 % 2)
        com = c.commutator(a, b)
        assert com.vec == (0, 0)
        assert com.sign == (-1) ** (int(A2.inner(a.vec, b.vec)) % 2)


def test_hat_square_of_norm_four_vector_is_positive():
    e8 = e8_lattice()
    c = standard_cocycle(e8)
    frame = e8_frame_representatives()[1]
    for x in frame.vectors:
        assert c.square(HatElement(1, x)).sign == 1


def test_lift_is_homomorphism_all_sign_choices():
    c = standard_cocycle(A2)
    rng = random.Random(13)
    lifts = all_lifts(c, A2_ROT)
    assert len(lifts) == 4
    for lift in lifts:
        for _ in range(20):
            a = HatElement(rng.choice((1, -1)), random_vec(rng, 2))
            b = HatElement(rng.choice((1, -1)), random_vec(rng, 2))
            assert lift.apply(c.product(a, b)) == c.product(lift.apply(a), lift.apply(b))
    # distinct sign choices give distinct maps
    seen = set()
    for lift in lifts:
        key = tuple(lift.apply(HatElement(1, v)) for v in ((1, 0), (0, 1), (1, 1)))
        assert key not in seen
        seen.add(key)


def test_lift_rejects_non_isometry():
    c = standard_cocycle(A2)
    with pytest.raises(ValueError):
        lift_automorphism(c, ((1, 1), (0, 1)))


def test_lift_compose_and_kernel():
    c = standard_cocycle(A2)
    rng = random.Random(3)
    lift = lift_automorphism(c, A2_ROT, (1, 0))
    inv = lift.inverse()
    both = lift.compose(inv)
    assert both.is_kernel_element()
    # kernel elements have linear mu: mu(x+y) = mu(x) mu(y)
    for _ in range(20):
        x, y = random_vec(rng, 2), random_vec(rng, 2)
        xy = tuple(a + b for a, b in zip(x, y))
        assert both.mu(xy) == both.mu(x) * both.mu(y)
    # and compose acts as the identity on sampled elements
    for _ in range(10):
        a = HatElement(rng.choice((1, -1)), random_vec(rng, 2))
        assert both.apply(a).vec == a.vec
    # order-3 rotation: lift^3 is also a kernel element
    cubed = lift.compose(lift).compose(lift)
    assert cubed.is_kernel_element()


def test_torus_action_basic_phases():
    e8 = e8_lattice()
    frame = e8_frame_representatives()[1]
    x1 = frame.vectors[0]
    quarter = tuple(Fraction(v, 4) for v in x1)
    act = torus_action_on_frame(e8, quarter, frame)
    assert act.fixes_frame and act.stabilizes_frame
    assert act.phases[0] == 0
    eighth = tuple(Fraction(v, 8) for v in x1)
    act = torus_action_on_frame(e8, eighth, frame)
    assert not act.fixes_frame and act.stabilizes_frame
    assert act.phases[0] == Fraction(1, 2)
    assert act.swaps[0] and not any(act.swaps[1:])
    # a dual (here: lattice) vector acts trivially
    act = torus_action_on_frame(e8, (1, 0, 0, 0, 0, 0, 0, 0), frame)
    assert act.fixes_frame
    # an eighth of a sum of frame vectors stabilizes
    h = tuple(Fraction(a + b, 8) for a, b in zip(frame.vectors[2], frame.vectors[5]))
    assert torus_action_on_frame(e8, h, frame).stabilizes_frame
    # something generic does not
    ginv = e8.gram_inverse()
    h = tuple(Fraction(1, 3) * c for c in ginv[0])
    assert not torus_action_on_frame(e8, h, frame).stabilizes_frame


def test_frame_symbol_action_of_sign_monomial():
    e8 = e8_lattice()
    frame = e8_frame_representatives()[4]
    stab = frame_stabilizer(e8, frame)
    res = lifted_frame_stabilizer(e8, frame, stab=stab)
    assert res.order == 2**8 * stab.sign_order
    assert res.order == 2**8 * 2
    assert res.kernel_order == 256
    assert res.samples_checked >= 1
    assert "order 2688" in res.structure


def test_lifted_frame_stabilizer_k1():
    e8 = e8_lattice()
    frame = e8_frame_representatives()[1]
    res = lifted_frame_stabilizer(e8, frame)
    assert res.order == 2**8 * 2**7
    assert res.sign_order == 2**7


def test_frame_symbol_action_nonmonomial_raises():
    e8 = e8_lattice()
    frame = e8_frame_representatives()[1]
    c = standard_cocycle(e8)
    # identity matrix is monomial, fine; a generic isometry between two
    # DIFFERENT frames is not monomial on this frame: build one by mixing
    # two frame vectors through a non-frame basis change
    ident = tuple(tuple(int(i == j) for j in range(8)) for i in range(8))
    lift = lift_automorphism(c, ident)
    sigma, flips = frame_symbol_action(e8, frame, lift)
    assert sigma == tuple(range(8))
    assert not any(flips)


def test_miyamoto_counts_and_coset():
    for k in range(1, 6):
        chars = miyamoto_involutions(k)
        assert len(chars) == 2 ** (k - 1)
        # every index character negates the all-ones word
        from vftk.f2codes import rm1_subcode

        code = rm1_subcode(k)
        ones = (1 << 16) - 1
        combo = None
        for coeffs in iproduct((0, 1), repeat=k):
            w = 0
            for cbit, g in zip(coeffs, code.rows):
                if cbit:
                    w ^= g
            if w == ones:
                combo = coeffs
                break
        assert combo is not None
        for chi in chars:
            assert sum(c * b for c, b in zip(combo, chi)) % 2 == 1
        # affine coset: pairwise differences form a subgroup of size 2^(k-1)
        diffs = {tuple(a ^ b for a, b in zip(c1, c2)) for c1 in chars for c2 in chars}
        assert len(diffs) == 2 ** (k - 1)
        base = next(iter(chars))
        assert {tuple(a ^ b for a, b in zip(base, d)) for d in diffs} == chars
        # all 16 indices give characters in the set
        assert set(frame_index_characters(k)) == chars


def test_weight_one_dims():
    assert weight_one_dim(1, 0) == 120
    assert weight_one_dim(1, 16) == 128
    assert weight_one_dim(5, 0) == 0
    assert weight_one_dim(5, 8) == 8
    with pytest.raises(ValueError):
        weight_one_dim(2, 4)
    for k in range(1, 6):
        total = weight_one_dim(k, 0) + (2**k - 2) * weight_one_dim(k, 8) + weight_one_dim(k, 16)
        assert total == 248


def test_involution_class_all_nontrivial():
    for k in range(1, 6):
        for bits in iproduct((0, 1), repeat=k):
            if not any(bits):
                with pytest.raises(ValueError):
                    involution_class(k, bits)
                continue
            rep = involution_class(k, bits)
            assert rep.minus_dim == 128
            assert rep.plus_dim == 120
            assert rep.label == "2B"
