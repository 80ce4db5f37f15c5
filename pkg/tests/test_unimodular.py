"""Sum-of-squares congruences and even unimodular overlattice constructions."""

from fractions import Fraction

import pytest

from vftk.f2codes import hamming_code
from vftk.intmat import identity, mat_mul
from vftk.lattices import (
    IntegralLattice,
    direct_sum,
    discriminant_group,
    e8_lattice,
    short_vectors,
)
from vftk.unimodular import (
    definite_automorphisms,
    dirichlet_prime,
    first_block_primitive,
    hyperbolic_unimodularize,
    isotropic_subgroup,
    overlattice_from_isotropic,
    prime_power_twist,
    strong_extension_check,
    sum_four_squares_mod,
    sum_two_squares_mod,
    unimodularize,
)

A1 = IntegralLattice.from_gram(((2,),))
A2 = IntegralLattice.from_gram(((2, -1), (-1, 2)))
PLANE = IntegralLattice.from_gram(((0, 1), (1, 0)))
ODD_PRIMES = [p for p in range(3, 51) if all(p % f for f in range(2, p))]


def test_sum_two_squares_congruence():
    for p in ODD_PRIMES:
        for r in range(1, 7):
            a, b = sum_two_squares_mod(p, r)
            assert (a * a + b * b + 1) % p**r == 0
            assert 0 <= a < p**r and 0 <= b < p**r


def test_sum_two_squares_against_residue_search():
    # independent oracle: scan all residues mod p^r (kept to small moduli)
    for p in ODD_PRIMES:
        for r in range(1, 7):
            m = p**r
            if m > 100_000:
                continue
            squares = {t * t % m for t in range(m)}
            solvable = any((-1 - a * a) % m in squares for a in range(m))
            assert solvable
            a, b = sum_two_squares_mod(p, r)
            assert (-1 - a * a) % m in squares and b * b % m == (-1 - a * a) % m


def test_sum_two_squares_rejects_bad_input():
    for p in (1, 2, 9, 15):
        with pytest.raises(ValueError):
            sum_two_squares_mod(p, 1)
    with pytest.raises(ValueError):
        sum_two_squares_mod(3, 0)


def test_sum_four_squares_exact():
    for r in range(1, 11):
        a, b, c, d = sum_four_squares_mod(r)
        assert a * a + b * b + c * c + d * d == 2**r - 1
        assert a >= b >= c >= d >= 0
        assert (a * a + b * b + c * c + d * d + 1) % 2**r == 0
    with pytest.raises(ValueError):
        sum_four_squares_mod(0)


def test_hamming_glue_rebuilds_e8():
    # glueing the halved Hamming words onto 8 orthogonal roots kills det 2^8
    base = direct_sum(*[A1] * 8)
    code = hamming_code(8)
    gens = [tuple(Fraction((w >> i) & 1, 2) for i in range(8)) for w in code.rows]
    glue = isotropic_subgroup(discriminant_group(base), gens)
    assert glue.order() == 16
    over = overlattice_from_isotropic(base, glue)
    assert over.result.determinant() == 1
    assert over.result.is_even
    assert len(short_vectors(over.result, 2)) == 240


def test_trivial_glue_returns_base():
    base = direct_sum(A1, A1.rescale(-1))
    glue = isotropic_subgroup(discriminant_group(base), ())
    over = overlattice_from_isotropic(base, glue)
    assert over.result.gram2 == base.gram2
    assert over.basis_rows == tuple(
        tuple(Fraction(int(i == j)) for j in range(2)) for i in range(2)
    )


def test_isotropic_subgroup_validation():
    dg = discriminant_group(A1)
    with pytest.raises(ValueError, match="dual"):
        isotropic_subgroup(dg, [(Fraction(1, 3),)])
    with pytest.raises(ValueError, match="isotropic"):
        isotropic_subgroup(dg, [(Fraction(1, 2),)])
    # both generators isotropic but pairing to 1/2: not mutually orthogonal
    mixed = IntegralLattice.from_gram(((4, 0), (0, -4)))
    dg2 = discriminant_group(mixed)
    g1 = (Fraction(1, 4), Fraction(1, 4))
    g2 = (Fraction(1, 4), Fraction(-1, 4))
    assert dg2.q(g1) == 0 and dg2.q(g2) == 0
    with pytest.raises(ValueError, match="orthogonal"):
        isotropic_subgroup(dg2, [g1, g2])


def test_unimodularize_a1_gives_e8():
    over = unimodularize(A1)
    res = over.result
    assert over.diagonal_copies == 8
    assert (res.rank, res.determinant()) == (8, 1)
    assert res.is_even and res.is_definite
    assert len(short_vectors(res, 2)) == 240
    assert over.glue.order() == 2**4
    assert first_block_primitive(over, 1)


def test_unimodularize_a2_gives_e8():
    over = unimodularize(A2)
    res = over.result
    assert over.diagonal_copies == 4
    assert (res.rank, res.determinant()) == (8, 1)
    assert res.is_even and res.is_definite
    assert len(short_vectors(res, 2)) == 240
    assert over.glue.order() == 9
    assert first_block_primitive(over, 2)


def test_unimodularize_e8_is_four_copies():
    over = unimodularize(e8_lattice())
    assert over.diagonal_copies == 4
    assert over.result.gram2 == direct_sum(*[e8_lattice()] * 4).gram2
    assert over.basis_rows == tuple(
        tuple(Fraction(int(i == j)) for j in range(32)) for i in range(32)
    )


def test_unimodularize_other_determinants():
    # det 6 (even, 8 copies) and det 15 (odd, 4 copies) both land on E8
    for gram, copies in ((((6,),), 8), (((4, 1), (1, 4)), 4)):
        over = unimodularize(IntegralLattice.from_gram(gram))
        assert over.diagonal_copies == copies
        assert (over.result.rank, over.result.determinant()) == (8, 1)
        assert over.result.is_even and over.result.is_definite
        assert len(short_vectors(over.result, 2)) == 240


def test_unimodularize_indefinite_input():
    over = unimodularize(PLANE)  # det -1: trivial glue on four copies
    assert over.diagonal_copies == 4
    assert over.result.gram2 == direct_sum(*[PLANE] * 4).gram2
    wide = IntegralLattice.from_gram(((0, 2), (2, 0)))  # det -4
    over = unimodularize(wide)
    res = over.result
    assert (res.rank, abs(res.determinant())) == (16, 1)
    assert res.is_even
    assert not res.is_definite and not res.rescale(-1).is_definite


def test_unimodularize_rejects_odd_lattice():
    with pytest.raises(ValueError):
        unimodularize(IntegralLattice.from_gram(((1,),)))


def test_first_block_primitive_negative_control():
    # glue supported on the first block alone makes the embedding imprimitive
    base = IntegralLattice.from_gram(((8, 0), (0, 2)))
    glue = isotropic_subgroup(discriminant_group(base), [(Fraction(1, 2), Fraction(0))])
    over = overlattice_from_isotropic(base, glue)
    assert over.result.determinant() == 4
    assert not first_block_primitive(over, 1)
    # mirrored construction: glue supported away from the first block is fine
    swapped = IntegralLattice.from_gram(((2, 0), (0, 8)))
    glue = isotropic_subgroup(discriminant_group(swapped), [(Fraction(0), Fraction(1, 2))])
    assert first_block_primitive(overlattice_from_isotropic(swapped, glue), 1)


def test_strong_extension_sign_flip_on_a1():
    over = unimodularize(A1)
    (verdict,) = strong_extension_check(A1, over, [((-1,),)])
    assert verdict.extends
    minus = tuple(tuple(-x for x in row) for row in identity(8))
    assert verdict.matrix == minus


def test_strong_extension_full_a2_automorphisms():
    over = unimodularize(A2)
    auts = definite_automorphisms(A2)
    verdicts = strong_extension_check(A2, over, auts)
    assert all(v.extends for v in verdicts)
    mats = {v.matrix for v in verdicts}
    assert len(mats) == 12
    # the extensions form a group
    for a in mats:
        for b in mats:
            assert tuple(tuple(r) for r in mat_mul(a, b)) in mats


def test_strong_extension_detects_obstruction():
    # act on only one of the two glued blocks: -1 moves the diagonal glue
    base = direct_sum(A2, A2.rescale(-1), PLANE)
    pad = (Fraction(0), Fraction(0))
    gens = [g + g + pad for g in discriminant_group(A2).generators]
    glue = isotropic_subgroup(discriminant_group(base), gens)
    over = overlattice_from_isotropic(base, glue, diagonal_copies=1, tail_rank=4)
    eye = identity(2)
    minus = tuple(tuple(-x for x in row) for row in eye)
    good, bad = strong_extension_check(A2, over, [eye, minus])
    assert good.extends and good.matrix is not None
    assert not bad.extends and bad.matrix is None
    # independent oracle: the induced ambient map must fix the glue setwise
    for w, verdict in ((eye, good), (minus, bad)):
        amb = [tuple(r) + (0,) * 4 for r in w]
        amb += [(0, 0) + tuple(r) for r in identity(4)]
        image = {
            tuple(Fraction(sum(c * amb[i][j] for i, c in enumerate(row))) % 1 for j in range(6))
            for row in over.glue.closure()
        }
        assert (image == over.glue.closure()) == verdict.extends


def test_strong_extension_rejects_non_isometry():
    over = unimodularize(A2)
    with pytest.raises(ValueError, match="isometry"):
        strong_extension_check(A2, over, [((1, 0), (1, 1))])


def test_hyperbolic_unimodularize_small():
    for lat, rank in ((A1, 4), (A2, 6)):
        over = hyperbolic_unimodularize(lat)
        res = over.result
        assert res.rank == rank <= 2 * lat.rank + 2
        assert abs(res.determinant()) == 1 and res.is_even
        assert not res.is_definite and not res.rescale(-1).is_definite
        assert first_block_primitive(over, lat.rank)
    over = hyperbolic_unimodularize(A2)
    verdicts = strong_extension_check(A2, over, definite_automorphisms(A2))
    assert all(v.extends for v in verdicts)


def test_hyperbolic_unimodularize_det_one_shortcut():
    over = hyperbolic_unimodularize(e8_lattice())
    assert over.result.rank == 10
    assert over.result.gram2 == direct_sum(e8_lattice(), PLANE).gram2


def test_hyperbolic_unimodularize_rank_zero():
    over = hyperbolic_unimodularize(IntegralLattice(()))
    assert over.result.gram2 == ((0, 2), (2, 0))


def test_prime_power_twist_a1():
    over = prime_power_twist(A1, 3)
    res = over.result
    assert (res.rank, res.determinant()) == (2, 3)
    assert res.is_even and res.is_definite
    assert len(short_vectors(res, 2)) == 6  # the result is a hexagonal lattice
    assert first_block_primitive(over, 1)


def test_prime_power_twist_a2():
    s = dirichlet_prime(A2, 7)
    assert s == 11
    over = prime_power_twist(A2, s)
    assert (over.result.rank, over.result.determinant()) == (4, 121)
    assert over.result.is_even and over.result.is_definite
    assert over.glue.order() == 3
    verdicts = strong_extension_check(A2, over, definite_automorphisms(A2))
    assert all(v.extends for v in verdicts)


def test_prime_power_twist_validation():
    with pytest.raises(ValueError, match="-1 mod"):
        prime_power_twist(A1, 5)
    with pytest.raises(ValueError, match="prime"):
        prime_power_twist(A1, 15)
    with pytest.raises(ValueError, match="even"):
        prime_power_twist(IntegralLattice.from_gram(((1,),)), 3)


def test_dirichlet_prime():
    assert dirichlet_prime(A1, 2) == 3
    assert dirichlet_prime(A1, 4) == 7
    assert dirichlet_prime(e8_lattice(), 2) == 3
    assert dirichlet_prime(A2, 100) == 101
    assert dirichlet_prime(A2, 5) == 5


def test_definite_automorphisms():
    assert len(definite_automorphisms(A1)) == 2
    auts = definite_automorphisms(A2)
    assert len(auts) == 12
    rect = IntegralLattice.from_gram(((2, 0), (0, 4)))
    assert len(definite_automorphisms(rect)) == 4
    with pytest.raises(ValueError):
        definite_automorphisms(PLANE)
