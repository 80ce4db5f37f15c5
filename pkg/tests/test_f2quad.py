"""Tests for the GF(2) quadratic-space orbit classifier."""

from itertools import product

import pytest

from vftk.bits import f2_identity, f2_mat_mul, f2_rank, f2_reduce, f2_rref, f2_vec_mat
from vftk.f2quad import (
    enumerate_odd_lagrangians,
    fixes_left_half,
    gaussian_binomial,
    hyperbolic_space,
    is_isometry,
    is_odd_lagrangian,
    left_overlap,
    left_stabilizer_generators,
    left_stabilizer_order,
    nonsingular_vectors,
    odd_lagrangian_through,
    orbit_census,
    orbit_partition,
    orbit_size,
    pairing,
    quad_value,
    random_isometry,
    same_orbit_witness,
    sample_odd_lagrangians,
    stabilizer_structure,
    standard_odd_lagrangian,
    total_odd_count,
    transform_member,
)


def test_quad_and_pairing_basics():
    n = 3
    for i in range(n):
        assert quad_value(n, 1 << i) == 0  # left basis is singular
        assert quad_value(n, 1 << (n + i)) == 0  # right basis is singular
        assert quad_value(n, (1 << i) | (1 << (n + i))) == 1
    for i in range(n):
        for l in range(n):
            assert pairing(n, 1 << i, 1 << (n + l)) == (i == l)
            assert pairing(n, 1 << i, 1 << l) == 0
            assert pairing(n, 1 << (n + i), 1 << (n + l)) == 0
    # the pairing is the polarization of Q
    for u in range(1 << (2 * n)):
        for v in (5, 17, 44, 63):
            assert pairing(n, u, v) == (
                quad_value(n, u ^ v) ^ quad_value(n, u) ^ quad_value(n, v)
            )


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_nonsingular_counts(n):
    assert len(nonsingular_vectors(n)) == 2 ** (2 * n - 1) - 2 ** (n - 1)


def test_hyperbolic_space_wrapper():
    sp = hyperbolic_space(2)
    assert sp.dim == 4
    assert sp.quad(0b0101) == 1
    assert sp.pairing(0b0001, 0b0100) == 1
    assert len(sp.nonsingular_vectors()) == 6
    with pytest.raises(ValueError):
        hyperbolic_space(0)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 9), (3, 105)])
def test_enumeration_counts(n, count):
    members = enumerate_odd_lagrangians(n)
    assert len(members) == count == total_odd_count(n)
    for m in members:
        assert is_odd_lagrangian(n, m)
        assert tuple(f2_rref(m)) == m  # canonical form
    assert len(set(members)) == count


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        enumerate_odd_lagrangians(6)
    with pytest.raises(ValueError):
        enumerate_odd_lagrangians(0)


@pytest.mark.parametrize("n", [2, 3])
def test_member_through_vector(n):
    for v in nonsingular_vectors(n):
        member = odd_lagrangian_through(n, v)
        assert is_odd_lagrangian(n, member)
        assert left_overlap(n, member) == n - 1
        assert f2_reduce(v, member) == 0  # v lies in the member
    with pytest.raises(ValueError):
        odd_lagrangian_through(n, 1)  # singular vector


def test_standard_members():
    for n in (1, 2, 3, 5):
        for j in range(n):
            member = standard_odd_lagrangian(n, j)
            assert is_odd_lagrangian(n, member)
            assert left_overlap(n, member) == j
    with pytest.raises(ValueError):
        standard_odd_lagrangian(3, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_generators_are_isometries_fixing_left_half(n):
    gens = left_stabilizer_generators(n)
    assert len(gens) == n * (n - 1) + n * (n - 1) // 2
    for g in gens:
        assert is_isometry(n, g)
        assert fixes_left_half(n, g)


def test_left_stabilizer_orders():
    assert left_stabilizer_order(1) == 1
    assert left_stabilizer_order(2) == 12
    assert left_stabilizer_order(3) == 1344
    assert left_stabilizer_order(5) == 10239344640


def test_left_stabilizer_order_against_brute_force():
    # filter every 4x4 bit matrix at n=2: the stabilizer of the left half
    # inside the full isometry group has exactly the advertised order
    n = 2
    iso = 0
    fixing = 0
    for g in product(range(16), repeat=4):
        if f2_rank(g) != 4 or not is_isometry(n, g):
            continue
        iso += 1
        if fixes_left_half(n, g):
            fixing += 1
    # |O+(4,2)| = 72; the left-half stabilizer is the order-12 parabolic
    assert iso == 72
    assert fixing == left_stabilizer_order(2)


@pytest.mark.parametrize("n,sizes", [(2, (6, 3)), (3, (56, 42, 7))])
def test_orbit_partition_matches_overlap_classes(n, sizes):
    members = enumerate_odd_lagrangians(n)
    orbits = orbit_partition(n, members)
    assert len(orbits) == n
    by_overlap = {}
    for orbit in orbits:
        js = {left_overlap(n, m) for m in orbit}
        assert len(js) == 1
        by_overlap[js.pop()] = orbit
    for j in range(n):
        expected = frozenset(m for m in members if left_overlap(n, m) == j)
        assert by_overlap[j] == expected
        assert len(by_overlap[j]) == sizes[j] == orbit_size(n, j)


def _check_witness(n, a, b, witness):
    assert witness.overlaps == (left_overlap(n, a), left_overlap(n, b))
    if witness.matrix is None:
        assert witness.overlaps[0] != witness.overlaps[1]
        assert not witness.same_orbit
        return
    g = witness.matrix
    assert is_isometry(n, g)
    assert fixes_left_half(n, g)
    assert tuple(f2_rref([f2_vec_mat(r, g) for r in a])) == tuple(f2_rref(b))


def test_witness_grid_small():
    n = 3
    members = sample_odd_lagrangians(n, count=12, seed=5)
    for a in members:
        for b in members:
            _check_witness(n, a, b, same_orbit_witness(n, a, b))


def test_witness_identity_on_equal_members():
    for n in (2, 3, 5):
        m = standard_odd_lagrangian(n, n - 1)
        w = same_orbit_witness(n, m, m)
        assert w.matrix == tuple(f2_identity(2 * n))


def test_witness_n5_across_classes():
    n = 5
    members = list(sample_odd_lagrangians(n, count=10, seed=9))
    members += [standard_odd_lagrangian(n, j) for j in range(n)]
    for a in members:
        for b in members:
            _check_witness(n, a, b, same_orbit_witness(n, a, b))


def test_witness_refutation_reports_overlaps():
    n = 5
    w = same_orbit_witness(n, standard_odd_lagrangian(n, 0), standard_odd_lagrangian(n, 4))
    assert not w.same_orbit
    assert w.matrix is None
    assert w.overlaps == (0, 4)


@pytest.mark.parametrize(
    "n,expected",
    [
        (2, [(6, 2, 2), (3, 4, 4)]),
        (3, [(56, 24, 4), (42, 32, 32), (7, 192, 32)]),
    ],
)
def test_exhaustive_census_small(n, expected):
    rows = orbit_census(n)
    assert len(rows) == n
    for j, (size, order, u_order) in enumerate(expected):
        row = rows[j]
        assert row.overlap == j
        assert (row.size, row.stabilizer_order, row.unipotent_order) == (size, order, u_order)
        assert row.size * row.stabilizer_order == left_stabilizer_order(n)


def test_census_n5_closed_form():
    rows = orbit_census(5)
    assert [r.size for r in rows] == [31744, 29760, 8680, 930, 31]
    assert sum(r.size for r in rows) == 71145 == total_odd_count(5)
    assert [r.stabilizer_order for r in rows] == [
        322560,
        344064,
        1179648,
        11010048,
        330301440,
    ]
    assert [r.unipotent_order for r in rows] == [2**4, 2**11, 2**15, 2**16, 2**14]
    assert rows[0].levi == "GL(0,2) x GL(4,2)"
    assert rows[2].levi == "GL(2,2) x GL(2,2)"


def test_census_n4_certified_exhaustive():
    # the formula route and a fully certified enumeration must agree
    fast = orbit_census(4)
    slow = orbit_census(4, exhaustive=True)
    assert fast == slow
    assert [r.size for r in fast] == [960, 840, 210, 15]


def test_stabilizer_structure_counts_vs_quotients():
    # exhaustive subgroup counting (n <= 3) against the orbit quotient
    for n in (2, 3):
        for j in range(n):
            info = stabilizer_structure(n, standard_odd_lagrangian(n, j))
            assert info.overlap == j
            assert info.order * orbit_size(n, j) == left_stabilizer_order(n)
            assert info.order % info.unipotent_order == 0
    info = stabilizer_structure(3, standard_odd_lagrangian(3, 0))
    assert info.levi == "GL(0,2) x GL(2,2)"
    with pytest.raises(ValueError):
        stabilizer_structure(3, (1, 2, 4))  # the left half itself is singular


def test_stabilizer_structure_is_conjugation_invariant():
    import random

    n = 3
    rng = random.Random(11)
    for j in range(n):
        base = standard_odd_lagrangian(n, j)
        info0 = stabilizer_structure(n, base)
        gens = left_stabilizer_generators(n)
        for _ in range(3):
            # conjugating by a left-half isometry must not change the structure
            moved = transform_member(n, gens[rng.randrange(len(gens))], base)
            assert stabilizer_structure(n, moved) == info0


def test_gaussian_binomial():
    assert gaussian_binomial(4, 2) == 35
    assert gaussian_binomial(5, 2) == 155
    assert gaussian_binomial(6, 3) == 1395
    assert gaussian_binomial(3, 0) == gaussian_binomial(3, 3) == 1
    assert gaussian_binomial(2, 3) == 0


def test_random_isometry_and_samples():
    import random

    for n in (2, 3, 5):
        rng = random.Random(n)
        for _ in range(3):
            assert is_isometry(n, random_isometry(n, rng))
    members = sample_odd_lagrangians(5, count=20, seed=0)
    assert members == sample_odd_lagrangians(5, count=20, seed=0)  # deterministic
    assert all(is_odd_lagrangian(5, m) for m in members)
    assert len({left_overlap(5, m) for m in members}) >= 2


def test_n5_exhaustive_census_certified():
    # opt-in full run: enumerates all 71145 members and certifies each one
    # with an explicit witness onto its standard representative
    rows = orbit_census(5, exhaustive=True)
    assert rows == orbit_census(5)
