"""Cyclotomic field arithmetic against independent schoolbook oracles."""

import pytest

from sbcert import linalg
from sbcert.cyclotomic import make_field
from sbcert.errors import BadResidue, DivisionByZero, NotPrime, WrongResidue
from sbcert.rationals import Rat
from sbcert.sampling import random_field_elem, random_nonzero_field_elem


def _schoolbook_mul(field, x, y):
    # plain convolution followed by long division by Phi_p = 1 + t + ... + t^(p-1);
    # a different reduction route than the in-package zeta^p folding
    p = field.p
    n = p - 1
    prod = [Rat(0)] * (2 * n - 1)
    for i, ca in enumerate(x.coords):
        for j, cb in enumerate(y.coords):
            prod[i + j] += ca * cb
    while len(prod) > n:
        lead = prod[-1]
        if lead:
            shift = len(prod) - 1 - n
            for idx in range(p):
                prod[shift + idx] -= lead
        prod.pop()
    prod += [Rat(0)] * (n - len(prod))
    return field.element(prod)


def _inv_linear_solve(x):
    # invert by solving the multiplication-by-x linear system over Q
    field = x.field
    n = field.degree
    cols = [(x * field.zeta(e)).coords for e in range(n)]
    matrix = [[cols[c][r] for c in range(n)] for r in range(n)]
    rhs = [Rat(1)] + [Rat(0)] * (n - 1)
    return field.element(linalg.solve(matrix, rhs))


def test_make_field_examples():
    f7 = make_field(7)
    assert (f7.d, f7.k) == (2, 2)
    f13 = make_field(13)
    assert (f13.d, f13.k) == (3, 4)


def test_make_field_d_is_smallest_order_three_residue():
    for p in (7, 13, 19, 31, 37, 43):
        f = make_field(p)
        candidates = [t for t in range(2, p) if pow(t, 3, p) == 1]
        assert f.d == min(candidates)
        assert f.d != 1 and pow(f.d, 3, p) == 1
        assert 3 * f.k == p - 1


def test_make_field_rejections():
    with pytest.raises(NotPrime):
        make_field(6)
    with pytest.raises(NotPrime):
        make_field(1)
    with pytest.raises(WrongResidue):
        make_field(11)
    with pytest.raises(WrongResidue):
        make_field(5)


def test_additive_structure(field7, rng):
    z = field7.xi()
    x = random_field_elem(field7, rng)
    assert x + field7.zero() == x
    assert z + (-z) == field7.zero()
    combined = field7.one() + z
    assert combined.coords == (Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0))
    assert x - x == field7.zero()


def test_mul_reduction_cases(field7):
    z = field7.xi()
    # zeta * zeta^(p-2) hits the Phi_p fold
    assert z * field7.zeta(5) == field7.zeta(6)
    assert field7.zeta(6).coords == (Rat(-1),) * 6
    # zeta^3 * zeta^4 = zeta^7 = 1: wraps clean around the root of unity
    lhs = field7.zeta(3) * field7.zeta(4)
    assert lhs == field7.one()
    assert lhs == _schoolbook_mul(field7, field7.zeta(3), field7.zeta(4))
    assert field7.zeta(2) * field7.zeta(4) == field7.zeta(6)


def test_mul_matches_schoolbook_oracle(field7, field13, rng):
    for field in (field7, field13):
        for _ in range(40):
            x = random_field_elem(field, rng)
            y = random_field_elem(field, rng)
            assert x * y == _schoolbook_mul(field, x, y)


def test_mul_identity(field7, rng):
    x = random_field_elem(field7, rng)
    assert x * field7.one() == x
    assert field7.one() * x == x


def test_field_axioms_random_triples(field7, rng):
    for _ in range(100):
        x = random_field_elem(field7, rng)
        y = random_field_elem(field7, rng)
        z = random_field_elem(field7, rng)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_inv_basics(field7):
    assert field7.one().inv() == field7.one()
    z = field7.xi()
    zi = z.inv()
    assert z * zi == field7.one()
    assert zi == field7.zeta(6)  # zeta^(p-1), reduced
    with pytest.raises(DivisionByZero):
        field7.zero().inv()


def test_inv_agrees_with_linear_solve_oracle(field7, field13, rng):
    for field in (field7, field13):
        for _ in range(25):
            x = random_nonzero_field_elem(field, rng)
            assert x.inv() == _inv_linear_solve(x)
            assert x * x.inv() == field.one()


def test_division_operator(field7, rng):
    x = random_nonzero_field_elem(field7, rng)
    y = random_nonzero_field_elem(field7, rng)
    assert (x / y) * y == x
    assert x / x == field7.one()


def test_apply_aut_identity_and_generator(field7, rng):
    x = random_field_elem(field7, rng)
    assert x.apply_aut(1) == x
    z = field7.xi()
    assert z.apply_aut(field7.d) == field7.zeta(field7.d)


def test_apply_aut_composition_law(field7, rng):
    p = field7.p
    for _ in range(100):
        x = random_field_elem(field7, rng)
        t = rng.randrange(1, p)
        s = rng.randrange(1, p)
        assert x.apply_aut(s).apply_aut(t) == x.apply_aut((t * s) % p)


def test_apply_aut_is_ring_homomorphism(field7, rng):
    for t in range(1, 7):
        x = random_field_elem(field7, rng)
        y = random_field_elem(field7, rng)
        assert (x + y).apply_aut(t) == x.apply_aut(t) + y.apply_aut(t)
        assert (x * y).apply_aut(t) == x.apply_aut(t) * y.apply_aut(t)


def test_apply_aut_bad_residue(field7, rng):
    x = random_field_elem(field7, rng)
    with pytest.raises(BadResidue):
        x.apply_aut(0)
    with pytest.raises(BadResidue):
        x.apply_aut(7)


def test_sigma_has_order_three(field7, rng):
    x = random_nonzero_field_elem(field7, rng)
    assert x.sigma(1).sigma(1).sigma(1) == x
    assert field7.xi().sigma(1) != field7.xi()


def test_relative_norm_values(field7, rng):
    assert field7.one().relative_norm() == field7.one()
    # 1 + d + d^2 = 0 (mod p), so the norm of zeta collapses to 1
    d = field7.d
    assert (1 + d + d * d) % field7.p == 0
    assert field7.xi().relative_norm() == field7.one()
    c = Rat(-5, 3)
    assert field7.from_rational(c).relative_norm() == field7.from_rational(c**3)


def test_relative_norm_multiplicative_and_in_K(field7, rng):
    for _ in range(50):
        x = random_field_elem(field7, rng)
        y = random_field_elem(field7, rng)
        assert (x * y).relative_norm() == x.relative_norm() * y.relative_norm()
        assert x.relative_norm().is_in_K()


def test_is_in_K(field7):
    assert field7.from_rational(Rat(3, 2)).is_in_K()
    assert not field7.xi().is_in_K()
    eta0 = field7.gaussian_periods()[0]
    assert eta0.is_in_K()


def test_gaussian_periods_p7(field7):
    assert field7.cosets() == ((1, 2, 4), (3, 5, 6))
    eta0, eta1 = field7.gaussian_periods()
    assert eta0 == field7.zeta(1) + field7.zeta(2) + field7.zeta(4)
    assert eta1 == field7.zeta(3) + field7.zeta(5) + field7.zeta(6)
    assert eta0 + eta1 == field7.from_rational(-1)


def test_gaussian_periods_structure(field13):
    periods = field13.gaussian_periods()
    assert len(periods) == field13.k
    assert all(eta.is_in_K() for eta in periods)
    matrix = [list(eta.coords) for eta in periods]
    assert linalg.rank(matrix) == field13.k


def test_decompose_trivial_cases(field7):
    eta0 = field7.gaussian_periods()[0]
    k0, k1, k2 = eta0.decompose_over_K()
    assert (k0, k1, k2) == (eta0, field7.zero(), field7.zero())
    k0, k1, k2 = field7.xi().decompose_over_K()
    assert (k0, k1, k2) == (field7.zero(), field7.one(), field7.zero())


def test_decompose_roundtrip(field7, field13, rng):
    xi3 = field7.zeta(3)
    k0, k1, k2 = xi3.decompose_over_K()
    z = field7.xi()
    assert k0 + k1 * z + k2 * z * z == xi3
    for field in (field7, field13):
        z = field.xi()
        for _ in range(100):
            x = random_field_elem(field, rng)
            k0, k1, k2 = x.decompose_over_K()
            assert all(part.is_in_K() for part in (k0, k1, k2))
            assert k0 + k1 * z + k2 * z * z == x


def test_element_equality_and_hash(field7):
    a = field7.element([1, 2, 3, 4, 5, 6])
    b = field7.element([Rat(2, 2), 2, 3, 4, 5, 6])
    assert a == b and hash(a) == hash(b)
    assert a != field7.one()
    assert field7.from_rational(3) == 3
