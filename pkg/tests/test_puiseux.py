import random
from fractions import Fraction as Q

import pytest

from f2puiseux import (DenominatorOverflow, F2Series, Indistinguishable,
                       L0Element, NotAUnit, PuiseuxUnit, compose, decompose,
                       decompose_raw, element_inv, element_mul, element_pow,
                       element_root, element_scalar_mul, elements_agree,
                       normalize, scalar_mul_unit, unit_inv, unit_mul,
                       unit_pow, unit_root, unit_sqrt, units_agree)

from oracles import term_product, unit_terms


def U(den, bits, prec):
    return PuiseuxUnit(den, F2Series(bits, prec))


def random_unit(rng, den, prec):
    return U(den, rng.getrandbits(prec) | 1, prec)


class TestNormalization:
    def test_integer_support_reduces(self):
        u = U(2, 0b101, 4)  # 1 + s^2 on the half grid, aprec 2
        assert u.den == 1 and u.body.coeffs == 0b11 and u.body.prec == 2

    def test_already_minimal(self):
        u = U(2, 0b11, 4)
        assert u.den == 2 and u.body.coeffs == 0b11

    def test_gcd_reduction(self):
        u = U(6, 0b10101, 6)  # support {0,2,4} and prec 6 share the factor 2
        assert u.den == 3 and u.body.coeffs == 0b111 and u.body.prec == 3

    def test_prec_blocks_inexact_reduction(self):
        # support is even but the precision index is odd: reducing would
        # claim knowledge of a coefficient slot that was never computed
        u = U(2, 0b101, 5)
        assert u.den == 2 and u.body.prec == 5

    def test_normalize_idempotent(self):
        rng = random.Random(3)
        for _ in range(50):
            u = random_unit(rng, rng.choice((1, 2, 3, 4, 6, 12)),
                            rng.randrange(1, 40))
            again = normalize(u.den, u.body)
            assert again.den == u.den and again.body.coeffs == u.body.coeffs

    def test_nonunit_rejected(self):
        with pytest.raises(NotAUnit):
            U(2, 0b10, 3)

    def test_tower_compatibility(self):
        # re-gridding onto a finer grid leaves the represented element fixed
        rng = random.Random(4)
        for _ in range(50):
            u = random_unit(rng, rng.choice((1, 2, 3)), rng.randrange(1, 30))
            m = rng.choice((2, 3, 4, 5))
            from f2puiseux.bitops import spread
            regridded = U(u.den * m, spread(u.body.coeffs, m),
                          u.body.prec * m)
            assert regridded.den == u.den  # normalization undoes the lift
            assert regridded.body.coeffs == u.body.coeffs
            assert units_agree(regridded, u)


class TestUnitMul:
    def test_mixed_grids(self):
        # (1+x)(1+x^(1/2)) on the common half grid
        out = unit_mul(U(1, 0b11, 2), U(2, 0b11, 4))
        assert out.den == 2 and out.body.coeffs == 0b1111

    def test_identity(self):
        rng = random.Random(9)
        for _ in range(20):
            u = random_unit(rng, 3, 12)
            assert unit_mul(u, PuiseuxUnit.one(1)) == u

    def test_inverse_law(self):
        rng = random.Random(10)
        for _ in range(20):
            u = random_unit(rng, 4, 17)
            assert unit_mul(u, unit_inv(u)).is_identity()

    def test_matches_term_oracle(self):
        rng = random.Random(12)
        for _ in range(60):
            u = random_unit(rng, rng.choice((1, 2, 3, 4, 6)),
                            rng.randrange(1, 24))
            v = random_unit(rng, rng.choice((1, 2, 3, 4, 6)),
                            rng.randrange(1, 24))
            prod = unit_mul(u, v)
            want = term_product(unit_terms(u), unit_terms(v), prod.aprec)
            assert unit_terms(prod) == want

    def test_cap_enforced(self):
        with pytest.raises(DenominatorOverflow):
            unit_mul(U(5, 1, 1), U(7, 1, 1), den_cap=20)


class TestUnitInv:
    def test_geometric(self):
        out = unit_inv(U(2, 0b11, 4))
        assert out.body.coeffs == 0b1111 and out.aprec == 2

    def test_preserves_precision(self):
        u = U(3, 0b1011, 7)
        assert unit_inv(u).aprec == u.aprec


class TestUnitSqrt:
    def test_integer_becomes_half_grid(self):
        out = unit_sqrt(U(1, 0b11, 2))
        assert out.den == 2 and out.body.coeffs == 0b11
        assert out.aprec == 1

    def test_identity(self):
        assert unit_sqrt(PuiseuxUnit.one(4)).is_identity()

    def test_half_grid_example(self):
        out = unit_sqrt(U(2, 0b111, 4))
        assert out.den == 4 and out.body.coeffs == 0b111
        assert unit_pow(out, 2) == U(2, 0b111, 4)

    def test_square_round_trip(self):
        rng = random.Random(21)
        for _ in range(60):
            u = random_unit(rng, rng.choice((1, 2, 3, 6)),
                            rng.randrange(1, 50))
            r = unit_sqrt(u)
            assert r.aprec == u.aprec / 2
            assert units_agree(unit_pow(r, 2), u)

    def test_cap_enforced(self):
        with pytest.raises(DenominatorOverflow):
            unit_sqrt(U(16, 0b11, 2), den_cap=16)


class TestUnitRoot:
    def test_k_one(self):
        u = U(3, 0b101, 4)
        assert unit_root(u, 1) == u

    def test_cube_root(self):
        out = unit_root(U(1, 0b11, 3), 3)
        assert out.den == 1 and out.body.coeffs == 0b111

    def test_sixth_root(self):
        out = unit_root(U(1, 0b11, 3), 6)
        assert out.den == 2 and out.body.coeffs == 0b111
        assert out.aprec == Q(3, 2)

    def test_round_trip_and_contraction(self):
        rng = random.Random(31)
        for _ in range(40):
            u = random_unit(rng, rng.choice((1, 2, 3)), rng.randrange(4, 64))
            k = rng.randrange(1, 13)
            two_part = k & -k
            r = unit_root(u, k)
            assert r.aprec == u.aprec / two_part
            assert units_agree(unit_pow(r, k), u)
            assert units_agree(unit_root(unit_pow(u, k), k), u)

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 7, 9])
    def test_root_uniqueness_by_perturbation(self, k):
        rng = random.Random(100 + k)
        u = random_unit(rng, 2, 128)
        r = unit_root(u, k)
        # flip the first fractional coefficient of the root: the result
        # still has residue 1, but its k-th power must leave u
        tampered = PuiseuxUnit(
            r.den, F2Series(r.body.coeffs ^ 2, r.body.prec))
        assert not units_agree(unit_pow(tampered, k), u)


class TestScalarAction:
    def test_two_thirds_example(self):
        out = scalar_mul_unit(Q(2, 3), U(1, 0b11, 3))
        assert out.den == 1 and out.body.coeffs == 0b101

    def test_one_and_zero(self):
        u = U(2, 0b1011, 5)
        assert scalar_mul_unit(1, u) == u
        assert scalar_mul_unit(0, u).is_identity()

    def test_half_is_sqrt(self):
        out = scalar_mul_unit(Q(1, 2), U(1, 0b11, 2))
        assert out.den == 2 and out.body.coeffs == 0b11

    def test_negative_scalar(self):
        u = U(1, 0b111, 6)
        assert units_agree(scalar_mul_unit(-1, u), unit_inv(u))

    def test_power_and_root_commute(self):
        rng = random.Random(41)
        for _ in range(30):
            u = random_unit(rng, rng.choice((1, 2, 3)), 48)
            p = rng.randrange(-6, 7)
            q = rng.randrange(1, 7)
            a = unit_root(unit_pow(u, p), q)
            b = unit_pow(unit_root(u, q), p)
            assert units_agree(a, b)

    def test_action_laws_sampled(self):
        rng = random.Random(43)
        for _ in range(25):
            u = random_unit(rng, rng.choice((1, 2, 4)), 64)
            v = random_unit(rng, rng.choice((1, 2, 4)), 64)
            r = Q(rng.randrange(-5, 6), rng.randrange(1, 6))
            s = Q(rng.randrange(-5, 6), rng.randrange(1, 6))
            assert units_agree(
                scalar_mul_unit(r + s, u),
                unit_mul(scalar_mul_unit(r, u), scalar_mul_unit(s, u)))
            assert units_agree(
                scalar_mul_unit(r, unit_mul(u, v)),
                unit_mul(scalar_mul_unit(r, u), scalar_mul_unit(r, v)))
            assert units_agree(
                scalar_mul_unit(r * s, u),
                scalar_mul_unit(r, scalar_mul_unit(s, u)))


class TestElements:
    def test_valuations_add(self):
        a = compose(Q(1, 2), PuiseuxUnit.one(1))
        b = compose(Q(1, 3), PuiseuxUnit.one(1))
        out = element_mul(a, b)
        assert out.val == Q(5, 6) and out.unit.is_identity()

    def test_inverse_cancels(self):
        rng = random.Random(51)
        for _ in range(20):
            a = L0Element(Q(rng.randrange(-9, 9), rng.randrange(1, 9)),
                          random_unit(rng, 2, 20))
            prod = element_mul(a, element_inv(a))
            assert prod.val == 0 and prod.unit.is_identity()

    def test_mul_splits_componentwise(self):
        rng = random.Random(52)
        for _ in range(30):
            a = L0Element(Q(rng.randrange(-9, 9), rng.randrange(1, 9)),
                          random_unit(rng, rng.choice((1, 2, 3)), 24))
            b = L0Element(Q(rng.randrange(-9, 9), rng.randrange(1, 9)),
                          random_unit(rng, rng.choice((1, 2, 6)), 24))
            val, unit = decompose(element_mul(a, b))
            assert val == a.val + b.val
            assert units_agree(unit, unit_mul(a.unit, b.unit))

    def test_scalar_mul_example(self):
        # (2/3) . x^(1/2)(1+x): valuation scales, unit becomes 1+x^2
        a = L0Element(Q(1, 2), U(1, 0b11, 3))
        out = element_scalar_mul(Q(2, 3), a)
        assert out.val == Q(1, 3)
        assert out.unit.body.coeffs == 0b101

    def test_scalar_zero_and_pow(self):
        a = L0Element(Q(3, 2), U(1, 0b11, 4))
        zero = element_scalar_mul(0, a)
        assert zero.val == 0 and zero.unit.is_identity()
        sq = element_pow(a, 2)
        assert sq.val == 3 and sq.unit.body.coeffs == 0b101
        assert elements_agree(element_pow(a, -1), element_inv(a))

    def test_element_root(self):
        a = L0Element(Q(1), PuiseuxUnit.one(4))
        out = element_root(a, 2)
        assert out.val == Q(1, 2)


class TestDecomposeRaw:
    def test_leading_term_extraction(self):
        out = decompose_raw([Q(-5, 3), Q(-4, 3)], Q(2))
        assert out.val == Q(-5, 3)
        assert out.unit.den == 3 and out.unit.body.coeffs == 0b11
        assert out.unit.aprec == Q(11, 3)

    def test_trivial(self):
        out = decompose_raw([0], 1)
        assert out.val == 0 and out.unit.is_identity()

    def test_half_grid_example(self):
        out = decompose_raw([Q(1, 2), 1, Q(3, 2)], 2)
        assert out.val == Q(1, 2)
        assert out.unit.den == 2 and out.unit.body.coeffs == 0b111
        assert out.unit.aprec == Q(3, 2)

    def test_duplicate_terms_cancel(self):
        out = decompose_raw([Q(1, 2), Q(1, 2), 1], 2)
        assert out.val == 1

    def test_all_cancelled_is_indistinguishable(self):
        with pytest.raises(Indistinguishable):
            decompose_raw([Q(1, 2), Q(1, 2)], 2)

    def test_empty_is_indistinguishable(self):
        with pytest.raises(Indistinguishable):
            decompose_raw([], 3)

    def test_term_beyond_precision_rejected(self):
        with pytest.raises(ValueError):
            decompose_raw([Q(1, 2)], Q(1, 4))

    def test_compose_decompose_identity(self):
        rng = random.Random(61)
        for _ in range(40):
            u = random_unit(rng, rng.choice((1, 2, 3, 4)),
                            rng.randrange(1, 30))
            val = Q(rng.randrange(-20, 20), rng.randrange(1, 10))
            a = compose(val, u)
            got_val, got_unit = decompose(a)
            assert got_val == val
            assert got_unit.den == u.den
            assert got_unit.body.coeffs == u.body.coeffs
            # re-expand to raw terms and decompose again
            raw = [val + e for e in u.exponents()]
            back = decompose_raw(raw, val + u.aprec)
            assert back.val == val
            assert back.unit.den == u.den
            assert back.unit.body.coeffs == u.body.coeffs
            assert back.unit.body.prec == u.body.prec

    def test_cap_enforced(self):
        with pytest.raises(DenominatorOverflow):
            decompose_raw([0, Q(1, 97)], 1, den_cap=50)


class TestDeepPrecision:
    """Sparse series with very large precision indices must stay cheap."""

    def test_operations_do_not_materialize_the_precision(self):
        deep = 10 ** 15
        a = L0Element(Q(-3), U(1, (1 << 7) | 1, deep))
        b = L0Element(Q(2), U(1, (1 << 2) | 1, deep + 1))
        ab = element_mul(a, b)
        assert ab.val == -1
        assert ab.unit.body.prec == deep
        assert ab.unit.body.coeffs == 1 | (1 << 2) | (1 << 7) | (1 << 9)
        assert repr(ab.unit).startswith("PuiseuxUnit(1 + x^(2)")

    def test_torsion_of_one_plus_x_up_to_twenty(self):
        # 1 + x: no power up to 20 collapses to 1 at precision 64
        u = U(1, 0b11, 64)
        p = PuiseuxUnit.one(64)
        for n in range(1, 21):
            p = unit_mul(p, u)
            assert not p.is_identity()
