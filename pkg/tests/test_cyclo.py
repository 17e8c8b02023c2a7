"""Cyclotomic integers, characters, Gauss/Jacobi sums, reduction mod P."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slce.cyclo import (
    Character,
    CycInt,
    IdealSpec,
    cyclotomic_polynomial,
    gauss_sum_numeric,
    ideal_membership,
    jacobi_sum,
    k_sum,
    quadratic_gauss_closed,
    reduce_mod_P,
    semiprimitive_gauss_closed,
)
from slce.errors import ConductorMismatch, NotSemiprimitive
from slce.ff import build_field, build_residue_field


def numeric_jacobi(field, a1, a2):
    """Oracle: J as a complex float from raw roots of unity and dlogs."""
    qm1 = field.q - 1
    total = 0j
    for code in range(1, field.q):
        y = field.add_codes(1, field.neg_code(code))
        if y == 0:
            continue
        e1 = a1 * field.dlog_code(code)
        e2 = a2 * field.dlog_code(y)
        total += cmath.exp(2j * math.pi * ((e1 + e2) % qm1) / qm1)
    return total


class TestCyclotomicPolynomial:
    @pytest.mark.parametrize("N,coeffs", [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (12, (1, 0, -1, 0, 1)),
    ])
    def test_known(self, N, coeffs):
        assert cyclotomic_polynomial(N) == coeffs

    def test_product_over_divisors(self):
        # prod over d | N of Phi_d = X^N - 1, checked by degree and at X = 2
        from slce.numth import divisors

        for N in (6, 8, 9, 10, 15, 16, 20, 36):
            prod = 1
            for d in divisors(N):
                c = cyclotomic_polynomial(d)
                prod *= sum(ci * 2**i for i, ci in enumerate(c))
            assert prod == 2**N - 1


class TestCycIntArithmetic:
    def test_primitive_cube_roots_sum(self):
        assert CycInt.root(3, 1) + CycInt.root(3, 2) == -1

    def test_i_squared(self):
        z4 = CycInt.root(4, 1)
        assert z4 * z4 == -1

    def test_embed(self):
        assert CycInt.root(3, 1).embed(12) == CycInt.root(12, 4)

    def test_embed_requires_divisibility(self):
        with pytest.raises(ConductorMismatch):
            CycInt.root(3, 1).embed(8)

    def test_conductor_mismatch_on_add(self):
        with pytest.raises(ConductorMismatch):
            CycInt.root(3, 1) + CycInt.root(4, 1)

    def test_conj_is_inverse_on_roots(self):
        for N in (5, 8, 12):
            for e in range(N):
                z = CycInt.root(N, e)
                assert z * z.conj() == 1

    def test_embedding_is_ring_map(self):
        x = CycInt.from_exponent_counts(5, [1, -2, 0, 3, 0])
        y = CycInt.from_exponent_counts(5, [0, 1, 1, 0, -1])
        assert (x * y).embed(15) == x.embed(15) * y.embed(15)
        assert (x + y).embed(15) == x.embed(15) + y.embed(15)

    @given(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
           st.lists(st.integers(-9, 9), min_size=4, max_size=4),
           st.lists(st.integers(-9, 9), min_size=4, max_size=4))
    @settings(max_examples=60)
    def test_ring_axioms_conductor_5(self, a, b, c):
        x, y, z = (CycInt(5, tuple(v)) for v in (a, b, c))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @pytest.mark.parametrize("N", [2, 4, 8, 12, 15, 24])
    def test_ring_axioms_other_conductors(self, N):
        import random

        from slce.numth import euler_phi

        rng = random.Random(N)
        phi = euler_phi(N)
        for _ in range(25):
            x, y, z = (
                CycInt(N, tuple(rng.randrange(-9, 10) for _ in range(phi)))
                for _ in range(3)
            )
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert (x * y).conj() == x.conj() * y.conj()

    def test_numeric_embedding(self):
        x = CycInt.from_exponent_counts(7, [3, -1, 0, 2, 0, 0, 1])
        ref = sum(c * cmath.exp(2j * math.pi * e / 7)
                  for e, c in enumerate([3, -1, 0, 2, 0, 0, 1]))
        assert abs(x.to_complex() - ref) < 1e-9

    def test_json(self):
        x = CycInt.from_int(3, 5)
        assert x.to_json() == {"conductor": 3, "coeffs": ["5", "0"]}


class TestCharacters:
    def test_trivial_everywhere_one(self):
        F = build_field(7, 1)
        eps = Character.trivial(F)
        for code in range(1, 7):
            assert eps.value(F.element(code)) == 1
        assert eps.value(F.zero).is_zero

    def test_quadratic_on_squares(self):
        F = build_field(7, 1)
        rho = Character.quadratic(F)
        for n in range(6):
            x = F.alpha ** n
            expect = 1 if n % 2 == 0 else -1
            assert rho.value(x) == CycInt.from_int(2, expect)

    def test_cubic_at_alpha(self):
        F = build_field(7, 1)
        chi = Character(F, 2)
        assert chi.order == 3
        assert chi.value(F.alpha) == CycInt.root(3, 1)

    def test_multiplicativity(self):
        F = build_field(3, 2)
        chi = Character(F, 3)
        N = chi.order
        for a in range(1, 9):
            for b in range(1, 9):
                x, y = F.element(a), F.element(b)
                assert chi.value(x * y) == chi.value(x) * chi.value(y)

    def test_orthogonality_exact(self):
        # summing the d-power residue characters flags membership in the
        # subgroup of d-th powers, exactly
        for p, m in [(5, 1), (13, 1), (3, 2), (17, 1), (5, 2)]:
            F = build_field(p, m)
            for d in (2, 4, 8):
                if (F.q - 1) % d:
                    continue
                for n in range(F.q - 1):
                    x = F.alpha ** n
                    total = CycInt.zero(d)
                    for i in range(d):
                        total = total + Character.eta(F, i, d).value(x).embed(d)
                    expect = d if n % d == 0 else 0
                    assert total == CycInt.from_int(d, expect)

    def test_coset_sums_vanish_exact(self):
        # sum of an order-d1 character over any coset of the index-d2
        # subgroup vanishes when gcd(d1, d2) = 1, d1 > 1
        F = build_field(13, 1)
        for d1, d2 in [(3, 2), (3, 4), (2, 3)]:
            chi = Character.eta(F, 1, d1)
            for i in range(d2):
                total = CycInt.zero(d1)
                for n in range(i, F.q - 1, d2):
                    total = total + chi.value(F.alpha ** n)
                assert total.is_zero


class TestJacobiSums:
    def test_f5_quadratic_pair(self):
        # oracle: three-term sum over x in {2, 3, 4} with residue signs
        squares = {x * x % 5 for x in range(1, 5)}
        total = 0
        for x in range(2, 5):
            s1 = 1 if x in squares else -1
            s2 = 1 if (1 - x) % 5 in squares else -1
            total += s1 * s2
        assert total == -1
        F = build_field(5, 1)
        rho = Character.quadratic(F)
        assert jacobi_sum(rho, rho) == CycInt.from_int(2, -1)

    def test_trivial_pair_counts(self):
        for p, m in [(5, 1), (7, 1), (3, 2)]:
            F = build_field(p, m)
            eps = Character.trivial(F)
            assert jacobi_sum(eps, eps) == CycInt.from_int(1, F.q - 2)

    def test_f7_norm(self):
        F = build_field(7, 1)
        J = jacobi_sum(Character.quadratic(F), Character(F, 2))
        assert J * J.conj() == 7

    def test_norm_is_q(self):
        for p, m in [(7, 1), (11, 1), (13, 1), (3, 2)]:
            F = build_field(p, m)
            qm1 = F.q - 1
            for a1 in range(1, qm1):
                for a2 in range(1, qm1):
                    if (a1 + a2) % qm1 == 0:
                        continue
                    J = jacobi_sum(Character(F, a1), Character(F, a2))
                    N = J.conductor
                    assert J * J.conj() == CycInt.from_int(N, F.q)

    def test_against_numeric_oracle(self):
        F = build_field(13, 1)
        for a1 in range(0, 12, 2):
            for a2 in range(1, 12, 3):
                J = jacobi_sum(Character(F, a1), Character(F, a2))
                ref = numeric_jacobi(F, a1, a2)
                assert abs(J.to_complex() - ref) < 1e-8

    def test_symmetry(self):
        F = build_field(11, 1)
        for a1, a2 in [(2, 5), (1, 3), (4, 6)]:
            assert jacobi_sum(Character(F, a1), Character(F, a2)) == jacobi_sum(
                Character(F, a2), Character(F, a1)
            )


class TestKSums:
    def test_f5_k_of_rho(self):
        F = build_field(5, 1)
        assert k_sum(Character.quadratic(F)) == CycInt.from_int(2, -1)

    def test_f7_k_of_trivial(self):
        F = build_field(7, 1)
        assert k_sum(Character.trivial(F)) == CycInt.from_int(2, -1)

    def test_f25_semiprimitive_value(self):
        # direct summation fixes the sign: +5, the negative of G(rho)
        F = build_field(5, 2)
        K = k_sum(Character.eta(F, 1, 3))
        assert K == CycInt.from_int(6, 5)
        assert quadratic_gauss_closed(5, 2).as_int() == -5

    def test_matches_jacobi(self):
        F = build_field(13, 1)
        rho = Character.quadratic(F)
        for a in range(12):
            chi = Character(F, a)
            assert k_sum(chi) == jacobi_sum(rho, chi)

    def test_forced_conductor(self):
        F = build_field(7, 1)
        chi = Character(F, 2)
        K_odd = k_sum(chi, conductor=3)
        assert K_odd.conductor == 3
        assert abs(K_odd.to_complex() - k_sum(chi).to_complex()) < 1e-9

    def test_conductor_must_contain_order(self):
        F = build_field(7, 1)
        with pytest.raises(ConductorMismatch):
            k_sum(Character(F, 1), conductor=4)


class TestGaussSums:
    def test_trivial_character(self):
        for p, m in [(5, 1), (7, 1), (3, 2)]:
            F = build_field(p, m)
            assert abs(gauss_sum_numeric(Character.trivial(F)) + 1) < 1e-9

    def test_modulus_sqrt_q(self):
        for p, m in [(5, 1), (7, 1), (3, 2), (11, 1)]:
            F = build_field(p, m)
            for a in range(1, F.q - 1):
                g = gauss_sum_numeric(Character(F, a))
                assert abs(abs(g) - math.sqrt(F.q)) < 1e-8

    def test_f5_quadratic(self):
        F = build_field(5, 1)
        g = gauss_sum_numeric(Character.quadratic(F))
        assert abs(g - math.sqrt(5)) < 1e-9


class TestClosedForms:
    @pytest.mark.parametrize("p,m,expect", [
        (5, 1, complex(math.sqrt(5), 0)),
        (3, 1, complex(0, math.sqrt(3))),
        (3, 2, complex(3, 0)),
    ])
    def test_quadratic_examples(self, p, m, expect):
        assert abs(quadratic_gauss_closed(p, m).to_complex() - expect) < 1e-12

    def test_integer_form(self):
        v = quadratic_gauss_closed(3, 2)
        assert v.is_rational_integer and v.as_int() == 3
        with pytest.raises(ValueError):
            quadratic_gauss_closed(5, 1).as_int()

    def test_semiprimitive_magnitudes(self):
        r = semiprimitive_gauss_closed(5, 2, 3)
        assert r.magnitude == 5 and abs(r.value) == 5
        r = semiprimitive_gauss_closed(5, 2, 6)
        assert r.magnitude == 5
        r = semiprimitive_gauss_closed(3, 4, 5)
        assert r.magnitude == 9 and not r.formula_mismatch

    def test_semiprimitive_sign_matches_numeric(self):
        # the printed parity rule should agree with the numeric sum
        for p, m, N in [(5, 2, 3), (5, 2, 6), (3, 4, 5), (3, 4, 10), (11, 2, 3),
                        (13, 2, 7), (3, 2, 4), (7, 2, 4)]:
            r = semiprimitive_gauss_closed(p, m, N)
            assert not r.formula_mismatch, (p, m, N)

    def test_not_semiprimitive(self):
        with pytest.raises(NotSemiprimitive):
            semiprimitive_gauss_closed(7, 2, 3)


class TestReduceModP:
    def test_examples(self):
        rf = build_residue_field(3)
        spec = IdealSpec(rf, 0)
        assert reduce_mod_P(CycInt.from_int(3, 2), spec) == rf.zero
        assert reduce_mod_P(CycInt.root(3, 1), spec) == rf.gamma

    def test_k7_collapse(self):
        # 1 + z7 + z7^3 dies: gamma^3 = gamma + 1 under X^3 + X + 1
        rf = build_residue_field(7)
        spec = IdealSpec(rf, 0)
        x = CycInt.from_exponent_counts(7, [1, 1, 0, 1, 0, 0, 0])
        assert reduce_mod_P(x, spec) == rf.zero

    def test_ring_homomorphism(self):
        import random

        rng = random.Random(7)
        rf = build_residue_field(5)
        spec = IdealSpec(rf, 0)
        for _ in range(40):
            a = CycInt(5, tuple(rng.randrange(-20, 20) for _ in range(4)))
            b = CycInt(5, tuple(rng.randrange(-20, 20) for _ in range(4)))
            assert reduce_mod_P(a + b, spec) == reduce_mod_P(a, spec) + reduce_mod_P(b, spec)
            assert reduce_mod_P(a * b, spec) == reduce_mod_P(a, spec) * reduce_mod_P(b, spec)

    def test_kernel_contains_generators(self):
        for k in (3, 5, 7, 9):
            rf = build_residue_field(k)
            spec = IdealSpec(rf, 0)
            assert reduce_mod_P(CycInt.from_int(k, 2), spec) == rf.zero
            # f_can evaluated at z_k
            counts = [0] * k
            for i in range(rf.f + 1):
                if (rf.modulus >> i) & 1:
                    counts[i] += 1
            assert reduce_mod_P(CycInt.from_exponent_counts(k, counts), spec) == rf.zero

    def test_conductor_checks(self):
        rf = build_residue_field(3)
        with pytest.raises(ConductorMismatch):
            reduce_mod_P(CycInt.root(5, 1), IdealSpec(rf, 0))
        with pytest.raises(ConductorMismatch):
            reduce_mod_P(CycInt.root(3, 1), IdealSpec(rf, 1))


class TestIdealMembership:
    def test_zero(self):
        spec = IdealSpec(build_residue_field(3), 0)
        assert ideal_membership(CycInt.zero(3), spec)

    def test_twice_unit_not_in(self):
        spec = IdealSpec(build_residue_field(3), 0)
        x = CycInt.from_exponent_counts(3, [2, 2, 0])
        assert not ideal_membership(x, spec)

    def test_four_in_2p(self):
        spec = IdealSpec(build_residue_field(3), 0)
        assert ideal_membership(CycInt.from_int(3, 4), spec)

    def test_agrees_with_reduction_at_h0(self):
        import random

        rng = random.Random(11)
        rf = build_residue_field(7)
        spec = IdealSpec(rf, 0)
        for _ in range(60):
            x = CycInt(7, tuple(rng.randrange(-8, 8) for _ in range(6)))
            if any(c % 2 for c in x.coeffs):
                expect = False
            else:
                half = CycInt(7, tuple(c // 2 for c in x.coeffs))
                expect = reduce_mod_P(half, spec) == rf.zero
            assert ideal_membership(x, spec) == expect

    def test_h1_power_of_two_scaling(self):
        rf = build_residue_field(7)
        spec1 = IdealSpec(rf, 1)
        assert spec1.conductor == 14 and spec1.power == 4
        # 4 * (root of unity) is not in 4 P O_L; 4 * f_can(z14^2) is
        assert not ideal_membership(4 * CycInt.root(14, 1), spec1)
        counts = [0] * 14
        for i in range(rf.f + 1):
            if (rf.modulus >> i) & 1:
                counts[2 * i % 14] += 1
        fcan_at_z = CycInt.from_exponent_counts(14, counts)
        assert ideal_membership(4 * fcan_at_z, spec1)

    def test_conductor_mismatch(self):
        spec = IdealSpec(build_residue_field(3), 1)
        with pytest.raises(ConductorMismatch):
            ideal_membership(CycInt.root(3, 1), spec)
