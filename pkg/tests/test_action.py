import cmath
import math

import numpy as np
import pytest

from hopfact.action import (
    SU2_CONJUGATOR,
    ActionKind,
    ActionSpec,
    act,
    d_pow,
    evaluate_formula,
    example_action,
    example_lambda,
    match_example_to_type1,
    solve_transport,
    type2_as_type1,
)
from hopfact.cmatrix import random_unitary, su_decompose, unitarity_residual
from hopfact.hopf import HopfParams, OrbitPoint, deck_equal, orbit_distance

TWO_PI = 2 * math.pi


def demo_spec():
    params = HopfParams(d=4, n=2, m=1)
    return ActionSpec(ActionKind.TYPE1, 0, 0, 1, np.eye(2), params)


def rand_point(params, seed):
    rng = np.random.Generator(np.random.Philox(seed))
    return OrbitPoint(params, rng.standard_normal(params.n)
                      + 1j * rng.standard_normal(params.n))


class TestDPow:
    def test_positive_real_base(self):
        assert d_pow(2, 0.5) == pytest.approx(math.sqrt(2))

    def test_negative_base_forced_branch(self):
        # arg(-2) = pi, so (-2)^0.5 = sqrt(2) * e^{i pi/2} = i sqrt(2)
        assert d_pow(-2, 0.5) == pytest.approx(1j * math.sqrt(2))

    def test_zero_base_rejected(self):
        with pytest.raises(ValueError):
            d_pow(0, 1.0)

    @pytest.mark.parametrize("seed", range(10))
    def test_integer_exponents_match_repeated_multiplication(self, seed):
        rng = np.random.Generator(np.random.Philox(seed))
        d = complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) or 1.5
        for k in range(-3, 4):
            assert abs(d_pow(d, k) - d ** k) < 1e-12 * abs(d) ** k + 1e-12


class TestActionSpec:
    def test_rejects_zero_r(self):
        with pytest.raises(ValueError):
            ActionSpec(ActionKind.TYPE1, 0, 0, 0, np.eye(2), HopfParams(d=4, n=2, m=1))

    def test_rejects_ill_conditioned_C(self):
        c = np.array([[1.0, 1.0], [1.0, 1.0 + 1e-12]])
        with pytest.raises(ValueError):
            ActionSpec(ActionKind.TYPE1, 0, 0, 1, c, HopfParams(d=4, n=2, m=1))

    def test_sigma_exact_rational(self):
        spec = ActionSpec(ActionKind.TYPE2, 1, 2, 1, np.eye(3),
                          HopfParams(d=2, n=3, m=4))
        # -1 + (1 + 2/4)*3 = 7/2
        assert spec.sigma.numerator == 7 and spec.sigma.denominator == 2


class TestAct:
    def test_identity_fixes_points(self):
        spec = demo_spec()
        z = rand_point(spec.params, 1)
        assert deck_equal(act(spec, np.eye(2), z), z)

    def test_hand_evaluated_scalar_case(self):
        spec = demo_spec()
        z = rand_point(spec.params, 2)
        out = act(spec, np.diag([1j, 1j]), z)
        assert np.max(np.abs(out.rep - 2j * z.rep)) < 1e-12

    def test_group_law_modulo_deck_hand_case(self):
        spec = demo_spec()
        z = rand_point(spec.params, 3)
        a = np.diag([1j, 1j])
        twice = act(spec, a, act(spec, a, z))
        assert np.max(np.abs(twice.rep - (-4) * z.rep)) < 1e-11
        direct = act(spec, -np.eye(2), z)
        assert np.max(np.abs(direct.rep - (-1) * z.rep)) < 1e-12
        assert deck_equal(twice, direct)

    def test_rejects_dimension_mismatch(self):
        spec = demo_spec()
        with pytest.raises(ValueError):
            act(spec, np.eye(3), rand_point(spec.params, 4))

    def test_rejects_non_unitary(self):
        spec = demo_spec()
        with pytest.raises(ValueError):
            act(spec, 2 * np.eye(2), rand_point(spec.params, 5))

    @pytest.mark.parametrize("kind,n,m", [(ActionKind.TYPE1, 2, 1),
                                          (ActionKind.TYPE2, 3, 2),
                                          (ActionKind.TYPE1, 3, 4)])
    def test_group_law_random(self, kind, n, m):
        params = HopfParams(d=1 + 2j, n=n, m=m)
        spec = ActionSpec(kind, 1, -1, 2, np.eye(n), params)
        for i in range(25):
            a1 = random_unitary(n, 10 + 2 * i)
            a2 = random_unitary(n, 11 + 2 * i)
            z = rand_point(params, 600 + i)
            lhs = act(spec, a1 @ a2, z)
            rhs = act(spec, a1, act(spec, a2, z))
            assert orbit_distance(lhs.rep, rhs.rep, params) < 1e-8


class TestWellDefinedness:
    def test_branch_shifts_stay_in_orbit(self):
        params = HopfParams(d=0.5, n=3, m=2)
        spec = ActionSpec(ActionKind.TYPE2, -1, 2, -2, np.eye(3), params)
        for i in range(10):
            a = random_unitary(3, 50 + i)
            z = rand_point(params, 700 + i)
            base = act(spec, a, z)
            ue = su_decompose(a)
            for k in range(3):
                for ell in range(-2, 3):
                    t2 = ue.t + TWO_PI * k / 3 + TWO_PI * ell
                    b2 = cmath.exp(-2j * math.pi * k / 3) * ue.su_part
                    shifted = evaluate_formula(spec, t2, b2, z.rep)
                    assert orbit_distance(shifted, base.rep, params) < 1e-8


class TestExampleAction:
    def test_su_element_acts_linearly(self):
        params = HopfParams(d=4, n=2, m=1)
        from hopfact.cmatrix import random_su
        b = random_su(2, 8)
        z = rand_point(params, 9)
        out = example_action(params, b, z)
        assert np.max(np.abs(out.rep - b @ z.rep)) < 1e-12

    def test_lambda_definition(self):
        for d in (4, -2, 1 + 2j):
            params = HopfParams(d=d, n=3, m=1)
            lam = example_lambda(params)
            assert cmath.exp(TWO_PI * (lam - 1j) / 3) == pytest.approx(complex(d))

    def test_t_shift_gives_deck_factor(self):
        # shifting t by 2*pi multiplies the raw output by d^n
        params = HopfParams(d=4, n=2, m=1)
        a = random_unitary(2, 13)
        z = rand_point(params, 14)
        ue = su_decompose(a)
        lam = example_lambda(params)
        raw = cmath.exp(lam * ue.t) * (ue.su_part @ z.rep)
        shifted = cmath.exp(lam * (ue.t + TWO_PI)) * (ue.su_part @ z.rep)
        assert np.max(np.abs(shifted - params.d ** params.n * raw)) < 1e-9
        moved = OrbitPoint(params, shifted)
        assert deck_equal(OrbitPoint(params, raw), moved, 1e-9)


class TestMatchExample:
    @pytest.mark.parametrize("d,n", [(4, 2), (-2, 3), (1 + 2j, 2)])
    def test_match_and_verify(self, d, n):
        params = HopfParams(d=d, n=n, m=1)
        spec = match_example_to_type1(params, samples=50)
        assert (spec.kind, spec.p, spec.q, spec.r) == (ActionKind.TYPE1, 0, 0, 1)
        assert np.allclose(spec.C, np.eye(n))

    def test_matched_spec_is_effective(self):
        from hopfact.effectiveness import is_effective
        params = HopfParams(d=4, n=2, m=1)
        spec = match_example_to_type1(params)
        assert is_effective(spec).effective

    def test_rejects_quotient(self):
        with pytest.raises(ValueError):
            match_example_to_type1(HopfParams(d=4, n=2, m=3))


class TestSolveTransport:
    def specs(self):
        out = []
        for kind in (ActionKind.TYPE1, ActionKind.TYPE2):
            for d, n, m, r in [(4, 2, 1, 1), (0.5, 3, 2, -2), (1 + 2j, 4, 3, 3)]:
                params = HopfParams(d=d, n=n, m=m)
                rng = np.random.Generator(np.random.Philox(99 + n))
                c = np.eye(n) + 0.2 * (rng.standard_normal((n, n))
                                       + 1j * rng.standard_normal((n, n)))
                out.append(ActionSpec(kind, 1, 0, r, c, params))
        return out

    def test_fixed_point(self):
        spec = demo_spec()
        z = rand_point(spec.params, 21)
        a = solve_transport(spec, z, z)
        assert unitarity_residual(a) < 1e-10
        assert deck_equal(act(spec, a, z), z, 1e-8)

    def test_deck_translate_target(self):
        spec = demo_spec()
        z = rand_point(spec.params, 22)
        w = OrbitPoint(spec.params, spec.params.d * z.rep)
        a = solve_transport(spec, z, w)
        assert deck_equal(act(spec, a, z), w, 1e-8)

    def test_random_pairs(self):
        for spec in self.specs():
            for i in range(20):
                z = rand_point(spec.params, 3000 + i)
                w = rand_point(spec.params, 4000 + i)
                a = solve_transport(spec, z, w)
                assert unitarity_residual(a) < 1e-10
                assert abs(np.linalg.det(a * cmath.exp(-1j * su_decompose(a).t)) - 1) < 1e-9
                assert orbit_distance(act(spec, a, z).rep, w.rep, spec.params) < 1e-8


class TestPowerBranchIdentity:
    @pytest.mark.parametrize("kind", [ActionKind.TYPE1, ActionKind.TYPE2])
    def test_branch_shift_matches_p_shift(self, kind):
        params = HopfParams(d=1 + 2j, n=3, m=2)
        spec = ActionSpec(kind, 1, -2, 2, np.eye(3), params)
        for i in range(5):
            a = random_unitary(3, 800 + i)
            ue = su_decompose(a)
            z = rand_point(params, 900 + i)
            base = evaluate_formula(spec, ue.t, ue.su_part, z.rep)
            for L in range(-2, 3):
                shifted = ActionSpec(kind, spec.p - L * spec.r, spec.q, spec.r,
                                     spec.C, params)
                alt = evaluate_formula(shifted, ue.t, ue.su_part, z.rep, branch=L)
                assert np.max(np.abs(alt - base)) / np.linalg.norm(base) < 1e-12


class TestDimTwoIdentity:
    def test_conjugator_realizes_conjugation(self):
        from hopfact.cmatrix import random_su
        for seed in range(10):
            b = random_su(2, seed)
            w = SU2_CONJUGATOR
            assert np.max(np.abs(w @ b @ np.linalg.inv(w) - np.conj(b))) < 1e-12

    def test_type2_equals_shifted_type1(self):
        params = HopfParams(d=-2, n=2, m=3)
        spec = ActionSpec(ActionKind.TYPE2, 2, 1, -1, np.eye(2), params)
        twin = type2_as_type1(spec)
        assert twin.p == spec.p - 1
        for i in range(20):
            a = random_unitary(2, 300 + i)
            z = rand_point(params, 400 + i)
            lhs = act(spec, a, z)
            rhs = act(twin, a, z)
            assert np.max(np.abs(lhs.rep - rhs.rep)) / np.linalg.norm(lhs.rep) < 1e-10

    def test_rejects_higher_dimension(self):
        params = HopfParams(d=4, n=3, m=1)
        spec = ActionSpec(ActionKind.TYPE2, 0, 0, 1, np.eye(3), params)
        with pytest.raises(ValueError):
            type2_as_type1(spec)
