"""Two-particle framework tests: builders, boosts, closed forms, sweeps."""

import math

import numpy as np
import pytest

from diraclab import measures, scenarios
from diraclab.dirac import BoostParams, bispinor_u
from diraclab.measures import Bipartition
from diraclab.tensor_core import density_matrix, kron, partial_trace

PARTICLE_PARTICLE = Bipartition.of(4, (0, 1), (2, 3))


class TestBuildBellState:
    def test_separable_endpoint(self):
        p, q = scenarios.parallel_framework(1.0)
        state = scenarios.build_bell_state(p, q, 0.0)
        assert all(v == 0.0 for v in scenarios.negativity_set(state))

    def test_rest_frame_maximal_spin_spin(self):
        p, q = scenarios.parallel_framework(0.0)
        state = scenarios.build_bell_state(p, q, math.pi / 4)
        got = measures.negativity(state.psi, scenarios.PARTITIONS["s1s2"])
        assert abs(got - 1.0) < 1e-10

    @pytest.mark.parametrize("theta", np.linspace(0.0, math.pi, 9))
    def test_linear_entropy_curve(self, theta):
        p, q = scenarios.com_framework(0.7)
        state = scenarios.build_bell_state(p, q, theta)
        got = measures.linear_entropy(state.psi, (scenarios.P1, scenarios.S1))
        assert abs(got - math.sin(2 * theta) ** 2) < 1e-12

    def test_lies_in_declared_span(self):
        p, q = scenarios.com_framework(1.3)
        theta = 0.6
        state = scenarios.build_bell_state(p, q, theta)
        basis = [
            kron(bispinor_u(p, +1), bispinor_u(q, -1)),
            kron(bispinor_u(p, -1), bispinor_u(q, +1)),
        ]
        residual = state.psi - sum(np.vdot(b, state.psi) * b for b in basis)
        assert np.linalg.norm(residual) < 1e-10

    def test_particle1_marginal_is_even_spinor_mixture(self):
        # tracing particle 2 at maximal superposition leaves the 50/50
        # mixture of the two particle-1 bispinor projectors
        p, q = scenarios.parallel_framework(0.8)
        state = scenarios.build_bell_state(p, q, math.pi / 4)
        rho1 = partial_trace(density_matrix(state.psi), (scenarios.P1, scenarios.S1))
        up = bispinor_u(p, +1)
        dn = bispinor_u(p, -1)
        expected = 0.5 * np.outer(up, up.conj()) + 0.5 * np.outer(dn, dn.conj())
        np.testing.assert_allclose(rho1, expected, atol=1e-12)


class TestFrameworks:
    def test_parallel_momenta(self):
        p, q = scenarios.parallel_framework(1.0)
        np.testing.assert_allclose([p.e, p.px, p.py, p.pz], [1, 0, 0, 0])
        np.testing.assert_allclose(
            [q.e, q.pz], [math.cosh(1.0), -math.sinh(1.0)], atol=1e-15
        )

    def test_parallel_at_rest(self):
        p, q = scenarios.parallel_framework(0.0)
        assert q.p == 0.0 and p.p == 0.0

    def test_com_total_momentum_zero(self):
        p, q = scenarios.com_framework(0.5)
        np.testing.assert_allclose(p.three_momentum + q.three_momentum, np.zeros(3), atol=1e-15)
        assert abs(p.e - q.e) < 1e-15

    def test_negative_rapidity_rejected(self):
        with pytest.raises(ValueError):
            scenarios.parallel_framework(-0.1)


class TestApplyBoost:
    def test_zero_boost_identity(self):
        state = scenarios.base_state(0.4, 1.0, "parallel")
        boosted = scenarios.apply_boost(state, BoostParams(0.0, scenarios.PARALLEL_AXIS))
        np.testing.assert_allclose(boosted.psi, state.psi, atol=1e-14)

    def test_momentum_labels_updated(self):
        xi0, omega = 1.0, 0.6
        boosted = scenarios.boosted_state(0.5, xi0, omega, "parallel")
        np.testing.assert_allclose(
            [boosted.p.e, boosted.p.pz], [math.cosh(omega), math.sinh(omega)], atol=1e-13
        )
        np.testing.assert_allclose(
            [boosted.q.e, boosted.q.pz],
            [math.cosh(omega - xi0), math.sinh(omega - xi0)],
            atol=1e-13,
        )

    def test_particle2_rest_frame_disentangles_its_parity(self):
        boosted = scenarios.boosted_state(math.pi / 4, 1.0, 1.0, "parallel")
        assert measures.negativity(boosted.psi, scenarios.PARTITIONS["p2_rest"]) < 1e-10

    def test_particle_particle_negativity_invariant(self):
        rng = np.random.default_rng(103)
        state = scenarios.base_state(0.9, 0.8, "perpendicular")
        base = measures.negativity(state.psi, PARTICLE_PARTICLE)
        for _ in range(6):
            b = BoostParams.along(rng.uniform(0, 2.5), rng.normal(size=3))
            boosted = scenarios.apply_boost(state, b)
            assert abs(measures.negativity(boosted.psi, PARTICLE_PARTICLE) - base) < 1e-10


class TestClosedFormParallel:
    def test_reference_point(self):
        got = scenarios.closed_form_parallel(math.pi / 4, 1.0, 1.0)
        assert abs(got.s1s2 - 1.0 / math.cosh(1.0)) < 1e-7  # sech(1) sech(0)
        assert abs(got.s1s2 - 0.6480542736638855) < 1e-12
        assert got.p2_rest == 0.0  # tanh(0)

    def test_origin(self):
        got = scenarios.closed_form_parallel(math.pi / 4, 0.0, 0.0)
        assert got.s1s2 == 1.0 and got.p1_rest == 0.0

    @pytest.mark.parametrize("theta", [0.0, math.pi / 8, math.pi / 4, 1.2])
    @pytest.mark.parametrize("xi0", [0.0, 0.5, 2.0])
    def test_numeric_agreement_coarse(self, theta, xi0):
        for omega in (0.0, 0.5, 1.5, 3.0):
            state = scenarios.boosted_state(theta, xi0, omega, "parallel")
            got = scenarios.negativity_set(state)
            want = scenarios.closed_form_parallel(theta, xi0, omega)
            np.testing.assert_allclose(got, want, atol=1e-10)


class TestDeltaMeanNegativities:
    def test_zero_row_at_zero_boost(self):
        rows = scenarios.delta_mean_negativities(0.6, 1.0, [0.0], "parallel")
        assert all(abs(d) < 1e-14 for d in rows[0][1])

    def test_vanishes_at_particle2_rest_frame(self):
        rows = scenarios.delta_mean_negativities(math.pi / 4, 1.0, [1.0], "parallel")
        assert all(abs(d) < 1e-10 for d in rows[0][1])

    def test_one_vs_rest_mean_never_decreases_parallel(self):
        grid = np.linspace(0.0, 3.0, 13)
        rows = scenarios.delta_mean_negativities(math.pi / 4, 1.0, grid, "parallel")
        assert all(row[1].n1 >= -1e-10 for row in rows)

    def test_grid_order_preserved(self):
        grid = [0.0, 1.0, 0.5]
        rows = scenarios.delta_mean_negativities(0.7, 0.5, grid, "perpendicular")
        assert [row[0] for row in rows] == grid


class TestPerpendicularBehavior:
    """Qualitative structure of the transverse-boost sweep."""

    def test_monotone_trends(self):
        omegas = np.linspace(0.0, 4.0, 17)
        sets = [
            scenarios.negativity_set(scenarios.boosted_state(math.pi / 4, 0.5, w, "perpendicular"))
            for w in omegas
        ]
        p1 = [s.p1_rest for s in sets]
        pair = [s.p1p2_s1s2 for s in sets]
        ss = [s.s1s2 for s in sets]
        assert all(b >= a - 1e-12 for a, b in zip(p1, p1[1:]))
        assert all(b >= a - 1e-12 for a, b in zip(pair, pair[1:]))
        assert all(b <= a + 1e-12 for a, b in zip(ss, ss[1:]))

    def test_spin_spin_degrades_to_zero(self):
        far = scenarios.negativity_set(scenarios.boosted_state(math.pi / 4, 0.5, 6.0, "perpendicular"))
        assert far.s1s2 < 1e-3

    def test_spin_one_vs_rest_invariant_at_maximal_superposition(self):
        for omega in (0.0, 1.0, 2.5):
            st = scenarios.boosted_state(math.pi / 4, 0.5, omega, "perpendicular")
            got = measures.negativity(st.psi, scenarios.PARTITIONS["s1_rest"])
            assert abs(got - 1.0) < 1e-10

    def test_spin_one_vs_rest_not_invariant_off_maximal(self):
        # a transverse boost entangles parity with spin inside each particle,
        # so the product state theta = 0 acquires tanh(w) sech(xi0) here
        xi0 = 0.5
        for omega in (0.5, 1.0, 4.0):
            st = scenarios.boosted_state(0.0, xi0, omega, "perpendicular")
            got = measures.negativity(st.psi, scenarios.PARTITIONS["s1_rest"])
            want = math.tanh(omega) / math.cosh(xi0)
            assert abs(got - want) < 1e-10


class TestParallelStructure:
    def test_spin_spin_maximum_at_com(self):
        omegas = np.linspace(0.0, 1.5, 151)
        vals = [
            scenarios.negativity_set(scenarios.boosted_state(math.pi / 4, 1.0, w, "parallel")).s1s2
            for w in omegas
        ]
        assert abs(omegas[int(np.argmax(vals))] - 0.5) < 0.011

    def test_parity_parity_always_zero(self):
        for omega in np.linspace(0.0, 4.0, 9):
            st = scenarios.boosted_state(0.9, 1.5, omega, "parallel")
            assert measures.negativity(st.psi, scenarios.PARTITIONS["p1p2"]) < 1e-10
