"""Predictor-corrector quadrature, the Caputo solver, and its bounds.

Weight reference values are frozen from 40-digit evaluation of the
defining power differences (see ``tests/oracles.py``).
"""
import math

import numpy as np
import pytest

from predprey import (
    FRACTIONAL,
    DivergenceError,
    FractionalConfig,
    ModelParams,
    State,
    caputo_solve,
    fractional_conservation_bound,
    mittag_leffler,
    quadrature_weights,
    scalar_caputo_solve,
)
from predprey.fractional import (
    _first_corrector_weight,
    _rectangle_kernel,
    _trapezoid_kernel,
)
from predprey.schemes import reference_solve

# c[m] = (m+1)^1.95 + (m-1)^1.95 - 2 m^1.95 at sigma = 0.95
KERNEL_095 = {1: 1.8637453156993822, 2: 1.7914667723626688,
              10: 1.6511147470944149, 100: 1.4714936986183609,
              1000: 1.3114695713092960}
# a_{0,n+1} = n^1.95 - (n - 0.95)(n+1)^0.95
FIRST_WEIGHT_095 = {0: 0.95, 1: 0.90340636710751544, 5: 0.84934067445228762,
                    100: 0.73550223899254286, 1000: 0.65571293356153199}
ML_095_AT_M1 = 0.37157362003067881


class TestFractionalConfig:
    @pytest.mark.parametrize("kw", [
        dict(sigma=0.0, h=0.1, t_end=1.0),
        dict(sigma=1.1, h=0.1, t_end=1.0),
        dict(sigma=-0.5, h=0.1, t_end=1.0),
        dict(sigma=0.95, h=0.0, t_end=1.0),
        dict(sigma=0.95, h=0.1, t_end=0.05),
        dict(sigma=0.95, h=0.1, t_end=1.0, corrector_passes=0),
    ])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            FractionalConfig(**kw)

    def test_step_count(self):
        assert FractionalConfig(sigma=0.95, h=0.25, t_end=300.0).n_steps() == 1200


class TestKernels:
    def test_rectangle_starts_at_one(self):
        d = _rectangle_kernel(0.95, 5)
        assert d[0] == 1.0

    def test_rectangle_decreasing_positive(self):
        d = _rectangle_kernel(0.95, 500)
        assert (d > 0.0).all()
        assert (np.diff(d) < 0.0).all()

    def test_rectangle_against_naive_form(self):
        m = np.arange(1.0, 50.0)
        naive = (m + 1.0) ** 0.95 - m ** 0.95
        np.testing.assert_allclose(_rectangle_kernel(0.95, 50)[1:], naive,
                                   rtol=1e-12)

    def test_trapezoid_frozen_values(self):
        c = _trapezoid_kernel(0.95, 1000)
        for m, expected in KERNEL_095.items():
            assert c[m] == pytest.approx(expected, rel=1e-13)

    def test_trapezoid_decreasing_positive(self):
        c = _trapezoid_kernel(0.95, 500)
        assert (c[1:] > 0.0).all()
        assert (np.diff(c[1:]) < 0.0).all()

    def test_first_weight_frozen_values(self):
        for n, expected in FIRST_WEIGHT_095.items():
            assert _first_corrector_weight(0.95, n) == pytest.approx(
                expected, rel=1e-12)


class TestQuadratureWeights:
    def test_classic_trapezoid_at_order_one(self):
        w = quadrature_weights(1.0, 0.5, 5)
        np.testing.assert_allclose(w.trapezoidal, [1, 2, 2, 2, 2, 2, 1])
        np.testing.assert_allclose(w.rectangle, np.ones(6))
        assert w.predictor_scale == pytest.approx(0.5)
        assert w.corrector_scale == pytest.approx(0.25)

    def test_layout(self):
        w = quadrature_weights(0.95, 0.25, 7)
        assert w.trapezoidal.shape == (9,)
        assert w.rectangle.shape == (8,)
        assert w.trapezoidal[-1] == 1.0
        assert w.trapezoidal[0] == pytest.approx(
            _first_corrector_weight(0.95, 7), rel=1e-15)
        assert w.rectangle[-1] == 1.0      # newest sample gets d[0]
        assert (w.trapezoidal > 0.0).all()
        assert (w.rectangle > 0.0).all()

    def test_scales(self):
        w = quadrature_weights(0.95, 0.25, 3)
        assert w.predictor_scale == pytest.approx(
            0.25 ** 0.95 / math.gamma(1.95), rel=1e-15)
        assert w.corrector_scale == pytest.approx(
            0.25 ** 0.95 / math.gamma(2.95), rel=1e-15)

    def test_validation(self):
        with pytest.raises(ValueError):
            quadrature_weights(0.0, 0.25, 3)
        with pytest.raises(ValueError):
            quadrature_weights(0.95, -0.1, 3)
        with pytest.raises(ValueError):
            quadrature_weights(0.95, 0.25, -1)


class TestScalarSolver:
    def test_integer_order_matches_exponential(self):
        # one predictor-corrector pass leaves an O(h^2) defect, about
        # 6.2e-6 at this step
        ys = scalar_caputo_solve(-1.0, 1.0, 1.0, 0.01, 1.0)
        assert abs(ys[-1] - math.exp(-1.0)) <= 1e-5

    def test_fractional_order_matches_mittag_leffler(self):
        ys = scalar_caputo_solve(-1.0, 0.95, 1.0, 0.01, 1.0)
        err = abs(ys[-1] - ML_095_AT_M1)
        assert err <= 5e-3

    def test_halving_h_reduces_error(self):
        e_coarse = abs(scalar_caputo_solve(-1.0, 0.95, 1.0, 0.01, 1.0)[-1]
                       - ML_095_AT_M1)
        e_fine = abs(scalar_caputo_solve(-1.0, 0.95, 1.0, 0.005, 1.0)[-1]
                     - ML_095_AT_M1)
        assert e_coarse / e_fine >= 2.0

    def test_extra_corrector_passes_stay_consistent(self):
        one = scalar_caputo_solve(-1.0, 0.95, 1.0, 0.01, 1.0)
        three = scalar_caputo_solve(-1.0, 0.95, 1.0, 0.01, 1.0,
                                    corrector_passes=3)
        assert np.abs(one - three).max() <= 1e-4
        assert abs(three[-1] - ML_095_AT_M1) <= 5e-3


class TestSystemSolver:
    def test_integer_order_matches_reference(self, params, s0):
        frac = caputo_solve(params,
                            FractionalConfig(sigma=1.0, h=0.01, t_end=10.0),
                            s0)
        ref = reference_solve(params, s0, 10.0, 0.01)
        np.testing.assert_array_equal(frac.times, ref.times)
        assert np.abs(frac.states - ref.states).max() <= 1e-6

    def test_metadata(self, params, s0):
        cfg = FractionalConfig(sigma=0.95, h=0.25, t_end=10.0)
        traj = caputo_solve(params, cfg, s0)
        assert traj.scheme == FRACTIONAL
        assert traj.config is cfg
        assert len(traj) == 41
        assert traj.initial == s0

    def test_negative_initial_state_rejected(self, params):
        with pytest.raises(ValueError, match="non-negative"):
            caputo_solve(params,
                         FractionalConfig(sigma=0.95, h=0.25, t_end=1.0),
                         State(-0.1, 0.3))

    def test_divergence_reported(self):
        # inverted capacity turns logistic damping into superlinear growth
        p = ModelParams.unchecked(1.0, 0.5, 0.1, -1.0)
        with np.errstate(all="ignore"), pytest.raises(DivergenceError):
            caputo_solve(p, FractionalConfig(sigma=0.95, h=0.5, t_end=500.0),
                         State(2.0, 0.1))

    def test_order_approaches_integer_limit(self, params, s0):
        # distance to the reference run shrinks as sigma tends to 1
        ref = reference_solve(params, s0, 50.0, 0.25)
        dists = []
        for sigma in (0.80, 0.90, 0.95, 0.99):
            traj = caputo_solve(params,
                                FractionalConfig(sigma=sigma, h=0.25,
                                                 t_end=50.0), s0)
            dists.append(np.abs(traj.states - ref.states).max())
        assert all(a > b for a, b in zip(dists, dists[1:]))


class TestConservationBound:
    def test_reference_setup_values(self, params):
        cb = fractional_conservation_bound(params, w0=0.5, m=1.0)
        assert cb.a == pytest.approx(0.3125, rel=1e-15)
        assert cb.bound == pytest.approx(1.5416666666666667, rel=1e-15)

    def test_envelope_starts_at_w0(self, params):
        cb = fractional_conservation_bound(params, w0=0.5, m=1.0)
        assert cb.envelope(0.0, 0.95) == 0.5

    def test_envelope_rises_toward_flat_ceiling(self, params):
        cb = fractional_conservation_bound(params, w0=0.5, m=1.0)
        ts = [0.0, 1.0, 5.0, 10.0, 50.0]
        vals = [cb.envelope(t, 0.95) for t in ts]
        assert all(a < b for a, b in zip(vals, vals[1:]))
        assert all(v <= cb.bound for v in vals)
        # the asymptote is A/beta, approached from below
        assert vals[-1] < cb.a / cb.beta <= cb.bound
