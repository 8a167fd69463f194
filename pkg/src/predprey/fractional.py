"""Caputo-order solver: full-memory product-integration predictor-corrector.

For 0 < sigma <= 1 the scheme advances

    X_{n+1}^P = X_0 + h^sigma/gamma(sigma+1) * sum_j [(n+1-j)^sigma - (n-j)^sigma] F(X_j)
    X_{n+1}   = X_0 + h^sigma/gamma(sigma+2) * [sum_j a_{j,n+1} F(X_j) + F(X_{n+1}^P)]

with the trapezoidal history weights

    a_{0,n+1} = n^(sigma+1) - (n - sigma)*(n+1)^sigma
    a_{j,n+1} = (n-j+2)^(sigma+1) + (n-j)^(sigma+1) - 2*(n-j+1)^(sigma+1)

At sigma = 1 this collapses to the classical rectangle/trapezoid pair.
The power differences are evaluated through expm1/log1p so large history
indices do not cancel catastrophically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import FRACTIONAL, ModelParams, State, Trajectory, rates
from .schemes import DivergenceError
from .special import mittag_leffler


@dataclass(frozen=True)
class FractionalConfig:
    """Order, grid, and corrector policy for the Caputo solver."""

    sigma: float
    h: float
    t_end: float
    corrector_passes: int = 1

    def __post_init__(self):
        if not 0.0 < self.sigma <= 1.0:
            raise ValueError(f"sigma must lie in (0, 1], got {self.sigma!r}")
        if not self.h > 0.0:
            raise ValueError(f"h must be positive, got {self.h!r}")
        if not self.t_end >= self.h:
            raise ValueError(f"t_end must be at least h, got {self.t_end!r}")
        if self.corrector_passes < 1:
            raise ValueError("corrector_passes must be at least 1")

    def n_steps(self) -> int:
        return max(1, math.ceil(self.t_end / self.h - 1e-9))


def _rectangle_kernel(sigma: float, count: int) -> np.ndarray:
    """d[m] = (m+1)^sigma - m^sigma for m = 0 .. count-1."""
    out = np.empty(count)
    if count >= 1:
        out[0] = 1.0
    if count >= 2:
        m = np.arange(1, count, dtype=float)
        # m^s * ((1 + 1/m)^s - 1), cancellation-free form of the difference
        out[1:] = m ** sigma * np.expm1(sigma * np.log1p(1.0 / m))
    return out


def _trapezoid_kernel(sigma: float, count: int) -> np.ndarray:
    """c[m] = (m+1)^(s+1) + (m-1)^(s+1) - 2*m^(s+1) for m = 1 .. count.

    Entry 0 is unused (the j = 0 corrector weight has its own formula).
    """
    s1 = sigma + 1.0
    out = np.zeros(count + 1)
    if count >= 1:
        out[1] = 2.0 ** s1 - 2.0
    if count >= 2:
        m = np.arange(2, count + 1, dtype=float)
        out[2:] = m ** s1 * (np.expm1(s1 * np.log1p(1.0 / m))
                             + np.expm1(s1 * np.log1p(-1.0 / m)))
    return out


def _first_corrector_weight(sigma: float, n: int) -> float:
    """a_{0,n+1} = n^(s+1) - (n - s)*(n+1)^s, cancellation-safe."""
    if n == 0:
        return sigma
    # rewrite as (n+1)^s * (s + n*((n/(n+1))^s - 1)) so the subtraction
    # happens between O(sigma) quantities instead of O(n^(s+1)) ones
    inner = sigma + n * math.expm1(sigma * math.log1p(-1.0 / (n + 1.0)))
    return (n + 1.0) ** sigma * inner


@dataclass(frozen=True, eq=False)
class QuadratureWeights:
    """Weights used to advance from grid index n to n+1.

    ``trapezoidal`` holds the corrector weights a_{j,n+1} for j = 0..n
    followed by the unit weight applied to F at the predicted point;
    ``rectangle`` holds the predictor weights b_{j,n+1} for j = 0..n.
    """

    trapezoidal: np.ndarray
    rectangle: np.ndarray
    predictor_scale: float      # h^sigma / (sigma*gamma(sigma)) = h^sigma/gamma(sigma+1)
    corrector_scale: float      # h^sigma / gamma(sigma+2)


def quadrature_weights(sigma: float, h: float, n: int) -> QuadratureWeights:
    """Assemble the PECE weights for the step ending at index n+1."""
    if not 0.0 < sigma <= 1.0:
        raise ValueError(f"sigma must lie in (0, 1], got {sigma!r}")
    if not h > 0.0:
        raise ValueError(f"h must be positive, got {h!r}")
    if n < 0:
        raise ValueError("n must be non-negative")
    d = _rectangle_kernel(sigma, n + 1)
    rectangle = d[::-1].copy()                      # b_j = d[n-j]
    c = _trapezoid_kernel(sigma, n)
    trapezoidal = np.empty(n + 2)
    trapezoidal[0] = _first_corrector_weight(sigma, n)
    if n >= 1:
        trapezoidal[1:n + 1] = c[1:n + 1][::-1]     # a_j = c[n-j+1]
    trapezoidal[n + 1] = 1.0
    return QuadratureWeights(
        trapezoidal=trapezoidal,
        rectangle=rectangle,
        predictor_scale=h ** sigma / math.gamma(sigma + 1.0),
        corrector_scale=h ** sigma / math.gamma(sigma + 2.0),
    )


def _pece_history(f, x0: np.ndarray, sigma: float, h: float, n_steps: int,
                  corrector_passes: int) -> np.ndarray:
    """Run the predictor-corrector over a uniform grid; returns the history."""
    scale_p = h ** sigma / math.gamma(sigma + 1.0)
    scale_c = h ** sigma / math.gamma(sigma + 2.0)
    d = _rectangle_kernel(sigma, n_steps)
    c = _trapezoid_kernel(sigma, max(0, n_steps - 1))

    xs = np.empty((n_steps + 1, x0.size))
    fs = np.empty_like(xs)
    xs[0] = x0
    fs[0] = f(x0)
    for n in range(n_steps):
        xp = x0 + scale_p * (d[:n + 1][::-1] @ fs[:n + 1])
        hist = _first_corrector_weight(sigma, n) * fs[0]
        if n >= 1:
            hist = hist + c[1:n + 1][::-1] @ fs[1:n + 1]
        x1 = x0 + scale_c * (hist + f(xp))
        for _ in range(corrector_passes - 1):
            x1 = x0 + scale_c * (hist + f(x1))
        xs[n + 1] = x1
        fs[n + 1] = f(x1)
    return xs


def caputo_solve(params: ModelParams, cfg: FractionalConfig,
                 s0: State) -> Trajectory:
    """Trajectory of the Caputo-order system on the uniform grid.

    The initial state must be non-negative.  Raises DivergenceError if the
    history turns non-finite (possible for unvalidated parameter regimes).
    """
    if s0.d < 0.0 or s0.l < 0.0:
        raise ValueError(f"initial state must be non-negative, got ({s0.d}, {s0.l})")

    def f(x):
        dd, dl = rates(params, x[0], x[1])
        return np.array([dd, dl])

    n = cfg.n_steps()
    xs = _pece_history(f, s0.as_array(), cfg.sigma, cfg.h, n,
                       cfg.corrector_passes)
    finite = np.isfinite(xs).all(axis=1)
    if not finite.all():
        bad = int(np.flatnonzero(~finite)[0])
        raise DivergenceError(
            f"non-finite state at t = {bad * cfg.h:g} (step {bad})",
            time=bad * cfg.h, step=bad)
    times = np.arange(n + 1, dtype=float) * cfg.h
    return Trajectory(times, xs, FRACTIONAL, params, cfg)


def scalar_caputo_solve(lambda_coeff: float, sigma: float, y0: float,
                        h: float, t_end: float,
                        corrector_passes: int = 1) -> np.ndarray:
    """Solve the scalar test equation cD^sigma y = lambda*y.

    Uses the identical predictor-corrector machinery as the system solver;
    mainly useful for order-of-convergence studies against the
    Mittag-Leffler solution y(t) = y0 * E_sigma(lambda * t^sigma).
    """
    cfg = FractionalConfig(sigma=sigma, h=h, t_end=t_end,
                           corrector_passes=corrector_passes)
    lam = float(lambda_coeff)

    def f(x):
        return lam * x

    ys = _pece_history(f, np.array([float(y0)]), sigma, h, cfg.n_steps(),
                       corrector_passes)
    return ys[:, 0].copy()


@dataclass(frozen=True)
class ConservationBound:
    """Ceiling on the total population W = D + L for the Caputo system.

    ``bound`` is the flat ceiling W(0) + A/beta; ``envelope`` gives the
    tighter time-resolved curve through the one-parameter Mittag-Leffler
    decay factor.
    """

    w0: float
    a: float
    beta: float

    @property
    def bound(self) -> float:
        return self.w0 + self.a / self.beta

    def envelope(self, t: float, sigma: float) -> float:
        """(A/beta)*(1 - E_sigma(-beta*t^sigma)) + W(0)*E_sigma(-beta*t^sigma)."""
        decay = mittag_leffler(sigma, 1.0, -self.beta * float(t) ** sigma)
        return self.a / self.beta * (1.0 - decay) + self.w0 * decay


def fractional_conservation_bound(params: ModelParams, w0: float,
                                  m: float) -> ConservationBound:
    """Conservation data for a run started at total w0 with prey scale m.

    ``m`` is max(D(0), capacity) and A = (alpha + 4*beta)/4 * m.
    """
    a = (params.alpha + 4.0 * params.beta) / 4.0 * m
    return ConservationBound(w0=float(w0), a=a, beta=params.beta)
