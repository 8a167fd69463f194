"""Core model definition: parameters, states, trajectories, and equilibria.

The system couples a logistically growing prey population D with a
predator population L:

    dD/dt = alpha*D*(1 - D/C) - p*D*L
    dL/dt = p*D*L - beta*L

All solvers in this package (reference, Euler, Mickens, Caputo-order)
advance exactly this right-hand side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

# scheme identifiers used in Trajectory provenance and region matching
REFERENCE = "reference"
EULER = "euler"
MICKENS = "mickens"
FRACTIONAL = "fractional"
SCHEMES = (REFERENCE, EULER, MICKENS, FRACTIONAL)

# equilibrium labels
E1 = "E1"
E2 = "E2"
E3 = "E3"


@dataclass(frozen=True)
class ModelParams:
    """Rate constants of the system.

    The default constructor enforces the ordering

        0 < alpha < beta < p*capacity < 1

    under which the coexistence equilibrium exists and is attracting.
    Use :meth:`unchecked` to build parameter sets outside that ordering;
    such instances carry ``validated=False``.
    """

    alpha: float
    beta: float
    p: float
    capacity: float
    validated: bool = True

    def __post_init__(self):
        for name in ("alpha", "beta", "p", "capacity"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.validated:
            failed = [label for ok, label in self._ordering() if not ok]
            if failed:
                raise ValueError(
                    "parameter ordering violated: " + ", ".join(failed)
                    + "; use ModelParams.unchecked to explore this regime")

    def _ordering(self):
        pc = self.p * self.capacity
        return [
            (0.0 < self.alpha, "0 < alpha"),
            (self.alpha < self.beta, "alpha < beta"),
            (self.beta < pc, "beta < p*capacity"),
            (pc < 1.0, "p*capacity < 1"),
        ]

    @classmethod
    def unchecked(cls, alpha, beta, p, capacity):
        """Build without the ordering check; flags the instance unvalidated."""
        return cls(alpha, beta, p, capacity, validated=False)


@dataclass(frozen=True)
class State:
    """Prey and predator populations (d, l)."""

    d: float
    l: float

    def as_array(self) -> np.ndarray:
        return np.array([self.d, self.l], dtype=float)

    @classmethod
    def from_array(cls, x) -> "State":
        return cls(float(x[0]), float(x[1]))


@dataclass(frozen=True)
class Equilibrium:
    """A fixed point of the flow, with its existence status.

    ``exists`` is False when the defining condition fails (for E3 this is
    1 - beta/(p*capacity) > 0); ``reason`` then says why.
    """

    label: str
    point: State
    exists: bool = True
    reason: Optional[str] = None


def rates(params: ModelParams, d: float, l: float):
    """Field components at (d, l) as plain floats, no validity checks."""
    dd = params.alpha * d * (1.0 - d / params.capacity) - params.p * d * l
    dl = params.p * d * l - params.beta * l
    return dd, dl


def vector_field(params: ModelParams, s: State):
    """Right-hand side (dD/dt, dL/dt) at a state.

    Raises ValueError for non-finite state components.
    """
    if not (math.isfinite(s.d) and math.isfinite(s.l)):
        raise ValueError(f"state must be finite, got ({s.d!r}, {s.l!r})")
    return rates(params, s.d, s.l)


def equilibria(params: ModelParams):
    """All fixed points: extinction E1, prey-only E2, coexistence E3.

    E3 = (beta/p, (alpha/p)*(1 - beta/(p*capacity))). When p == 0 the
    point is undefined and is reported non-existent rather than raising.
    """
    out = [
        Equilibrium(E1, State(0.0, 0.0)),
        Equilibrium(E2, State(params.capacity, 0.0)),
    ]
    if params.p == 0.0:
        out.append(Equilibrium(E3, State(math.nan, math.nan), exists=False,
                               reason="p = 0: no coexistence point"))
    else:
        margin = 1.0 - params.beta / (params.p * params.capacity)
        point = State(params.beta / params.p, params.alpha / params.p * margin)
        reason = None if margin > 0.0 else "beta >= p*capacity"
        out.append(Equilibrium(E3, point, exists=margin > 0.0, reason=reason))
    return out


def lipschitz_growth_bound(params: ModelParams):
    """Constants (w, lam) with ||F(X)||_sup <= w + lam*||X||_sup.

    The field splits as F(X) = D*(Z X) + B X with

        Z = [[-alpha/capacity, -p], [0, p]],    B = diag(alpha, -beta)

    so on the feasible set (prey bounded by the capacity scale) the growth
    rate is lam = ||Z||_sup + ||B||_sup with the max-row-sum norm.  The
    additive constant w is a fixed small epsilon.
    """
    z_norm = max(abs(params.alpha) / abs(params.capacity) + abs(params.p),
                 abs(params.p))
    b_norm = max(abs(params.alpha), abs(params.beta))
    return 1e-9, z_norm + b_norm


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Time grid plus the matching (n, 2) array of states.

    ``times`` must be strictly increasing and the arrays congruent.  The
    ``params`` and ``config`` fields are provenance and may be None (for
    instance when a trajectory is re-read from CSV).
    """

    times: np.ndarray
    states: np.ndarray
    scheme: str
    params: Optional[ModelParams] = None
    config: object = None

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        states = np.asarray(self.states, dtype=float)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", states)
        if times.ndim != 1 or times.size < 1:
            raise ValueError("times must be a nonempty 1-d array")
        if states.shape != (times.size, 2):
            raise ValueError(
                f"states must have shape ({times.size}, 2), got {states.shape}")
        if times.size > 1 and not np.all(np.diff(times) > 0.0):
            raise ValueError("times must be strictly increasing")

    def __len__(self):
        return int(self.times.size)

    def state(self, i: int) -> State:
        return State(float(self.states[i, 0]), float(self.states[i, 1]))

    @property
    def initial(self) -> State:
        return self.state(0)

    @property
    def final(self) -> State:
        return self.state(-1)

    @property
    def prey(self) -> np.ndarray:
        return self.states[:, 0]

    @property
    def predator(self) -> np.ndarray:
        return self.states[:, 1]

    @property
    def totals(self) -> np.ndarray:
        """W_n = D_n + L_n along the trajectory."""
        return self.states.sum(axis=1)
