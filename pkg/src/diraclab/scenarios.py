"""Two-particle bispinor states and their behavior under boosts.

The 4-qubit register order is (P1, S1, P2, S2): intrinsic parity and spin
of particle 1, then of particle 2. Partition names in output refer to this
order.

Frameworks. ``parallel_framework`` puts particle 1 at rest and particle 2
at rapidity xi0 along -z; the boost axis is -z (PARALLEL_AXIS), so a boost
of rapidity omega takes the momenta to rapidities omega and omega - xi0
along +z. ``com_framework`` puts the pair back to back along z with
rapidity xi0 each; the perpendicular boost axis is +x (PERPENDICULAR_AXIS).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .dirac import BoostParams, FourMomentum, bispinor_u, boost_bispinor_matrix, boost_four_momentum
from .measures import Bipartition, MeanNegativities, mean_negativities, negativity
from .tensor_core import kron, normalize

P1, S1, P2, S2 = 0, 1, 2, 3
REGISTER_NAMES = ("P1", "S1", "P2", "S2")

# Observer receding along -z adds rapidity omega toward +z to the particles.
PARALLEL_AXIS = (0.0, 0.0, -1.0)
# Observer moving along +x, perpendicular to momenta on the z axis.
PERPENDICULAR_AXIS = (1.0, 0.0, 0.0)

PARTITIONS = {
    "s1_rest": Bipartition.of(4, (S1,), (P1, P2, S2)),
    "s2_rest": Bipartition.of(4, (S2,), (P1, S1, P2)),
    "p1_rest": Bipartition.of(4, (P1,), (S1, P2, S2)),
    "p2_rest": Bipartition.of(4, (P2,), (P1, S1, S2)),
    "s1s2": Bipartition((S1,), (S2,), traced=(P1, P2)),
    "p1p2_s1s2": Bipartition.of(4, (P1, P2), (S1, S2)),
    "p1p2": Bipartition((P1,), (P2,), traced=(S1, S2)),
}


class NegativitySet(NamedTuple):
    """The named negativities tracked through the boost sweeps."""

    s1_rest: float
    s2_rest: float
    p1_rest: float
    p2_rest: float
    s1s2: float
    p1p2_s1s2: float
    p1p2: float


@dataclass(frozen=True)
class TwoParticleState:
    """Normalized 4-qubit state plus the momentum labels it was built from."""

    psi: np.ndarray
    p: FourMomentum
    q: FourMomentum
    theta: float


def build_bell_state(
    p: FourMomentum, q: FourMomentum, theta: float, spin_basis: str = "z"
) -> TwoParticleState:
    """cos(theta) u(p,+) x u(q,-) + sin(theta) u(p,-) x u(q,+), normalized."""
    psi = math.cos(theta) * kron(bispinor_u(p, +1, spin_basis), bispinor_u(q, -1, spin_basis))
    psi = psi + math.sin(theta) * kron(
        bispinor_u(p, -1, spin_basis), bispinor_u(q, +1, spin_basis)
    )
    return TwoParticleState(normalize(psi), p, q, theta)


def parallel_framework(xi0: float, mass: float = 1.0) -> tuple[FourMomentum, FourMomentum]:
    """Rest frame of particle 1; particle 2 at rapidity xi0 along -z."""
    if xi0 < 0:
        raise ValueError(f"rapidity must be non-negative, got {xi0}")
    p = FourMomentum.rest(mass)
    q = FourMomentum(mass * math.cosh(xi0), 0.0, 0.0, -mass * math.sinh(xi0))
    return p, q


def com_framework(xi0: float, mass: float = 1.0) -> tuple[FourMomentum, FourMomentum]:
    """Center-of-momentum pair, back to back along z with rapidity xi0."""
    if xi0 < 0:
        raise ValueError(f"rapidity must be non-negative, got {xi0}")
    p = FourMomentum(mass * math.cosh(xi0), 0.0, 0.0, mass * math.sinh(xi0))
    q = FourMomentum(mass * math.cosh(xi0), 0.0, 0.0, -mass * math.sinh(xi0))
    return p, q


def apply_boost(state: TwoParticleState, b: BoostParams) -> TwoParticleState:
    """Boost both particles: psi' = normalize((S x S) psi), labels updated.

    Entanglement quantities are always computed from psi' directly; the
    transformed momentum labels are carried for reporting only.
    """
    s4 = boost_bispinor_matrix(b)
    psi = normalize(kron(s4, s4) @ state.psi)
    return TwoParticleState(
        psi, boost_four_momentum(state.p, b), boost_four_momentum(state.q, b), state.theta
    )


def boost_axis(direction: str) -> tuple[float, float, float]:
    if direction == "parallel":
        return PARALLEL_AXIS
    if direction == "perpendicular":
        return PERPENDICULAR_AXIS
    raise ValueError(f"unknown boost direction {direction!r}")


def base_state(theta: float, xi0: float, direction: str, mass: float = 1.0) -> TwoParticleState:
    """Unboosted state of the named framework."""
    frame = parallel_framework if direction == "parallel" else com_framework
    if direction not in ("parallel", "perpendicular"):
        raise ValueError(f"unknown boost direction {direction!r}")
    p, q = frame(xi0, mass)
    return build_bell_state(p, q, theta)


def boosted_state(
    theta: float, xi0: float, omega: float, direction: str, mass: float = 1.0
) -> TwoParticleState:
    """Framework state after a boost of rapidity omega along the framework axis."""
    state = base_state(theta, xi0, direction, mass)
    if omega == 0.0:
        return state
    return apply_boost(state, BoostParams(omega, boost_axis(direction)))


def negativity_set(state: TwoParticleState) -> NegativitySet:
    """Numerically computed negativities for the named partitions."""
    return NegativitySet(**{k: negativity(state.psi, part) for k, part in PARTITIONS.items()})


def closed_form_parallel(theta: float, xi0: float, omega: float) -> NegativitySet:
    """Closed-form negativities of the boosted parallel-framework state.

    sech(w) sech(w - xi0) controls the spin-spin channel, tanh(w) and
    tanh(w - xi0) the single-parity channels; parity-parity vanishes
    identically in this framework.
    """
    s2t = abs(math.sin(2.0 * theta))
    sech_w = 1.0 / math.cosh(omega)
    sech_wx = 1.0 / math.cosh(omega - xi0)
    return NegativitySet(
        s1_rest=s2t,
        s2_rest=s2t,
        p1_rest=abs(math.tanh(omega)) * s2t,
        p2_rest=abs(math.tanh(omega - xi0)) * s2t,
        s1s2=sech_w * sech_wx * s2t,
        p1p2_s1s2=math.sqrt(max(1.0 - sech_w**2 * sech_wx**2, 0.0)) * s2t / 3.0,
        p1p2=0.0,
    )


def delta_mean_negativities(
    theta: float,
    xi0: float,
    omega_grid: Iterable[float],
    direction: str,
) -> list[tuple[float, MeanNegativities]]:
    """Change of the four mean negativities along a boost trajectory.

    Rows are (omega, N(boosted) - N(unboosted)) in grid order.
    """
    state0 = base_state(theta, xi0, direction)
    base = mean_negativities(state0.psi)
    axis = boost_axis(direction)
    rows = []
    for omega in omega_grid:
        boosted = state0 if omega == 0.0 else apply_boost(state0, BoostParams(omega, axis))
        m = mean_negativities(boosted.psi)
        rows.append(
            (float(omega), MeanNegativities(*(b - a for b, a in zip(m, base))))
        )
    return rows
