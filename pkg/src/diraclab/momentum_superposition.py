"""Six-qubit states with a dichotomic momentum degree of freedom per particle.

Register order (P1, S1, p1, P2, S2, p2): parity, spin and momentum qubit of
particle 1, then of particle 2, so each particle occupies a contiguous
3-qubit block. The momentum qubit encodes |1> for the +z label p and |0>
for the mirrored label q; the two labels are treated as exactly orthogonal.

Two inequivalent reductions to the (S1, p1, S2, p2) register are provided:
tracing out both parities, and projecting onto the positive-parity sector
before tracing. The latter reproduces the spin-momentum phenomenology of
irreducible-representation treatments; the former is the full reduction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .dirac import BoostParams, FourMomentum, bispinor_u, boost_bispinor_matrix, boost_four_momentum
from .errors import DegenerateMomenta, ProjectionAnnihilated, UnreachableAngle
from .measures import Bipartition, negativity
from .tensor_core import kron, normalize, partial_trace

P1, S1, MOM1, P2, S2, MOM2 = range(6)
REGISTER_NAMES = ("P1", "S1", "p1", "P2", "S2", "p2")

# positions within the reduced (S1, p1, S2, p2) register
RS1, RP1, RS2, RP2 = 0, 1, 2, 3
REDUCED_NAMES = ("S1", "p1", "S2", "p2")

SPIN_VS_REST = Bipartition.of(4, (RS1,), (RP1, RS2, RP2))
SPINS_VS_MOMENTA = Bipartition.of(4, (RS1, RS2), (RP1, RP2))
SPIN_SPIN = Bipartition((RS1,), (RS2,), traced=(RP1, RP2))

_KET0 = np.array([1.0, 0.0], dtype=complex)
_KET1 = np.array([0.0, 1.0], dtype=complex)


@dataclass(frozen=True)
class SixQubitState:
    """Normalized 6-qubit state plus its two momentum labels and angles."""

    psi: np.ndarray
    p: FourMomentum
    q: FourMomentum
    alpha: float
    theta: float


class WignerParams(NamedTuple):
    """Rapidity pair together with the Wigner angle they produce."""

    xi0: float
    omega: float
    delta: float
    asymptotic: bool = False


def build_superposed(
    xi0: float, alpha: float, theta: float, mass: float = 1.0
) -> SixQubitState:
    """Spin Bell-like superposition combined with a momentum-label swap.

    The cos(alpha) branch carries bispinors at (p, q) with momentum qubits
    |1>|0>, the sin(alpha) branch carries bispinors evaluated at the swapped
    momenta (q, p) with qubits |0>|1>. The overall normalization is computed
    numerically from the assembled vector.
    """
    if xi0 <= 0:
        raise DegenerateMomenta(f"momentum labels coincide for xi0 = {xi0}")
    p = FourMomentum(mass * math.cosh(xi0), 0.0, 0.0, mass * math.sinh(xi0))
    q = FourMomentum(mass * math.cosh(xi0), 0.0, 0.0, -mass * math.sinh(xi0))

    def branch(mom1, mom2, ket1, ket2):
        spin = math.cos(theta) * kron(bispinor_u(mom1, +1), ket1, bispinor_u(mom2, -1), ket2)
        return spin + math.sin(theta) * kron(
            bispinor_u(mom1, -1), ket1, bispinor_u(mom2, +1), ket2
        )

    psi = math.cos(alpha) * branch(p, q, _KET1, _KET0)
    psi = psi + math.sin(alpha) * branch(q, p, _KET0, _KET1)
    return SixQubitState(normalize(psi), p, q, alpha, theta)


def boost_superposed(state: SixQubitState, b: BoostParams) -> SixQubitState:
    """Boost each particle's bispinor block, identity on the momentum qubits.

    The spinor operator does not depend on the momentum label, so a single
    fixed 4x4 block acts on both branches.
    """
    s4 = boost_bispinor_matrix(b)
    block = kron(s4, np.eye(2, dtype=complex))
    psi = normalize(kron(block, block) @ state.psi)
    return SixQubitState(
        psi,
        boost_four_momentum(state.p, b),
        boost_four_momentum(state.q, b),
        state.alpha,
        state.theta,
    )


def trace_out_parity(state: SixQubitState) -> np.ndarray:
    """Density matrix over (S1, p1, S2, p2) after tracing both parities."""
    rho = np.outer(state.psi, state.psi.conj())
    return partial_trace(rho, (S1, MOM1, S2, MOM2))


def project_positive_parity(state: SixQubitState) -> np.ndarray:
    """Positive-parity conditional state, reduced to (S1, p1, S2, p2).

    Keeps only the components with both parity qubits in |+> (bit value 0),
    renormalizes by the surviving weight, then traces the parity qubits.
    Raises ProjectionAnnihilated when the weight vanishes.
    """
    psi = state.psi.reshape((2,) * 6)
    projected = np.zeros_like(psi)
    projected[0, :, :, 0, :, :] = psi[0, :, :, 0, :, :]
    projected = projected.reshape(64)
    weight = float(np.vdot(projected, projected).real)
    if weight <= 1e-12:
        raise ProjectionAnnihilated(f"positive-parity weight {weight:.3e}")
    rho = np.outer(projected, projected.conj()) / weight
    return partial_trace(rho, (S1, MOM1, S2, MOM2))


def spin_momentum_negativities(rho4: np.ndarray) -> tuple[float, float]:
    """(spin-1 vs rest, both-spins vs both-momenta) of a reduced density."""
    return negativity(rho4, SPIN_VS_REST), negativity(rho4, SPINS_VS_MOMENTA)


def spin_spin_negativity(rho4: np.ndarray) -> float:
    """Spin-spin negativity of a reduced density, momentum qubits traced."""
    return negativity(rho4, SPIN_SPIN)


def wigner_angle(xi0: float, omega: float) -> float:
    """delta = atan(sinh(xi0) sinh(omega) / (cosh(xi0) + cosh(omega)))."""
    if xi0 < 0 or omega < 0:
        raise ValueError("rapidities must be non-negative")
    return math.atan(math.sinh(xi0) * math.sinh(omega) / (math.cosh(xi0) + math.cosh(omega)))


# Near pi/2 the angle is reached only asymptotically; this pair gets within
# 2e-4 of it and is returned, flagged, for any request closer than the cap.
_ASYMPTOTIC_RAPIDITY = 10.0
_ASYMPTOTIC_BAND = 1e-3


def rapidities_for_wigner_angle(delta: float) -> WignerParams:
    """Symmetric rapidity pair xi0 = omega producing the given Wigner angle.

    Putting xi0 = omega the angle condition becomes a quadratic in
    cosh(omega) with positive root cosh(omega) = tan(delta) + sec(delta).
    Angles within 1e-3 of pi/2 return the capped pair (10, 10) flagged as
    asymptotic; delta outside [0, pi/2) raises UnreachableAngle.
    """
    if delta < 0 or delta >= math.pi / 2:
        raise UnreachableAngle(f"Wigner angle must lie in [0, pi/2), got {delta}")
    if delta >= math.pi / 2 - _ASYMPTOTIC_BAND:
        w = _ASYMPTOTIC_RAPIDITY
        return WignerParams(w, w, wigner_angle(w, w), asymptotic=True)
    c = math.tan(delta) + 1.0 / math.cos(delta)
    w = math.acosh(c)
    return WignerParams(w, w, delta)
