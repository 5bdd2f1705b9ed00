"""Relativistic kinematics and Dirac spinor algebra (natural units, hbar=c=1).

Matrix conventions. The Dirac representation is built from parity x spin
qubit factors,

    alpha_i = sigma_x (x) sigma_i,      beta = sigma_z (x) I,

so a 4-component spinor is a 2-qubit object with amplitudes ordered
(parity+, spin0), (parity+, spin1), (parity-, spin0), (parity-, spin1).

Boost conventions. ``BoostParams(omega, n)`` describes the passive
transformation into an observer frame moving with velocity tanh(omega)*n.
The spinor-space operator is

    S(omega, n) = cosh(omega/2) I - sinh(omega/2) n.alpha,

which is Hermitian and non-unitary for omega != 0, and composes additively
along a fixed axis. Consistently, four-momenta lose rapidity omega along n:
a particle at rest acquires three-momentum -m sinh(omega) n. Frameworks in
which momenta should gain rapidity along +z therefore use the axis
n = (0, 0, -1), matching an observer receding in the -z direction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateHelicity, SuperluminalInput
from .tensor_core import fix_global_phase, kron, normalize

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
ID2 = np.eye(2, dtype=complex)

PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)
ALPHA = tuple(kron(SIGMA_X, s) for s in PAULI)
BETA = kron(SIGMA_Z, ID2)
ID4 = np.eye(4, dtype=complex)


@dataclass(frozen=True)
class FourMomentum:
    """On-shell four-momentum (e, px, py, pz) with e > 0."""

    e: float
    px: float
    py: float
    pz: float

    def __post_init__(self) -> None:
        if not self.e > 0:
            raise ValueError(f"energy must be positive, got {self.e}")
        if self.e**2 - self.p_squared < -1e-10:
            raise ValueError("spacelike four-momentum")

    @property
    def three_momentum(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz], dtype=float)

    @property
    def p_squared(self) -> float:
        return self.px**2 + self.py**2 + self.pz**2

    @property
    def p(self) -> float:
        """Modulus of the three-momentum."""
        return math.sqrt(self.p_squared)

    @property
    def mass(self) -> float:
        return math.sqrt(max(self.e**2 - self.p_squared, 0.0))

    @staticmethod
    def rest(mass: float = 1.0) -> "FourMomentum":
        return FourMomentum(mass, 0.0, 0.0, 0.0)

    @staticmethod
    def from_rapidity(
        xi: float, direction=(0.0, 0.0, 1.0), mass: float = 1.0
    ) -> "FourMomentum":
        """Momentum of modulus m*sinh(xi) along ``direction`` (normalized)."""
        d = np.asarray(direction, dtype=float)
        d = d / np.linalg.norm(d)
        vec = mass * math.sinh(xi) * d
        return FourMomentum(mass * math.cosh(xi), *vec)


@dataclass(frozen=True)
class BoostParams:
    """Rapidity and unit direction of the observer's motion."""

    omega: float
    n: tuple[float, float, float]

    def __post_init__(self) -> None:
        if not math.isfinite(self.omega):
            raise ValueError(f"rapidity must be finite, got {self.omega}")
        nrm = math.sqrt(sum(c * c for c in self.n))
        if abs(nrm - 1.0) > 1e-12:
            raise ValueError(f"direction must be a unit vector, |n| = {nrm}")

    @property
    def direction(self) -> np.ndarray:
        return np.array(self.n, dtype=float)

    @staticmethod
    def along(omega: float, direction) -> "BoostParams":
        d = np.asarray(direction, dtype=float)
        d = d / np.linalg.norm(d)
        return BoostParams(omega, (d[0], d[1], d[2]))


def rapidity_from_velocity(v: float) -> float:
    """Rapidity via the map atanh(v / sqrt(1 - v^2)).

    Finite only for v < 1/sqrt(2), where the argument stays below 1.
    """
    if v >= 1.0:
        raise SuperluminalInput(f"speed {v} >= 1")
    if v < 0.0:
        raise ValueError(f"speed must be non-negative, got {v}")
    arg = v / math.sqrt(1.0 - v * v)
    if arg >= 1.0:
        raise ValueError(
            f"rapidity map diverges for v >= 1/sqrt(2), got v = {v}"
        )
    return math.atanh(arg)


def _sigma_dot(vec: np.ndarray) -> np.ndarray:
    return vec[0] * SIGMA_X + vec[1] * SIGMA_Y + vec[2] * SIGMA_Z


def helicity_spinor(p, s: int) -> np.ndarray:
    """Two-spinor satisfying (p.sigma / |p|) chi = s chi, for s = +1 or -1.

    Built by projecting a z-basis seed with (I + s n.sigma)/2, taking the
    better-conditioned seed, then normalizing and fixing the global phase
    so the first nonzero component is real positive.
    """
    if s not in (+1, -1):
        raise ValueError(f"helicity must be +1 or -1, got {s}")
    pvec = np.asarray(p, dtype=float)
    mod = np.linalg.norm(pvec)
    if mod < 1e-12:
        raise DegenerateHelicity("zero momentum has no helicity direction")
    nhat = pvec / mod
    proj = ID2 + s * _sigma_dot(nhat)
    # seed |0> has projection norm 2(1 + s*nz); |1> gives 2(1 - s*nz)
    seed = np.array([1.0, 0.0]) if s * nhat[2] >= 0.0 else np.array([0.0, 1.0])
    return fix_global_phase(normalize(proj @ seed))


def _chi(p: FourMomentum, s: int, spin_basis: str) -> np.ndarray:
    if s not in (+1, -1):
        raise ValueError(f"spin label must be +1 or -1, got {s}")
    if spin_basis == "z":
        return np.array([1.0, 0.0], dtype=complex) if s == +1 else np.array(
            [0.0, 1.0], dtype=complex
        )
    if spin_basis == "helicity":
        return helicity_spinor(p.three_momentum, s)
    raise ValueError(f"unknown spin basis {spin_basis!r}")


def bispinor_u(p: FourMomentum, s: int, spin_basis: str = "z") -> np.ndarray:
    """Positive-energy bispinor: H(p) u = +E u, with u^dagger u = 1.

    Upper block sqrt((E+m)/2E) chi_s, lower block (p.sigma) chi_s /
    sqrt(2E(E+m)). The default spin basis is the sigma_z eigenbasis; pass
    ``spin_basis="helicity"`` for helicity eigenstates.
    """
    chi = _chi(p, s, spin_basis)
    e, m = p.e, p.mass
    f = math.sqrt((e + m) / (2.0 * e))
    lower = _sigma_dot(p.three_momentum) @ chi / math.sqrt(2.0 * e * (e + m))
    return fix_global_phase(np.concatenate([f * chi, lower]))


def bispinor_v(p: FourMomentum, s: int, spin_basis: str = "z") -> np.ndarray:
    """Negative-energy bispinor: H(p) v = -E v, orthogonal to both u(p, .).

    The upper block carries -(p.sigma) chi_s / sqrt(2E(E+m)); the minus sign
    is what makes v a -E eigenvector of the Hamiltonian at the same momentum
    and guarantees u^dagger(p, s) v(p, r) = 0 exactly. The global phase is
    then fixed by the first-nonzero-positive rule.
    """
    chi = _chi(p, s, spin_basis)
    e, m = p.e, p.mass
    f = math.sqrt((e + m) / (2.0 * e))
    upper = -_sigma_dot(p.three_momentum) @ chi / math.sqrt(2.0 * e * (e + m))
    return fix_global_phase(np.concatenate([upper, f * chi]))


def dirac_hamiltonian(p: FourMomentum) -> np.ndarray:
    """H = p.alpha + m beta as a 4x4 matrix."""
    pvec = p.three_momentum
    return sum(pvec[i] * ALPHA[i] for i in range(3)) + p.mass * BETA


def boost_four_momentum(p: FourMomentum, b: BoostParams) -> FourMomentum:
    """Four-momentum seen by an observer moving with velocity tanh(omega)*n.

    e' = cosh(w) e - sinh(w) (n.p),
    p' = p + [(cosh(w) - 1)(n.p) - sinh(w) e] n.

    Preserves the invariant mass; the spinor operator of ``boost_bispinor``
    shifts momentum labels by exactly this map.
    """
    n = b.direction
    ch, sh = math.cosh(b.omega), math.sinh(b.omega)
    pvec = p.three_momentum
    ndotp = float(n @ pvec)
    e2 = ch * p.e - sh * ndotp
    vec2 = pvec + ((ch - 1.0) * ndotp - sh * p.e) * n
    return FourMomentum(e2, *vec2)


def boost_bispinor_matrix(b: BoostParams) -> np.ndarray:
    """S(omega, n) = cosh(omega/2) I - sinh(omega/2) n.alpha.

    Hermitian, not unitary for omega != 0; composes additively along a
    fixed axis.
    """
    n = b.direction
    nalpha = sum(n[i] * ALPHA[i] for i in range(3))
    return math.cosh(b.omega / 2.0) * ID4 - math.sinh(b.omega / 2.0) * nalpha


def boost_bispinor(u: np.ndarray, b: BoostParams) -> np.ndarray:
    """Apply the spinor boost and renormalize.

    The operator is non-unitary and the norm it produces depends on the
    state, so the result is rescaled by its actual norm (never by a fixed
    rapidity-dependent prefactor) and phase-fixed.
    """
    return fix_global_phase(normalize(boost_bispinor_matrix(b) @ np.asarray(u, complex)))
