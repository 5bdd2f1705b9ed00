"""Dense complex linear algebra with qubit-register index semantics.

Register convention used everywhere in this package: qubit 0 is the most
significant bit of the amplitude index, i.e. reshaping a length-2**n state
to shape (2,)*n puts qubit i on axis i, and tensor factors appear in
declaration order. All functions are pure and never mutate their inputs.
"""
from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidDimension, NotHermitian, ZeroNorm

# Hermiticity is enforced at this tolerance before any eigendecomposition.
HERMITICITY_TOL = 1e-10
# Spectrum entries below this magnitude are treated as exact zeros when
# summing negative eigenvalue mass, so separable inputs give negativity 0.
EIGENVALUE_CLAMP = 1e-12

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def kron(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices or vectors, left to right."""
    if not factors:
        raise InvalidDimension("kron needs at least one factor")
    arrays = [np.asarray(f, dtype=complex) for f in factors]
    return reduce(np.kron, arrays)


def num_qubits(dim: int) -> int:
    """Number of qubits for a register of dimension ``dim`` (must be 2**n)."""
    n = int(dim).bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise InvalidDimension(f"dimension {dim} is not a power of two")
    return n


def _check_subset(indices: Iterable[int], n: int, what: str) -> tuple[int, ...]:
    idx = tuple(int(q) for q in indices)
    if len(set(idx)) != len(idx):
        raise InvalidDimension(f"{what} contains duplicate qubit indices: {idx}")
    if any(q < 0 or q >= n for q in idx):
        raise InvalidDimension(f"{what} {idx} out of range for {n} qubits")
    return tuple(sorted(idx))


def normalize(v: np.ndarray) -> np.ndarray:
    """Return v / ||v||; raises ZeroNorm if the norm is below 1e-14."""
    v = np.asarray(v, dtype=complex)
    nrm = np.linalg.norm(v)
    if nrm <= 1e-14:
        raise ZeroNorm(f"cannot normalize vector of norm {nrm:.3e}")
    return v / nrm


def fix_global_phase(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate the global phase so the first non-negligible entry is real > 0.

    Makes 'equal up to a phase' comparisons deterministic.
    """
    v = np.asarray(v, dtype=complex)
    for c in v.flat:
        if abs(c) > tol:
            return v * (c.conjugate() / abs(c))
    return v.copy()


def density_matrix(state: np.ndarray) -> np.ndarray:
    """Outer product for a state vector; a 2-D input passes through."""
    arr = np.asarray(state, dtype=complex)
    if arr.ndim == 1:
        return np.outer(arr, arr.conj())
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
        return arr
    raise InvalidDimension(f"expected ket or square matrix, got shape {arr.shape}")


def partial_trace(rho: np.ndarray, keep: Sequence[int]) -> np.ndarray:
    """Trace out every qubit not listed in ``keep``.

    The surviving register keeps the ascending original qubit order. Trace
    and Hermiticity are preserved.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidDimension(f"density matrix must be square, got {rho.shape}")
    n = num_qubits(rho.shape[0])
    kept = _check_subset(keep, n, "keep")
    if not kept:
        raise InvalidDimension("keep must contain at least one qubit")
    row = _LETTERS[:n]
    col = list(_LETTERS[n : 2 * n])
    for q in range(n):
        if q not in kept:
            col[q] = row[q]
    out = "".join(row[q] for q in kept) + "".join(col[q] for q in kept)
    sub = f"{row}{''.join(col)}->{out}"
    k = len(kept)
    return np.einsum(sub, rho.reshape((2,) * (2 * n))).reshape(2**k, 2**k)


def partial_transpose(rho: np.ndarray, side_a: Sequence[int]) -> np.ndarray:
    """Transpose only the indices of the qubits in ``side_a``.

    An involution: applying it twice with the same subset returns the input.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidDimension(f"density matrix must be square, got {rho.shape}")
    n = num_qubits(rho.shape[0])
    side = _check_subset(side_a, n, "side_a")
    perm = list(range(2 * n))
    for q in side:
        perm[q], perm[n + q] = perm[n + q], perm[q]
    return rho.reshape((2,) * (2 * n)).transpose(perm).reshape(rho.shape)


def hermitian_eigenvalues(m: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending.

    Raises NotHermitian if max |m - m^dagger| exceeds ``tol``.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidDimension(f"matrix must be square, got {m.shape}")
    dev = np.abs(m - m.conj().T).max()
    if dev > tol:
        raise NotHermitian(f"matrix deviates from Hermiticity by {dev:.3e}")
    return np.linalg.eigvalsh(m)


def purity(rho: np.ndarray) -> float:
    """Tr[rho^2] as a real number."""
    rho = np.asarray(rho, dtype=complex)
    return float(np.einsum("ij,ji->", rho, rho).real)


def embed(n: int, ops: dict[int, np.ndarray]) -> np.ndarray:
    """Single-qubit operators placed on the given qubits, identity elsewhere."""
    eye = np.eye(2, dtype=complex)
    for q in ops:
        _check_subset([q], n, "ops")
    return kron(*(ops.get(q, eye) for q in range(n)))
