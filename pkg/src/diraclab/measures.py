"""Entanglement quantifiers over n-qubit registers.

Negativity follows the normalization (sum_i |mu_i| - 1) / (d - 1), where
mu_i is the spectrum of the partial transpose and d is the smaller of the
two side dimensions (so the value is symmetric under swapping sides and
lies in [0, 1]). It is computed as twice the negative eigenvalue mass,
which is the same number for unit-trace inputs and returns exactly zero
for separable states once sub-clamp eigenvalues are discarded.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import PartitionError
from .tensor_core import (
    EIGENVALUE_CLAMP,
    density_matrix,
    hermitian_eigenvalues,
    num_qubits,
    partial_trace,
    partial_transpose,
    purity,
)

PARTITION_KINDS = ("one_vs_rest", "pair_vs_pair", "one_vs_two", "one_vs_one")


@dataclass(frozen=True)
class Bipartition:
    """A split of a register into side A, side B and traced-out qubits."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    traced: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        a = tuple(sorted(int(q) for q in self.side_a))
        b = tuple(sorted(int(q) for q in self.side_b))
        t = tuple(sorted(int(q) for q in self.traced))
        object.__setattr__(self, "side_a", a)
        object.__setattr__(self, "side_b", b)
        object.__setattr__(self, "traced", t)
        if not a or not b:
            raise PartitionError("side_a and side_b must be nonempty")
        union = a + b + t
        if len(set(union)) != len(union):
            raise PartitionError(f"overlapping qubit sets in {self}")

    @staticmethod
    def of(n_qubits: int, side_a: Sequence[int], side_b: Sequence[int]) -> "Bipartition":
        """Build a partition over ``n_qubits``, tracing whatever is left over."""
        rest = set(range(n_qubits)) - set(side_a) - set(side_b)
        return Bipartition(tuple(side_a), tuple(side_b), tuple(sorted(rest)))

    def validate(self, n_qubits: int) -> None:
        union = set(self.side_a) | set(self.side_b) | set(self.traced)
        if union != set(range(n_qubits)):
            raise PartitionError(
                f"partition covers qubits {sorted(union)}, register has {n_qubits}"
            )

    def label(self, names: Sequence[str]) -> str:
        a = "".join(names[q] for q in self.side_a)
        b = "".join(names[q] for q in self.side_b)
        return f"{a};{b}"


class MeanNegativities(NamedTuple):
    """Averages over the four partition families of a 4-qubit register."""

    n1: float  # one qubit vs the other three
    n2: float  # one vs one, remaining pair traced
    n3: float  # one vs two, remaining qubit traced
    n4: float  # pair vs pair


def negativity(state: np.ndarray, part: Bipartition) -> float:
    """Negativity of ``state`` (ket or density matrix) across ``part``.

    Qubits in ``part.traced`` are traced out first; the partial transpose
    is taken over side A of the reduced register.
    """
    rho = density_matrix(state)
    n = num_qubits(rho.shape[0])
    part.validate(n)
    kept = sorted(part.side_a + part.side_b)
    if part.traced:
        rho = partial_trace(rho, kept)
    pos = {q: i for i, q in enumerate(kept)}
    pt = partial_transpose(rho, [pos[q] for q in part.side_a])
    lam = hermitian_eigenvalues(pt)
    neg_mass = float(-lam[lam < -EIGENVALUE_CLAMP].sum())
    d = min(2 ** len(part.side_a), 2 ** len(part.side_b))
    return max(0.0, 2.0 * neg_mass / (d - 1))


def linear_entropy(state: np.ndarray, keep: Sequence[int], prefactor: float = 2.0) -> float:
    """prefactor * (1 - Tr[rho_keep^2]) for a pure input state.

    The default prefactor 2 makes the particle-partition entropy of the
    Bell-like two-particle states equal sin^2(2 theta) exactly.
    """
    rho = partial_trace(density_matrix(state), keep)
    return prefactor * (1.0 - purity(rho))


def enumerate_bipartitions(n_qubits: int, kind: str) -> list[Bipartition]:
    """All bipartitions of one of the four supported families.

    For a 4-qubit register the counts are 4 (one_vs_rest), 3 (pair_vs_pair),
    12 (one_vs_two: traced qubit x singleton) and 6 (one_vs_one, unordered).
    """
    if kind not in PARTITION_KINDS:
        raise PartitionError(f"unknown partition kind {kind!r}")
    if n_qubits < 2:
        raise PartitionError(f"need at least 2 qubits, got {n_qubits}")
    qubits = range(n_qubits)
    if kind == "one_vs_rest":
        return [Bipartition.of(n_qubits, (i,), tuple(j for j in qubits if j != i)) for i in qubits]
    if kind == "one_vs_one":
        return [
            Bipartition.of(n_qubits, (i,), (j,))
            for i in qubits
            for j in qubits
            if i < j
        ]
    if n_qubits != 4:
        raise PartitionError(f"{kind} is defined for 4 qubits, got {n_qubits}")
    if kind == "pair_vs_pair":
        return [
            Bipartition.of(4, (0, k), tuple({1, 2, 3} - {k}))
            for k in (1, 2, 3)
        ]
    # one_vs_two: pick the traced qubit, then the singleton among the rest
    parts = []
    for t in qubits:
        rest = [q for q in qubits if q != t]
        for i in rest:
            pair = tuple(q for q in rest if q != i)
            parts.append(Bipartition((i,), pair, (t,)))
    return parts


def mean_negativities(psi: np.ndarray) -> MeanNegativities:
    """The four family-averaged negativities of a pure 4-qubit state."""
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1 or psi.size != 16:
        raise PartitionError(f"expected a 4-qubit ket, got shape {psi.shape}")

    def mean(kind: str) -> float:
        parts = enumerate_bipartitions(4, kind)
        return float(np.mean([negativity(psi, p) for p in parts]))

    return MeanNegativities(
        n1=mean("one_vs_rest"),
        n2=mean("one_vs_one"),
        n3=mean("one_vs_two"),
        n4=mean("pair_vs_pair"),
    )
