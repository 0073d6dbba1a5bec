"""Brute-force entanglement verification, independent of the condition route.

Everything here is standard reduced-state machinery: partial traces and
purities for product detection, the Wootters two-qubit concurrence, and the
degree-4 hyperdeterminant three-tangle for three qubits.  None of it shares
mathematics with the pair-condition functionals, so agreement between the two
routes is evidence rather than tautology.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .concurrence import Verdict
from .state_core import DEFAULT_TOL, PureState

_HERMITICITY_TOL = 1e-12
_TRACE_TOL = 1e-12
_PSD_FLOOR = -1e-10

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SPIN_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y)


class StateClass(enum.Enum):
    PRODUCT = "PRODUCT"
    BISEPARABLE = "BISEPARABLE"
    W_CLASS = "W_CLASS"
    GHZ_CLASS = "GHZ_CLASS"
    ENTANGLED = "ENTANGLED"  # fallback for shapes without a full class oracle


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Unit-trace Hermitian PSD matrix over the retained subsystems."""

    dims: tuple[int, ...]
    mat: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(n) for n in self.dims))
        mat = np.array(self.mat, dtype=complex)
        d = math.prod(self.dims)
        if mat.shape != (d, d):
            raise ValueError(f"expected a {d}x{d} matrix for dims {list(self.dims)}, got {mat.shape}")
        if np.max(np.abs(mat - mat.conj().T)) > _HERMITICITY_TOL:
            raise ValueError("density matrix must be Hermitian")
        if abs(np.trace(mat).real - 1.0) > _TRACE_TOL or abs(np.trace(mat).imag) > _TRACE_TOL:
            raise ValueError("density matrix must have unit trace")
        if np.linalg.eigvalsh(mat).min() < _PSD_FLOOR:
            raise ValueError("density matrix must be positive semidefinite")
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    @property
    def dim(self) -> int:
        return math.prod(self.dims)

    def purity(self) -> float:
        return float(np.trace(self.mat @ self.mat).real)


@dataclass(frozen=True)
class OracleVerdict:
    purities: tuple[float, ...]
    pairwise_concurrence: dict[tuple[int, int], float] | None
    three_tangle: float | None
    label: StateClass
    split: int | None
    ties: tuple[StateClass, ...]


def partial_trace(state: PureState, keep: Sequence[int]) -> DensityMatrix:
    """Reduced density matrix of the kept subsystems (1-based), normalized.

    Traces |psi><psi| / norm^2 over everything outside `keep`; the kept
    subsystems appear in the order given.
    """
    keep = tuple(int(k) for k in keep)
    if len(keep) == 0:
        raise ValueError("keep must name at least one subsystem")
    if len(set(keep)) != len(keep):
        raise ValueError(f"keep has duplicates: {keep}")
    for k in keep:
        if not 1 <= k <= state.m:
            raise ValueError(f"subsystem {k} outside 1..{state.m}")
    n2 = state.norm2
    if n2 == 0.0:
        raise ValueError("cannot reduce the zero vector")
    keep0 = [k - 1 for k in keep]
    rest0 = [i for i in range(state.m) if i not in keep0]
    tensor = state.amps.reshape(state.dims)
    tensor = np.transpose(tensor, keep0 + rest0)
    d_keep = math.prod(state.dims[i] for i in keep0)
    block = tensor.reshape(d_keep, -1)
    rho = (block @ block.conj().T) / n2
    return DensityMatrix(tuple(state.dims[i] for i in keep0), rho)


def _sqrtm_psd(mat: np.ndarray) -> np.ndarray:
    evals, vecs = np.linalg.eigh(mat)
    evals = np.clip(evals, 0.0, None)
    return (vecs * np.sqrt(evals)) @ vecs.conj().T


def wootters_concurrence(rho: DensityMatrix | np.ndarray) -> float:
    """Two-qubit concurrence max(0, l1 - l2 - l3 - l4).

    The l_i are the decreasing square-rooted eigenvalues of
    rho (sy x sy) rho* (sy x sy); they are computed here as the singular
    values of sqrt(rho) (sy x sy) sqrt(rho)*, which is the same spectrum but
    exact on rank-deficient inputs (pure states) where the plain eigenvalue
    route loses half the digits to sqrt-of-noise.
    """
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix((2, 2), rho)
    if rho.dims != (2, 2):
        raise ValueError(f"wootters_concurrence needs a two-qubit state, got dims {list(rho.dims)}")
    root = _sqrtm_psd(rho.mat)
    lam = np.linalg.svd(root @ _SPIN_FLIP @ root.conj(), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def three_tangle(state: PureState) -> float:
    """Residual three-qubit entanglement 4|d1 - 2 d2 + 4 d3|.

    Degree-4 polynomial in the (internally normalized) amplitudes; nonzero
    exactly on the GHZ class, zero on W-class, biseparable, and product
    states, and invariant under local unitaries.
    """
    if state.dims != (2, 2, 2):
        raise ValueError(f"three_tangle needs dims [2, 2, 2], got {list(state.dims)}")
    a = state.normalize().amps

    def g(i, j, k):  # 0-based qubit digits
        return a[4 * i + 2 * j + k]

    d1 = (
        g(0, 0, 0) ** 2 * g(1, 1, 1) ** 2
        + g(0, 0, 1) ** 2 * g(1, 1, 0) ** 2
        + g(0, 1, 0) ** 2 * g(1, 0, 1) ** 2
        + g(1, 0, 0) ** 2 * g(0, 1, 1) ** 2
    )
    d2 = (
        g(0, 0, 0) * g(1, 1, 1) * g(0, 1, 1) * g(1, 0, 0)
        + g(0, 0, 0) * g(1, 1, 1) * g(1, 0, 1) * g(0, 1, 0)
        + g(0, 0, 0) * g(1, 1, 1) * g(1, 1, 0) * g(0, 0, 1)
        + g(0, 1, 1) * g(1, 0, 0) * g(1, 0, 1) * g(0, 1, 0)
        + g(0, 1, 1) * g(1, 0, 0) * g(1, 1, 0) * g(0, 0, 1)
        + g(1, 0, 1) * g(0, 1, 0) * g(1, 1, 0) * g(0, 0, 1)
    )
    d3 = (
        g(0, 0, 0) * g(1, 1, 0) * g(1, 0, 1) * g(0, 1, 1)
        + g(1, 1, 1) * g(0, 0, 1) * g(0, 1, 0) * g(1, 0, 0)
    )
    return float(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3))


def oracle_classify(state: PureState, tol: float = DEFAULT_TOL) -> OracleVerdict:
    """Classify a pure state from reduced-state data alone.

    Product and biseparable detection work for any shape via single-party
    purities.  Full class labels (BISEPARABLE / W / GHZ) are produced only
    for three qubits; other entangled shapes get the generic ENTANGLED
    label.  Near-degenerate cases resolve in the fixed priority
    PRODUCT > BISEPARABLE > GHZ > W, with the losing candidates recorded in
    `ties`.
    """
    purities = tuple(partial_trace(state, (k,)).purity() for k in range(1, state.m + 1))
    pure_marginals = [k for k, p in enumerate(purities, start=1) if abs(p - 1.0) <= tol]
    all_qubits = all(n == 2 for n in state.dims)

    pairwise = None
    if all_qubits and state.m >= 2:
        pairwise = {
            pair: wootters_concurrence(partial_trace(state, pair))
            for pair in itertools.combinations(range(1, state.m + 1), 2)
        }

    tangle = three_tangle(state) if state.dims == (2, 2, 2) else None

    candidates: list[tuple[StateClass, int | None]] = []
    if len(pure_marginals) == state.m:
        candidates.append((StateClass.PRODUCT, None))
    if state.dims == (2, 2, 2):
        if len(pure_marginals) == 1:
            split = pure_marginals[0]
            pair = tuple(k for k in (1, 2, 3) if k != split)
            if pairwise[pair] > tol:
                candidates.append((StateClass.BISEPARABLE, split))
        if tangle > tol:
            candidates.append((StateClass.GHZ_CLASS, None))
        if len(pure_marginals) == 0 and tangle <= tol:
            candidates.append((StateClass.W_CLASS, None))
        if not candidates:
            # numerically ambiguous corner (e.g. one near-pure marginal with a
            # near-product pair); fall back on the tangle test
            candidates.append((StateClass.GHZ_CLASS if tangle > tol else StateClass.W_CLASS, None))
    elif not candidates:
        candidates.append((StateClass.ENTANGLED, None))

    priority = {
        StateClass.PRODUCT: 0,
        StateClass.BISEPARABLE: 1,
        StateClass.GHZ_CLASS: 2,
        StateClass.W_CLASS: 3,
        StateClass.ENTANGLED: 4,
    }
    candidates.sort(key=lambda c: priority[c[0]])
    label, split = candidates[0]
    ties = tuple(c[0] for c in candidates[1:])
    return OracleVerdict(
        purities=purities,
        pairwise_concurrence=pairwise,
        three_tangle=tangle,
        label=label,
        split=split if label is StateClass.BISEPARABLE else None,
        ties=ties,
    )


def verdicts_agree(verdict: Verdict, oracle: OracleVerdict) -> bool:
    """Consistency of the condition verdict with the oracle label.

    A fired condition certifies the state is not fully product, and the
    converse does not hold, so agreement means: conditions fire exactly when
    the oracle sees entanglement, and when exactly one family fires while
    the oracle commits to W or GHZ, the families match.
    """
    fired = verdict is not Verdict.NO_CONDITION_FIRES
    entangled = oracle.label is not StateClass.PRODUCT
    if fired != entangled:
        return False
    if verdict is Verdict.W_CLASS_CONDITIONS and oracle.label is StateClass.GHZ_CLASS:
        return False
    if verdict is Verdict.GHZ_CLASS_CONDITIONS and oracle.label is StateClass.W_CLASS:
        return False
    return True
