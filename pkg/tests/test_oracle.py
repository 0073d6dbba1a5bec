import math

import numpy as np
import pytest

from entangler_lab.concurrence import Verdict, classify
from entangler_lab.oracle import (
    DensityMatrix,
    StateClass,
    oracle_classify,
    partial_trace,
    three_tangle,
    verdicts_agree,
    wootters_concurrence,
)
from entangler_lab.state_core import (
    PureState,
    ghz_state,
    kron_all,
    product_state,
    w_state,
)

rng = np.random.default_rng(808)


def random_state(dims):
    n = math.prod(dims)
    return PureState(dims, rng.normal(size=n) + 1j * rng.normal(size=n))


def random_product(dims):
    return product_state(
        [PureState((n,), rng.normal(size=n) + 1j * rng.normal(size=n)) for n in dims]
    )


def bell_state():
    return PureState((2, 2), np.array([1, 0, 0, 1]) / math.sqrt(2))


def random_unitary(n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


# ---------------------------------------------------------------------------
# partial traces


def test_partial_trace_product_state_is_pure_projector():
    s = random_product((2, 3, 2))
    for k in (1, 2, 3):
        rho = partial_trace(s, (k,))
        assert rho.purity() == pytest.approx(1.0, abs=1e-12)


def test_partial_trace_ghz_marginal():
    rho = partial_trace(ghz_state(), (1,))
    assert np.allclose(rho.mat, np.diag([0.5, 0.5]), atol=1e-14)


def test_partial_trace_bell_marginal():
    rho = partial_trace(bell_state(), (2,))
    assert np.allclose(rho.mat, np.eye(2) / 2, atol=1e-14)


def test_partial_trace_validation():
    s = random_state((2, 2))
    with pytest.raises(ValueError):
        partial_trace(s, ())
    with pytest.raises(ValueError):
        partial_trace(s, (3,))
    with pytest.raises(ValueError):
        partial_trace(s, (1, 1))


def test_partial_trace_invariants_on_random_states():
    # the DensityMatrix constructor enforces Hermiticity, unit trace, and PSD
    for _ in range(1000):
        dims = tuple(rng.choice([2, 3], size=rng.integers(2, 4)))
        s = random_state(dims)
        keep = (int(rng.integers(1, len(dims) + 1)),)
        partial_trace(s, keep)


def test_density_matrix_validation():
    with pytest.raises(ValueError, match="Hermitian"):
        DensityMatrix((2,), np.array([[0.5, 0.5], [-0.5, 0.5]]))
    with pytest.raises(ValueError, match="trace"):
        DensityMatrix((2,), np.eye(2))
    with pytest.raises(ValueError, match="semidefinite"):
        DensityMatrix((2,), np.diag([1.5, -0.5]))


# ---------------------------------------------------------------------------
# Wootters concurrence


def test_wootters_bell():
    rho = partial_trace(bell_state(), (1, 2))
    assert wootters_concurrence(rho) == pytest.approx(1.0, abs=1e-10)


def test_wootters_product():
    rho = partial_trace(random_product((2, 2)), (1, 2))
    assert wootters_concurrence(rho) == pytest.approx(0.0, abs=1e-10)


def test_wootters_w_state_pair():
    for pair in [(1, 2), (1, 3), (2, 3)]:
        rho = partial_trace(w_state(), pair)
        assert wootters_concurrence(rho) == pytest.approx(2 / 3, abs=1e-10)


def test_wootters_pure_state_specialization():
    for _ in range(300):
        s = random_state((2, 2))
        direct = 2 * abs(s.amps[0] * s.amps[3] - s.amps[1] * s.amps[2]) / s.norm2
        rho = partial_trace(s, (1, 2))
        assert wootters_concurrence(rho) == pytest.approx(direct, abs=1e-10)


def test_wootters_validation():
    with pytest.raises(ValueError):
        wootters_concurrence(np.eye(4))  # trace 4
    with pytest.raises(ValueError):
        wootters_concurrence(partial_trace(random_state((2, 3)), (2,)))


# ---------------------------------------------------------------------------
# three-tangle


def test_three_tangle_canonical_values():
    assert three_tangle(ghz_state()) == pytest.approx(1.0, abs=1e-10)
    assert three_tangle(w_state()) == pytest.approx(0.0, abs=1e-10)
    assert three_tangle(random_product((2, 2, 2))) == pytest.approx(0.0, abs=1e-10)


def test_three_tangle_local_unitary_invariance():
    for _ in range(100):
        s = random_state((2, 2, 2))
        u = kron_all([random_unitary(2) for _ in range(3)])
        rotated = PureState(s.dims, u @ s.amps)
        assert three_tangle(rotated) == pytest.approx(three_tangle(s), abs=1e-10)


def test_three_tangle_shape_validation():
    with pytest.raises(ValueError):
        three_tangle(random_state((2, 2)))
    with pytest.raises(ValueError):
        three_tangle(random_state((3, 3, 3)))


# ---------------------------------------------------------------------------
# classification


def test_oracle_ghz():
    verdict = oracle_classify(ghz_state())
    assert verdict.label is StateClass.GHZ_CLASS
    assert verdict.three_tangle == pytest.approx(1.0, abs=1e-10)


def test_oracle_w():
    verdict = oracle_classify(w_state())
    assert verdict.label is StateClass.W_CLASS
    assert verdict.three_tangle == pytest.approx(0.0, abs=1e-10)
    assert all(c == pytest.approx(2 / 3, abs=1e-10) for c in verdict.pairwise_concurrence.values())
    assert all(abs(p - 1) > 1e-3 for p in verdict.purities)


def test_oracle_biseparable():
    amps = np.kron(np.array([1, 0]), bell_state().amps)
    state = PureState((2, 2, 2), amps)
    verdict = oracle_classify(state)
    assert verdict.label is StateClass.BISEPARABLE
    assert verdict.split == 1
    assert verdict.pairwise_concurrence[(2, 3)] == pytest.approx(1.0, abs=1e-10)


def test_oracle_product():
    verdict = oracle_classify(random_product((2, 2, 2)))
    assert verdict.label is StateClass.PRODUCT
    assert verdict.split is None
    assert all(p == pytest.approx(1.0, abs=1e-9) for p in verdict.purities)


def test_oracle_generic_shapes():
    assert oracle_classify(random_product((3, 3))).label is StateClass.PRODUCT
    assert oracle_classify(bell_state()).label is StateClass.ENTANGLED
    verdict = oracle_classify(random_state((3, 3, 3)))
    assert verdict.label is StateClass.ENTANGLED
    assert verdict.three_tangle is None and verdict.pairwise_concurrence is None


def test_oracle_unnormalized_input_same_label():
    s = ghz_state()
    scaled = PureState(s.dims, 7.3 * s.amps)
    assert oracle_classify(scaled).label is StateClass.GHZ_CLASS


# ---------------------------------------------------------------------------
# agreement with the condition route


def test_verdicts_agree_canonical():
    assert verdicts_agree(classify(ghz_state()).verdict, oracle_classify(ghz_state()))
    assert verdicts_agree(classify(w_state()).verdict, oracle_classify(w_state()))
    p = random_product((2, 2, 2))
    assert verdicts_agree(classify(p).verdict, oracle_classify(p))


def test_verdicts_disagree_on_contradiction():
    assert not verdicts_agree(Verdict.GHZ_CLASS_CONDITIONS, oracle_classify(random_product((2, 2, 2))))
    assert not verdicts_agree(Verdict.NO_CONDITION_FIRES, oracle_classify(ghz_state()))
    assert not verdicts_agree(Verdict.W_CLASS_CONDITIONS, oracle_classify(ghz_state()))


def test_verdicts_agree_biseparable_with_pair_conditions():
    amps = np.kron(np.array([1, 0]), bell_state().amps)
    state = PureState((2, 2, 2), amps)
    report = classify(state)
    # the (2,3) pair condition certifies exactly the entanglement present
    assert report.verdict is Verdict.W_CLASS_CONDITIONS
    assert verdicts_agree(report.verdict, oracle_classify(state))
