import math

import numpy as np
import pytest

from entangler_lab.class_operators import ClassKind, ClassOperatorSpec, class_operator, pair_specs
from entangler_lab.concurrence import (
    Verdict,
    bilinear_condition,
    classify,
    epr_expansion_3q,
    ghz_expansion_3q,
)
from entangler_lab.state_core import (
    PureState,
    basis_state,
    conjugate_state,
    ghz_state,
    product_state,
    w_state,
)

rng = np.random.default_rng(99)

PAIRS = [(1, 2), (1, 3), (2, 3)]


def random_state(dims):
    n = math.prod(dims)
    return PureState(dims, rng.normal(size=n) + 1j * rng.normal(size=n))


def random_product(dims):
    return product_state(
        [PureState((n,), rng.normal(size=n) + 1j * rng.normal(size=n)) for n in dims]
    )


# ---------------------------------------------------------------------------
# explicit three-party expansions


@pytest.mark.parametrize("pair", PAIRS)
def test_w_state_epr_expansion_is_one_third(pair):
    assert epr_expansion_3q(w_state(), pair) == pytest.approx(1 / 3, abs=1e-15)


@pytest.mark.parametrize("pair", PAIRS)
def test_ghz_state_ghz_expansion_is_minus_half(pair):
    assert ghz_expansion_3q(ghz_state(), pair) == pytest.approx(-0.5, abs=1e-15)


@pytest.mark.parametrize("pair", PAIRS)
def test_cross_expansions_vanish(pair):
    assert ghz_expansion_3q(w_state(), pair) == 0
    assert epr_expansion_3q(ghz_state(), pair) == 0


@pytest.mark.parametrize("pair", PAIRS)
def test_expansions_vanish_on_product_states(pair):
    for _ in range(25):
        s = random_product((2, 2, 2))
        scale = s.norm2
        assert abs(epr_expansion_3q(s, pair)) < 1e-13 * scale
        assert abs(ghz_expansion_3q(s, pair)) < 1e-13 * scale


def test_expansions_require_three_parties():
    s = random_state((2, 2))
    with pytest.raises(ValueError):
        epr_expansion_3q(s, (1, 2))
    with pytest.raises(ValueError):
        ghz_expansion_3q(s, (1, 2))
    with pytest.raises(ValueError):
        epr_expansion_3q(random_state((2, 2, 2)), (2, 1))


# ---------------------------------------------------------------------------
# operator route


def test_bilinear_on_product_states_vanishes():
    for dims in [(2, 2), (3, 3), (2, 2, 2), (2, 3, 2), (2, 2, 2, 2), (3, 3, 3), (2, 3, 3, 2)]:
        s = random_product(dims)
        for kind in ClassKind:
            for spec in pair_specs(dims, kind):
                value = bilinear_condition(s, class_operator(spec))
                assert abs(value) < 1e-12 * s.norm2


def test_bilinear_ghz_state_ghz_operator_magnitude_one():
    value = bilinear_condition(ghz_state(), class_operator(ClassOperatorSpec((2, 2, 2), ClassKind.GHZ, (1, 2))))
    assert abs(value) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("pair", PAIRS)
def test_bilinear_w_state_ghz_operator_vanishes(pair):
    value = bilinear_condition(w_state(), class_operator(ClassOperatorSpec((2, 2, 2), ClassKind.GHZ, pair)))
    assert value == 0


def test_bilinear_dimension_mismatch():
    with pytest.raises(ValueError):
        bilinear_condition(random_state((2, 2)), class_operator(ClassOperatorSpec((2, 2, 2), ClassKind.EPR, (1, 2))))


# ---------------------------------------------------------------------------
# keystone: operator route vs explicit expansions


@pytest.mark.parametrize("dims", [(2, 2, 2), (3, 3, 3), (2, 3, 2)])
def test_operator_equals_scaled_expansion(dims):
    for _ in range(100):
        s = random_state(dims)
        for pair in PAIRS:
            epr_op = bilinear_condition(s, class_operator(ClassOperatorSpec(dims, ClassKind.EPR, pair)))
            ghz_op = bilinear_condition(s, class_operator(ClassOperatorSpec(dims, ClassKind.GHZ, pair)))
            epr_ex = epr_expansion_3q(s, pair)
            ghz_ex = ghz_expansion_3q(s, pair)
            assert epr_op == pytest.approx(2 * epr_ex, rel=1e-10, abs=1e-12)
            assert ghz_op == pytest.approx(-2 * ghz_ex, rel=1e-10, abs=1e-12)


# ---------------------------------------------------------------------------
# structural properties of the bilinear form


def test_scaling_homogeneity_exact_for_power_of_two():
    s = random_state((2, 2, 2))
    doubled = PureState(s.dims, 2 * s.amps)  # power-of-two scale: exact in binary fp
    for kind in ClassKind:
        for spec in pair_specs(s.dims, kind):
            op = class_operator(spec)
            assert bilinear_condition(doubled, op) == 4 * bilinear_condition(s, op)


def test_normalized_magnitude_invariant_under_complex_scale():
    s = random_state((2, 2, 2))
    c = 0.37 - 1.9j
    scaled = PureState(s.dims, c * s.amps)
    r1 = classify(s)
    r2 = classify(scaled)
    for v1, v2 in zip(r1.values, r2.values):
        assert v2.normalized_magnitude == pytest.approx(v1.normalized_magnitude, rel=1e-12, abs=1e-15)


def test_permutation_covariance_swap_first_two():
    s = random_state((2, 2, 2))
    swapped = PureState(s.dims, s.amps.reshape(2, 2, 2).transpose(1, 0, 2).reshape(8))
    for kind in ClassKind:
        def value(state, pair):
            return bilinear_condition(state, class_operator(ClassOperatorSpec((2, 2, 2), kind, pair)))

        assert value(swapped, (1, 2)) == pytest.approx(value(s, (1, 2)), rel=1e-12)
        assert value(swapped, (1, 3)) == pytest.approx(value(s, (2, 3)), rel=1e-12)
        assert value(swapped, (2, 3)) == pytest.approx(value(s, (1, 3)), rel=1e-12)


def test_conjugation_preserves_condition_magnitudes():
    s = random_state((2, 2, 2))
    c = conjugate_state(s)
    for kind in ClassKind:
        for spec in pair_specs(s.dims, kind):
            op = class_operator(spec)
            assert abs(bilinear_condition(c, op)) == pytest.approx(
                abs(bilinear_condition(s, op)), rel=1e-12
            )


# ---------------------------------------------------------------------------
# aggregation


def test_classify_ghz():
    report = classify(ghz_state(), tol=1e-9)
    assert report.verdict is Verdict.GHZ_CLASS_CONDITIONS
    ghz_values = [v for v in report.values if v.kind is ClassKind.GHZ]
    assert all(v.normalized_magnitude == pytest.approx(1.0, abs=1e-12) for v in ghz_values)


def test_classify_w():
    report = classify(w_state(), tol=1e-9)
    assert report.verdict is Verdict.W_CLASS_CONDITIONS
    epr_values = [v for v in report.values if v.kind is ClassKind.EPR]
    assert all(v.normalized_magnitude == pytest.approx(2 / 3, abs=1e-12) for v in epr_values)


def test_classify_basis_state_product():
    report = classify(basis_state((2, 2, 2), (1, 1, 1)), tol=1e-9)
    assert report.verdict is Verdict.NO_CONDITION_FIRES


def test_classify_generic_state_fires_both():
    report = classify(random_state((2, 2, 2)))
    assert report.verdict is Verdict.BOTH


def test_classify_validation():
    with pytest.raises(ValueError):
        classify(PureState((2,), [0, 0]))
    with pytest.raises(ValueError):
        classify(ghz_state(), tol=0.0)


def test_report_contains_all_pairs():
    report = classify(random_state((2, 2, 2, 2)))
    assert len(report.values) == 2 * 6
    assert len({(v.kind, v.pair) for v in report.values}) == 12
