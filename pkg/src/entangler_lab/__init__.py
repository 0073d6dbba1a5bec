"""Gate entanglers for W/GHZ-type multipartite classes, with independent checks.

The package has three layers that deliberately do not share mathematics:

* construction -- multipartite states (`state_core`), pairwise phase
  operators (`class_operators`), and the corner-diagonal + antidiagonal gate
  family (`entangler`);
* conditions -- bilinear pair-condition functionals and their explicit
  three-party expansions (`concurrence`), plus braid/Yang-Baxter structure
  checks (`braid`);
* verification -- a brute-force oracle built from partial traces, Wootters
  concurrence, and the three-tangle (`oracle`), used to cross-check every
  condition verdict.

`cli` exposes the same functionality as the `entangler-lab` command.
"""

from .braid import (
    BraidRelationReport,
    QuasitriangularResult,
    StrandRep,
    YbeResult,
    check_braid_relations,
    check_quasitriangular,
    check_ybe,
    factor_swap,
)
from .class_operators import (
    ClassKind,
    ClassOperatorSpec,
    PhaseAssignment,
    class_operator,
    pair_specs,
    povm_element,
    tilde_operator,
)
from .concurrence import (
    ConditionReport,
    ConditionValue,
    Verdict,
    bilinear_condition,
    classify,
    epr_expansion_3q,
    ghz_expansion_3q,
)
from .entangler import (
    EntanglerSpec,
    EvaluationTarget,
    PhaseSwapDecomposition,
    PropositionCheck,
    UnitarityCheck,
    apply_entangler,
    build_r,
    check_unitary,
    coefficient_state,
    phase_swap_decomposition,
    proposition_check,
    swap_gate,
)
from .oracle import (
    DensityMatrix,
    OracleVerdict,
    StateClass,
    oracle_classify,
    partial_trace,
    three_tangle,
    verdicts_agree,
    wootters_concurrence,
)
from .state_core import (
    DEFAULT_TOL,
    MultiIndex,
    OperatorMatrix,
    PureState,
    basis_state,
    conjugate_state,
    flatten,
    ghz_state,
    kron_all,
    product_state,
    unflatten,
    uniform_input,
    w_state,
)

__version__ = "0.1.0"
