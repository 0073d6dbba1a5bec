"""Walkthrough: Yang-Baxter, braid relations, and the quasitriangular check.

Everything is measured: a residual is data, and a verdict is residual <= tol.
The interesting empirical finding for the gate family is that the two-qubit
(m=2, N=2) gates solve the Yang-Baxter equation for EVERY parameter choice,
while the two-qutrit gates never do.
"""

import numpy as np

from entangler_lab import (
    EntanglerSpec,
    StrandRep,
    build_r,
    check_braid_relations,
    check_quasitriangular,
    check_ybe,
    factor_swap,
)

rng = np.random.default_rng(33)

print("=== Yang-Baxter residuals ===")
cases = {
    "identity (4x4)": np.eye(4, dtype=complex),
    "swap of two qubits": factor_swap(2),
    "two-qubit gate, corner phase e^{0.7i}": build_r(EntanglerSpec(2, 2, [1, 1, 1, np.exp(0.7j)])).mat,
    "two-qubit gate, random unimodular alpha": build_r(
        EntanglerSpec(2, 2, np.exp(1j * rng.uniform(0, 2 * np.pi, 4)))
    ).mat,
    "two-qutrit gate, random unimodular alpha": build_r(
        EntanglerSpec(2, 3, np.exp(1j * rng.uniform(0, 2 * np.pi, 9)))
    ).mat,
    "random dense operator": rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)),
}
for name, mat in cases.items():
    result = check_ybe(mat)
    print(f"  {name:<45} residual {result.residual:9.2e}   {'solves' if result.passed else 'violates'}")

print("\n=== induced strand representations ===")
swap = factor_swap(2)
for n in (3, 4):
    report = check_braid_relations(StrandRep(n, swap))
    print(
        f"  swap on {n} strands: adjacent residual {report.max_adjacent_residual:.2e}, "
        f"commuting residual {report.max_commuting_residual:.2e}"
    )

print("\ndisjoint slots commute even for operators that violate the equation:")
bad = cases["random dense operator"]
report = check_braid_relations(StrandRep(4, bad))
print(f"  random operator, pairs {[(i, j) for i, j, _ in report.commuting]}: "
      f"commuting residual {report.max_commuting_residual:.2e}")
print(f"  ... but its adjacent residual {report.max_adjacent_residual:.2e} equals "
      f"its YBE residual {check_ybe(bad).residual:.2e}")

print("\n=== quasitriangular relation R12 R13 R23 = R23 R13 R12 ===")
for name in ("identity (4x4)", "swap of two qubits", "random dense operator"):
    mat = cases[name]
    result = check_quasitriangular(mat)
    print(
        f"  {name:<45} residual {result.residual:9.2e}; "
        f"swap @ R has YBE residual {result.induced_ybe.residual:9.2e}"
    )
print("whenever the relation holds, swap @ R solves the Yang-Baxter equation")
print("(the two defect matrices are the same entries rearranged).")
