#!/usr/bin/env python3
"""Split a space into sign-definite parts of one operator.

decompose() returns three mutually orthogonal subspaces on which the
operator's inner product is positive, negative, and zero; their
dimensions are the index triple and their direct sum is everything.
The companion projections are idempotent and sum to the identity.
"""

import numpy as np

from kreinalg import (KOperator, classify_subspace, decompose, hermitian_indices,
                      make_space, projections, spectral_norm, validate)

J = np.diag([1.0, -1.0, 1.0, -1.0]).astype(complex)
H = make_space(J)

# selfadjoint, with a one-dimensional kernel baked in
M = np.array([[0.5, 1.5, 0.0, 0.0],
              [-1.5, -0.5, 0.0, 0.0],
              [0.0, 0.0, 1.0, 1.0],
              [0.0, 0.0, -1.0, -1.0]], dtype=complex)
C = KOperator(H, H, M)

idx = hermitian_indices(C)
print("indices:", tuple(idx))

dec = decompose(C)
print("part dimensions:", dec.M_plus.dim, dec.M_minus.dim, dec.M_zero.dim)
for name, part in (("plus", dec.M_plus), ("minus", dec.M_minus),
                   ("zero", dec.M_zero)):
    print(f"  {name} part classifies as {classify_subspace(C, part).value}")

report = validate(C, dec)
for key, value in report.items():
    print(f"  {key}: {value}")
assert report["passed"]

P = projections(C, dec)
Q = [P.Q_plus.matrix, P.Q_minus.matrix, P.Q_zero.matrix]
resid_idem = max(spectral_norm(q @ q - q) for q in Q)
resid_sum = spectral_norm(sum(Q) - np.eye(4))
print(f"projection idempotency residual {resid_idem:.2e}, "
      f"sum-to-identity residual {resid_sum:.2e}")
assert resid_idem <= 1e-8 and resid_sum <= 1e-8
print("ok")
