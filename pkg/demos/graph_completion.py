#!/usr/bin/env python3
"""Grow an orthogonal semidefinite pair to a maximal one.

A nonnegative subspace is the graph of a contraction from part of the
positive component to the negative one; a nonpositive subspace is the
graph of a contraction going the other way.  Given such a pair,
orthogonal to each other, one block completion produces a single
contraction G whose graph and co-graph extend both subspaces at once to
a maximal orthogonal pair.
"""

import numpy as np

from kreinalg import (check_compatibility, graph_rep, make_space,
                      make_subspace, phillips_extend, represented,
                      spectral_norm)

J = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)
H = make_space(J)

# one nonnegative line and one nonpositive line, orthogonal in H
a = 0.5
plus_line = np.array([[1.0], [0.0], [a], [0.0]])
minus_line = np.array([[0.0], [a], [0.0], [1.0]])

Sp = make_subspace(H, plus_line)
Sm = make_subspace(H, minus_line)
gp = graph_rep(Sp, "plus")
gm = graph_rep(Sm, "minus")
print("angle norms:", round(float(spectral_norm(gp.angle)), 4),
      round(float(spectral_norm(gm.angle)), 4))
check_compatibility(gp, gm)

ext = phillips_extend(gp, gm)
print("joint contraction G:")
print(ext.G.real.round(4))
norm = float(spectral_norm(ext.G))
print(f"norm {norm:.6f}")
assert norm <= 1 + 1e-8

# maximality: the extended pair fills the full signature of the space
print("extended dimensions:", ext.G_tilde_plus.dim, ext.G_tilde_minus.dim)
assert (ext.G_tilde_plus.dim, ext.G_tilde_minus.dim) == (2, 2)

# the original subspaces sit inside the extensions
for small, big in ((Sp, ext.G_tilde_plus), (Sm, ext.G_tilde_minus)):
    P = big.basis @ big.basis.conj().T
    resid = spectral_norm(small.basis - P @ small.basis)
    assert resid <= 1e-8
print("containment verified")

# and the extensions are still orthogonal to each other in H
gram = ext.G_tilde_minus.basis.conj().T @ J @ ext.G_tilde_plus.basis
print(f"cross inner products {spectral_norm(gram):.2e}")
assert spectral_norm(gram) <= 1e-8

# sanity: rebuilding the inputs from their graph form loses nothing
for rep, S in ((gp, Sp), (gm, Sm)):
    R = represented(rep)
    P = R.basis @ R.basis.conj().T
    assert spectral_norm(S.basis - P @ S.basis) <= 1e-10
print("ok")
