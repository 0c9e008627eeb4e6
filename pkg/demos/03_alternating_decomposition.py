"""Splitting a symmetric-shape ensemble into two alternating-symmetry halves.

For mu = (3,1,1) the single layer over the symmetric cover (3,2,1) gives a
16-dimensional ensemble of six 6-dimensional subspaces.  Restricting to the
alternating group, the transpose associator splits everything in half: after
one unitary change of basis each 16 x 6 isometry becomes block diagonal with
two 8 x 3 blocks, and each half is itself an optimal packing whose
automorphism group contains A_6.
"""

import numpy as np

from symfusion import (
    LayerSelection,
    Partition,
    alternating_ensemble,
    certify,
    cross_gram,
    decomposition_check,
    multi_layer_ensemble,
    transversal_an,
)

mu = Partition((3, 1, 1))
selection = LayerSelection.from_delta(mu, 0)  # the single cover (3,2,1)
even_transversal = transversal_an(6)

big = multi_layer_ensemble(selection, transversal=even_transversal)
print("parent ensemble (even transversal):")
print(certify(big).summary())
print()

halves = {
    eps: alternating_ensemble(selection, eps, transversal=even_transversal)
    for eps in ("+", "-")
}
for eps, half in halves.items():
    print(f"epsilon = {eps} half:")
    print(certify(half).summary())
    print()

print("block-diagonalization check:", decomposition_check(selection))
G = cross_gram(big, 1, 2)
Gp = cross_gram(halves["+"], 1, 2)
Gm = cross_gram(halves["-"], 1, 2)
print(
    "cross-Gram singular values, parent vs halves:",
    np.round(np.linalg.svd(G, compute_uv=False), 9),
    np.round(np.linalg.svd(Gp, compute_uv=False), 9),
    np.round(np.linalg.svd(Gm, compute_uv=False), 9),
)

other = alternating_ensemble(LayerSelection.from_delta(mu, 1), "+")
print()
print("the complementary parity subset gives the Naimark complement:")
print(certify(other).summary())
