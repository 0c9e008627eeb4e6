"""Exact search for isoclinic partitions.

A partition mu of n-1 is isoclinic when one (equivalently, both) of the two
parity subsets of its covers makes the multi-layer ensemble equi-isoclinic.
The test is a short exact-rational computation: the per-removable-box sums of
dimension ratios over inverse axial distances must alternate in sign around a
single magnitude beta, with beta^2 = d_L (n d_mu - d_L) / (d_mu^2 n^2 (n-1)).

No matrices are involved, so the search certifies parameters far beyond any
constructible dimension, including the 25-subspace ensemble with
r = 11,660,320,672.
"""

from symfusion import Partition, dimension, isoclinic_certificate, search_isoclinic

print("isoclinic partitions with subspace dimension r >= 2, up to n = 13:")
print(f"{'mu':>14} {'delta':>5} {'d':>12} {'r':>12} {'n':>3} {'alpha':>8}")
for cert in search_isoclinic(13):
    if dimension(cert.mu) == 1:
        continue  # single-row/column rectangles only repackage simplex lines
    print(
        f"{str(cert.mu):>14} {cert.delta:>5} {cert.d_layers:>12} "
        f"{cert.d_mu:>12} {cert.n:>3} {str(cert.alpha):>8}"
    )

print()
print("families with three and four distinct parts reach enormous parameters:")
for mu in [Partition((7, 7, 4, 3, 3)), Partition((5, 3, 2, 1, 1))]:
    for delta in (0, 1):
        cert = isoclinic_certificate(mu, delta)
        if not cert.holds:
            continue
        print(f"  mu = ({mu}), delta = {delta}:")
        print(f"    EITFF parameters d = {cert.d_layers}, r = {cert.d_mu}, n = {cert.n}")
        print(f"    beta = {cert.beta}, beta^2 closed form = {cert.beta_squared_predicted}")
        print(f"    alpha = {cert.alpha}")
