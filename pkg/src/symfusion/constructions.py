"""Construction recipes for totally symmetric and alternating subspace ensembles.

A single layer orbits one branching isotypic component under a transversal of
S_n; multiple layers stack weighted branching isometries over a set L of
shapes covering mu.  Exact rational certificates decide which selections give
equi-isoclinic ensembles before (or instead of) building any matrices: the
per-removable-box sums must share one magnitude with alternating signs, and
only the two parity subsets L_0, L_1 of the covers can ever succeed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

import numpy as np

from . import altrep
from .errors import (
    ConstraintViolationError,
    DivisibilityViolatedError,
    EmptySelectionError,
    NotInDownSetError,
    NotIsometryError,
    NotSymmetricError,
    NotTransposeClosedError,
    NotUnitaryError,
    OddDistinctPartsError,
    ResourceLimitError,
    StepConstraintViolatedError,
    TrivialSubspaceError,
)
from .fusion import DEFAULT_TOL, FusionEnsemble
from .permutations import (
    Permutation,
    transversal_an,
    transversal_sn,
    validate_transversal,
)
from .symrep import branching_isometry, rep_apply
from .tableaux import (
    Box,
    Partition,
    box_axial_distance,
    dimension,
    down_set,
    hook_product,
    is_symmetric,
    partitions_of,
    removable_boxes,
    transpose,
    up_set,
)

DEFAULT_MAX_DIM = 5000


# --------------------------------------------------------------------------
# layer selections and exact certificates
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LayerSelection:
    """A subset of the shapes covering mu, stored as 0-based positions.

    Positions index :func:`tableaux.up_set`, whose order is descending
    superdiagonal of the added box.  L_0 collects the even 1-based positions,
    L_1 the odd ones.
    """

    mu: Partition
    indices: tuple[int, ...]

    def __post_init__(self):
        covers = up_set(self.mu)
        if not self.indices:
            raise EmptySelectionError("layer selection must be nonempty")
        if any(not 0 <= i < len(covers) for i in self.indices):
            raise ConstraintViolationError(
                f"layer indices must lie in 0..{len(covers) - 1}"
            )
        if len(set(self.indices)) != len(self.indices):
            raise ConstraintViolationError("layer indices must be distinct")

    @classmethod
    def from_delta(cls, mu: Partition, delta: int) -> "LayerSelection":
        if delta not in (0, 1):
            raise ConstraintViolationError("delta must be 0 or 1")
        count = len(up_set(mu))
        # 1-based position p goes to L_0 when p is even, L_1 when odd
        parity = 0 if delta == 0 else 1
        return cls(mu, tuple(i for i in range(count) if (i + 1) % 2 == parity))

    @classmethod
    def from_partitions(cls, mu: Partition, layers: Sequence[Partition]) -> "LayerSelection":
        covers = [lam for lam, _ in up_set(mu)]
        idx = []
        for lam in layers:
            if lam not in covers:
                raise NotInDownSetError(f"{lam!r} does not cover {mu!r}")
            idx.append(covers.index(lam))
        return cls(mu, tuple(sorted(idx)))

    @property
    def partitions(self) -> tuple[Partition, ...]:
        covers = up_set(self.mu)
        return tuple(covers[i][0] for i in self.indices)

    @property
    def added_boxes(self) -> tuple[Box, ...]:
        covers = up_set(self.mu)
        return tuple(covers[i][1] for i in self.indices)

    @property
    def delta(self) -> int | None:
        """0 or 1 when the selection is a canonical parity subset, else None."""
        for delta in (0, 1):
            if self.indices == LayerSelection.from_delta(self.mu, delta).indices:
                return delta
        return None

    @property
    def total_dimension(self) -> int:
        return sum(dimension(lam) for lam in self.partitions)

    def complement(self) -> "LayerSelection":
        count = len(up_set(self.mu))
        rest = tuple(i for i in range(count) if i not in self.indices)
        return LayerSelection(self.mu, rest)


def canonical_subsets(mu: Partition) -> tuple[tuple[Partition, ...], tuple[Partition, ...]]:
    """(L_0, L_1): covers of mu in even and odd 1-based positions respectively."""
    covers = [lam for lam, _ in up_set(mu)]
    L0 = tuple(lam for p, lam in enumerate(covers, start=1) if p % 2 == 0)
    L1 = tuple(lam for p, lam in enumerate(covers, start=1) if p % 2 == 1)
    return L0, L1


def _dim_ratio(lam: Partition, mu: Partition) -> Fraction:
    """Exact d_lam / (n d_mu) as the quotient of hook products.

    The factorials cancel: d_lam / (n d_mu) = hook_product(mu) / hook_product(lam).
    """
    return Fraction(hook_product(mu), hook_product(lam))


def layer_sums(mu: Partition, layers: Sequence[Partition]) -> tuple[Fraction, ...]:
    """For each removable box of mu, the exact sum over lam in layers of
    d_lam / (n d_mu) / D(lam - mu, box)."""
    covers = dict((lam, box) for lam, box in up_set(mu))
    ratios = [(lam, _dim_ratio(lam, mu), covers[lam]) for lam in layers]
    sums = []
    for box in removable_boxes(mu):
        total = Fraction(0)
        for _lam, ratio, added in ratios:
            total += ratio / box_axial_distance(added, box)
        sums.append(total)
    return tuple(sums)


def distance_condition(mu: Partition, layers: Sequence[Partition]) -> tuple[bool, tuple[Fraction, ...]]:
    """Whether the layer sums share one absolute value (signs unconstrained)."""
    sums = layer_sums(mu, layers)
    magnitudes = {abs(s) for s in sums}
    return len(magnitudes) == 1, sums


@dataclass(frozen=True)
class ExactIsoclinicCertificate:
    """Exact rational verdict for a canonical layer selection of mu.

    ``holds`` requires the per-box sums s_q to equal (-1)^(q + delta) beta for
    a single beta >= 0.  ``beta_squared_predicted`` is the closed form
    d_L (n d_mu - d_L) / (d_mu^2 n^2 (n-1)), which must coincide with beta^2
    whenever the certificate holds.
    """

    mu: Partition
    delta: int
    layers: tuple[Partition, ...]
    s_values: tuple[Fraction, ...]
    holds: bool
    beta: Fraction | None
    beta_squared: Fraction | None
    beta_squared_predicted: Fraction
    d_layers: int
    d_mu: int
    n: int
    alpha: Fraction | None

    def parameters(self) -> tuple[int, int, int] | None:
        """(d, r, n) of the certified ensemble when the certificate holds."""
        return (self.d_layers, self.d_mu, self.n) if self.holds else None

    def to_json_dict(self) -> dict:
        return {
            "mu": str(self.mu),
            "delta": self.delta,
            "layers": [str(l) for l in self.layers],
            "s_values": [str(s) for s in self.s_values],
            "holds": self.holds,
            "beta": str(self.beta) if self.beta is not None else None,
            "beta_squared": str(self.beta_squared) if self.beta_squared is not None else None,
            "beta_squared_predicted": str(self.beta_squared_predicted),
            "d": self.d_layers,
            "r": self.d_mu,
            "n": self.n,
            "alpha": str(self.alpha) if self.alpha is not None else None,
        }


def isoclinic_certificate(mu: Partition, delta: int) -> ExactIsoclinicCertificate:
    """Exact test of the sign-alternating layer-sum condition for L_delta."""
    sel = LayerSelection.from_delta(mu, delta)
    layers = sel.partitions
    sums = layer_sums(mu, layers)
    n = mu.n + 1
    d_mu = dimension(mu)
    d_layers = sel.total_dimension
    predicted = Fraction(
        d_layers * (n * d_mu - d_layers), d_mu * d_mu * n * n * (n - 1)
    )
    beta: Fraction | None = None
    holds = True
    for q, s in enumerate(sums, start=1):
        signed = s if (q + delta) % 2 == 0 else -s
        if signed < 0:
            holds = False
            break
        if beta is None:
            beta = signed
        elif signed != beta:
            holds = False
            break
    if not holds or beta is None:
        beta = None
    alpha = None
    beta_squared = None
    if holds and beta is not None:
        beta_squared = beta * beta
        alpha = Fraction(n * n * d_mu * d_mu, d_layers * d_layers) * beta_squared
    return ExactIsoclinicCertificate(
        mu=mu,
        delta=delta,
        layers=layers,
        s_values=sums,
        holds=holds,
        beta=beta,
        beta_squared=beta_squared,
        beta_squared_predicted=predicted,
        d_layers=d_layers,
        d_mu=d_mu,
        n=n,
        alpha=alpha,
    )


def search_isoclinic(max_n: int) -> list[ExactIsoclinicCertificate]:
    """Certificates for every isoclinic mu of every size below max_n, both deltas."""
    if max_n < 2:
        raise ConstraintViolationError("max_n must be >= 2")
    results = []
    for n in range(2, max_n + 1):
        for mu in partitions_of(n - 1):
            for delta in (0, 1):
                cert = isoclinic_certificate(mu, delta)
                if cert.holds:
                    results.append(cert)
    return results


# --------------------------------------------------------------------------
# parameterized families
# --------------------------------------------------------------------------

def three_part_family(a: int, f: int, h: int, b: int) -> tuple[Partition, ExactIsoclinicCertificate]:
    """Three-distinct-part isoclinic partitions from the divisor recipe.

    Steps: pick a, f with af > 1; a divisor h of 2af with h > 2; a divisor b
    of (a + h) f with 0 < b < h/2.  Then c = f + 2af/h, e = (a - b + h) f / b - c,
    g = h - b, and ((e+f+g)^a, (e+f)^b, e^c) is isoclinic.
    """
    if a < 1 or f < 1 or a * f <= 1:
        raise StepConstraintViolatedError("need a, f >= 1 with a*f > 1")
    if h <= 2 or (2 * a * f) % h != 0:
        raise StepConstraintViolatedError("h must divide 2af and exceed 2")
    if not 0 < b < Fraction(h, 2):
        raise StepConstraintViolatedError("b must satisfy 0 < b < h/2")
    if ((a + h) * f) % b != 0:
        raise StepConstraintViolatedError("b must divide (a + h) f")
    c = f + (2 * a * f) // h
    e = (a - b + h) * f // b - c
    g = h - b
    if e < 1:
        raise StepConstraintViolatedError("derived e must be positive")
    # defining identities of the family
    assert c == Fraction(2 * a * f, b + g) + f
    assert e == Fraction((a + g) * f, b) - c
    mu = Partition((e + f + g,) * a + (e + f,) * b + (e,) * c)
    for delta in (0, 1):
        cert = isoclinic_certificate(mu, delta)
        if cert.holds:
            return mu, cert
    raise AssertionError(f"family recipe produced a non-isoclinic partition {mu!r}")


def four_part_family(a: int, b: int, c: int) -> tuple[Partition, ExactIsoclinicCertificate]:
    """Symmetric four-distinct-part isoclinic partitions: e = b^2/c + b.

    Returns ((a+b+c+e)^a, (a+b+c)^b, (a+b)^c, a^e) with its certificate.
    """
    if a < 1 or b < 1 or c < 1:
        raise ConstraintViolationError("need a, b, c >= 1")
    if (b * b) % c != 0:
        raise DivisibilityViolatedError("c must divide b^2")
    e = (b * b) // c + b
    mu = Partition((a + b + c + e,) * a + (a + b + c,) * b + (a + b,) * c + (a,) * e)
    for delta in (0, 1):
        cert = isoclinic_certificate(mu, delta)
        if cert.holds:
            return mu, cert
    raise AssertionError(f"family recipe produced a non-isoclinic partition {mu!r}")


@dataclass(frozen=True)
class SingleLayerFamily:
    """Family tag of a single-layer pair: kind I/II/III with its integers."""

    kind: str  # "I" | "II" | "III" | "equichordal-only"
    a: int | None = None
    b: int | None = None
    c: int | None = None

    @property
    def is_equiisoclinic(self) -> bool:
        return self.kind in ("I", "II", "III")


def classify_single_layer(lam: Partition, mu: Partition) -> SingleLayerFamily:
    """Match (lam, mu) against the three equi-isoclinic single-layer diagrams.

    Equi-isoclinism holds exactly when all removable boxes of mu sit at one
    common absolute axial distance from the added box, which happens for:
    I   mu = (b^a), lam adds a box to the first row (a >= 2);
    II  mu = (a^b), lam adds a row of one box (a >= 2);
    III mu = ((b+c)^a, b^c), lam adds the inner corner (c >= 2).
    """
    added = _single_layer_added_box(lam, mu)
    removable = [box for _p, box in down_set(mu)]
    distances = [box_axial_distance(added, box) for box in removable]
    if len({abs(x) for x in distances}) != 1:
        return SingleLayerFamily("equichordal-only")
    if len(removable) == 1:
        rows, cols = len(mu), mu[0]
        if added.row == 1:
            return SingleLayerFamily("I", a=rows, b=cols)
        return SingleLayerFamily("II", a=cols, b=rows)
    # two removable boxes at opposite distances: the inner-corner picture
    big, small = mu[0], mu[-1]
    a = sum(1 for p in mu if p == big)
    c = sum(1 for p in mu if p == small)
    return SingleLayerFamily("III", a=a, b=small, c=c)


def _single_layer_added_box(lam: Partition, mu: Partition) -> Box:
    matches = [box for m, box in down_set(lam) if m == mu]
    if not matches:
        raise NotInDownSetError(f"{mu!r} is not obtained from {lam!r} by removing a box")
    if dimension(mu) >= dimension(lam):
        raise TrivialSubspaceError(
            "the branching component is the whole space; no packing results"
        )
    return matches[0]


def single_layer_parameters(kind: str, a: int, b: int, c: int | None = None):
    """Exact (d, r, n, alpha) for a named single-layer family.

    Types I and II share the formulas d = a/(a+b) r n, n = ab + 1 and the
    factorial product for r; type III uses n = ab + ac + bc + 1 and
    d = c^2 / ((a+c)(b+c)) r n.  alpha = (rn - d) / (d (n-1)) exactly.
    """
    if kind in ("I", "II"):
        if a < 2 or b < 1:
            raise ConstraintViolationError("types I and II need a >= 2, b >= 1")
        n = a * b + 1
        r = Fraction(factorial(a * b))
        for k in range(a):
            r *= Fraction(factorial(k), factorial(k + b))
        d = Fraction(a, a + b) * r * n
    elif kind == "III":
        if c is None or a < 1 or b < 1 or c < 2:
            raise ConstraintViolationError("type III needs a, b >= 1 and c >= 2")
        n = a * b + a * c + b * c + 1
        r = Fraction(factorial(n - 1))
        for k in range(c):
            r *= Fraction(factorial(k) ** 2, factorial(a + k) * factorial(b + k))
        for ell in range(a):
            r *= Fraction(factorial(2 * c + ell), factorial(2 * c + b + ell))
        d = Fraction(c * c, (a + c) * (b + c)) * r * n
    else:
        raise ConstraintViolationError(f"unknown family kind {kind!r}")
    if r.denominator != 1 or d.denominator != 1:
        raise AssertionError("family formulas must produce integers")
    d_i, r_i = int(d), int(r)
    alpha = Fraction(r_i * n - d_i, d_i * (n - 1))
    return d_i, r_i, n, alpha


def single_layer_shapes(kind: str, a: int, b: int, c: int | None = None) -> tuple[Partition, Partition]:
    """(lam, mu) realizing a named family instance."""
    if kind == "I":
        mu = Partition((b,) * a)
        lam = Partition((b + 1,) + (b,) * (a - 1))
    elif kind == "II":
        mu = Partition((a,) * b)
        lam = Partition((a,) * b + (1,))
    elif kind == "III":
        if c is None:
            raise ConstraintViolationError("type III needs c")
        mu = Partition((b + c,) * a + (b,) * c)
        lam = Partition((b + c,) * a + (b + 1,) + (b,) * (c - 1))
    else:
        raise ConstraintViolationError(f"unknown family kind {kind!r}")
    return lam, mu


# --------------------------------------------------------------------------
# matrix constructions
# --------------------------------------------------------------------------

def _resolve_transversal(
    n: int, transversal: Sequence[Permutation] | None, even: bool
) -> list[Permutation]:
    if transversal is None:
        return transversal_an(n) if even else transversal_sn(n)
    return validate_transversal(transversal, n, even=even)


def _check_cap(d: int, max_dim: int) -> None:
    if d > max_dim:
        raise ResourceLimitError(
            f"construction dimension {d} exceeds the cap {max_dim}; "
            "raise max_dim to proceed (certificates have no cap)"
        )


def single_layer_ensemble(
    lam: Partition,
    mu: Partition,
    transversal: Sequence[Permutation] | None = None,
    tol: float = DEFAULT_TOL,
    max_dim: int = DEFAULT_MAX_DIM,
) -> FusionEnsemble:
    """Orbit of the mu-branching component of lam under a point transversal.

    Blocks are pi_lam(t_k) Psi_{lam,mu}, giving a real, totally symmetric
    ensemble of n = |lam| subspaces of dimension d_mu inside dimension d_lam.
    """
    added = _single_layer_added_box(lam, mu)  # validates the pair
    del added
    _check_cap(dimension(lam), max_dim)
    n = lam.n
    ts = _resolve_transversal(n, transversal, even=False)
    Psi = branching_isometry(lam, mu)
    blocks = [rep_apply(lam, t, Psi) for t in ts]
    meta = {
        "construction": "single_layer",
        "lambda": str(lam),
        "mu": str(mu),
        "transversal": [t.cycle_string() for t in ts],
    }
    return FusionEnsemble.from_blocks(blocks, field="R", tol=tol, meta=meta)


def _weighted_stack(sel: LayerSelection) -> np.ndarray:
    """The stacked isometry with blocks sqrt(d_lam / d_L) Psi_{lam,mu}."""
    mu = sel.mu
    d_layers = sel.total_dimension
    pieces = []
    for lam in sel.partitions:
        pieces.append(np.sqrt(dimension(lam) / d_layers) * branching_isometry(lam, mu))
    return np.vstack(pieces)


def _apply_layer_rep(sel: LayerSelection, t: Permutation, M: np.ndarray) -> np.ndarray:
    """Apply the direct-sum representation of t to a stacked matrix M."""
    out = np.empty_like(M)
    offset = 0
    for lam in sel.partitions:
        d = dimension(lam)
        out[offset : offset + d] = rep_apply(lam, t, M[offset : offset + d])
        offset += d
    return out


def multi_layer_ensemble(
    sel: LayerSelection,
    transversal: Sequence[Permutation] | None = None,
    tol: float = DEFAULT_TOL,
    max_dim: int = DEFAULT_MAX_DIM,
) -> FusionEnsemble:
    """Orbit of the weighted stack of branching components over sel's layers.

    Always a real, totally symmetric tight fusion frame with equal chordal
    distances; equi-isoclinic exactly when sel's layer sums pass the
    distance condition.
    """
    _check_cap(sel.total_dimension, max_dim)
    n = sel.mu.n + 1
    ts = _resolve_transversal(n, transversal, even=False)
    Psi = _weighted_stack(sel)
    blocks = [_apply_layer_rep(sel, t, Psi) for t in ts]
    meta = {
        "construction": "multi_layer",
        "mu": str(sel.mu),
        "layers": [str(l) for l in sel.partitions],
        "delta": sel.delta,
        "transversal": [t.cycle_string() for t in ts],
    }
    return FusionEnsemble.from_blocks(blocks, field="R", tol=tol, meta=meta)


def _check_alternating_selection(sel: LayerSelection) -> None:
    mu = sel.mu
    if not is_symmetric(mu):
        raise NotSymmetricError(f"{mu!r} is not symmetric")
    if len(set(mu.parts)) % 2:
        raise OddDistinctPartsError(f"{mu!r} must have an even number of distinct parts")
    layers = sel.partitions
    if len(layers) == len(up_set(mu)):
        raise ConstraintViolationError("layer selection must be a proper subset")
    layer_set = set(layers)
    if any(transpose(lam) not in layer_set for lam in layers):
        raise NotTransposeClosedError("layer selection must be closed under transpose")


def alternating_ensemble(
    sel: LayerSelection,
    eps,
    transversal: Sequence[Permutation] | None = None,
    tol: float = DEFAULT_TOL,
    max_dim: int = DEFAULT_MAX_DIM,
) -> FusionEnsemble:
    """The eps-eigenspace half of a multi-layer ensemble over a symmetric mu.

    Produces an ensemble of n subspaces of dimension d_mu/2 in dimension
    d_L/2 over the field selected by the off-diagonal box count, with
    automorphism group containing A_n.  Equi-isoclinic exactly when mu's
    canonical certificate holds.
    """
    _check_alternating_selection(sel)
    mu = sel.mu
    _check_cap(sel.total_dimension // 2, max_dim)
    n = mu.n + 1
    ts = _resolve_transversal(n, transversal, even=True)
    field = altrep.field_for(mu)
    layers = sel.partitions
    J_layers = altrep.layer_eigenbasis(mu, layers, eps)
    J_mu = altrep.eigenspace_injection(mu, eps)
    Psi = _weighted_stack(sel)
    blocks = []
    for t in ts:
        thin = _apply_layer_rep(sel, t, Psi)
        blocks.append(J_layers.conj().T @ thin @ J_mu)
    meta = {
        "construction": "alternating",
        "mu": str(mu),
        "layers": [str(l) for l in layers],
        "delta": sel.delta,
        "epsilon": "+" if altrep._eps_sign(eps) == 1 else "-",
        "transversal": [t.cycle_string() for t in ts],
    }
    return FusionEnsemble.from_blocks(blocks, field=field, tol=tol, meta=meta)


def alternating_parameters(a: int, c: int, delta: int):
    """Exact (field, d, r, n, alpha) for the two-distinct-part alternating family.

    n = a^2 + 2ac + 1, r is half the type-III inner-corner dimension with
    b = a, and d is c^2/(a+c)^2 rn for delta = 0 or a(a+2c)/(a+c)^2 rn for
    delta = 1.  The field is real exactly when a(a + 2c - 1)/2 is even.
    """
    if a < 1 or c < 2:
        raise ConstraintViolationError("need a >= 1 and c >= 2")
    if delta not in (0, 1):
        raise ConstraintViolationError("delta must be 0 or 1")
    n = a * a + 2 * a * c + 1
    r = Fraction(factorial(a * a + 2 * a * c), 2)
    for k in range(c):
        r *= Fraction(factorial(k), factorial(a + k)) ** 2
    for ell in range(a):
        r *= Fraction(factorial(2 * c + ell), factorial(2 * c + a + ell))
    if delta == 0:
        d = Fraction(c * c, (a + c) ** 2) * r * n
    else:
        d = Fraction(a * (a + 2 * c), (a + c) ** 2) * r * n
    if r.denominator != 1 or d.denominator != 1:
        raise AssertionError("alternating family formulas must produce integers")
    d_i, r_i = int(d), int(r)
    half = (a * (a + 2 * c - 1)) // 2
    field = "R" if half % 2 == 0 else "C"
    alpha = Fraction(r_i * n - d_i, d_i * (n - 1))
    return field, d_i, r_i, n, alpha


def alternating_shapes(a: int, c: int) -> Partition:
    """The symmetric two-distinct-part mu = ((a+c)^a, a^c) behind the family."""
    return Partition((a + c,) * a + (a,) * c)


def decomposition_check(
    sel: LayerSelection,
    transversal: Sequence[Permutation] | None = None,
    tol: float = DEFAULT_TOL,
    max_dim: int = DEFAULT_MAX_DIM,
) -> bool:
    """Verify the eigenbasis change block-diagonalizes every stacked isometry.

    Builds the S_n multi-layer blocks with an even transversal, rotates them
    by the two-eigenspace basis on both sides, and checks the result is
    block-diagonal with the two alternating ensembles' blocks on the diagonal.
    """
    _check_alternating_selection(sel)
    mu = sel.mu
    _check_cap(sel.total_dimension, max_dim)
    n = mu.n + 1
    ts = _resolve_transversal(n, transversal, even=True)
    plus = alternating_ensemble(sel, "+", transversal=ts, tol=tol, max_dim=max_dim)
    minus = alternating_ensemble(sel, "-", transversal=ts, tol=tol, max_dim=max_dim)
    J_plus = altrep.layer_eigenbasis(mu, sel.partitions, "+")
    J_minus = altrep.layer_eigenbasis(mu, sel.partitions, "-")
    B_layers = np.hstack([J_plus, J_minus])
    B_mu = np.hstack(
        [altrep.eigenspace_injection(mu, "+"), altrep.eigenspace_injection(mu, "-")]
    )
    Psi = _weighted_stack(sel)
    half_rows = J_plus.shape[1]
    half_cols = B_mu.shape[1] // 2
    for k, t in enumerate(ts):
        rotated = B_layers.conj().T @ _apply_layer_rep(sel, t, Psi) @ B_mu
        top_left = rotated[:half_rows, :half_cols]
        bottom_right = rotated[half_rows:, half_cols:]
        off_a = rotated[:half_rows, half_cols:]
        off_b = rotated[half_rows:, :half_cols]
        ok = (
            np.max(np.abs(off_a)) <= tol
            and np.max(np.abs(off_b)) <= tol
            and np.max(np.abs(top_left - plus.blocks[k])) <= tol
            and np.max(np.abs(bottom_right - minus.blocks[k])) <= tol
        )
        if not ok:
            return False
    return True


def generic_orbit_ensemble(
    generators: Mapping[str, np.ndarray],
    transversal_words: Sequence[Sequence[str]],
    isometry: np.ndarray,
    field: str | None = None,
    tol: float = DEFAULT_TOL,
) -> FusionEnsemble:
    """Orbit of an isometry's image under word-products of unitary generators.

    Each word lists generator names left to right in product order (the
    rightmost factor acts first on vectors).  No invariance condition is
    verified here: if the isometry's image is not stabilizer-invariant the
    symmetry guarantee is void, and certification alone decides what was
    built.
    """
    mats = {}
    d = None
    for name, g in generators.items():
        G = np.asarray(g, dtype=complex if field == "C" else None)
        if G.ndim != 2 or G.shape[0] != G.shape[1]:
            raise NotUnitaryError(f"generator {name!r} is not square")
        if d is None:
            d = G.shape[0]
        if G.shape != (d, d):
            raise NotUnitaryError(f"generator {name!r} has mismatched size")
        if np.max(np.abs(G.conj().T @ G - np.eye(d))) > max(tol, 1e-8):
            raise NotUnitaryError(f"generator {name!r} is not unitary")
        mats[name] = G
    W = np.asarray(isometry, dtype=complex if field == "C" else None)
    if d is None:
        d = W.shape[0]
    if W.ndim != 2 or W.shape[0] != d:
        raise NotIsometryError("isometry must be d x r")
    if np.max(np.abs(W.conj().T @ W - np.eye(W.shape[1]))) > max(tol, 1e-8):
        raise NotIsometryError("isometry columns are not orthonormal")
    blocks = []
    for word in transversal_words:
        M = np.eye(d)
        for name in word:
            if name not in mats:
                raise KeyError(f"word references unknown generator {name!r}")
            M = M @ mats[name]
        blocks.append(M @ W)
    meta = {"construction": "generic_orbit", "words": [list(w) for w in transversal_words]}
    return FusionEnsemble.from_blocks(blocks, field=field, tol=tol, meta=meta)


# --------------------------------------------------------------------------
# parameter tables
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    """One parameter row of a family table."""

    field: str
    d: int
    r: int
    n: int
    alpha: Fraction
    family: str
    a: int
    b: int | None
    c: int | None
    delta: int | None
    certified: bool | None = None

    def to_json_dict(self) -> dict:
        return {
            "field": self.field,
            "d": self.d,
            "r": self.r,
            "n": self.n,
            "alpha": str(self.alpha),
            "family": self.family,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "delta": self.delta,
            "certified": self.certified,
        }


def sn_table(max_dim: int) -> list[TableRow]:
    """Totally symmetric EITFF parameter rows with d <= max_dim.

    Enumerates type I with 2 <= a <= b (the smaller-d member of each Naimark
    pair) and type III with a <= b, c >= 2; sorted by d.
    """
    rows = []
    a = 2
    while True:
        d, _r, _n, _alpha = single_layer_parameters("I", a, a)
        if d > max_dim:
            break
        b = a
        while True:
            d, r, n, alpha = single_layer_parameters("I", a, b)
            if d > max_dim:
                break
            rows.append(TableRow("R", d, r, n, alpha, "I", a, b, None, None))
            b += 1
        a += 1
    a = 1
    while True:
        d, _r, _n, _alpha = single_layer_parameters("III", a, a, 2)
        if d > max_dim:
            break
        b = a
        while True:
            d, _r, _n, _alpha = single_layer_parameters("III", a, b, 2)
            if d > max_dim:
                break
            c = 2
            while True:
                d, r, n, alpha = single_layer_parameters("III", a, b, c)
                if d > max_dim:
                    break
                rows.append(TableRow("R", d, r, n, alpha, "III", a, b, c, None))
                c += 1
            b += 1
        a += 1
    rows.sort(key=lambda row: (row.d, row.n, row.r))
    return rows


def an_table(max_dim: int) -> list[TableRow]:
    """Alternating-symmetry EITFF parameter rows with d <= max_dim.

    One row per (a, c), taking the delta with the smaller d; sorted by d.
    """
    rows = []
    a = 1
    while True:
        best = min(
            alternating_parameters(a, 2, delta)[1] for delta in (0, 1)
        )
        if best > max_dim:
            break
        c = 2
        while True:
            options = [(alternating_parameters(a, c, delta), delta) for delta in (0, 1)]
            (field, d, r, n, alpha), delta = min(options, key=lambda item: item[0][1])
            if d > max_dim:
                break
            rows.append(TableRow(field, d, r, n, alpha, "alternating", a, None, c, delta))
            c += 1
        a += 1
    rows.sort(key=lambda row: (row.d, row.n, row.r))
    return rows
