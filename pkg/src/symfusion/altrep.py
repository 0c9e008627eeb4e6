"""Representations of A_n on the eigenspaces of the transpose associator.

For a symmetric shape nu, the unitary U sending v_T to i^m sgn(g_T) v_{T'}
(m = number of boxes above the main diagonal) squares to the identity and
commutes with the even part of the representation; its +/- eigenspaces carry
irreducible A_n representations.  The same recipe, run over all shapes that
cover a symmetric mu, yields a block-permuting associator whose eigenspaces
split multi-layer constructions in half.

Reference tableaux: the base point is the row superstandard tableau of the
"small" symmetric shape (even number of distinct parts); shapes covering it
use its embedding.  The scalars i^m are real exactly when m is even, which is
what the field selection rule encodes.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import (
    DegenerateShapeError,
    IndexOutOfRangeError,
    NotInDownSetError,
    NotSymmetricError,
    OddDistinctPartsError,
    OddPermutationError,
    ShapeMismatchError,
    SymmetricLambdaError,
    TooSmallError,
)
from .permutations import Permutation, permutation_word
from .symrep import adjacent_transposition_matrix
from .tableaux import (
    Box,
    Partition,
    StandardTableau,
    apply_adjacent_transposition,
    axial_distance,
    diagonal_count,
    dimension,
    down_set,
    embed,
    enumerate_standard_tableaux,
    is_symmetric,
    remove_box,
    row_superstandard,
    tableau_index,
    transpose,
    transpose_tableau,
    up_set,
)

Field = str  # "R" | "C"
_EPS = {"+": 1, "-": -1, 1: 1, -1: -1}


def _eps_sign(eps) -> int:
    try:
        return _EPS[eps]
    except KeyError:
        raise ValueError(f"epsilon must be '+' or '-', got {eps!r}") from None


def half_offdiagonal_count(kappa: Partition) -> int:
    """Number of boxes strictly above the main diagonal of a symmetric shape."""
    if not is_symmetric(kappa):
        raise NotSymmetricError(f"{kappa!r} is not symmetric")
    return (kappa.n - diagonal_count(kappa)) // 2


def field_for(kappa: Partition) -> Field:
    """'R' when the count of boxes above the diagonal is even, else 'C'."""
    return "R" if half_offdiagonal_count(kappa) % 2 == 0 else "C"


def i_power(m: int):
    """i**m as a Python scalar: +-1 when m is even, +-1j when odd."""
    return (1, 1j, -1, -1j)[m % 4]


def reference_tableau(kappa: Partition) -> StandardTableau:
    """The distinguished tableau of a symmetric shape.

    Shapes with an even number of distinct parts ("small") use the row
    superstandard filling; shapes with an odd count ("big") embed the row
    superstandard filling of the shape with the diagonal corner removed.
    """
    if not is_symmetric(kappa):
        raise NotSymmetricError(f"{kappa!r} is not symmetric")
    if len(set(kappa.parts)) % 2 == 0:
        return row_superstandard(kappa)
    p = diagonal_count(kappa)
    small = remove_box(kappa, Box(p, p))
    return embed(row_superstandard(small), kappa)


def family_reference_tableau(mu: Partition, lam: Partition) -> StandardTableau:
    """Reference tableau of lam in the family over symmetric mu: embed T_mu."""
    return embed(row_superstandard(mu), lam)


def reference_permutation(T: StandardTableau, reference: StandardTableau) -> Permutation:
    """The unique g with g * reference = T (entrywise relabeling)."""
    if T.shape != reference.shape:
        raise ShapeMismatchError("tableaux must share a shape")
    images = [0] * T.n
    for ref_row, t_row in zip(reference.rows, T.rows):
        for src, dst in zip(ref_row, t_row):
            images[src - 1] = dst
    return Permutation(images)


def reference_permutation_sign(T: StandardTableau, reference: StandardTableau) -> int:
    return reference_permutation(T, reference).sign


@lru_cache(maxsize=256)
def _sign_vector(lam: Partition, mu: Partition | None) -> np.ndarray:
    """sgn(g_T) over Tab(lam) in canonical order, with the family reference if mu given."""
    ref = family_reference_tableau(mu, lam) if mu is not None else reference_tableau(lam)
    signs = np.array(
        [reference_permutation_sign(T, ref) for T in enumerate_standard_tableaux(lam)],
        dtype=np.int64,
    )
    signs.setflags(write=False)
    return signs


@lru_cache(maxsize=256)
def _transpose_index(lam: Partition) -> np.ndarray:
    """index of T' in Tab(lam') for each T in Tab(lam), both in canonical order."""
    other = tableau_index(transpose(lam))
    out = np.array(
        [other[transpose_tableau(T)] for T in enumerate_standard_tableaux(lam)],
        dtype=np.int64,
    )
    out.setflags(write=False)
    return out


def tab_star(nu: Partition) -> tuple[StandardTableau, ...]:
    """Standard tableaux of symmetric shape nu with the entry 2 in box (1, 2).

    Contains exactly one tableau from each transpose pair, so its size is
    dimension(nu) / 2.
    """
    if not is_symmetric(nu):
        raise NotSymmetricError(f"{nu!r} is not symmetric")
    if nu.n < 2:
        raise DegenerateShapeError("tab_star needs at least two boxes")
    return tuple(T for T in enumerate_standard_tableaux(nu) if T.box_of(2) == Box(1, 2))


def _star_index(nu: Partition) -> dict[StandardTableau, int]:
    return {T: i for i, T in enumerate(tab_star(nu))}


def associator_unitary(nu: Partition) -> np.ndarray:
    """The self-adjoint involution sending v_T to i^m sgn(g_T) v_{T'} on Tab(nu)."""
    m = half_offdiagonal_count(nu)
    factor = i_power(m)
    signs = _sign_vector(nu, None)
    tr = _transpose_index(nu)  # nu symmetric: Tab(nu') = Tab(nu)
    d = dimension(nu)
    U = np.zeros((d, d), dtype=complex if m % 2 else float)
    U[tr, np.arange(d)] = factor * signs
    return U


def eigenspace_injection(nu: Partition, eps) -> np.ndarray:
    """Isometry whose columns are the eigenbasis w_T = (v_T + eps i^m sgn(g_T) v_{T'})/sqrt(2).

    Columns are indexed by tab_star(nu); the matrix maps the eps-eigenspace
    coordinates into the ambient Tab(nu) basis.
    """
    sign = _eps_sign(eps)
    m = half_offdiagonal_count(nu)
    factor = sign * i_power(m)
    signs = _sign_vector(nu, None)
    tr = _transpose_index(nu)
    index = tableau_index(nu)
    stars = tab_star(nu)
    d = dimension(nu)
    J = np.zeros((d, len(stars)), dtype=complex if m % 2 else float)
    inv = 1.0 / np.sqrt(2.0)
    for c, T in enumerate(stars):
        t = index[T]
        J[t, c] = inv
        J[tr[t], c] += factor * signs[t] * inv
    return J


def an_generator_matrix(nu: Partition, eps, k: int) -> np.ndarray:
    """Matrix of the eps-eigenspace representation at s_1 s_k, on the tab_star basis.

    For k >= 3 this is the Tab_* x Tab_* sub-block of pi_nu(s_k).  For k = 2
    the diagonal holds 1/D_T(3,2) and the only off-diagonal entries sit at
    (s_2 T', T) with value eps i^m sgn(g_T) sqrt(1 - 1/D_T(3,2)^2).
    """
    if not is_symmetric(nu):
        raise NotSymmetricError(f"{nu!r} is not symmetric")
    if nu.n < 5:
        raise TooSmallError("eigenspace generator matrices require n >= 5")
    if not 2 <= k <= nu.n - 1:
        raise IndexOutOfRangeError(f"k = {k} outside 2..{nu.n - 1}")
    sign = _eps_sign(eps)
    m = half_offdiagonal_count(nu)
    stars = tab_star(nu)
    star_idx = _star_index(nu)
    if k >= 3:
        full = adjacent_transposition_matrix(nu, k)
        sel = [tableau_index(nu)[T] for T in stars]
        M = full[np.ix_(sel, sel)]
        return M if m % 2 == 0 else M.astype(complex)
    signs = _sign_vector(nu, None)
    index = tableau_index(nu)
    factor = sign * i_power(m)
    ds = len(stars)
    M = np.zeros((ds, ds), dtype=complex if m % 2 else float)
    for c, T in enumerate(stars):
        dist = axial_distance(T, 3, 2)
        M[c, c] = 1.0 / dist
        S = apply_adjacent_transposition(transpose_tableau(T), 2)
        if S is not None:
            M[star_idx[S], c] = factor * signs[index[T]] * np.sqrt(1.0 - 1.0 / dist**2)
    return M


def an_rep_matrix(nu: Partition, eps, g: Permutation) -> np.ndarray:
    """Eigenspace representation at an even permutation g.

    The adjacent word of g is paired into factors s_a s_b = (s_1 s_a)^-1 (s_1 s_b),
    each evaluated through :func:`an_generator_matrix`.
    """
    if g.degree != nu.n:
        raise ShapeMismatchError(f"permutation degree {g.degree} != |nu| = {nu.n}")
    word = permutation_word(g)
    if len(word) % 2:
        raise OddPermutationError("an_rep_matrix requires an even permutation")
    m = half_offdiagonal_count(nu)
    ds = len(tab_star(nu))
    out = np.eye(ds, dtype=complex if m % 2 else float)
    for a, b in zip(word[0::2], word[1::2]):
        if a == b:
            continue
        piece = np.eye(ds, dtype=out.dtype)
        if a != 1:
            piece = an_generator_matrix(nu, eps, a).conj().T
        if b != 1:
            piece = piece @ an_generator_matrix(nu, eps, b)
        out = out @ piece
    return out


def _check_family_mu(mu: Partition) -> None:
    if not is_symmetric(mu):
        raise NotSymmetricError(f"{mu!r} is not symmetric")
    if len(set(mu.parts)) % 2:
        raise OddDistinctPartsError(f"{mu!r} must have an even number of distinct parts")


def pair_associator_unitary(mu: Partition) -> np.ndarray:
    """Block-permuting involution on the direct sum over all shapes covering mu.

    Maps v_T (T of shape lam) to i^m sgn(g_T) v_{T'} (shape lam'); commutes
    with the even part of the direct-sum representation.
    """
    _check_family_mu(mu)
    m = half_offdiagonal_count(mu)
    factor = i_power(m)
    layers = [lam for lam, _ in up_set(mu)]
    offsets = {}
    total = 0
    for lam in layers:
        offsets[lam] = total
        total += dimension(lam)
    U = np.zeros((total, total), dtype=complex if m % 2 else float)
    for lam in layers:
        signs = _sign_vector(lam, mu)
        tr = _transpose_index(lam)
        src = offsets[lam] + np.arange(dimension(lam))
        dst = offsets[transpose(lam)] + tr
        U[dst, src] = factor * signs
    return U


def pair_branching_isometry(lam: Partition, mu: Partition, eps) -> np.ndarray:
    """Isometry from the mu eigenspace into the {lam, lam'} eigenspace, w-bases.

    Rows are indexed by Tab(lam) (the eigenbasis of the pair space), columns by
    tab_star(mu).  Column R carries 1/sqrt(2) at R^lam and
    eps i^m sgn(g_R)/sqrt(2) at (R')^lam.
    """
    _check_family_mu(mu)
    if lam == transpose(lam):
        raise SymmetricLambdaError("pair branching needs a non-symmetric shape")
    if mu not in [m_ for m_, _ in down_set(lam)]:
        raise NotInDownSetError(f"{mu!r} is not obtained from {lam!r} by removing a box")
    sign = _eps_sign(eps)
    m = half_offdiagonal_count(mu)
    factor = sign * i_power(m)
    index = tableau_index(lam)
    mu_signs = _sign_vector(mu, None)
    mu_index = tableau_index(mu)
    stars = tab_star(mu)
    Psi = np.zeros((dimension(lam), len(stars)), dtype=complex if m % 2 else float)
    inv = 1.0 / np.sqrt(2.0)
    for c, R in enumerate(stars):
        Psi[index[embed(R, lam)], c] = inv
        Psi[index[embed(transpose_tableau(R), lam)], c] += (
            factor * mu_signs[mu_index[R]] * inv
        )
    return Psi


def symmetric_branching_isometry(nu: Partition, mu: Partition, eps) -> np.ndarray:
    """Isometry from the mu eigenspace into the nu eigenspace, tab_star bases.

    nu must be symmetric with an odd number of distinct parts and mu its
    symmetric predecessor (nu minus the diagonal corner).  Embedding preserves
    membership in tab_star, so the matrix is a 0/1 column selector.
    """
    if not is_symmetric(nu):
        raise NotSymmetricError(f"{nu!r} is not symmetric")
    _check_family_mu(mu)
    if mu not in [m_ for m_, _ in down_set(nu)]:
        raise NotInDownSetError(f"{mu!r} is not obtained from {nu!r} by removing a box")
    m = half_offdiagonal_count(mu)
    star_idx = _star_index(nu)
    stars = tab_star(mu)
    Psi = np.zeros((len(star_idx), len(stars)), dtype=complex if m % 2 else float)
    for c, R in enumerate(stars):
        Psi[star_idx[embed(R, nu)], c] = 1.0
    return Psi


def layer_eigenbasis(mu: Partition, layers: tuple[Partition, ...], eps) -> np.ndarray:
    """Orthonormal basis of the eps-eigenspace of a transpose-closed layer sum.

    Returns the (sum of layer dimensions) x (half that) matrix whose columns
    express the w-basis in the concatenated Tab(lam) coordinates, lam running
    over ``layers`` in their given order.  The symmetric layer (if present)
    contributes tab_star columns; each transpose pair contributes Tab(lam)
    columns for its first-listed member.
    """
    _check_family_mu(mu)
    sign = _eps_sign(eps)
    m = half_offdiagonal_count(mu)
    factor = sign * i_power(m)
    offsets = {}
    total = 0
    for lam in layers:
        offsets[lam] = total
        total += dimension(lam)
    inv = 1.0 / np.sqrt(2.0)
    columns = []  # (row of v_T, row of v_{T'}, coefficient of v_{T'})
    for lam in layers:
        lam_t = transpose(lam)
        if lam_t not in offsets:
            raise ShapeMismatchError("layers must be closed under transpose")
        if lam == lam_t:
            signs = _sign_vector(lam, mu)
            tr = _transpose_index(lam)
            index = tableau_index(lam)
            for T in tab_star(lam):
                t = index[T]
                columns.append(
                    (offsets[lam] + t, offsets[lam] + tr[t], factor * signs[t])
                )
        elif offsets[lam] < offsets[lam_t]:  # first member of the pair
            signs = _sign_vector(lam, mu)
            tr = _transpose_index(lam)
            for t in range(dimension(lam)):
                columns.append(
                    (offsets[lam] + t, offsets[lam_t] + tr[t], factor * signs[t])
                )
    J = np.zeros((total, len(columns)), dtype=complex if m % 2 else float)
    for c, (ra, rb, coeff) in enumerate(columns):
        J[ra, c] += inv
        J[rb, c] += coeff * inv
    return J
