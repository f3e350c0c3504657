"""Homogeneous operator maps and the min-max coefficient behind the P-property.

A tensor ``A`` is a P-tensor exactly when every nonzero ``x`` has some
component ``i`` with ``x_i * (A x^{m-1})_i > 0``.  The quantitative version
used by the error bounds is

    alpha(op) = min over ||x||_inf = 1 of  max_i  x_i * (op x)_i

for the degree-1 positively homogeneous maps ``T`` (Euclidean-normalized
contraction) and ``F`` (signed-rooted contraction).  ``alpha > 0`` certifies
the P-property; the bound formulas consume ``alpha(F)``.

The minimum is estimated deterministically: the boundary of the cube
``[-1, 1]^n`` is swept face by face on a regular grid and the best point is
polished with coordinate descent.  Grid estimates never undershoot the true
minimum, so a positive estimate is evidence, not proof; only the diagonal
closed form is certified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDiagonalError
from .tensor import DenseTensor, contract_m1, contract_m1_batch, signed_root

__all__ = [
    "ALPHA_T",
    "ALPHA_F",
    "CLOSED_FORM_DIAGONAL",
    "GRID_REFINED",
    "LIKELY_P",
    "NOT_P",
    "GridSpec",
    "AlphaEstimate",
    "PTensorCheck",
    "apply_T",
    "apply_F",
    "estimate_alpha",
    "alpha_F_diagonal",
    "diagonal_alpha_estimate",
    "check_p_tensor_sampled",
]

ALPHA_T = "alpha_T"
ALPHA_F = "alpha_F"
CLOSED_FORM_DIAGONAL = "closed_form_diagonal"
GRID_REFINED = "grid_refined"
LIKELY_P = "LIKELY_P"
NOT_P = "NOT_P"

_CHUNK = 4096


@dataclass(frozen=True)
class GridSpec:
    """Deterministic search schedule for :func:`estimate_alpha`.

    ``points_per_axis`` grid points per free coordinate on each cube face
    (odd counts include 0, which is what lets diagonal minimizers be hit
    exactly), then ``refinement_steps`` sweeps of coordinate descent with the
    step halving from ``initial_step`` whenever a sweep stalls.
    """

    points_per_axis: int = 41
    refinement_steps: int = 50
    initial_step: float = 0.1

    def __post_init__(self):
        if self.points_per_axis < 2:
            raise ValueError("points_per_axis must be at least 2")
        if self.refinement_steps < 0:
            raise ValueError("refinement_steps must be nonnegative")
        if not self.initial_step > 0.0:
            raise ValueError("initial_step must be positive")


@dataclass(frozen=True)
class AlphaEstimate:
    """An alpha value plus enough provenance to judge what it certifies.

    ``certified`` is True only for the diagonal closed form; grid estimates
    are upper bounds on the true minimum (the search samples a subset of the
    sphere), so a positive uncertified value is not a proof of the P-property.
    """

    value: float
    kind: str
    method: str
    grid_points_per_axis: int
    refinement_steps: int
    certified: bool


@dataclass(frozen=True, eq=False)
class PTensorCheck:
    """Outcome of sampling the P-defining objective on the unit sphere."""

    verdict: str
    witness: np.ndarray | None
    witness_value: float | None
    points_checked: int


def apply_T(tensor: DenseTensor, x) -> np.ndarray:
    """Euclidean-normalized contraction ``||x||_2^{2-m} * A x^{m-1}``.

    Positively homogeneous of degree 1; maps 0 to 0 by convention.
    """
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 1 and not arr.any():
        return np.zeros(tensor.dim)
    norm2 = float(np.sqrt(np.dot(arr, arr)))
    return norm2 ** (2 - tensor.order) * contract_m1(tensor, arr)


def apply_F(tensor: DenseTensor, x) -> np.ndarray:
    """Rooted contraction ``(A x^{m-1})^{[1/(m-1)]}``; requires even order."""
    _require_even_order(tensor, "apply_F")
    return signed_root(contract_m1(tensor, x), tensor.order - 1)


def _require_even_order(tensor: DenseTensor, what: str) -> None:
    if tensor.order % 2 != 0:
        raise ValueError(
            f"{what} needs an even tensor order so the {tensor.order - 1}-th "
            "signed root is a bijection; got odd order"
        )


def _objective_batch(tensor: DenseTensor, points: np.ndarray, kind: str) -> np.ndarray:
    """``max_i x_i * (op x)_i`` for each row of ``points``."""
    contracted = contract_m1_batch(tensor, points)
    if kind == ALPHA_T:
        norms = np.sqrt((points * points).sum(axis=1))
        factors = np.zeros(points.shape[0])
        nz = norms > 0.0
        factors[nz] = norms[nz] ** (2 - tensor.order)
        mapped = contracted * factors[:, None]
    else:
        mapped = signed_root(contracted, tensor.order - 1)
    return (points * mapped).max(axis=1)


def _objective_single(tensor: DenseTensor, point: np.ndarray, kind: str) -> float:
    return float(_objective_batch(tensor, point[None, :], kind)[0])


def _iter_face_chunks(axis: np.ndarray, n: int, fixed: int, sign: float):
    """Chunks of the grid on the cube face ``x[fixed] = sign``."""
    if n == 1:
        yield np.array([[sign]])
        return
    product = itertools.product(axis, repeat=n - 1)
    while True:
        block = list(itertools.islice(product, _CHUNK))
        if not block:
            return
        free = np.asarray(block)
        pts = np.empty((free.shape[0], n))
        pts[:, :fixed] = free[:, :fixed]
        pts[:, fixed] = sign
        pts[:, fixed + 1 :] = free[:, fixed:]
        yield pts


def estimate_alpha(
    tensor: DenseTensor, kind: str = ALPHA_F, grid: GridSpec | None = None
) -> AlphaEstimate:
    """Estimate ``alpha`` by a face-grid sweep plus coordinate-descent polish.

    The boundary of ``[-1, 1]^n`` is covered by the ``2 n`` faces; each face is
    sampled on a regular grid of ``points_per_axis`` values per free
    coordinate.  Ties are broken toward the lexicographically smallest point,
    so the result is independent of evaluation schedule.  The best point is
    then polished with coordinate descent that keeps the face's pinned
    coordinate at +-1 and clips the rest to ``[-1, 1]``, so every iterate
    stays on the unit sphere.
    """
    if kind not in (ALPHA_T, ALPHA_F):
        raise ValueError(f"kind must be {ALPHA_T!r} or {ALPHA_F!r}, got {kind!r}")
    if kind == ALPHA_F:
        _require_even_order(tensor, "alpha_F")
    grid = grid or GridSpec()
    n = tensor.dim
    axis = np.linspace(-1.0, 1.0, grid.points_per_axis)

    best_val = np.inf
    best_point: tuple | None = None
    best_face = 0
    for fixed in range(n):
        for sign in (-1.0, 1.0):
            for pts in _iter_face_chunks(axis, n, fixed, sign):
                vals = _objective_batch(tensor, pts, kind)
                local_min = float(vals.min())
                if local_min > best_val:
                    continue
                candidates = np.flatnonzero(vals == local_min)
                local_point = min(tuple(pts[i]) for i in candidates)
                if local_min < best_val or (
                    best_point is not None and local_point < best_point
                ):
                    best_val = local_min
                    best_point = local_point
                    best_face = fixed

    point = np.array(best_point)
    value = best_val
    step = grid.initial_step
    for _ in range(grid.refinement_steps):
        improved = False
        for j in range(n):
            if j == best_face:
                continue
            for delta in (step, -step):
                trial = point.copy()
                trial[j] = min(1.0, max(-1.0, trial[j] + delta))
                if trial[j] == point[j]:
                    continue
                trial_val = _objective_single(tensor, trial, kind)
                if trial_val < value:
                    point, value = trial, trial_val
                    improved = True
        if not improved:
            step *= 0.5
            if step < 1e-12:
                break

    return AlphaEstimate(
        value=value,
        kind=kind,
        method=GRID_REFINED,
        grid_points_per_axis=grid.points_per_axis,
        refinement_steps=grid.refinement_steps,
        certified=False,
    )


def alpha_F_diagonal(tensor: DenseTensor) -> float:
    """Exact ``alpha(F)`` for a positive diagonal tensor: ``min_i a_i^{1/(m-1)}``.

    The unit sphere forces some ``|x_j| = 1``, so the objective is at least the
    smallest rooted diagonal entry, and the corresponding unit vector attains it.
    """
    if not tensor.is_positive_diagonal():
        raise NotPositiveDiagonalError(
            "closed-form alpha needs a diagonal tensor with every diagonal "
            "entry positive"
        )
    _require_even_order(tensor, "alpha_F_diagonal")
    r = 1.0 / (tensor.order - 1)
    return min(float(a) ** r for a in tensor.diagonal())


def diagonal_alpha_estimate(tensor: DenseTensor) -> AlphaEstimate:
    """:func:`alpha_F_diagonal` wrapped as a certified :class:`AlphaEstimate`."""
    return AlphaEstimate(
        value=alpha_F_diagonal(tensor),
        kind=ALPHA_F,
        method=CLOSED_FORM_DIAGONAL,
        grid_points_per_axis=0,
        refinement_steps=0,
        certified=True,
    )


def check_p_tensor_sampled(
    tensor: DenseTensor, sample_count: int = 64, seed: int = 0
) -> PTensorCheck:
    """Sample ``max_i x_i (A x^{m-1})_i`` on the unit sphere, unit vectors first.

    Any point with a nonpositive value disproves the P-property and is
    returned as a witness whose value reproduces exactly under
    ``max(x * contract_m1(A, x))``.  A clean sweep only says LIKELY_P:
    sampling cannot certify the property.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be at least 1")
    n = tensor.dim
    units = np.vstack([np.eye(n), -np.eye(n)])
    rng = np.random.default_rng(seed)
    raw = rng.uniform(-1.0, 1.0, size=(sample_count, n))
    norms = np.max(np.abs(raw), axis=1)
    degenerate = norms == 0.0
    raw[degenerate] = np.eye(n)[0]
    norms[degenerate] = 1.0
    points = np.vstack([units, raw / norms[:, None]])

    screened = (points * contract_m1_batch(tensor, points)).max(axis=1)
    for k in np.flatnonzero(screened <= 1e-9):
        x = points[k].copy()
        value = float(np.max(x * contract_m1(tensor, x)))
        if value <= 0.0:
            return PTensorCheck(
                verdict=NOT_P,
                witness=x,
                witness_value=value,
                points_checked=points.shape[0],
            )
    return PTensorCheck(
        verdict=LIKELY_P, witness=None, witness_value=None, points_checked=points.shape[0]
    )
