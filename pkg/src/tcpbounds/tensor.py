"""Coordinate-format dense tensors and the multilinear primitives built on them.

A tensor of order ``m`` and dimension ``n`` is stored sparsely as a map from
1-based index tuples ``(i1, ..., im)`` to real values; absent tuples are zero.
Contractions iterate over stored entries only, so the cost scales with the
number of nonzeros rather than ``n**m``.  All vector arguments may be anything
``np.asarray`` accepts; results are float64 arrays or floats.

Every function here is a pure function of immutable inputs: ``DenseTensor``
never mutates after construction and no operation writes to its arguments.
"""

from __future__ import annotations

from typing import Iterator, Mapping

import numpy as np

from .errors import DimensionMismatchError

__all__ = [
    "DenseTensor",
    "contract_m1",
    "contract_m1_batch",
    "contract_full",
    "tensor_inf_norm",
    "vec_norms",
    "signed_root",
    "positive_part",
]


def _as_vector(x, dim: int, name: str = "vector") -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.shape[0] != dim:
        raise DimensionMismatchError(
            f"{name} must be a 1-d array of length {dim}, got shape {arr.shape}"
        )
    return arr


class DenseTensor:
    """Order-``m``, dimension-``n`` real tensor in coordinate storage.

    Parameters
    ----------
    order : int
        Number of indices ``m``; at least 2.
    dim : int
        Each index ranges over ``1..dim``.
    entries : mapping
        ``{(i1, ..., im): value}`` with 1-based indices.  Zero values are
        dropped so that the stored entry count is the number of structural
        nonzeros.
    """

    __slots__ = ("order", "dim", "_entries", "_rows", "_cols", "_vals", "_row_groups")

    def __init__(self, order: int, dim: int, entries: Mapping[tuple, float]):
        if not isinstance(order, int) or isinstance(order, bool) or order < 2:
            raise ValueError(f"order must be an integer >= 2, got {order!r}")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise ValueError(f"dim must be a positive integer, got {dim!r}")
        clean: dict[tuple, float] = {}
        for raw_idx, raw_val in entries.items():
            idx = tuple(int(i) for i in raw_idx)
            if len(idx) != order:
                raise ValueError(
                    f"index {idx} has {len(idx)} components, expected order {order}"
                )
            if any(i < 1 or i > dim for i in idx):
                raise ValueError(f"index {idx} out of range 1..{dim}")
            val = float(raw_val)
            if val != 0.0:
                clean[idx] = val
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_entries", clean)
        items = sorted(clean.items())
        rows = np.array([idx[0] - 1 for idx, _ in items], dtype=np.intp)
        cols = np.array(
            [[i - 1 for i in idx[1:]] for idx, _ in items], dtype=np.intp
        ).reshape(len(items), order - 1)
        vals = np.array([v for _, v in items], dtype=float)
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_cols", cols)
        object.__setattr__(self, "_vals", vals)
        object.__setattr__(
            self, "_row_groups", [np.flatnonzero(rows == r) for r in range(dim)]
        )

    def __setattr__(self, name, value):  # pragma: no cover - guards immutability
        raise AttributeError("DenseTensor is immutable")

    @classmethod
    def from_diagonal(cls, values, order: int = 4) -> "DenseTensor":
        """Build the diagonal tensor with ``a[i,i,...,i] = values[i-1]``."""
        vals = np.asarray(values, dtype=float)
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError("values must be a nonempty 1-d sequence")
        return cls(order, vals.size, {(i,) * order: float(v) for i, v in enumerate(vals, 1)})

    @property
    def entries(self) -> dict[tuple, float]:
        """Copy of the stored nonzero entries, keyed by 1-based index tuples."""
        return dict(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def value_at(self, idx: tuple) -> float:
        """Entry at a 1-based index tuple; zero when absent."""
        return self._entries.get(tuple(idx), 0.0)

    def diagonal(self) -> np.ndarray:
        """Vector of the entries at ``(i, i, ..., i)``; absent ones are zero."""
        m = self.order
        return np.array([self._entries.get((i,) * m, 0.0) for i in range(1, self.dim + 1)])

    def is_diagonal(self) -> bool:
        """True when every stored entry sits at a constant index tuple."""
        return all(len(set(idx)) == 1 for idx in self._entries)

    def is_positive_diagonal(self) -> bool:
        """True when the tensor is diagonal with all ``dim`` diagonal entries > 0."""
        if not self.is_diagonal():
            return False
        m = self.order
        return all(self._entries.get((i,) * m, 0.0) > 0.0 for i in range(1, self.dim + 1))

    def __repr__(self) -> str:
        return f"DenseTensor(order={self.order}, dim={self.dim}, nnz={self.nnz})"


def contract_m1(tensor: DenseTensor, x) -> np.ndarray:
    """Contract against ``m - 1`` copies of ``x``.

    Component ``i`` of the result is the sum of ``a[i, i2, ..., im] *
    x[i2] * ... * x[im]`` over the stored entries.
    """
    x = _as_vector(x, tensor.dim, "x")
    if tensor.nnz == 0:
        return np.zeros(tensor.dim)
    prods = tensor._vals * np.prod(x[tensor._cols], axis=1)
    return np.bincount(tensor._rows, weights=prods, minlength=tensor.dim)


def contract_m1_batch(tensor: DenseTensor, points) -> np.ndarray:
    """Row-wise :func:`contract_m1` for a ``(k, dim)`` array of vectors."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != tensor.dim:
        raise DimensionMismatchError(
            f"points must have shape (k, {tensor.dim}), got {pts.shape}"
        )
    out = np.zeros(pts.shape)
    if tensor.nnz == 0:
        return out
    prods = tensor._vals * np.prod(pts[:, tensor._cols], axis=2)
    for r, group in enumerate(tensor._row_groups):
        if group.size:
            out[:, r] = prods[:, group].sum(axis=1)
    return out


def contract_full(tensor: DenseTensor, x) -> float:
    """Fully contract against ``m`` copies of ``x`` (the homogeneous form value)."""
    x = _as_vector(x, tensor.dim, "x")
    if tensor.nnz == 0:
        return 0.0
    full = x[tensor._rows] * np.prod(x[tensor._cols], axis=1)
    return float(np.dot(tensor._vals, full))


def tensor_inf_norm(tensor: DenseTensor) -> float:
    """Maximum over rows of the sum of absolute entries sharing that first index."""
    if tensor.nnz == 0:
        return 0.0
    sums = np.bincount(tensor._rows, weights=np.abs(tensor._vals), minlength=tensor.dim)
    return float(sums.max())


def vec_norms(x) -> tuple[float, float]:
    """Pair ``(max-norm, Euclidean norm)`` of a vector."""
    arr = np.asarray(x, dtype=float)
    if arr.size == 0:
        return 0.0, 0.0
    return float(np.max(np.abs(arr))), float(np.sqrt(np.dot(arr, arr)))


def signed_root(x, r: int) -> np.ndarray:
    """Componentwise signed ``r``-th root, ``sign(t) * |t|**(1/r)``.

    ``r`` must be an odd positive integer so the map is a bijection on the
    reals; even roots are rejected rather than silently losing signs.
    """
    if not isinstance(r, int) or isinstance(r, bool) or r < 1 or r % 2 == 0:
        raise ValueError(f"root order must be an odd positive integer, got {r!r}")
    arr = np.asarray(x, dtype=float)
    return np.sign(arr) * np.abs(arr) ** (1.0 / r)


def positive_part(x) -> np.ndarray:
    """Componentwise ``max(t, 0)``."""
    return np.maximum(np.asarray(x, dtype=float), 0.0)
