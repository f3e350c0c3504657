"""Small-instance solver for the tensor complementarity problem.

TCP(q, A) asks for ``z >= 0`` with ``w = A z^{m-1} + q >= 0`` and ``z . w = 0``.
At desk scale the active set can be enumerated outright: for every support
``S`` of coordinates allowed to be positive, the square system
``(A z^{m-1} + q)_S = 0`` with ``z = 0`` off ``S`` is solved by damped Newton
from several seeded starts, and every root that satisfies the sign and
complementarity conditions is kept.  Certificates always recompute ``w`` and
the violation measure from ``z``; nothing is trusted from the caller.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionLimitError,
    NotPositiveDiagonalError,
)
from .tensor import (
    DenseTensor,
    _as_vector,
    contract_m1,
    positive_part,
    signed_root,
    vec_norms,
)

__all__ = [
    "TcpInstance",
    "SolveOptions",
    "SolutionCertificate",
    "solve_enumerate",
    "solve_diagonal",
    "verify_solution",
]


@dataclass(frozen=True, eq=False)
class TcpInstance:
    """A tensor together with the offset vector ``q``."""

    tensor: DenseTensor
    q: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "q", _as_vector(self.q, self.tensor.dim, "q").copy()
        )


@dataclass
class SolveOptions:
    """Knobs for :func:`solve_enumerate`.

    ``tol`` is the acceptance tolerance: roots are kept when no component of
    ``z`` or ``w`` is below ``-tol`` and no product ``|z_i w_i|`` exceeds it.
    Roots closer than ``10 * tol`` in the max-norm are considered duplicates.
    """

    max_dim: int = 6
    starts: int = 8
    seed: int = 0
    tol: float = 1e-9
    max_iterations: int = 100
    step_tol: float = 1e-12
    damping: float = 0.5
    fd_step: float = 1e-7


@dataclass(frozen=True, eq=False)
class SolutionCertificate:
    """A candidate solution with its recomputed slack and violation measure.

    ``support`` holds the 1-based coordinates where ``z`` exceeds ``tol``.
    ``max_violation`` is the largest of the negative parts of ``z`` and ``w``
    and the absolute complementarity products; ``passed`` is the verdict
    ``max_violation <= tol``.
    """

    z: np.ndarray
    w: np.ndarray
    support: tuple[int, ...]
    max_violation: float
    tol: float
    passed: bool

    @classmethod
    def from_candidate(
        cls, inst: TcpInstance, z, tol: float
    ) -> "SolutionCertificate":
        z = _as_vector(z, inst.tensor.dim, "z").copy()
        w = contract_m1(inst.tensor, z) + inst.q
        violations = [0.0]
        violations.append(float(np.max(-z, initial=0.0)))
        violations.append(float(np.max(-w, initial=0.0)))
        violations.append(float(np.max(np.abs(z * w), initial=0.0)))
        max_violation = max(violations)
        support = tuple(int(i) + 1 for i in np.flatnonzero(z > tol))
        return cls(
            z=z,
            w=w,
            support=support,
            max_violation=max_violation,
            tol=tol,
            passed=max_violation <= tol,
        )


def verify_solution(inst: TcpInstance, z, tol: float = 1e-8) -> SolutionCertificate:
    """Recompute ``w`` and the violation measure for a claimed solution."""
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    return SolutionCertificate.from_candidate(inst, z, tol)


def solve_diagonal(inst: TcpInstance, tol: float = 1e-9) -> SolutionCertificate:
    """Closed-form solution for positive diagonal tensors.

    The problem decouples componentwise: ``z_i = ((-q_i)+ / a_i)^{1/(m-1)}``
    zeroes ``w_i`` exactly where ``q_i < 0`` and leaves ``w_i = q_i >= 0``
    elsewhere.
    """
    tensor = inst.tensor
    if not tensor.is_positive_diagonal():
        raise NotPositiveDiagonalError(
            "solve_diagonal needs a diagonal tensor with positive diagonal"
        )
    if tensor.order % 2 != 0:
        raise ValueError("solve_diagonal needs an even tensor order")
    powered = positive_part(-inst.q) / tensor.diagonal()
    z = signed_root(powered, tensor.order - 1)
    return SolutionCertificate.from_candidate(inst, z, tol)


def solve_enumerate(
    inst: TcpInstance, opts: SolveOptions | None = None
) -> list[SolutionCertificate]:
    """Enumerate supports and collect every verified solution.

    Returns certificates sorted by support size, then lexicographically by
    ``z``; an empty list means no support produced an acceptable root (for an
    instance believed to be P this is a solver failure, not a proof of
    infeasibility).  The run is deterministic for fixed options.
    """
    opts = opts or SolveOptions()
    tensor, q = inst.tensor, inst.q
    n = tensor.dim
    if n > opts.max_dim:
        raise DimensionLimitError(
            f"support enumeration is exponential; dim {n} exceeds max_dim "
            f"{opts.max_dim}"
        )
    rng = np.random.default_rng(opts.seed)
    scale = 1.0 + vec_norms(positive_part(-q))[0] ** (1.0 / (tensor.order - 1))

    kept: list[SolutionCertificate] = []
    for size in range(n + 1):
        for support in itertools.combinations(range(n), size):
            if size == 0:
                candidates = [np.zeros(n)]
            else:
                starts = scale * rng.uniform(0.05, 1.0, size=(opts.starts, size))
                candidates = []
                for start in starts:
                    root = _newton_on_support(inst, support, start, opts)
                    if root is not None:
                        candidates.append(root)
            for z in candidates:
                cert = SolutionCertificate.from_candidate(inst, z, opts.tol)
                if cert.max_violation > opts.tol:
                    continue
                if any(
                    float(np.max(np.abs(cert.z - other.z))) <= 10.0 * opts.tol
                    for other in kept
                ):
                    continue
                kept.append(cert)
    kept.sort(key=lambda c: (len(c.support), tuple(c.z)))
    return kept


def _newton_on_support(
    inst: TcpInstance, support: tuple[int, ...], start: np.ndarray, opts: SolveOptions
) -> np.ndarray | None:
    """Damped Newton for ``(A z^{m-1} + q)_S = 0`` with ``z = 0`` off ``S``."""
    tensor, q = inst.tensor, inst.q
    n = tensor.dim
    idx = np.asarray(support, dtype=np.intp)

    def embed(z_s: np.ndarray) -> np.ndarray:
        z = np.zeros(n)
        z[idx] = z_s
        return z

    def f(z_s: np.ndarray) -> np.ndarray:
        return (contract_m1(tensor, embed(z_s)) + q)[idx]

    z_s = np.asarray(start, dtype=float).copy()
    f_s = f(z_s)
    if not np.all(np.isfinite(f_s)):
        return None
    size = idx.size
    for _ in range(opts.max_iterations):
        h = opts.fd_step * max(1.0, float(np.max(np.abs(z_s))))
        jac = np.empty((size, size))
        for j in range(size):
            bumped = z_s.copy()
            bumped[j] += h
            jac[:, j] = (f(bumped) - f_s) / h
        try:
            step = np.linalg.solve(jac, -f_s)
        except np.linalg.LinAlgError:
            return None
        if not np.all(np.isfinite(step)):
            return None
        # Backtrack until the residual shrinks; bail out if no fraction helps.
        base = float(np.max(np.abs(f_s)))
        damp = 1.0
        while damp >= 1e-8:
            trial = z_s + damp * step
            f_trial = f(trial)
            if np.all(np.isfinite(f_trial)) and float(np.max(np.abs(f_trial))) < base:
                break
            damp *= opts.damping
        else:
            break
        z_s, f_s = trial, f_trial
        if float(np.max(np.abs(damp * step))) <= opts.step_tol:
            break
    return embed(z_s)
