"""
Solving diagonal complementarity problems
=========================================

For positive-diagonal tensors the problem decouples per coordinate: each
z_i is either 0 (when q_i >= 0) or the (m-1)-th root of -q_i / a_i.  The
enumeration solver instead walks every support set, solves the restricted
system, and keeps candidates that verify, which surfaces multi-solution
and no-solution situations the closed form cannot represent.
"""

import numpy as np

from tcpbounds import (
    DenseTensor,
    SolveOptions,
    TcpInstance,
    solve_diagonal,
    solve_enumerate,
    verify_solution,
)

# ----------------------------------------------------------- closed form
A = DenseTensor.from_diagonal([16.0, 81.0], order=4)
inst = TcpInstance(A, np.array([-2.0, -3.0]))
cert = solve_diagonal(inst)
print("diag(16, 81), q = (-2, -3):  z =", cert.z)
print("  expected roots: (2/16)^(1/3) = 0.5, (3/81)^(1/3) = 1/3")

report = verify_solution(inst, cert.z)
print("  verify: passed =", report.passed, " support =", report.support,
      " max violation =", report.max_violation)

# Nonnegative q forces the zero solution.
zero = solve_diagonal(TcpInstance(A, np.array([0.5, 2.0])))
print("nonnegative q:  z =", zero.z)

# --------------------------------------------------------- enumeration
# Same instance through the support-set walk: one certificate, identical z.
certs = solve_enumerate(inst)
print("\nenumeration on the same instance:", len(certs), "solution(s)")
print("  z =", certs[0].z, " support =", certs[0].support)

# An order-2 instance with a = -1 on one axis has two valid solutions.
M = DenseTensor(2, 1, {(1, 1): -1.0})
multi = solve_enumerate(TcpInstance(M, np.array([1.0])))
print("\na = -1, q = 1 (order 2):", len(multi), "solutions, sorted by support size")
for cert in multi:
    print("  z =", cert.z, " w =", cert.w, " support =", cert.support)

# And q = -1 on the same tensor admits none: w = -z - 1 < 0 whenever z >= 0.
none = solve_enumerate(TcpInstance(M, np.array([-1.0])))
print("a = -1, q = -1:", len(none), "solutions")

# ------------------------------------------------- dimension guard
# Enumeration is exponential in n, so it refuses large instances unless the
# caller raises the limit explicitly.
big = TcpInstance(DenseTensor.from_diagonal([2.0] * 7, order=4), -np.ones(7))
try:
    solve_enumerate(big)
except Exception as exc:
    print("\nn = 7 without override:", type(exc).__name__)
certs = solve_enumerate(big, SolveOptions(max_dim=7))
print("n = 7 with max_dim=7:", len(certs), "solution(s), z[0] =", certs[0].z[0])
