"""
Worked example, end to end
==========================

One small complementarity problem taken all the way through the library:
certify the structure constant, solve, perturb the solution, and compare
the sharpened two-sided error bounds against the classical pair.
"""

import numpy as np

from tcpbounds import (
    DenseTensor,
    TcpInstance,
    compare_upper_bounds,
    diagonal_alpha_estimate,
    diagonal_bounds,
    residual,
    solve_enumerate,
    tensor_inf_norm,
)

# A is the order-4 diagonal tensor with a_1111 = 1 and a_2222 = 8.
A = DenseTensor.from_diagonal([1.0, 8.0], order=4)
q = np.array([1.0, -1.0])

print("tensor:", A)
print("||A||_inf =", tensor_inf_norm(A))
print("||A||_inf^(1/3) =", tensor_inf_norm(A) ** (1.0 / 3.0))

alpha = diagonal_alpha_estimate(A)
print("\nalpha(F_A) =", alpha.value, f"({alpha.method}, certified={alpha.certified})")

# Solve TCP(q, A): find z >= 0 with w = A z^3 + q >= 0 and z^T w = 0.
certs = solve_enumerate(TcpInstance(A, q))
z = certs[0].z
print("\nsolutions found:", len(certs))
print("z =", z)
print("w =", certs[0].w)
print("support =", certs[0].support, " max violation =", certs[0].max_violation)

# Pretend someone handed us u as an approximation of z.
u = np.array([0.5, 0.3])
data = residual(A, q, z, u)
print("\ntest point u =", u)
print("residual v =", data.v)
print("||v||_inf =", data.v_inf, " t =", data.t, " v_t =", data.v_t)

report = diagonal_bounds(A, q, z, u)
err = float(np.max(np.abs(z - u)))
print("\ntrue error      ||z - u||_inf =", err)
print(f"sharpened pair  [{report.lb_new:.12f}, {report.ub_new:.12f}]  (D = {report.D})")
print(f"baseline pair   [{report.lb_base:.12f}, {report.ub_base:.12f}]")
print(f"relative pair   [{report.rel_lb:.12f}, {report.rel_ub:.12f}]")
print(f"solution norm   [{report.sol_lb}, {report.sol_ub}]   (||z||_inf = {np.max(z)})")
print("upper-bound ratio (sharp / baseline) =", compare_upper_bounds(report))

assert report.lb_new <= err <= report.ub_new
assert report.lb_base <= err <= report.ub_base
print("\nboth intervals contain the true error; the sharpened one is tighter.")
