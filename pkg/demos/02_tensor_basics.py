"""
Tensors and contractions
========================

The storage format, the two contractions, the operator norm, and the signed
root that turns odd powers back into their base.
"""

import numpy as np

from tcpbounds import (
    DenseTensor,
    contract_full,
    contract_m1,
    signed_root,
    tensor_inf_norm,
)

# Entries are a sparse map from 1-based index tuples to values.  An order-3
# tensor on dimension 2 has 2^3 = 8 slots; we fill four of them.
A = DenseTensor(3, 2, {
    (1, 1, 2): 2.0,
    (1, 2, 1): 3.0,
    (2, 1, 1): -1.0,
    (2, 2, 2): 1.0,
})
print(A)
print("nonzeros:", A.nnz)
print("a_112 =", A.value_at((1, 1, 2)), "  a_111 =", A.value_at((1, 1, 1)))

x = np.array([2.0, 5.0])

# (A x^{m-1})_i sums a_{i j k} x_j x_k over the trailing indices.
y = contract_m1(A, x)
print("\nA x^2  =", y)
print("row 1: 2*x1*x2 + 3*x2*x1 =", 2 * 2 * 5 + 3 * 5 * 2)
print("row 2: -1*x1*x1 + 1*x2*x2 =", -1 * 4 + 25)

# The full contraction is the scalar x . (A x^{m-1}).
print("\nA x^3  =", contract_full(A, x), " = x . A x^2 =", float(np.dot(x, y)))

# The norm is the largest row sum of absolute values.
print("||A||_inf =", tensor_inf_norm(A), " (row 1 carries 2 + 3)")

# Odd roots keep the sign, so cube roots undo cubes on all of R.
vals = np.array([8.0, -8.0, 0.125, 0.0])
roots = signed_root(vals, 3)
print("\nsigned cube roots of", vals, "->", roots)
print("cubed back:", roots**3)

# Diagonal tensors have a dedicated constructor and predicates.
D = DenseTensor.from_diagonal([1.0, 8.0], order=4)
print("\ndiagonal tensor:", D)
print("is_diagonal:", D.is_diagonal(), " is_positive_diagonal:", D.is_positive_diagonal())
print("diagonal:", D.diagonal())
