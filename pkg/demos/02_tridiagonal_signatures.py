# %% Unit tridiagonal matrices: signature, inverse corners, Kirby-Melvin
import itertools
import random
from fractions import Fraction as F

from lmosplice.tridiag import (
    Tridiagonal,
    associated_mat2,
    dense_inverse,
    inverse_corners,
    kirby_melvin,
    signature_oracle,
    signature_recursive,
)

# %% everything is read off the 2x2 product S G(c_1) ... G(c_l)
t = Tridiagonal([2, F(1, 2), -3, 1])
print(t, "->", associated_mat2(t))
print("signature (peeling) =", signature_recursive(t), " (diagonalizing) =", signature_oracle(t))

# %% corners of the inverse need only gamma
print("corners:", *map(str, inverse_corners(t)))
inv = dense_inverse(t.dense())
print("dense:  ", inv[0][0], inv[0][-1], inv[-1][-1])

# %% singular exactly when gamma = 0
print("[1, 1] gamma =", associated_mat2([1, 1]).c)

# %% 3 sig - tr equals a Dedekind-symbol expression for integer entries
for c in ([1], [2, 2], [-2, 3, -1, 4]):
    print(c, "3 sig - tr =", *map(str, kirby_melvin(c)))

rng = random.Random(1)
cases = [tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 7))) for _ in range(2000)]
cases += list(itertools.product(range(-2, 3), repeat=4))
assert all(lhs == rhs for lhs, rhs in map(kirby_melvin, cases))
print(len(cases), "integer tridiagonals checked")
