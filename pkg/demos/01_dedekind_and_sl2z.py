# %% Dedekind symbols and unimodular matrices
from math import gcd

from lmosplice.dedekind import dedekind_sum, dedekind_symbol, dedekind_symbol_fast, reciprocity_rhs
from lmosplice.sl2z import S, Mat2, decompose, generator, recompose, splice_factorization

# %% s(p, q) straight from the sawtooth sum, and the normalized symbol S(p/q) = 12 sgn(q) s(p, q)
print("s(1,3) =", dedekind_sum(1, 3))
print("S(1/3) =", dedekind_symbol(1, 3), "  S(-2/3) =", dedekind_symbol(-2, 3))

# %% reciprocity, checked on a small box
pairs = [(p, q) for p in range(-30, 31) for q in range(-30, 31) if p and q and gcd(p, q) == 1]
assert all(dedekind_symbol(p, q) + dedekind_symbol(q, p) == reciprocity_rhs(p, q) for p, q in pairs)
print(len(pairs), "pairs satisfy reciprocity")

# %% the Euclidean shortcut is what makes big arguments cheap
p, q = 832040, 1346269  # consecutive Fibonacci numbers: worst case for Euclid
print("S(p/q) =", dedekind_symbol_fast(p, q), " S(q/p) =", dedekind_symbol_fast(q, p))
assert dedekind_symbol_fast(10946, 17711) == dedekind_symbol(10946, 17711)
print("S(4181/1009) =", dedekind_symbol_fast(4181, 1009))

# %% every determinant-one matrix is a product of (a, -1; 1, 0) = T^a S
m = Mat2(7, 3, 2, 1)
seq = decompose(m)
print(m, "=", " ".join(f"G({a})" for a in seq))
assert recompose(seq) == m

# %% gluing matrices are factored as g = S G(a_n) ... G(a_1)
g = Mat2(5, 3, 3, 2)
a = splice_factorization(g)
prod = S
for x in reversed(a):
    prod = prod @ generator(x)
print("chain for", g, "->", a, prod == g)
print("S^2 =", recompose([0, 0]), " S^4 =", recompose([0] * 4))
