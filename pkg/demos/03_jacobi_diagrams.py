# %% The truncated algebra of Jacobi diagrams
from fractions import Fraction as F

from lmosplice.diagrams import graph, named
from lmosplice.diagrams.element import Element, apply_gaussian, pair
from lmosplice.diagrams.space import build_space
from lmosplice.diagrams.wheels import modified_bernoulli, omega_big, omega_small, t1, theta, theta2, wheel

# %% closed diagrams up to degree 4: dims 1, 0, 1, 0, 2
closed = build_space((), 4)
print("closed graded dims:", closed.graded_dimensions())

# %% one leg colour: connected strutless basis up to degree 5
sp = build_space(("k",), 5)
print(sp.dump())

# %% a few relations the engine knows about
print("crossed closure of w4 =", Element.of(sp, named.crossed()).coordinate(theta2(sp)), "* Theta2")
print("<w2, w2> =", pair(wheel(sp, 2, "k"), wheel(sp, 2, "k"), {"k"}).coordinate(theta2(sp)), "* Theta2")
print("AS: flipping one vertex of w2 gives", Element.of(sp, named.wheel(2, "k").flip(0)) == -wheel(sp, 2, "k"))

# %% Omega = exp(sum b_2m w_2m)
b2, b4, b6 = modified_bernoulli(3)
print("b2, b4, b6 =", b2, b4, b6)
big = omega_big(sp, "k")
w2 = wheel(sp, 2, "k")
assert big == Element.unit(sp) + w2.scale(b2) + (w2 * w2).scale(b2 ** 2 / 2) + wheel(sp, 4, "k").scale(b4)

# %% omega = <Omega, Omega>: its degree-4 coefficient is 2 b2^2 = 1/1152
print("omega =", omega_small(closed).coordinate(theta2(closed)), "* Theta2 + 1")

# %% gluing exp(alpha/2 strut) into Omega only multiplies by exp(alpha theta/48)
for alpha in (F(1), F(-5, 7)):
    lhs = apply_gaussian({("k", "k"): alpha / 2}, big)
    print("alpha =", alpha, lhs == theta(sp).scale(alpha / 48).exp() * big)

# %% T1: two 2-wheels glued along one leg; closing it gives Theta2
closure = apply_gaussian({("k", "k"): F(1, 2)}, t1(sp, "k")).homogeneous(4)
print("closure of T1:", closure.coordinate(theta2(sp)), "* Theta2")
print("theta canonical key:", graph.canonical(named.theta())[0][:6], "...")
