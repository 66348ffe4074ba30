# %% Splicing two knots: Casson-Walker and lambda_2
import os

from lmosplice.records import load_records
from lmosplice.sl2z import Mat2
from lmosplice.splice import (
    FramingFraction,
    casson_walker,
    extract_invariants,
    hopf_chain,
    is_qhs,
    kappa_routes,
    lambda2_splice,
    lens,
    lens_closed_form,
    rational_surgery,
    splice_lmo_general,
    splice_lmo_truncated,
    splice_space,
    wheeled_invariant,
)

knots = load_records(os.path.join(os.path.dirname(os.path.abspath(__file__)), "knots.txt"))
trefoil, figure8 = knots["trefoil"], knots["figure8"]

# %% the gluing (p, r; q, s) and its Hopf chain
g = Mat2(2, 3, 1, 2)
print("gluing", g, "chain", hopf_chain(g), "QHS:", is_qhs(g))

# %% closed forms against the diagram engine
res = splice_lmo_truncated(g, trefoil, figure8)
print("lambda_W:", res.lambda_w, casson_walker(g, trefoil, figure8))
print("lambda_2:", res.lambda2, lambda2_splice(g, trefoil, figure8))

# %% standard splice: lambda_W adds, lambda_2 picks up (1/8) D''_1 D''_2
std = Mat2(0, -1, 1, 0)
res = splice_lmo_truncated(std, trefoil, trefoil)
print("standard splice of two trefoils:", res.lambda_w, res.lambda2)

# %% lens spaces are splices with unknots
for r, s in ((3, 1), (5, 2), (7, 3)):
    lw, l2 = lens(r, s)[:2]
    print(f"L({r},{s}): lambda_W = {lw}, lambda_2 = {l2}; closed form", *map(str, lens_closed_form(r, s)))

# %% surgery on a knot: +1 on the trefoil
print("+1 surgery on trefoil:", *map(str, rational_surgery(trefoil, 1, 1)[:2]))

# %% kappa three ways, for framed knots
f1, f2 = FramingFraction(2, 3), FramingFraction(-1, 2)
print("kappa routes:", *map(str, kappa_routes(g, f1, f2)))

# %% the general formula takes rationally framed knots
sp = splice_space()
z = splice_lmo_general(g, f1, f2, wheeled_invariant(trefoil, sp, "k1"), wheeled_invariant(figure8, sp, "k2"))
lw, l2 = extract_invariants(z)
print("framed splice: lambda_W =", lw, " lambda_2 =", l2)
