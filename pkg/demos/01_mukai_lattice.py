"""A first look at the rank-three lattice attached to a degree-2d K3 surface.

Vectors are (r, c, s) with c the coefficient of the ample class H, and the
pairing is (v, w) = 2d c_v c_w - r_v s_w - s_v r_w.
"""

from hilbwalls import MukaiVector, from_triple, pairing, square

params = from_triple(1, 2, 3)
print(f"Delta, h, k = {params.triple}: d = {params.d}, N = {params.N}")
print(f"the ideal sheaf class v = {params.v}, v^2 = {square(params.v, params.d)}")

# Two classes that show up later as a wall and its complement.
w = MukaiVector(2, -1, 5)
rest = params.v - w
for name, x in (("w", w), ("v - w", rest)):
    print(f"{name:>6} = {x}: square {square(x, params.d):>3}, pairing with v {pairing(x, params.v, params.d)}")

# v^2 splits as w^2 + 2 (w, v - w) + (v - w)^2
d = params.d
total = square(w, d) + 2 * pairing(w, rest, d) + square(rest, d)
print(f"w^2 + 2(w, v-w) + (v-w)^2 = {total}")
