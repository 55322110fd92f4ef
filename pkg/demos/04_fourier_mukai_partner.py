"""The isotropic class u orthogonal to v and the derived partner it defines."""

from hilbwalls import fm_partner_report, from_triple
from hilbwalls.mukai import pairing, square

for triple in [(1, 1, 2), (1, 2, 3), (2, 3, 5)]:
    params = from_triple(*triple)
    rep = fm_partner_report(params)
    d = params.d
    print(f"{triple}: u = {rep.u} (u^2 = {square(rep.u, d)}, (u, v) = {pairing(rep.u, params.v, d)})")
    print(f"    NS generator {rep.ns_generator_vector}, partner degree {rep.partner_degree}, "
          f"twist order {rep.twist_order}, curve class {rep.bm_class_curve_coeff} H'")
