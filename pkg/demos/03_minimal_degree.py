"""The least k past which the movable cone is a single chamber.

Once that holds the Hilbert scheme itself carries the Lagrangian fibration.
"""

from hilbwalls import minimal_clear_k
from hilbwalls.surface import sufficient_k_bound

for h in (1, 2, 3, 4):
    res = minimal_clear_k(1, h)
    walled = [k for k, n in res.per_k if n]
    print(f"h = {h}: walls at k in {walled}, k0 = {res.k0} "
          f"(a priori bound {sufficient_k_bound(1, h)}), degree {res.degree0}")
