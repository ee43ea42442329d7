"""The 2-homogeneous group 27:13 inside S27.

It is not 2-transitive, yet it is a derived subgroup: AGammaL(1,27)' = 27:13.
The decision goes through the socle reduction and a normalizer computed in
the quotient by the translations.  Takes a few seconds.
"""

import time

from derivant import derived_subgroup, equals, integrable_within, is_k_homogeneous, is_k_transitive
from derivant import constructors as C

G = C.affine_squares(27)
print("|G| =", G.order(), " 2-homogeneous:", is_k_homogeneous(G, 2), " 2-transitive:", is_k_transitive(G, 2))

t = time.perf_counter()
v = integrable_within(G, C.symmetric(27))
print(f"verdict {v.status} in {time.perf_counter() - t:.1f}s, trace {v.trace}, normalizers by {v.provenance_label()}")

AG = C.agammal1(27)
print("AGammaL(1,27) among the witnesses:", any(equals(W, AG) for W in v.witnesses))
print("AGammaL(1,27)' == G:", equals(derived_subgroup(AG), G))
