"""Gamma-sets and the free global functors A_Gamma.

Free Gamma-sets give A_Gamma. All Gamma-sets split into one copy of A_{W H}
per conjugacy class of subgroups H of Gamma, matched by taking H-fixed points.
"""

from globalk import groups as gr
from globalk.instances import checks

for name in ("C2", "C3", "S3"):
    rep = checks.free_generator_iso(gr.by_name(name))
    print(f"free {name}-sets: ranks {rep.swan.ranks()}, isomorphic to A_{name}: {rep.iso.isomorphic}")

print()
for name in ("C2", "C4", "S3"):
    G = gr.by_name(name)
    rep = checks.splitting_check(G)
    weyl = [gr.isomorphism_type(gr.weyl_group(G, H)[0])
            for H in gr.conjugacy_classes_of_subgroups(G).representatives]
    print(f"{name}-sets: ranks {rep.swan.ranks()}, summands A_W for W in {weyl}, verified: {rep.passed}")
