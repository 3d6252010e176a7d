"""Swan K-theory of group rings over F_2 and F_3, at the groups e and C2.

Over F_3 the group ring of C2 is semisimple: the atoms are the trivial and sign
modules. Over F_2 it is not, and the regular module is an indecomposable atom of
dimension 2.
"""

from globalk import globfun as gf
from globalk import parsummable as ps
from globalk.instances import ProjModules

window = gf.GroupWindow(["C1", "C2"])
for p, bound in ((3, 2), (2, 4)):
    K = ps.swan_k(ProjModules(p), window, bound)
    M = K.swan_data.monoids["C2"]
    print(f"F_{p}: atoms at C2 = {M.atom_names()}")
    print(f"  res to e = {K.res('C2', 'C1').tolist()}, tr from e = {K.tr('C2', 'C1').T.tolist()}")
