"""Finite sets with a group action, seen two ways.

The Swan K-theory of the category of finite sets, computed from fixed objects on
a window of labels, is compared matrix by matrix with the Burnside functor built
from tables of marks.
"""

from globalk import globfun as gf
from globalk import gsets as gs
from globalk import parsummable as ps
from globalk.instances import FinSets

window = gf.GroupWindow(["C1", "C2", "C3", "S3"])

print("table of marks of S3 (rows G/K, columns (H)):")
print(gs.table_of_marks(window.get("S3")))

K = ps.swan_k(FinSets(), window, bound=6)
B = gf.burnside_by_marks(window)
print("\nranks of swanK(FinSets):", K.ranks())
for G in window:
    print(f"  atoms at {G.name}:", K.swan_data.monoids[G.name].atom_names())

print("\nres^S3_C2 =\n", K.res("S3", "C2"))
print("tr_C3^S3 =\n", K.tr("S3", "C3"))

same = all((K.op(a, b, t) == B.op(a, b, t)).all() for a, b, t in K.all_terms())
print("\nevery operation matches the marks computation:", same)
print("axioms:", gf.verify_axioms(K).summary().splitlines()[0])
