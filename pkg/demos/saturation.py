"""Saturation probes: does every object with a G-action come from a fixed object?

Finite sets pass. A one-object category with trivial label action fails, and the
probe prints the G-object that has no fixed counterpart.
"""

from globalk import groups as gr
from globalk import parsummable as ps
from globalk.instances import FinSets, OneObjectGroup, ProjModules

C2 = gr.by_name("C2")
for C, bound in ((FinSets(), 3), (ProjModules(2), 2), (OneObjectGroup(C2), 1)):
    r = ps.saturation_probe(C, C2, bound, bound)
    print(f"{C.name:8s} saturated={r.saturated}  G-object classes={r.g_object_classes} "
          f"fixed classes={r.fixed_classes}  missing={r.missing}")
