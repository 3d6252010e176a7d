"""Command-line front end: ``globalk {groups,globfun,swan,verify}``.

Output is canonical JSON (sorted keys, ``"schema": 1``) or CSV for rank tables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import globfun as gf
from . import groups as gr
from . import parsummable as ps
from .errors import BadSelector, GlobalKError

SCHEMA = 1


# ------------------------------------------------------------------ selectors

def load_group(sel):
    if os.path.isfile(sel):
        with open(sel) as fh:
            return gr.load_cayley(fh.read(), name=os.path.splitext(os.path.basename(sel))[0])
    return gr.by_name(sel)


def parse_window(text):
    return gf.GroupWindow([load_group(s.strip()) for s in text.split(",") if s.strip()])


def subgroup_closure(groups):
    """Window of bestiary types of all subgroups of the given groups, ordered by order."""
    found = {}
    for G in groups:
        for H in gr.all_subgroups(G):
            K = H.as_group()[0]
            t = gr.isomorphism_type(K)
            found.setdefault(t, gr.by_name(t) if t in gr.BESTIARY_NAMES else K)
    order = {n: i for i, n in enumerate(gr.BESTIARY_NAMES)}
    return gf.GroupWindow(sorted(found.values(), key=lambda G: (G.order, order.get(G.name, 99), G.name)))


def make_category(sel):
    from . import instances as inst
    kind, _, arg = sel.partition(":")
    kind = kind.lower()
    if kind == "finsets":
        return inst.FinSets()
    if kind in ("gfinsets", "gfinsets-free"):
        return inst.GFinSets(load_group(arg), free=kind.endswith("free"))
    if kind == "monoid":
        if arg in ("", "N"):
            return inst.DiscreteMonoid()
        if arg.startswith("Z"):
            n = int(arg[1:])
            return inst.DiscreteMonoid([[(a + b) % n for b in range(n)] for a in range(n)], name=f"Z/{n}")
        raise BadSelector(f"unknown monoid {arg!r}")
    if kind == "projmod":
        return inst.ProjModules(int(arg.lstrip("Ff") or 2))
    if kind == "phi":
        if arg.lower() in ("", "sigma"):
            return inst.PhiCategory(inst.SigmaCategory())
        if arg == "N":
            return inst.PhiCategory(inst.DiscretePermutative())
        raise BadSelector(f"unknown permutative category {arg!r}")
    if kind == "bc2":
        return inst.OneObjectGroup(gr.by_name("C2"))
    if kind == "bgroup":
        return inst.OneObjectGroup(load_group(arg))
    raise BadSelector(f"unknown category {sel!r}")


def default_bound(C, window):
    top = max(G.order for G in window)
    gamma = getattr(C, "Gamma", None)
    if gamma is not None and hasattr(C, "free"):
        return gamma.order * top
    if getattr(C, "p", None):
        return 2
    if hasattr(C, "E"):
        return 2 * top
    return top


# ------------------------------------------------------------------ output

def emit(args, payload, csv_rows=None):
    if getattr(args, "format", "json") == "csv" and csv_rows is not None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in csv_rows:
            w.writerow(row)
        text = buf.getvalue()
    else:
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ranks_rows(M):
    return [["group", "rank"]] + [[G.name, M.rank(G)] for G in M.window]


def certified(M, seed):
    rep = gf.verify_axioms(M, seed=seed)
    if not rep.passed:
        raise GlobalKError("functor failed the axiom gate:\n" + rep.summary())
    return rep


# ------------------------------------------------------------------ commands

def cmd_groups(args):
    G = load_group(args.group)
    sc = gr.conjugacy_classes_of_subgroups(G)
    names = gr.subgroup_class_names(G)
    if args.weyl:
        if args.weyl not in names:
            raise BadSelector(f"{G.name} has no subgroup class named {args.weyl!r}; known: {', '.join(names)}")
        H = sc.rep(names.index(args.weyl))
        W, _, _ = gr.weyl_group(G, H)
        rows = [{"class": args.weyl, "subgroup": list(H.elements), "normalizer_order": len(gr.normalizer(G, H)),
                 "weyl_order": W.order, "weyl_type": gr.isomorphism_type(W) if W.order > 1 else "C1"}]
    elif args.subgroups:
        rows = [{"subgroup": list(H.elements), "order": len(H), "class": names[sc.class_of(H)]}
                for H in sorted(gr.all_subgroups(G))]
    else:
        rows = []
        for i, H in enumerate(sc.representatives):
            W, _, _ = gr.weyl_group(G, H)
            rows.append({"class": names[i], "order": len(H), "representative": list(H.elements),
                         "conjugates": len(sc.classes[i]), "weyl_order": W.order})
    payload = {"schema": SCHEMA, "group": G.name, "order": G.order, "rows": rows}
    csv_rows = [list(rows[0])] + [[json.dumps(v) if isinstance(v, list) else v for v in r.values()] for r in rows]
    emit(args, payload, csv_rows)
    return 0


def cmd_globfun(args):
    window = parse_window(args.window)
    if args.A:
        M = gf.free_global_functor_A(load_group(args.A), window)
    elif args.B:
        M = gf.burnside_type_B(load_group(args.B), window)
    else:
        M = gf.burnside_by_marks(window)
    rep = certified(M, args.seed)
    payload = M.to_json()
    payload["verification"] = rep.to_json()
    payload["seed"] = args.seed
    emit(args, payload, _ranks_rows(M))
    return 0


def cmd_swan(args):
    window = parse_window(args.window or args.group_window)
    C = make_category(args.cat)
    bound = args.bound if args.bound is not None else (args.dim if args.dim is not None else default_bound(C, window))
    M = ps.swan_k(C, window, bound, multiplicity=args.multiplicity)
    rep = certified(M, args.seed)
    ok, n = M.swan_data.choice_agreement()
    payload = M.to_json()
    payload.update({"category": C.name, "bound": bound, "seed": args.seed,
                    "multiplicity": args.multiplicity if args.multiplicity is not None else bound,
                    "choice_checks": {"agree": ok, "total": n}, "verification": rep.to_json()})
    emit(args, payload, _ranks_rows(M))
    return 0 if ok == n else 1


def _suite(args):
    from .instances import checks
    s = args.suite
    if s == "mcat":
        C = make_category(args.cat or "finsets")
        return ps.verify_mcat_axioms(C, range(args.labels), bound=args.bound, samples=args.samples, seed=args.seed)
    if s in ("axioms", "doublecoset"):
        if s == "doublecoset":
            window = subgroup_closure([load_group(g) for g in (args.groups or "S3").split(",")])
            C = make_category("finsets")
        else:
            window = parse_window(args.window or "e,C2")
            C = make_category(args.cat or "finsets")
        bound = args.bound if args.bound is not None else default_bound(C, window)
        M = ps.swan_k(C, window, bound)
        rep = gf.verify_axioms(M, composition=True, composition_samples=args.samples, seed=args.seed)
        if s == "doublecoset":
            iso = gf.compare_functors(M, gf.burnside_by_marks(window))
            rep.add("agrees with table of marks", ",".join(window.names()), iso.isomorphic, iso.obstruction)
        return rep
    if s == "stabilization":
        window = parse_window(args.window or "e,C2")
        C = make_category(args.cat or "finsets")
        bound = args.bound if args.bound is not None else default_bound(C, window)
        return ps.stabilization_check(C, window, bound, args.multiplicity or bound)
    if s == "splitting":
        return checks.splitting_check(load_group(args.gamma or "C2"), tuple((args.window or "e").split(",")))
    if s == "freegen":
        return checks.free_generator_iso(load_group(args.gamma or "C2"), window=tuple((args.window or "e,C2").split(",")),
                                         samples=args.samples, seed=args.seed)
    if s == "phi":
        return checks.phi_of_sigma_equivalence(args.labels, group=args.group or "C2", samples=args.samples,
                                               seed=args.seed)
    if s == "moduleiso":
        return _module_iso(args)
    if s == "monoidal":
        C = make_category(args.cat or "finsets")
        return ps.verify_derived_monoidal(C, range(min(args.labels, 4)), bound=args.bound or 2, seed=args.seed)
    raise BadSelector(f"unknown suite {s!r}")


def _module_iso(args):
    from .instances import MatrixModule
    from .instances.modules import module_iso_witness
    paths = (args.modules or "").split(",")
    if len(paths) != 2:
        raise BadSelector("--modules needs two module-definition JSON files, comma-separated")
    mods = []
    for path in paths:
        with open(path) as fh:
            mods.append(MatrixModule.from_json(fh.read()))
    T = module_iso_witness(*mods)
    rep = gf.Report("module isomorphism")
    rep.add("isomorphic", " vs ".join(paths), T is not None, "" if T is None else f"intertwiner {T.tolist()}")
    return rep


def cmd_verify(args):
    if args.suite == "saturation":
        C = make_category(args.cat or "finsets")
        G = load_group(args.group or "C2")
        bound = args.bound if args.bound is not None else 3
        r = ps.saturation_probe(C, G, args.multiplicity or bound, bound)
        expected = not (args.cat or "").lower().startswith(("bc2", "bgroup"))
        payload = {"schema": SCHEMA, "suite": "saturation", "seed": args.seed, "report": r.to_json(),
                   "expected_saturated": expected, "as_expected": r.saturated == expected}
        emit(args, payload)
        return 0 if r.saturated == expected else 1
    rep = _suite(args)
    payload = {"schema": SCHEMA, "suite": args.suite, "seed": args.seed, "passed": rep.passed, "report": rep.to_json()}
    emit(args, payload)
    return 0 if rep.passed else 1


# ------------------------------------------------------------------ entry point

def build_parser():
    p = argparse.ArgumentParser(prog="globalk", description="Finite computations with global functors.")
    p.add_argument("--seed", type=int, default=0, help="seed for every sampled check")
    sub = p.add_subparsers(dest="command", required=True)

    def common(q):
        q.add_argument("--format", choices=["json", "csv"], default="json")
        q.add_argument("--out", help="write to this file instead of stdout")
        q.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    q = sub.add_parser("groups", help="subgroups, conjugacy classes, Weyl groups")
    q.add_argument("--group", required=True, help="bestiary name or Cayley-table file")
    q.add_argument("--classes", action="store_true", help="conjugacy classes of subgroups (default)")
    q.add_argument("--subgroups", action="store_true", help="every subgroup")
    q.add_argument("--weyl", help="Weyl group of the named subgroup class")
    common(q)
    q.set_defaults(func=cmd_groups)

    q = sub.add_parser("globfun", help="a free functor A_G or B_G, or the Burnside functor, on a window")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--A", metavar="G")
    g.add_argument("--B", metavar="G")
    g.add_argument("--marks", action="store_true", help="Burnside functor from tables of marks (default)")
    q.add_argument("--window", required=True, help="comma-separated groups, e.g. e,C2")
    common(q)
    q.set_defaults(func=cmd_globfun)

    q = sub.add_parser("swan", help="Swan K-theory of a category instance")
    q.add_argument("--cat", required=True,
                   help="finsets | gfinsets:G | gfinsets-free:G | monoid:N | monoid:Zn | projmod:F2 | phi:sigma | bc2")
    q.add_argument("--window")
    q.add_argument("--group-window", dest="group_window")
    q.add_argument("--bound", type=int, help="size bound for enumerated classes")
    q.add_argument("--dim", type=int, help="dimension bound (modules)")
    q.add_argument("--multiplicity", type=int, help="copies of each G/H in the group windows (default: bound)")
    common(q)
    q.set_defaults(func=cmd_swan)

    q = sub.add_parser("verify", help="run a verification suite; exit 0 iff it passes")
    q.add_argument("--suite", required=True,
                   choices=["mcat", "axioms", "doublecoset", "stabilization", "splitting", "freegen", "phi",
                            "saturation", "monoidal", "moduleiso"])
    q.add_argument("--cat")
    q.add_argument("--group")
    q.add_argument("--groups")
    q.add_argument("--gamma")
    q.add_argument("--window")
    q.add_argument("--bound", type=int)
    q.add_argument("--multiplicity", type=int)
    q.add_argument("--labels", type=int, default=5)
    q.add_argument("--samples", type=int, default=50)
    q.add_argument("--modules", help="two module-definition JSON files for the moduleiso suite")
    common(q)
    q.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GlobalKError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
