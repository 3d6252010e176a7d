"""Backtracking search for bijections that intertwine given permutations."""


def intertwining_bijections(xs, ys, pairs):
    """Yield every bijection f: xs -> ys (as a dict) with f(px[p]) = py[f(p)] for all (px, py) in pairs."""
    xs, ys = sorted(xs), sorted(ys)
    if len(xs) != len(ys):
        return
    f, used = {}, set()

    def assign(p, q):
        stack, added = [(p, q)], []
        while stack:
            a, b = stack.pop()
            if a in f:
                if f[a] != b:
                    for k in added:
                        used.discard(f.pop(k))
                    return None
                continue
            if b in used:
                for k in added:
                    used.discard(f.pop(k))
                return None
            f[a] = b
            used.add(b)
            added.append(a)
            for px, py in pairs:
                stack.append((px[a], py[b]))
        return added

    def rec():
        free = [p for p in xs if p not in f]
        if not free:
            yield dict(f)
            return
        p = free[0]
        for q in ys:
            if q in used:
                continue
            added = assign(p, q)
            if added is None:
                continue
            yield from rec()
            for k in added:
                used.discard(f.pop(k))

    yield from rec()


def first_or_none(it):
    return next(iter(it), None)
