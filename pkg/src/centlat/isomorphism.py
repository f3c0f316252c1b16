"""Isomorphism testing for small finite groups: fingerprint reject, then backtracking."""

from collections import defaultdict

from .groups import closure


def _classes(g):
    """Element invariant used to restrict candidate images: (order, |C(x)|)."""
    orders = g.element_orders
    cents = g.element_centralizers
    return [(orders[x], cents[x].bit_count()) for x in range(g.order)]


def _generating_set(g, cls):
    """Greedy generating set: repeatedly take an element outside the current
    subgroup from the rarest invariant class (largest order, then lowest index
    on ties), so the backtracking has few candidates per level."""
    counts = defaultdict(int)
    for c in cls:
        counts[c] += 1
    ranked = sorted(range(g.order), key=lambda x: (counts[cls[x]], -cls[x][0], x))
    gens = []
    have = closure(g, [])
    for x in ranked:
        if have == g.all_bits:
            break
        if not have >> x & 1:
            gens.append(x)
            have = closure(g, gens)
    return gens


def _extend(g, h, gens, images):
    """Propagate gens[i] -> images[i] over <gens> by right multiplication.

    Returns the partial map as a list (-1 where undefined), or None when the
    assignment is inconsistent or not injective.
    """
    phi = [-1] * g.order
    used = [False] * h.order
    phi[g.identity] = h.identity
    used[h.identity] = True
    tg, th = g.table, h.table
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            px = phi[x]
            for s, t in zip(gens, images):
                y = tg[x][s]
                py = th[px][t]
                if phi[y] < 0:
                    if used[py]:
                        return None
                    phi[y] = py
                    used[py] = True
                    nxt.append(y)
                elif phi[y] != py:
                    return None
        frontier = nxt
    return phi


def find_isomorphism(g, h):
    """Return an isomorphism g -> h as a list (phi[x] = image of x), or None."""
    if g.order != h.order or g.fingerprint != h.fingerprint:
        return None
    cls_g, cls_h = _classes(g), _classes(h)
    gens = _generating_set(g, cls_g)
    if not gens:
        return [h.identity]
    by_class = defaultdict(list)
    for y in range(h.order):
        by_class[cls_h[y]].append(y)
    candidates = [by_class[cls_g[s]] for s in gens]

    images = []

    def search(level):
        if level == len(gens):
            phi = _extend(g, h, gens, images)
            return phi if phi is not None and min(phi) >= 0 else None
        for y in candidates[level]:
            images.append(y)
            if _extend(g, h, gens[: level + 1], images) is not None:
                found = search(level + 1)
                if found is not None:
                    return found
            images.pop()
        return None

    return search(0)


def is_isomorphic(g, h, witness=False):
    phi = find_isomorphism(g, h)
    if witness:
        return phi is not None, phi
    return phi is not None


def verify_isomorphism(g, h, phi):
    """Exhaustive check that phi is a bijective homomorphism g -> h."""
    if phi is None or len(phi) != g.order or g.order != h.order:
        return False
    if sorted(phi) != list(range(h.order)):
        return False
    tg, th = g.table, h.table
    return all(phi[tg[a][b]] == th[phi[a]][phi[b]] for a in range(g.order) for b in range(g.order))
