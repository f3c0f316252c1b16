"""Brute-force reference implementations, independent of the package internals.

Only suitable for tiny groups.
"""

from itertools import permutations


def naive_subgroups(table, identity=0):
    """Every identity-containing subset closed under the table (order <= 16)."""
    n = len(table)
    assert n <= 16
    others = [x for x in range(n) if x != identity]
    found = []
    for mask in range(1 << len(others)):
        members = [identity] + [others[i] for i in range(len(others)) if mask >> i & 1]
        s = set(members)
        if all(table[a][b] in s for a in members for b in members):
            found.append(frozenset(s))
    return found


def brute_centralizer(table, subset):
    n = len(table)
    return frozenset(x for x in range(n) if all(table[x][y] == table[y][x] for y in subset))


def brute_closure_perms(gens):
    """Closure of permutations (tuples) under composition, as a set."""
    degree = len(gens[0])
    group = {tuple(range(degree))}
    changed = True
    while changed:
        changed = False
        for p in list(group):
            for q in gens:
                for r in (tuple(q[i] for i in p), tuple(p[i] for i in q)):
                    if r not in group:
                        group.add(r)
                        changed = True
    return group


def brute_isomorphic(t1, t2):
    """Try every bijection (order <= 8)."""
    n = len(t1)
    if n != len(t2):
        return False
    assert n <= 8
    for phi in permutations(range(n)):
        if all(phi[t1[a][b]] == t2[phi[a]][phi[b]] for a in range(n) for b in range(n)):
            return True
    return False


def element_order(table, identity, x):
    k, y = 1, x
    while y != identity:
        y = table[y][x]
        k += 1
    return k
