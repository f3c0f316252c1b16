"""Finite groups as Cayley tables over dense element indices 0..order-1."""

from collections import Counter
from functools import cached_property
from itertools import product

import numpy as np

from . import bits
from .errors import ClosureTooLarge, InvalidGroupTable, NotAPermutation, NotNormal

DEFAULT_MAX_ORDER = 10080


class GroupTable:
    """A finite group given by its multiplication table.

    ``table[g][h]`` is the index of ``g*h``. Instances are treated as immutable;
    the derived data below is cached lazily and is idempotent to recompute, so
    sharing across threads is safe.
    """

    def __init__(self, table, identity=0, inverse=None, name="", element_names=None):
        self.table = [list(row) for row in table]
        self.order = len(self.table)
        self.identity = identity
        if inverse is None:
            inverse = [0] * self.order
            for g, row in enumerate(self.table):
                inverse[g] = row.index(identity)
        self.inverse = list(inverse)
        self.name = name
        self.element_names = list(element_names) if element_names is not None else None

    def __repr__(self):
        return f"GroupTable({self.name or '?'}, order={self.order})"

    def mul(self, a, b):
        return self.table[a][b]

    def power(self, x, k):
        r = self.identity
        for _ in range(k):
            r = self.table[r][x]
        return r

    def element_name(self, x):
        if self.element_names is not None:
            return self.element_names[x]
        return str(x)

    def names_of(self, subset_bits):
        return [self.element_name(x) for x in bits.to_indices(subset_bits)]

    @property
    def all_bits(self):
        return bits.full(self.order)

    @cached_property
    def array(self):
        return np.array(self.table, dtype=np.int64).reshape(self.order, self.order)

    @cached_property
    def element_orders(self):
        n = self.order
        t = self.array
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        p = idx.copy()
        k = 1
        while (orders == 0).any():
            orders[(p == self.identity) & (orders == 0)] = k
            p = t[p, idx]
            k += 1
        return orders.tolist()

    @cached_property
    def element_centralizers(self):
        """Row x is the bitset C_G(x), read off the commuting matrix."""
        comm = self.array == self.array.T
        return [bits.from_mask(comm[x]) for x in range(self.order)]

    @cached_property
    def is_abelian(self):
        return bool((self.array == self.array.T).all())

    @cached_property
    def center_bits(self):
        comm = self.array == self.array.T
        return bits.from_mask(comm.all(axis=1))

    @cached_property
    def derived_bits(self):
        t = self.array
        inv = np.array(self.inverse)
        # [a, b] = a^-1 b^-1 a b
        left = t[inv[:, None], inv[None, :]]
        right = t
        comms = np.unique(t[left, right])
        return closure(self, comms.tolist())

    @cached_property
    def generators(self):
        """Greedy generating set: lowest-index element outside the current closure."""
        gens = []
        have = closure(self, [])
        for x in range(self.order):
            if have == self.all_bits:
                break
            if not have >> x & 1:
                gens.append(x)
                have = closure(self, gens)
        return gens

    @cached_property
    def fingerprint(self):
        orders = self.element_orders
        cents = [c.bit_count() for c in self.element_centralizers]
        return (
            self.order,
            self.is_abelian,
            self.center_bits.bit_count(),
            self.derived_bits.bit_count(),
            tuple(sorted(orders)),
            tuple(sorted(zip(orders, cents))),
        )


def closure(g, seed, max_order=None):
    """Bitset of the subgroup generated by the element indices in ``seed``."""
    gens = sorted(set(seed))
    t = g.table
    have = 1 << g.identity
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            row = t[x]
            for s in gens:
                y = row[s]
                if not have >> y & 1:
                    have |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return have


def element_order(g, x):
    return g.element_orders[x]


# Permutations use the right-action convention: i^(pq) = (i^p)^q.

def compose(p, q):
    return tuple(q[i] for i in p)


def cycle_notation(p):
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = p[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def _check_permutation(p, degree, where):
    if len(p) != degree:
        raise NotAPermutation(f"{where}: length {len(p)} != degree {degree}")
    seen = set()
    for i in p:
        if not isinstance(i, int) or not 0 <= i < degree:
            raise NotAPermutation(f"{where}: image {i!r} outside 0..{degree - 1}")
        if i in seen:
            raise NotAPermutation(f"{where}: duplicate image {i}")
        seen.add(i)


def build_from_generators(degree, generators, max_order=DEFAULT_MAX_ORDER, name=""):
    """Close a list of permutations of 0..degree-1 under composition.

    Elements are numbered breadth-first from the identity, applying the
    generators in list order.
    """
    if not generators:
        raise NotAPermutation("generator list is empty")
    gens = []
    for k, p in enumerate(generators):
        _check_permutation(list(p), degree, f"generators[{k}]")
        gens.append(tuple(p))
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        for s in gens:
            y = compose(x, s)
            if y not in index:
                if len(elements) >= max_order:
                    raise ClosureTooLarge(f"closure exceeds element cap {max_order}")
                index[y] = len(elements)
                elements.append(y)
        i += 1
    table = [[index[compose(x, y)] for y in elements] for x in elements]
    g = GroupTable(table, 0, name=name, element_names=[cycle_notation(p) for p in elements])
    g.permutations = elements
    return g


def _power_name(sym, i):
    if i == 0:
        return ""
    return sym if i == 1 else f"{sym}^{i}"


def cyclic(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["e"] + [_power_name("g", i) for i in range(1, n)]
    return GroupTable(table, 0, name=f"C{n}", element_names=names)


def dihedral(m):
    """Dihedral group of order 2m; element j*m + i is r^i s^j."""
    n = 2 * m

    def mul(x, y):
        i, j = x % m, x // m
        k, l = y % m, y // m
        return (i + (k if j == 0 else -k)) % m + m * ((j + l) % 2)

    table = [[mul(x, y) for y in range(n)] for x in range(n)]
    names = [(_power_name("r", x % m) + ("s" if x >= m else "")) or "e" for x in range(n)]
    return GroupTable(table, 0, name=f"D{m}", element_names=names)


def generalized_quaternion(n):
    """Q_{2^n} on pairs (i, j), i mod 2^(n-1), j in {0,1}; element j*m + i is a^i b^j.

    Dicyclic rule: b a^k = a^-k b and b^2 = a^(m/2).
    """
    m = 2 ** (n - 1)
    half = m // 2

    def mul(x, y):
        i, j = x % m, x // m
        k, l = y % m, y // m
        if j == 0:
            return (i + k) % m + m * l
        if l == 0:
            return (i - k) % m + m
        return (i - k + half) % m

    size = 2 * m
    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    names = [(_power_name("a", x % m) + ("b" if x >= m else "")) or "e" for x in range(size)]
    g = GroupTable(table, 0, name=f"Q{size}", element_names=names)
    a, b = 1, m
    assert g.power(a, 2 ** (n - 2)) == g.power(b, 2)
    assert g.power(a, 2 ** (n - 1)) == g.identity
    assert g.mul(g.mul(g.inverse[b], a), b) == g.inverse[a]
    g.quaternion_generators = (a, b)
    return g


def symmetric(n, max_order=DEFAULT_MAX_ORDER):
    if n <= 1:
        gens = [tuple(range(max(n, 1)))]
    else:
        gens = [tuple(list(range(1, n)) + [0]), tuple([1, 0] + list(range(2, n)))]
    return build_from_generators(max(n, 1), gens, max_order=max_order, name=f"S{n}")


def alternating(n, max_order=DEFAULT_MAX_ORDER):
    degree = max(n, 1)
    gens = []
    for i in range(n - 2):
        p = list(range(degree))
        p[i], p[i + 1], p[i + 2] = i + 1, i + 2, i
        gens.append(tuple(p))
    if not gens:
        gens = [tuple(range(degree))]
    return build_from_generators(degree, gens, max_order=max_order, name=f"A{n}")


def elementary_abelian(p, k):
    vecs = list(product(range(p), repeat=k))
    index = {v: i for i, v in enumerate(vecs)}
    table = [[index[tuple((a + b) % p for a, b in zip(u, v))] for v in vecs] for u in vecs]
    names = ["(" + ",".join(map(str, v)) + ")" for v in vecs]
    return GroupTable(table, 0, name=f"E{p}^{k}", element_names=names)


def direct_product(g, h, max_order=DEFAULT_MAX_ORDER):
    """Componentwise product; element i*|h| + j is (g_i, h_j)."""
    n = g.order * h.order
    if n > max_order:
        raise ClosureTooLarge(f"product order {n} exceeds element cap {max_order}")
    m = h.order
    t = g.array[:, None, :, None] * m + h.array[None, :, None, :]
    table = t.reshape(n, n).tolist()
    names = [f"({g.element_name(i)},{h.element_name(j)})" for i in range(g.order) for j in range(m)]
    return GroupTable(table, g.identity * m + h.identity, name=f"{g.name} x {h.name}",
                      element_names=names)


def from_cayley(table, names=None, name=""):
    """Validate an untrusted Cayley table (full group-axiom check) and wrap it."""
    if not isinstance(table, list) or not table:
        raise InvalidGroupTable("table: must be a non-empty array of rows")
    n = len(table)
    for r, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise InvalidGroupTable(f"table[{r}]: expected a row of length {n}")
        for c, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise InvalidGroupTable(f"table[{r}][{c}]: entry {v!r} outside 0..{n - 1}")
    arr = np.array(table, dtype=np.int64)
    want = np.arange(n)
    for r in range(n):
        if not np.array_equal(np.sort(arr[r]), want):
            raise InvalidGroupTable(f"table[{r}]: row is not a permutation of 0..{n - 1}")
    for c in range(n):
        if not np.array_equal(np.sort(arr[:, c]), want):
            raise InvalidGroupTable(f"table[*][{c}]: column is not a permutation of 0..{n - 1}")
    ids = [e for e in range(n) if np.array_equal(arr[e], want) and np.array_equal(arr[:, e], want)]
    if not ids:
        raise InvalidGroupTable("table: no identity element")
    for a in range(n):
        lhs = arr[arr[a]]          # (a*b)*c indexed [b, c]
        rhs = arr[a][arr]          # a*(b*c) indexed [b, c]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            b, c = (int(v) for v in bad[0])
            raise InvalidGroupTable(f"table: associativity fails at triple ({a}, {b}, {c})")
    if names is not None:
        if not isinstance(names, list) or len(names) != n or not all(isinstance(s, str) for s in names):
            raise InvalidGroupTable(f"names: expected an array of {n} strings")
    return GroupTable(table, ids[0], name=name, element_names=names)


def coset_partition(g, n_bits):
    """Map each element to the least index of its coset x*N."""
    members = bits.to_indices(n_bits)
    rep = [-1] * g.order
    for x in range(g.order):
        if rep[x] < 0:
            for k in members:
                rep[g.table[x][k]] = x
    return rep


def quotient(g, n_bits, name=None):
    """G/N on coset representatives (least index per coset), ascending."""
    from .subgroups import is_normal

    if not is_normal(g, n_bits):
        raise NotNormal("quotient requires a normal subgroup")
    rep = coset_partition(g, n_bits)
    reps = sorted(set(rep))
    pos = {r: i for i, r in enumerate(reps)}
    table = [[pos[rep[g.table[a][b]]] for b in reps] for a in reps]
    names = [f"[{g.element_name(r)}]" for r in reps]
    return GroupTable(table, pos[rep[g.identity]], name=name or f"{g.name}/N", element_names=names)


def subgroup_table(g, sub_bits, name=""):
    """The subgroup on the given members as a standalone group, members in index order."""
    members = bits.to_indices(sub_bits)
    pos = {x: i for i, x in enumerate(members)}
    table = [[pos[g.table[a][b]] for b in members] for a in members]
    return GroupTable(table, pos[g.identity], name=name,
                      element_names=[g.element_name(x) for x in members])


def verify_group(g):
    """Exhaustive axiom check; returns a list of problems (empty when valid)."""
    problems = []
    n = g.order
    arr = g.array
    want = np.arange(n)
    if not all(np.array_equal(np.sort(arr[r]), want) for r in range(n)):
        problems.append("row not a permutation")
    if not all(np.array_equal(np.sort(arr[:, c]), want) for c in range(n)):
        problems.append("column not a permutation")
    e = g.identity
    if not (np.array_equal(arr[e], want) and np.array_equal(arr[:, e], want)):
        problems.append("identity law")
    if any(arr[x, g.inverse[x]] != e for x in range(n)):
        problems.append("inverse law")
    for a in range(n):
        if not np.array_equal(arr[arr[a]], arr[a][arr]):
            problems.append(f"associativity at a={a}")
            break
    return problems


def order_counts(g):
    return Counter(g.element_orders)
