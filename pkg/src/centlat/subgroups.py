"""Subgroups, normality, centralizers, and the element sets of L(G), the
centralizer lattice, and the normal-centralizer lattice."""

from dataclasses import dataclass
from math import gcd

from . import bits
from .errors import NotASubgroup, OrderCapExceeded
from .groups import closure

DEFAULT_SUBGROUP_CAP = 256


@dataclass(frozen=True, order=False)
class SubgroupSet:
    """Membership bitset over the elements of a fixed parent group."""

    bits: int
    parent_order: int

    def __post_init__(self):
        if self.bits >> self.parent_order:
            raise ValueError("bitset wider than parent order")

    @property
    def size(self):
        return self.bits.bit_count()

    def __len__(self):
        return self.size

    def __contains__(self, x):
        return bool(self.bits >> x & 1)

    def __iter__(self):
        return iter(bits.to_indices(self.bits))

    def __le__(self, other):
        return bits.is_subset(self.bits, other.bits)

    def __lt__(self, other):
        return self.bits != other.bits and self <= other

    def __and__(self, other):
        return SubgroupSet(self.bits & other.bits, self.parent_order)

    def sort_key(self):
        return bits.sort_key(self.bits)


def as_bits(s):
    if isinstance(s, SubgroupSet):
        return s.bits
    if isinstance(s, int):
        return s
    return bits.from_indices(s)


def wrap(g, b):
    return SubgroupSet(b, g.order)


def _wrap_sorted(g, bitsets):
    return [SubgroupSet(b, g.order) for b in sorted(set(bitsets), key=bits.sort_key)]


def generated_subgroup(g, seed):
    return wrap(g, closure(g, bits.to_indices(as_bits(seed))))


def is_subgroup(g, s):
    b = as_bits(s)
    if not b >> g.identity & 1:
        return False
    members = bits.to_indices(b)
    t = g.table
    for x in members:
        row = t[x]
        for y in members:
            if not b >> row[y] & 1:
                return False
    return True


def _cyclic_bits(g, x):
    t = g.table
    b = 1 << g.identity
    y = x
    while y != g.identity:
        b |= 1 << y
        y = t[y][x]
    return b


def _join(g, h_elems, h_bits, gens):
    """Subgroup generated by H and gens, built as a union of right cosets H*r."""
    t = g.table
    k_bits = h_bits
    reps = [g.identity]
    i = 0
    while i < len(reps):
        row = t[reps[i]]
        for s in gens:
            y = row[s]
            if not k_bits >> y & 1:
                for h in h_elems:
                    k_bits |= 1 << t[h][y]
                reps.append(y)
        i += 1
    return k_bits


def subgroup_bits(g, max_order=DEFAULT_SUBGROUP_CAP):
    """All subgroups as bitsets: cyclic subgroups, then joins with cyclic
    subgroups until no new subgroup appears."""
    if g.order > max_order:
        raise OrderCapExceeded(f"order {g.order} exceeds subgroup-enumeration cap {max_order}")
    n = g.order
    t = g.table
    orders = g.element_orders
    cyc = [_cyclic_bits(g, x) for x in range(n)]
    # coprime powers of x generate the same cyclic subgroup
    cyc_gens = []
    for x in range(n):
        gs = [x]
        y = x
        for k in range(2, orders[x]):
            y = t[y][x]
            if gcd(k, orders[x]) == 1:
                gs.append(y)
        cyc_gens.append(gs)

    found = {}
    for x in range(n):
        if cyc[x] not in found:
            found[cyc[x]] = (x,) if x != g.identity else ()
    queue = list(found)
    while queue:
        h_bits = queue.pop()
        gens = found[h_bits]
        h_elems = bits.to_indices(h_bits)
        covered = h_bits
        for x in range(n):
            if covered >> x & 1:
                continue
            j = _join(g, h_elems, h_bits, gens + (x,))
            if j not in found:
                found[j] = gens + (x,)
                queue.append(j)
            # H<y> = H<x> whenever y lies in H*x' for a generator x' of <x>
            for xp in cyc_gens[x]:
                for h in h_elems:
                    covered |= 1 << t[h][xp]
    return sorted(found, key=bits.sort_key)


def all_subgroups(g, max_order=DEFAULT_SUBGROUP_CAP):
    return [wrap(g, b) for b in subgroup_bits(g, max_order)]


def maximal_subgroup_bits(subgroups, whole):
    proper = [b for b in subgroups if b != whole]
    return [b for b in proper if not any(b != c and bits.is_subset(b, c) for c in proper)]


def is_normal(g, h):
    b = as_bits(h)
    if not is_subgroup(g, b):
        raise NotASubgroup("is_normal requires a subgroup")
    t, inv = g.table, g.inverse
    members = bits.to_indices(b)
    for x in g.generators:
        xi = inv[x]
        for y in members:
            if not b >> t[t[xi][y]][x] & 1:
                return False
    return True


def centralizer(g, s):
    """Elements commuting with every member of s (checked member by member)."""
    members = bits.to_indices(as_bits(s))
    t = g.table
    out = 0
    for x in range(g.order):
        row = t[x]
        if all(row[y] == t[y][x] for y in members):
            out |= 1 << x
    return wrap(g, out)


def center(g):
    return centralizer(g, g.all_bits)


def meet_closure(bitsets):
    """Smallest superset of ``bitsets`` closed under pairwise intersection."""
    have = set(bitsets)
    frontier = list(have)
    while frontier:
        nxt = []
        snapshot = list(have)
        for a in frontier:
            for b in snapshot:
                c = a & b
                if c not in have:
                    have.add(c)
                    nxt.append(c)
        frontier = nxt
    return have


def centralizer_lattice_bits(g):
    return sorted(meet_closure(set(g.element_centralizers) | {g.all_bits}), key=bits.sort_key)


def centralizer_lattice_elements(g):
    """{C_G(H) : H <= G}, as the meet-closure of the element centralizers and G."""
    return [wrap(g, b) for b in centralizer_lattice_bits(g)]


def normal_subgroup_bits(g, max_order=DEFAULT_SUBGROUP_CAP):
    return [b for b in subgroup_bits(g, max_order) if is_normal(g, b)]


def normal_centralizer_lattice_elements(g, max_order=DEFAULT_SUBGROUP_CAP):
    cents = {centralizer(g, b).bits for b in normal_subgroup_bits(g, max_order)}
    return _wrap_sorted(g, cents)
