"""Finite bounded lattices of sets ordered by inclusion.

Nodes are numbered by (payload size, payload value). The order relation is
kept as two arrays of node bitmasks: ``up[i]`` holds every j with i <= j and
``down[i]`` every j with j <= i.
"""

from dataclasses import dataclass

from . import bits
from .errors import NoUniqueBound, NotComparable, NotMeetClosed


@dataclass(frozen=True)
class Interval:
    lattice: "BoundedLattice"
    lower: int
    upper: int
    members: tuple


class BoundedLattice:
    def __init__(self, payloads, check_meets=True):
        """Build from a duplicate-free, intersection-closed family of bitsets."""
        payloads = [getattr(p, "bits", p) for p in payloads]
        if not payloads:
            raise NoUniqueBound("empty element list")
        if len(set(payloads)) != len(payloads):
            raise NotMeetClosed("duplicate elements")
        self.nodes = sorted(payloads, key=bits.sort_key)
        self.index = {p: i for i, p in enumerate(self.nodes)}
        n = len(self.nodes)
        if check_meets:
            for i, a in enumerate(self.nodes):
                for b in self.nodes[i + 1:]:
                    if a & b not in self.index:
                        raise NotMeetClosed(f"intersection of nodes {self.index[a]} and {self.index[b]} missing")
        up = [0] * n
        down = [0] * n
        for i, a in enumerate(self.nodes):
            for j in range(i, n):
                if bits.is_subset(a, self.nodes[j]):
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self.up = up
        self.down = down
        everything = bits.full(n)
        self.all_nodes = everything
        bottoms = [i for i in range(n) if up[i] == everything]
        tops = [i for i in range(n) if down[i] == everything]
        if len(bottoms) != 1 or len(tops) != 1:
            raise NoUniqueBound("no unique least and greatest element")
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.hasse = self._covers()

    def __len__(self):
        return len(self.nodes)

    def leq(self, i, j):
        return bool(self.up[i] >> j & 1)

    def _covers(self):
        edges = []
        for i in range(len(self.nodes)):
            above = self.up[i] & ~(1 << i)
            for j in bits.to_indices(above):
                strictly_between = above & self.down[j] & ~(1 << j)
                if not strictly_between:
                    edges.append((i, j))
        return edges

    def meet(self, i, j):
        common = self.down[i] & self.down[j]
        # the greatest common lower bound is the one whose down-set holds all of them
        for k in bits.to_indices(common):
            if bits.is_subset(common, self.down[k]):
                return k
        raise NotMeetClosed(f"nodes {i}, {j} have no meet")

    def join(self, i, j):
        common = self.up[i] & self.up[j]
        for k in bits.to_indices(common):
            if bits.is_subset(common, self.up[k]):
                return k
        raise NoUniqueBound(f"nodes {i}, {j} have no join")


def build_lattice(elements, check_meets=True):
    return BoundedLattice(elements, check_meets=check_meets)


def atoms(l):
    return [j for i, j in l.hasse if i == l.bottom]


def _interval_mask(l, x, y):
    return l.up[x] & l.down[y]


def interval(l, x, y):
    if not l.leq(x, y):
        raise NotComparable(f"node {x} is not below node {y}")
    return Interval(l, x, y, tuple(bits.to_indices(_interval_mask(l, x, y))))


def hasse_edges(l):
    return list(l.hasse)


def _proper(l):
    return [h for h in range(len(l)) if h not in (l.bottom, l.top)]


def breaking_points(l):
    """Proper nodes comparable with every node."""
    found = [h for h in _proper(l) if l.down[h] | l.up[h] == l.all_nodes]
    # same thing phrased as a two-interval cover [bottom, h] u [h, top]
    via_intervals = [
        h for h in _proper(l)
        if _interval_mask(l, l.bottom, h) | _interval_mask(l, h, l.top) == l.all_nodes
    ]
    assert found == via_intervals
    return found


def interval_decompositions(l):
    """All ordered pairs (M, N) of proper nodes with every node <= M or >= N."""
    proper = _proper(l)
    out = []
    for m in proper:
        below = l.down[m]
        for n in proper:
            if below | l.up[n] == l.all_nodes:
                out.append((m, n))
    return out


def chain_classification(l):
    n = len(l)
    is_chain = all(l.down[i] | l.up[i] == l.all_nodes for i in range(n))
    return {"is_chain": is_chain, "length": n - 1 if is_chain else None}
