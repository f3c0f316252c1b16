"""Group specs, the named-family catalog, and isomorphism-deduplicated catalogs.

Grammar (case-insensitive)::

    C<n>        cyclic of order n
    D<m>        dihedral of order 2m, m >= 3
    Q<2^n>      generalized quaternion of order 2^n >= 8 (also Q2^<n>)
    S<n>, A<n>  symmetric / alternating, n <= 6
    E<p>^<k>    elementary abelian of order p^k
    X x Y       direct product, left-associative
    file:<path> group file (generator or Cayley form)
"""

import re
from dataclasses import dataclass, field
from functools import lru_cache

from . import groups
from .errors import ParameterOutOfRange, ParseError, UnknownFamily
from .isomorphism import is_isomorphic

FAMILIES = "CDQSAE"
# dedup keeps the first isomorphic entry in this family order
FAMILY_RANK = {"C": 0, "E": 1, "S": 2, "A": 3, "Q": 4, "D": 5}

_ATOM = re.compile(r"\s*([A-Za-z])(\d+)(?:\^(\d+))?\s*")
_SEP = re.compile(r"\s*[xX]\s*")


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class GroupSpec:
    raw: str
    kind: str  # "catalog-name" | "product-expression" | "file-path"
    factors: tuple = ()  # ((family, param), ...); param is (p, k) for E
    path: str = None

    @property
    def canonical(self):
        if self.kind == "file-path":
            return f"file:{self.path}"
        return " x ".join(_atom_name(f, p) for f, p in self.factors)

    @property
    def order(self):
        if self.kind == "file-path":
            return None
        n = 1
        for f, p in self.factors:
            n *= _atom_order(f, p)
        return n

    def __str__(self):
        return self.canonical


def _atom_name(family, param):
    if family == "E":
        return f"E{param[0]}^{param[1]}"
    return f"{family}{param}"


def _atom_order(family, param):
    if family == "C":
        return param
    if family == "D":
        return 2 * param
    if family == "Q":
        return param
    if family == "E":
        return param[0] ** param[1]
    from math import factorial

    n = factorial(param)
    return n if family == "S" else max(n // 2, 1)


def _parse_atom(m, pos):
    fam = m.group(1).upper()
    num = int(m.group(2))
    exp = int(m.group(3)) if m.group(3) is not None else None
    text = m.group(0).strip()
    if fam not in FAMILIES:
        raise UnknownFamily(f"unknown group family {fam!r} in {text!r}")
    if fam == "E":
        if exp is None:
            raise ParseError(f"{text!r}: elementary abelian needs the form E<p>^<k>", pos)
        if not _is_prime(num) or exp < 1:
            raise ParameterOutOfRange(f"{text!r}: need prime p and k >= 1")
        return fam, (num, exp)
    if exp is not None:
        if fam != "Q":
            raise ParseError(f"{text!r}: exponent only allowed for E and Q", pos)
        num = num ** exp
    if fam == "C" and num < 1:
        raise ParameterOutOfRange(f"{text!r}: cyclic order must be >= 1")
    if fam == "D" and num < 3:
        raise ParameterOutOfRange(f"{text!r}: D<m> needs m >= 3 (D<m> has order 2m)")
    if fam == "Q" and (num < 8 or num & (num - 1)):
        raise ParameterOutOfRange(f"{text!r}: Q<k> needs k a power of two >= 8")
    if fam in "SA" and not 1 <= num <= 6:
        raise ParameterOutOfRange(f"{text!r}: S<n> and A<n> need 1 <= n <= 6")
    return fam, num


def parse_group_spec(s):
    if isinstance(s, GroupSpec):
        return s
    raw = s
    if s.strip().lower().startswith("file:"):
        path = s.strip()[5:]
        if not path:
            raise ParseError("file: spec needs a path", 5)
        return GroupSpec(raw, "file-path", path=path)
    factors = []
    pos = 0
    while True:
        m = _ATOM.match(s, pos)
        if not m:
            raise ParseError(f"expected a group name in {raw!r}", pos)
        factors.append(_parse_atom(m, pos))
        pos = m.end()
        if pos == len(s):
            break
        sep = _SEP.match(s, pos)
        if not sep:
            raise ParseError(f"expected 'x' or end of input in {raw!r}", pos)
        pos = sep.end()
    kind = "catalog-name" if len(factors) == 1 else "product-expression"
    return GroupSpec(raw, kind, tuple(factors))


def _build_atom(family, param, max_order):
    if family == "C":
        return groups.cyclic(param)
    if family == "D":
        return groups.dihedral(param)
    if family == "Q":
        return groups.generalized_quaternion(param.bit_length() - 1)
    if family == "S":
        return groups.symmetric(param, max_order=max_order)
    if family == "A":
        return groups.alternating(param, max_order=max_order)
    return groups.elementary_abelian(*param)


def catalog_group(spec, max_order=groups.DEFAULT_MAX_ORDER):
    spec = parse_group_spec(spec)
    if spec.kind == "file-path":
        from .groupfile import load_group_file

        g = load_group_file(spec.path, max_order=max_order)
        g.name = spec.canonical
        return g
    if spec.order > max_order:
        raise groups.ClosureTooLarge(f"{spec.canonical}: order {spec.order} exceeds element cap {max_order}")
    g = None
    for fam, param in spec.factors:
        atom = _build_atom(fam, param, max_order)
        g = atom if g is None else groups.direct_product(g, atom, max_order=max_order)
    g.name = spec.canonical
    return g


def named_specs(max_order, extra=()):
    """Default named families within the order bound, in dedup-priority order."""
    out = [f"C{n}" for n in range(2, max_order + 1)]
    for p in range(2, max_order + 1):
        if _is_prime(p):
            k = 2
            while p ** k <= max_order:
                out.append(f"E{p}^{k}")
                k += 1
    out += [s for s, n in (("S3", 6), ("S4", 24)) if n <= max_order]
    out += [s for s, n in (("A4", 12), ("A5", 60)) if n <= max_order]
    q = 8
    while q <= max_order:
        out.append(f"Q{q}")
        q *= 2
    out += [f"D{m}" for m in range(3, max_order // 2 + 1)]
    return list(extra) + out


@dataclass
class Catalog:
    specs: list = field(default_factory=list)  # extra specs, highest dedup priority
    max_order: int = 64
    include_products: bool = True
    dedupe: bool = True
    include_defaults: bool = True


@dataclass
class Entry:
    spec: str
    group: object

    @property
    def order(self):
        return self.group.order


def _dedupe(entries, kept=()):
    kept = list(kept)
    buckets = {}
    for k in kept:
        buckets.setdefault(k.group.fingerprint, []).append(k)
    for e in entries:
        key = e.group.fingerprint
        bucket = buckets.setdefault(key, [])
        if any(is_isomorphic(k.group, e.group) for k in bucket):
            continue
        bucket.append(e)
        kept.append(e)
    return kept


def build_catalog(catalog, max_group_order=groups.DEFAULT_MAX_ORDER):
    """Materialize a Catalog into entries sorted by (order, spec string)."""
    specs = named_specs(catalog.max_order, catalog.specs) if catalog.include_defaults else list(catalog.specs)
    seen = set()
    named = []
    for s in specs:
        spec = parse_group_spec(s)
        if spec.canonical in seen:
            continue
        seen.add(spec.canonical)
        named.append(Entry(spec.canonical, catalog_group(spec, max_order=max_group_order)))
    if catalog.dedupe:
        named = _dedupe(named)
    entries = list(named)
    if catalog.include_products:
        factors = sorted((e for e in named if e.order > 1), key=lambda e: (e.order, e.spec))
        prods = []
        for i, a in enumerate(factors):
            for b in factors[i:]:
                if a.order * b.order > catalog.max_order:
                    continue
                spec = f"{a.spec} x {b.spec}"
                if spec in seen:
                    continue
                seen.add(spec)
                prods.append(Entry(spec, _product(a, b, spec)))
        prods.sort(key=lambda e: (e.order, e.spec))
        entries = _dedupe(prods, kept=named) if catalog.dedupe else entries + prods
    entries.sort(key=lambda e: (e.order, e.spec))
    return entries


def _product(a, b, spec):
    g = groups.direct_product(a.group, b.group)
    g.name = spec
    return g


@lru_cache(maxsize=None)
def _naming_library(order):
    """Named groups and two-factor products of exactly this order, best name first."""
    named = [s for s in named_specs(order) if parse_group_spec(s).order == order]
    small = [s for s in named_specs(order // 2) if order % parse_group_spec(s).order == 0]
    small.sort(key=lambda s: (parse_group_spec(s).order, s))
    prods = []
    for i, a in enumerate(small):
        for b in small[i:]:
            if parse_group_spec(a).order * parse_group_spec(b).order == order:
                prods.append(f"{a} x {b}")
    return tuple(sorted(named, key=_name_rank) + sorted(prods, key=_name_rank))


def describe_group(g):
    """A catalog name for the isomorphism type of g, e.g. 'C3' or 'E2^2'."""
    if g.order == 1:
        return "C1"
    if g.order > 64:
        return f"order-{g.order}"
    for spec in _naming_library(g.order):
        if is_isomorphic(catalog_group(spec), g):
            return spec
    return f"order-{g.order}"


def _name_rank(spec):
    return (FAMILY_RANK.get(spec[0], 9), parse_group_spec(spec).order, spec)
