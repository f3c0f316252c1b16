"""Executable checks for the centralizer-lattice results, plus catalog searches.

Every theorem check runs the full search and reports whatever it finds; a
non-empty result is rendered as a counterexample rather than assumed away.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import bits
from .catalog import Catalog, build_catalog, catalog_group, describe_group
from .errors import GroupIsAbelian, LabError
from .groups import DEFAULT_MAX_ORDER, quotient, subgroup_table
from .isomorphism import find_isomorphism
from .lattice import atoms, breaking_points, build_lattice, chain_classification, interval_decompositions
from .subgroups import (DEFAULT_SUBGROUP_CAP, centralizer, centralizer_lattice_bits,
                        maximal_subgroup_bits, normal_centralizer_lattice_elements, subgroup_bits)

log = logging.getLogger(__name__)

PUBLISHED_CLAIMS = ("theorem1", "corollary2", "corollary3", "closure", "union-argument", "atoms-bound")
ALL_CLAIMS = PUBLISHED_CLAIMS + ("capability", "open-problem")

DISCLAIMER = ("bounded search over a finite catalog, not a proof: an empty hit list only "
              "means no catalog group has a central quotient isomorphic to the target")


@dataclass(frozen=True)
class Limits:
    max_group_order: int = DEFAULT_MAX_ORDER
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP


@dataclass
class CheckReport:
    claim: str
    group: str
    order: int
    passed: bool = True
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    skipped: bool = False
    notice: str = ""
    elapsed: float = 0.0

    def as_dict(self, timings=False):
        d = asdict(self)
        d["elapsed_ms"] = round(self.elapsed * 1000, 3) if timings else None
        del d["elapsed"]
        return d


def _is_even(p):
    seen, parity = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity == 0


def subgroup_roles(g, b):
    """Recognizable names for a subgroup: G, Z(G), G' and, for permutation groups, A<n>."""
    roles = []
    if b == g.all_bits:
        roles.append("G")
    if b == g.center_bits:
        roles.append("Z(G)")
    if b == g.derived_bits:
        roles.append("G'")
    perms = getattr(g, "permutations", None)
    if perms is not None:
        even = bits.from_indices(i for i, p in enumerate(perms) if _is_even(p))
        if b == even and b != 1 << g.identity:
            roles.append(f"A{len(perms[0])}")
    return roles


def subgroup_witness(g, b):
    sub = subgroup_table(g, b)
    return {"size": b.bit_count(), "type": describe_group(sub), "roles": subgroup_roles(g, b),
            "elements": g.names_of(b)}


def _timed(fn):
    def run(g, *args, **kwargs):
        start = time.perf_counter()
        report = fn(g, *args, **kwargs)
        report.elapsed = time.perf_counter() - start
        assert report.passed or report.skipped or report.witnesses
        return report

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def centralizer_lattice(g):
    return build_lattice(centralizer_lattice_bits(g))


@_timed
def check_theorem1(g):
    """No pair of proper centralizers (M, N) with every centralizer below M or above N."""
    lat = centralizer_lattice(g)
    decs = interval_decompositions(lat)
    return CheckReport(
        "theorem1", g.name, g.order, passed=not decs,
        witnesses=[{"M": subgroup_witness(g, lat.nodes[m]), "N": subgroup_witness(g, lat.nodes[n])}
                   for m, n in decs],
        details={"lattice_size": len(lat)},
    )


@_timed
def check_corollary2(g):
    lat = centralizer_lattice(g)
    bps = breaking_points(lat)
    return CheckReport(
        "corollary2", g.name, g.order, passed=not bps,
        witnesses=[subgroup_witness(g, lat.nodes[h]) for h in bps],
        details={"lattice_size": len(lat)},
    )


@_timed
def check_corollary3(g):
    lat = centralizer_lattice(g)
    chain = chain_classification(lat)
    abelian = g.is_abelian
    ok = chain["is_chain"] == abelian and (abelian or len(lat) != 2)
    details = {"abelian": abelian, "lattice_size": len(lat), **chain}
    return CheckReport("corollary3", g.name, g.order, passed=ok,
                       witnesses=[] if ok else [details], details=details)


@_timed
def check_closure_and_double_centralizer(g):
    cents = centralizer_lattice_bits(g)
    present = set(cents)
    witnesses = []
    for i, a in enumerate(cents):
        for b in cents[i + 1:]:
            if a & b not in present:
                witnesses.append({"kind": "intersection-not-centralizer",
                                  "X": subgroup_witness(g, a), "Y": subgroup_witness(g, b)})
    for x in range(g.order):
        cx = centralizer(g, 1 << x)
        if x not in centralizer(g, cx):
            witnesses.append({"kind": "double-centralizer", "element": g.element_name(x)})
    return CheckReport("closure", g.name, g.order, passed=not witnesses, witnesses=witnesses,
                       details={"lattice_size": len(cents)})


@_timed
def check_union_argument(g, limits=Limits()):
    """No group is the union of two proper subgroups.

    It suffices to test pairs of maximal subgroups: any covering pair of proper
    subgroups enlarges to a covering pair of maximal ones.
    """
    if g.order > limits.subgroup_cap:
        return _skipped("union-argument", g, limits)
    subs = subgroup_bits(g, limits.subgroup_cap)
    maxes = maximal_subgroup_bits(subs, g.all_bits)
    best = 0
    witnesses = []
    for i, a in enumerate(maxes):
        for b in maxes[i:]:
            u = a | b
            best = max(best, u.bit_count())
            if u == g.all_bits:
                witnesses.append({"A": subgroup_witness(g, a), "B": subgroup_witness(g, b)})
    return CheckReport("union-argument", g.name, g.order, passed=not witnesses, witnesses=witnesses,
                       details={"subgroups": len(subs), "maximal_subgroups": len(maxes),
                                "max_union_size": best})


@_timed
def check_atoms_bound(g):
    """At least three minimal proper centralizers, meeting in the center."""
    if g.is_abelian:
        raise GroupIsAbelian(f"{g.name} is abelian; atoms-bound needs a nonabelian group")
    lat = centralizer_lattice(g)
    ids = atoms(lat)
    meet = g.all_bits
    for i in ids:
        meet &= lat.nodes[i]
    center = lat.nodes[lat.bottom]
    ok = len(ids) >= 3 and meet == center
    witnesses = [] if ok else [{"k": len(ids), "atoms": [subgroup_witness(g, lat.nodes[i]) for i in ids],
                                "intersection": subgroup_witness(g, meet)}]
    return CheckReport("atoms-bound", g.name, g.order, passed=ok, witnesses=witnesses,
                       details={"k": len(ids), "intersection_is_center": meet == center,
                                "center_order": center.bit_count()})


@_timed
def check_open_problem(g, limits=Limits()):
    """Breaking points of the normal-centralizer lattice (informational)."""
    if g.order > limits.subgroup_cap:
        return _skipped("open-problem", g, limits)
    lat = build_lattice(normal_centralizer_lattice_elements(g, limits.subgroup_cap))
    bps = breaking_points(lat)
    return CheckReport("open-problem", g.name, g.order, passed=True,
                       witnesses=[subgroup_witness(g, lat.nodes[h]) for h in bps],
                       details={"lattice_size": len(lat), "breaking_points": len(bps),
                                "chain": chain_classification(lat)["is_chain"]})


def _skipped(claim, g, limits):
    return CheckReport(claim, g.name, g.order, passed=None, skipped=True,
                       notice=f"order {g.order} exceeds subgroup-enumeration cap {limits.subgroup_cap}")


def is_generalized_quaternion(g):
    n = g.order
    if n < 8 or n & (n - 1):
        return False
    return find_isomorphism(catalog_group(f"Q{n}"), g) is not None


def _entries(catalog, limits=Limits()):
    if isinstance(catalog, Catalog):
        return build_catalog(catalog, max_group_order=limits.max_group_order)
    return list(catalog)


def capability_search(target, catalog, limits=Limits()):
    """Catalog groups G with G/Z(G) isomorphic to target."""
    start = time.perf_counter()
    entries = _entries(catalog, limits)
    hits, errors = [], []
    for e in entries:
        g = e.group
        try:
            z = g.center_bits
            if g.order != target.order * z.bit_count():
                continue
            q = quotient(g, z, name=f"{e.spec}/Z")
            if find_isomorphism(q, target) is not None:
                hits.append({"group": e.spec, "order": g.order, "center_order": z.bit_count()})
        except LabError as exc:
            errors.append({"group": e.spec, "error": str(exc)})
    quaternion = is_generalized_quaternion(target)
    report = CheckReport(
        "capability", target.name, target.order,
        passed=not hits if quaternion else True,
        witnesses=hits,
        details={"target_is_generalized_quaternion": quaternion, "searched": len(entries),
                 "max_order": max((e.order for e in entries), default=0),
                 "hits": len(hits), "errors": errors, "disclaimer": DISCLAIMER},
    )
    report.elapsed = time.perf_counter() - start
    return report


def _open_problem_for_spec(spec, limits):
    return check_open_problem(catalog_group(spec, max_order=limits.max_group_order), limits)


def _map_specs(fn, specs, limits, jobs):
    """Apply fn(spec, limits) to each spec, optionally across worker processes.

    Results keep input order, so output never depends on scheduling.
    """
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, specs, [limits] * len(specs), chunksize=4))
    return [fn(s, limits) for s in specs]


def open_problem_search(catalog, limits=Limits(), jobs=1):
    """Catalog groups whose normal-centralizer lattice has breaking points.

    Groups over the subgroup cap come back as skipped reports.
    """
    specs = [e.spec for e in _entries(catalog, limits)]
    reports = _map_specs(_open_problem_for_spec, specs, limits, jobs)
    out = [r for r in reports if r.skipped or r.witnesses]
    out.sort(key=lambda r: (r.order, r.group))
    return out


CHECKERS = {
    "theorem1": check_theorem1,
    "corollary2": check_corollary2,
    "corollary3": check_corollary3,
    "closure": check_closure_and_double_centralizer,
    "union-argument": check_union_argument,
    "atoms-bound": check_atoms_bound,
    "open-problem": check_open_problem,
}


def run_check(claim, g, limits=Limits()):
    fn = CHECKERS[claim]
    if claim in ("union-argument", "open-problem"):
        return fn(g, limits)
    return fn(g)


def check_group(spec, limits=Limits()):
    """Every per-group check for one catalog entry; runs in worker processes."""
    g = catalog_group(spec, max_order=limits.max_group_order)
    reports = []
    for claim in CHECKERS:
        if claim == "atoms-bound" and g.is_abelian:
            continue
        reports.append(run_check(claim, g, limits))
    return {
        "spec": spec,
        "order": g.order,
        "abelian": g.is_abelian,
        "center_order": g.center_bits.bit_count(),
        "checks": reports,
    }


def run_suite(catalog, jobs=1, limits=Limits()):
    """Every checker over every catalog group, plus capability searches for
    each generalized quaternion group in the catalog."""
    start = time.perf_counter()
    entries = _entries(catalog, limits)
    results = _map_specs(check_group, [e.spec for e in entries], limits, jobs)
    results.sort(key=lambda r: (r["order"], r["spec"]))

    counts = {}
    failures = []
    implication_ok = True
    for r in results:
        by_claim = {c.claim: c for c in r["checks"]}
        for c in r["checks"]:
            tally = counts.setdefault(c.claim, {"passed": 0, "failed": 0, "skipped": 0})
            if c.skipped:
                tally["skipped"] += 1
            elif c.passed:
                tally["passed"] += 1
            else:
                tally["failed"] += 1
                if c.claim in PUBLISHED_CLAIMS:
                    failures.append(c)
        if by_claim["theorem1"].passed and not by_claim["corollary2"].passed:
            implication_ok = False
            log.error("%s: theorem1 passed but corollary2 failed", r["spec"])

    open_problem = [c for r in results for c in r["checks"]
                    if c.claim == "open-problem" and not c.skipped and c.witnesses]

    capability = []
    for e in entries:
        if e.spec.startswith("Q") and " x " not in e.spec:
            rep = capability_search(e.group, entries, limits)
            capability.append(rep)
            counts.setdefault("capability", {"passed": 0, "failed": 0, "skipped": 0})
            counts["capability"]["passed" if rep.passed else "failed"] += 1
            if not rep.passed:
                failures.append(rep)

    return {
        "groups": results,
        "counts": {k: counts[k] for k in sorted(counts)},
        "failures": failures,
        "implication_theorem1_corollary2": implication_ok,
        "open_problem": open_problem,
        "capability": capability,
        "catalog_size": len(entries),
        "elapsed": time.perf_counter() - start,
    }
