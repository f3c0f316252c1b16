"""Text, JSON and DOT rendering of lattices and check reports."""

import hashlib
import json

from . import __version__, bits
from .catalog import describe_group
from .groups import subgroup_table
from .lattice import atoms, breaking_points, chain_classification, interval_decompositions
from .lab import subgroup_roles

DOT_NAME_LIMIT = 8


def group_summary(spec, g):
    return {"spec": spec, "order": g.order, "abelian": g.is_abelian,
            "center_order": g.center_bits.bit_count()}


def lattice_summary(g, lat, kind):
    decs = interval_decompositions(lat)
    return {
        "kind": kind,
        "size": len(lat),
        "nodes": [
            {"id": i, "size": b.bit_count(), "type": describe_group(subgroup_table(g, b)),
             "roles": subgroup_roles(g, b),
             "members": bits.to_indices(b), "elements": g.names_of(b)}
            for i, b in enumerate(lat.nodes)
        ],
        "hasse": [list(e) for e in lat.hasse],
        "bottom": lat.bottom,
        "top": lat.top,
        "atoms": atoms(lat),
        "breaking_points": breaking_points(lat),
        "decompositions": [list(p) for p in decs],
        "chain": chain_classification(lat),
    }


def document(group=None, lattice=None, checks=(), timings=False):
    return {
        "tool_version": __version__,
        "group": group,
        "lattice": lattice,
        "checks": [c.as_dict(timings) for c in checks],
    }


def to_json(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _node_text(node):
    roles = f" ({', '.join(node['roles'])})" if node["roles"] else ""
    return f"[{node['id']}] {node['type']}{roles} size {node['size']} {{{', '.join(node['elements'])}}}"


def lattice_text(group, lat):
    nodes = lat["nodes"]
    out = [
        f"group {group['spec']}: order {group['order']}, "
        f"{'abelian' if group['abelian'] else 'nonabelian'}, |Z(G)| = {group['center_order']}",
        f"lattice {lat['kind']}: {lat['size']} nodes",
    ]
    out += ["  " + _node_text(n) for n in nodes]
    out.append("hasse edges: " + (" ".join(f"{a}<{b}" for a, b in lat["hasse"]) or "none"))
    out.append("atoms: " + (", ".join(map(str, lat["atoms"])) or "none"))
    if lat["breaking_points"]:
        out.append("breaking points:")
        out += ["  " + _node_text(nodes[h]) for h in lat["breaking_points"]]
    else:
        out.append("breaking points: none")
    out.append("decompositions: " + (" ".join(f"({m},{n})" for m, n in lat["decompositions"]) or "none"))
    chain = lat["chain"]
    out.append(f"chain: yes, length {chain['length']}" if chain["is_chain"] else "chain: no")
    return "\n".join(out) + "\n"


def _dot_label(node):
    if node["size"] <= DOT_NAME_LIMIT:
        names = ",".join(node["elements"])
    else:
        names = hashlib.sha1(",".join(map(str, node["members"])).encode()).hexdigest()[:10]
    return f"{node['size']}:{names}"


def lattice_dot(group, lat):
    out = [f"digraph \"{group['spec']} {lat['kind']}\" {{", "  rankdir=BT;", "  node [shape=box];"]
    for n in lat["nodes"]:
        label = _dot_label(n).replace("\\", "\\\\").replace('"', '\\"')
        out.append(f'  n{n["id"]} [label="{label}"];')
    for a, b in lat["hasse"]:
        out.append(f"  n{a} -> n{b};")
    out.append("}")
    return "\n".join(out) + "\n"


def _witness_text(w):
    if isinstance(w, dict) and "elements" in w:
        roles = f" ({', '.join(w['roles'])})" if w.get("roles") else ""
        return f"{w['type']}{roles} size {w['size']} {{{', '.join(w['elements'])}}}"
    if isinstance(w, dict):
        return ", ".join(f"{k}={_witness_text(v)}" for k, v in w.items())
    if isinstance(w, list):
        return "[" + "; ".join(_witness_text(v) for v in w) + "]"
    return str(w)


def check_text(report, timings=False):
    if report.skipped:
        status = "SKIP"
    elif report.claim == "open-problem":
        status = "FOUND" if report.witnesses else "NONE"
    else:
        status = "PASS" if report.passed else "FAIL"
    head = f"{status} {report.claim} {report.group} (order {report.order})"
    if timings:
        head += f" [{report.elapsed * 1000:.1f} ms]"
    out = [head]
    if report.notice:
        out.append(f"  notice: {report.notice}")
    for k, v in report.details.items():
        if k == "errors" and not v:
            continue
        out.append(f"  {k}: {v}")
    for w in report.witnesses:
        out.append(f"  witness: {_witness_text(w)}")
    return "\n".join(out) + "\n"


def suite_document(result, catalog, timings=False):
    return {
        "tool_version": __version__,
        "catalog": {"max_order": catalog.max_order, "include_products": catalog.include_products,
                    "extra": list(catalog.specs), "size": result["catalog_size"]},
        "groups": [
            {"group": {k: r[k] for k in ("spec", "order", "abelian", "center_order")},
             "checks": [c.as_dict(timings) for c in r["checks"]]}
            for r in result["groups"]
        ],
        "summary": {
            "counts": result["counts"],
            "failures": [c.as_dict(timings) for c in result["failures"]],
            "implication_theorem1_corollary2": result["implication_theorem1_corollary2"],
            "elapsed_ms": round(result["elapsed"] * 1000, 3) if timings else None,
        },
        "open_problem": [c.as_dict(timings) for c in result["open_problem"]],
        "capability": [c.as_dict(timings) for c in result["capability"]],
    }


def suite_text(result, timings=False):
    out = [f"suite: {result['catalog_size']} groups"]
    for claim, t in result["counts"].items():
        out.append(f"  {claim}: {t['passed']} passed, {t['failed']} failed, {t['skipped']} skipped")
    out.append(f"  theorem1 => corollary2 implication: {'holds' if result['implication_theorem1_corollary2'] else 'VIOLATED'}")
    if result["failures"]:
        out.append("COUNTEREXAMPLES TO PUBLISHED CLAIMS:")
        out += [check_text(c, timings).rstrip() for c in result["failures"]]
    else:
        out.append("no counterexamples found")
    out.append("normal-centralizer lattices with breaking points:")
    for c in result["open_problem"]:
        out.append(f"  {c.group} (order {c.order}): " + "; ".join(_witness_text(w) for w in c.witnesses))
    out.append("capability searches:")
    out += [check_text(c, timings).rstrip() for c in result["capability"]]
    if timings:
        out.append(f"elapsed: {result['elapsed']:.2f} s")
    return "\n".join(out) + "\n"
