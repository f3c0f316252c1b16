"""JSON group files.

Generator form::

    {"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}

Cayley form::

    {"order": 2, "table": [[0, 1], [1, 0]], "names": ["e", "t"]}
"""

import json
from pathlib import Path

from . import groups
from .errors import InvalidGroupTable


def _int(value, where):
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidGroupTable(f"{where}: expected an integer, got {value!r}")
    return value


def group_from_document(doc, max_order=groups.DEFAULT_MAX_ORDER, name=""):
    if not isinstance(doc, dict):
        raise InvalidGroupTable("$: expected a JSON object")
    if "generators" in doc:
        degree = _int(doc.get("degree"), "degree")
        if degree < 1:
            raise InvalidGroupTable("degree: must be positive")
        gens = doc["generators"]
        if not isinstance(gens, list) or not gens:
            raise InvalidGroupTable("generators: expected a non-empty array")
        for k, p in enumerate(gens):
            if not isinstance(p, list):
                raise InvalidGroupTable(f"generators[{k}]: expected an array")
            for i, v in enumerate(p):
                _int(v, f"generators[{k}][{i}]")
        return groups.build_from_generators(degree, gens, max_order=max_order, name=name)
    if "table" in doc:
        order = _int(doc.get("order"), "order")
        table = doc["table"]
        if not isinstance(table, list) or len(table) != order:
            raise InvalidGroupTable(f"table: expected {order} rows")
        if order > max_order:
            raise groups.ClosureTooLarge(f"order: {order} exceeds element cap {max_order}")
        return groups.from_cayley(table, names=doc.get("names"), name=name)
    raise InvalidGroupTable("$: expected either a 'generators' or a 'table' field")


def load_group_file(path, max_order=groups.DEFAULT_MAX_ORDER):
    p = Path(path)
    try:
        doc = json.loads(p.read_text())
    except FileNotFoundError:
        raise InvalidGroupTable(f"{path}: file not found") from None
    except json.JSONDecodeError as exc:
        raise InvalidGroupTable(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    return group_from_document(doc, max_order=max_order, name=f"file:{path}")
