"""JSON group descriptors and short names.

Schema (one object; ``names`` is optional wherever generators are named)::

    {"type": "free", "rank": 2}
    {"type": "abelian", "rank": 2}
    {"type": "raag", "vertices": 3, "edges": [[0, 1], [1, 2]]}
    {"type": "raag", "graph_file": "path/to/edges.txt"}
    {"type": "symmetric", "degree": 4, "genset": "pos" | "neg" | "all" | "standard" | "custom",
     "generators": [[1, 0, 2, 3], ...]}            # generators only for "custom"
    {"type": "heisenberg"}
    {"type": "dihedral_inf"}
    {"type": "z2_rtimes_z6"}
    {"type": "product", "factors": [<descriptor>, <descriptor>]}
    {"type": "free_product_free", "base": <descriptor>, "rank": 3}
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .core import GroupOracle, ParseError
from .groups import (
    make_abelian,
    make_dihedral_inf,
    make_free,
    make_free_product_free,
    make_heisenberg,
    make_product,
    make_raag,
    make_symmetric,
    make_z2_rtimes_z6,
)
from .groups.raag import RaagGraph

TYPES = ("free", "abelian", "raag", "symmetric", "heisenberg", "dihedral_inf", "z2_rtimes_z6",
         "product", "free_product_free")

SHORT_NAMES = {
    "heis": {"type": "heisenberg"},
    "heisenberg": {"type": "heisenberg"},
    "dinf": {"type": "dihedral_inf"},
    "z2z6": {"type": "z2_rtimes_z6"},
    "f2xz": {"type": "product", "factors": [{"type": "free", "rank": 2},
                                            {"type": "abelian", "rank": 1, "names": ["z"]}]},
}


def _get(d: dict, key: str):
    if key not in d:
        raise ParseError(f"descriptor of type {d.get('type')!r} needs {key!r}")
    return d[key]


def build_group(desc: dict) -> GroupOracle:
    if not isinstance(desc, dict) or "type" not in desc:
        raise ParseError("group descriptor must be an object with a 'type'")
    kind = desc["type"]
    names = desc.get("names")
    if kind == "free":
        return make_free(int(_get(desc, "rank")), names)
    if kind == "abelian":
        return make_abelian(int(_get(desc, "rank")), names)
    if kind == "raag":
        if "graph_file" in desc:
            graph = RaagGraph.from_file(desc["graph_file"], desc.get("vertices"))
        else:
            graph = RaagGraph.from_edges(int(_get(desc, "vertices")), desc.get("edges", []))
        return make_raag(graph, names)
    if kind == "symmetric":
        return make_symmetric(int(_get(desc, "degree")), desc.get("genset", "neg"), desc.get("generators"))
    if kind == "heisenberg":
        return make_heisenberg()
    if kind == "dihedral_inf":
        return make_dihedral_inf()
    if kind == "z2_rtimes_z6":
        return make_z2_rtimes_z6()
    if kind == "product":
        factors = _get(desc, "factors")
        if len(factors) != 2:
            raise ParseError("product takes exactly two factors")
        return make_product(build_group(factors[0]), build_group(factors[1]))
    if kind == "free_product_free":
        return make_free_product_free(build_group(_get(desc, "base")), int(_get(desc, "rank")))
    raise ParseError(f"unknown group type {kind!r}; expected one of {', '.join(TYPES)}")


def resolve(text: str, graph_file: str | None = None) -> dict:
    """Turn a CLI ``--group`` value into a descriptor.

    Accepts short names (``f2``, ``z3``, ``heis``, ``dinf``, ``z2z6``, ``f2xz``,
    ``sym5-pos``, ``raag``), a path to a JSON file, or inline JSON.
    """
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    if text.endswith(".json") or Path(text).is_file():
        return json.loads(Path(text).read_text())
    low = text.lower()
    if low in SHORT_NAMES:
        return json.loads(json.dumps(SHORT_NAMES[low]))
    m = re.fullmatch(r"f(\d+)", low)
    if m:
        return {"type": "free", "rank": int(m.group(1))}
    m = re.fullmatch(r"z(\d*)", low)
    if m:
        return {"type": "abelian", "rank": int(m.group(1) or 1)}
    m = re.fullmatch(r"sym(\d+)(?:-(pos|neg|all|standard))?", low)
    if m:
        return {"type": "symmetric", "degree": int(m.group(1)), "genset": m.group(2) or "neg"}
    if low == "raag":
        if not graph_file:
            raise ParseError("--group raag needs --graph-file")
        return {"type": "raag", "graph_file": str(graph_file)}
    raise ParseError(f"unknown group {text!r}")


def load_group(text: str, graph_file: str | None = None) -> tuple[GroupOracle, dict]:
    desc = resolve(text, graph_file)
    return build_group(desc), desc
