"""JSON encodings of the library's values (schema version 1).

Matrices are row-major arrays of ring element strings in the textual form
of the ring module.  Output is deterministic: keys sorted, fixed indent.
"""

from __future__ import annotations

import json

from .exterior import subsets
from .freegroup import PhiValuation, surface_name
from .linalg import Matrix
from .ring import format_laurent, parse_element

SCHEMA = 1


def dumps(kind: str, payload: dict) -> str:
    doc = {"schema": SCHEMA, "kind": kind}
    doc.update(payload)
    return json.dumps(doc, indent=2, sort_keys=True)


def matrix_to_json(M: Matrix):
    return M.to_strings()


def matrix_from_json(data, nvars: int) -> Matrix:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("a matrix is a list of rows")
    rows = [[parse_element(str(x), nvars) for x in r] for r in data]
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    return Matrix(rows, nvars, ncols)


def phi_to_json(phi: PhiValuation):
    return [format_laurent(phi.of_gen(i)) for i in range(1, phi.rank + 1)]


def module_to_json(H):
    return {"genus": H.genus, "G_rank": H.nvars, "phi": phi_to_json(H.phi)}


def relation_to_json(rel) -> dict:
    return {
        "source": module_to_json(rel.source),
        "target": module_to_json(rel.target),
        "dim": rel.space.dim,
        "pivots": list(rel.space.pivots),
        "basis": matrix_to_json(rel.space.basis),
    }


def _label(sub, genus):
    return "^".join(surface_name(i + 1, genus) for i in sub) or "1"


def graded_to_json(G) -> dict:
    gs, gt = G.source_rank // 2, G.target_rank // 2
    blocks = []
    for j in G.degrees():
        blocks.append({
            "degree": j,
            "columns": [_label(s, gs) for s in subsets(G.source_rank, j)],
            "rows": [_label(s, gt) for s in subsets(G.target_rank, j + G.shift)],
            "matrix": matrix_to_json(G.blocks[j]),
        })
    return {"shift": G.shift, "source_rank": G.source_rank,
            "target_rank": G.target_rank, "blocks": blocks}


def multivector_to_json(mv, labels) -> dict:
    return {"degree": mv.degree,
            "terms": [["^".join(labels[i] for i in s) or "1", str(v)]
                      for s, v in mv.items()]}
