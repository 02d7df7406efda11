"""Turning runtime values into plain JSON data for reports and witnesses."""

from __future__ import annotations

from fractions import Fraction

from .moore import MoorePath, path_to_json
from .ops import SimplicialOperator
from .presentation import Simplex, degeneracy_word
from .traversal import Traversal, traversal_to_json


def to_jsonable(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return v
    if isinstance(v, MoorePath):
        return path_to_json(v, to_jsonable)
    if isinstance(v, Traversal):
        return traversal_to_json(v)
    if isinstance(v, Simplex):
        out = {"gen": v.gen}
        if v.is_degenerate:
            out["degeneracy"] = list(degeneracy_word(v.deg))
        return out
    if isinstance(v, SimplicialOperator):
        return {"rank": v.rank, "images": list(v.images)}
    if isinstance(v, (tuple, list)):
        return [to_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): to_jsonable(x) for k, x in v.items()}
    if isinstance(v, (set, frozenset)):
        return sorted(to_jsonable(x) for x in v)
    return repr(v)
