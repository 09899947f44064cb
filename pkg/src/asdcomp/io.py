"""JSON serialization of complexes and length vectors.

Complexes are stored as ``{"n": 5, "facets": [[1, 2], [1, 3, 4]]}`` with
1-based vertices; reading applies the downward closure.  Length vectors are
stored as ``{"lengths": ["1", "1", "1/10"]}`` with exact rational strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .complexes import SimplicialComplex, complex_from_facets, facets, vertices
from .errors import ASDError, ParseError
from .threshold import LengthVector


def complex_to_dict(K: SimplicialComplex) -> dict[str, Any]:
    fs = sorted((list(vertices(F)) for F in facets(K)), key=lambda f: (len(f), f))
    return {"n": K.n, "facets": fs}


def complex_from_dict(data: Any) -> SimplicialComplex:
    if not isinstance(data, dict) or "n" not in data or "facets" not in data:
        raise ParseError('complex JSON needs keys "n" and "facets"')
    n, fs = data["n"], data["facets"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError('"n" must be an integer')
    if not isinstance(fs, list) or not all(
        isinstance(f, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in f)
        for f in fs
    ):
        raise ParseError('"facets" must be a list of integer lists')
    return complex_from_facets(n, fs)


def lengths_to_dict(L: LengthVector) -> dict[str, Any]:
    return {"lengths": [str(x) for x in L]}


def lengths_from_dict(data: Any) -> LengthVector:
    if not isinstance(data, dict) or not isinstance(data.get("lengths"), list):
        raise ParseError('length JSON needs a "lengths" list')
    try:
        vals = [Fraction(x) if isinstance(x, (str, int)) and not isinstance(x, bool) else None
                for x in data["lengths"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational: {exc}") from None
    if any(v is None for v in vals):
        raise ParseError("lengths must be rational strings or integers")
    return LengthVector(vals)


def loads(text: str) -> SimplicialComplex | LengthVector:
    """Parse either document kind, dispatching on its keys."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if isinstance(data, dict) and "lengths" in data:
        return lengths_from_dict(data)
    return complex_from_dict(data)


def load(path: str | Path) -> SimplicialComplex | LengthVector:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text)


def load_complex(path: str | Path) -> SimplicialComplex:
    """Load a complex; a length-vector file is turned into its SHORT complex."""
    from .threshold import short_complex

    obj = load(path)
    if isinstance(obj, LengthVector):
        return short_complex(obj)
    return obj


def dumps(obj: SimplicialComplex | LengthVector) -> str:
    if isinstance(obj, SimplicialComplex):
        return json.dumps(complex_to_dict(obj))
    if isinstance(obj, LengthVector):
        return json.dumps(lengths_to_dict(obj))
    raise ASDError(f"cannot serialize {type(obj).__name__}")


def dump(obj: SimplicialComplex | LengthVector, path: str | Path) -> None:
    Path(path).write_text(dumps(obj) + "\n")
