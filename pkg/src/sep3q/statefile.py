"""JSON state files: ``{"kind": "pure" | "density", "data": ...}``.

Complex numbers are stored as ``[re, im]`` pairs; pure data is a list of 8
pairs, density data an 8x8 nested list of pairs.
"""

import json

import numpy as np

from .errors import ParseError
from .states import DensityMatrix, PureState, pure_from_amplitudes, validate_density

__all__ = ["to_document", "from_document", "dump_state", "load_state", "dumps_state", "loads_state"]


def _pairs(a):
    return np.stack([a.real, a.imag], axis=-1).tolist()


def to_document(state):
    if isinstance(state, PureState):
        return {"kind": "pure", "data": _pairs(state.amp)}
    if isinstance(state, DensityMatrix):
        return {"kind": "density", "data": _pairs(state.m)}
    raise TypeError(f"cannot serialize {type(state).__name__}")


def _complex_array(data, shape, what):
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what} data must be {_shape_text(shape)}: {exc}") from exc
    if arr.shape != shape + (2,):
        raise ParseError(f"{what} data must be {_shape_text(shape)}; got array of shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def _shape_text(shape):
    return " x ".join(str(n) for n in shape) + " array of [re, im] pairs"


def from_document(doc, normalize=False):
    """Parse a decoded state document into a validated state."""
    if not isinstance(doc, dict) or "kind" not in doc or "data" not in doc:
        raise ParseError('state document must be an object with "kind" and "data"')
    kind = doc["kind"]
    if kind == "pure":
        return pure_from_amplitudes(_complex_array(doc["data"], (8,), "pure"), normalize=normalize)
    if kind == "density":
        return validate_density(_complex_array(doc["data"], (8, 8), "density"))
    raise ParseError(f'unknown kind {kind!r}; expected "pure" or "density"')


def dumps_state(state):
    return json.dumps(to_document(state))


def loads_state(text, normalize=False):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_document(doc, normalize=normalize)


def dump_state(state, path):
    with open(path, "w") as fh:
        json.dump(to_document(state), fh)
        fh.write("\n")


def load_state(path, normalize=False):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads_state(text, normalize=normalize)

