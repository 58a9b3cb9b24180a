"""JSON encoding of states, couplings, channel specs and reports."""

from __future__ import annotations

import json
import math

import numpy as np

from .channels import ChannelSpec, amp_coupling, bs_coupling
from .exceptions import ParseError
from .gaussian import GaussianState, vacuum

SIG_DIGITS = 15


def _complex(value, name: str) -> complex:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if (
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        return complex(value[0], value[1])
    raise ParseError(f"{name}: expected a number or a [re, im] pair, got {value!r}")


def parse_real(value, name: str) -> float:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    raise ParseError(f"{name}: expected a number, got {value!r}")


def _pair(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def state_to_json(state: GaussianState) -> dict:
    return {"n": state.n, "m": _pair(state.m), "d": _pair(state.d)}


def state_from_json(obj) -> GaussianState:
    if not isinstance(obj, dict) or "n" not in obj:
        raise ParseError(f"state must be an object with at least 'n', got {obj!r}")
    return GaussianState(
        parse_real(obj["n"], "n"),
        _complex(obj.get("m", 0), "m"),
        _complex(obj.get("d", 0), "d"),
    )


def coupling_to_json(A) -> dict:
    A = np.asarray(A, dtype=complex)
    return {"A": [[_pair(z) for z in row] for row in A]}


def coupling_from_json(obj) -> np.ndarray:
    """Accepts ``{"A": 4x4 of [re, im]}``, ``{"bs": k}`` or ``{"amp": k}``."""
    if not isinstance(obj, dict):
        raise ParseError(f"coupling must be an object, got {obj!r}")
    keys = [key for key in ("A", "bs", "amp") if key in obj]
    if len(keys) != 1:
        raise ParseError("coupling needs exactly one of 'A', 'bs', 'amp'")
    key = keys[0]
    if key == "bs":
        return bs_coupling(parse_real(obj["bs"], "bs"))
    if key == "amp":
        return amp_coupling(parse_real(obj["amp"], "amp"))
    rows = obj["A"]
    if not isinstance(rows, list) or len(rows) != 4 or any(
        not isinstance(r, list) or len(r) != 4 for r in rows
    ):
        raise ParseError("'A' must be a 4x4 array of [re, im] pairs")
    return np.array(
        [[_complex(z, f"A[{i}][{j}]") for j, z in enumerate(r)] for i, r in enumerate(rows)]
    )


def coupling_json_of(obj) -> dict:
    """The coupling part of a spec document (nested or top-level shorthand)."""
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {type(obj).__name__}")
    if "coupling" in obj:
        return obj["coupling"]
    return {key: obj[key] for key in ("A", "bs", "amp") if key in obj}


def env_from_json(obj) -> GaussianState:
    """Environment of a spec document; vacuum when absent."""
    if "env" not in obj:
        return vacuum()
    return state_from_json(obj["env"])


def spec_from_json(obj) -> ChannelSpec:
    return ChannelSpec(coupling_from_json(coupling_json_of(obj)), env_from_json(obj))


def spec_to_json(spec: ChannelSpec) -> dict:
    return {"coupling": coupling_to_json(spec.coupling), "env": state_to_json(spec.env)}


def canonical(obj):
    """Round floats to 15 significant digits and normalise ``-0.0``."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x} in report")
        x = float(format(x, f".{SIG_DIGITS}g"))
        return 0.0 if x == 0 else x
    if isinstance(obj, complex):
        return canonical(_pair(obj))
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(canonical(obj), indent=2, sort_keys=True) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
