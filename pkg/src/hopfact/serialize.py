"""JSON interchange schemas.

Complex numbers travel as [re, im] pairs, vectors as arrays of pairs, and
matrices as row-major nested arrays of pairs.  Action specs use the
fields n, m, d, kind, p, q, r and an optional C (default identity).
"""

import numpy as np

from .action import ActionKind, ActionSpec
from .hopf import HopfParams, OrbitPoint


def complex_to_pair(z: complex) -> list:
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(pair) -> complex:
    if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
        raise ValueError(f"expected an [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def vector_to_json(v) -> list:
    return [complex_to_pair(x) for x in np.asarray(v, dtype=np.complex128)]


def vector_from_json(data) -> np.ndarray:
    return np.array([pair_to_complex(p) for p in data], dtype=np.complex128)


def matrix_to_json(m) -> list:
    return [vector_to_json(row) for row in np.asarray(m, dtype=np.complex128)]


def matrix_from_json(data) -> np.ndarray:
    return np.array([[pair_to_complex(p) for p in row] for row in data],
                    dtype=np.complex128)


def params_from_config(config: dict) -> HopfParams:
    for key in ("n", "m", "d"):
        if key not in config:
            raise ValueError(f"config is missing required field {key!r}")
    return HopfParams(d=pair_to_complex(config["d"]), n=int(config["n"]),
                      m=int(config["m"]))


def spec_from_config(config: dict) -> ActionSpec:
    params = params_from_config(config)
    for key in ("kind", "p", "q", "r"):
        if key not in config:
            raise ValueError(f"config is missing required field {key!r}")
    try:
        kind = ActionKind(config["kind"])
    except ValueError:
        raise ValueError(f"kind must be 'type1' or 'type2', got {config['kind']!r}")
    if "C" in config and config["C"] is not None:
        C = matrix_from_json(config["C"])
    else:
        C = np.eye(params.n, dtype=np.complex128)
    return ActionSpec(kind=kind, p=int(config["p"]), q=int(config["q"]),
                      r=int(config["r"]), C=C, params=params)


def point_from_json(params: HopfParams, data) -> OrbitPoint:
    return OrbitPoint(params, vector_from_json(data))
