"""
Named algebra presets and JSON serialization of the input data.

Preset JSON schema (also accepted via --algebra-file):

    {
      "types": [["A", 2]],            # Cartan (type, rank) pairs
      "central": 0,                   # extra central dimensions
      "gamma": [[1, 0]],              # base permutations generating Gamma
      "cocycle": [["1","1"],["1","-1"]],   # Gamma x Gamma table, optional
      "k": ["1"],                     # one value per simple root
      "mode": "generic",              # generic | r1 | k0
      "cyclotomic_order": null
    }

Scalar strings are rationals "p/q" or cyclotomic combinations using z for
the fixed primitive root of unity, e.g. "1/2*z^3 - 2".
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .hecke import HeckeAlgebra
from .rootdata import RootSystem
from .scalars import Cyc, scalar_str
from .weylgroups import Cocycle, ExtendedWeylGroup, ParameterFunction

__all__ = ["PRESETS", "build_preset", "algebra_from_config", "parse_scalar",
           "algebra_config_json", "load_algebra_file"]

PRESETS = {
    "A1": {"types": [["A", 1]], "k": ["1"]},
    "A2": {"types": [["A", 2]], "k": ["1"]},
    "B2": {"types": [["B", 2]], "k": ["2", "1"]},
    "G2": {"types": [["G", 2]], "k": ["1", "2"]},
    "A1xA1": {"types": [["A", 1], ["A", 1]], "k": ["1", "2"]},
    "A2flip": {"types": [["A", 2]], "gamma": [[1, 0]], "k": ["1"]},
    "A2flip-tw": {"types": [["A", 2]], "gamma": [[1, 0]], "k": ["1"],
                  "cocycle": [["1", "1"], ["1", "-1"]]},
    "A1xA1swap": {"types": [["A", 1], ["A", 1]], "gamma": [[1, 0]], "k": ["1", "1"]},
}


def parse_scalar(text, order=None):
    """Parse '3', '-1/2', or cyclotomic combinations like '2*z^3 - 1/2'."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text) if order in (None, 1) else Cyc(order, [Fraction(text)])
    s = str(text).replace(" ", "")
    if "z" not in s:
        val = Fraction(s)
        return val if order in (None, 1) else Cyc(order, [val])
    if order in (None, 1):
        raise ValueError(f"cyclotomic scalar {text!r} needs a cyclotomic order")
    coeffs = [Fraction(0)] * order
    for term in re.findall(r"[+-]?[^+-]+", s):
        m = re.fullmatch(r"([+-]?)(?:(\d+(?:/\d+)?)\*?)?(?:z(?:\^(\d+))?)?", term)
        if not m or (m.group(2) is None and "z" not in term):
            raise ValueError(f"cannot parse scalar term {term!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        power = int(m.group(3)) if m.group(3) else (1 if "z" in term else 0)
        coeffs[power % order] += sign * coeff
    return Cyc(order, coeffs)


def algebra_from_config(config: dict) -> HeckeAlgebra:
    """Build an algebra instance from the JSON-style configuration."""
    types = [(str(t), int(r)) for t, r in config["types"]]
    central = int(config.get("central", 0))
    rs = RootSystem.from_specs(types, central_dim=central)
    gamma = [tuple(g) for g in config.get("gamma", [])]
    group = ExtendedWeylGroup(rs, gamma_generators=gamma)
    order = config.get("cyclotomic_order")
    k_values = [parse_scalar(v, order) for v in config["k"]]
    k = ParameterFunction.from_simple_values(group, k_values)
    cocycle_table = config.get("cocycle")
    if cocycle_table is not None:
        table = [[parse_scalar(v, order) for v in row] for row in cocycle_table]
        cocycle = Cocycle(group, table)
    else:
        cocycle = Cocycle(group)
    mode = config.get("mode", "generic")
    return HeckeAlgebra(group, k, cocycle, mode=mode, cyclotomic_order=order)


def build_preset(name: str, k=None, mode="generic", gamma=None) -> HeckeAlgebra:
    """A named preset, optionally overriding k values, mode, or Gamma."""
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}; choices: {sorted(PRESETS)}")
    config = json.loads(json.dumps(PRESETS[name]))  # deep copy
    if k is not None:
        config["k"] = [str(v) for v in k]
    if gamma == "none":
        config.pop("gamma", None)
        config.pop("cocycle", None)
    elif gamma:
        config["gamma"] = gamma
    config["mode"] = mode
    return algebra_from_config(config)


def algebra_config_json(algebra: HeckeAlgebra) -> dict:
    """Round-trippable configuration of an algebra instance."""
    out = {
        "types": [[c.kind, c.rank] for c in algebra.rs.components],
        "central": algebra.rs.central_dim,
        "k": [scalar_str(v) for v in algebra.k.simple_values()],
        "mode": algebra.mode,
    }
    gammas = algebra.group.gamma_elements
    if len(gammas) > 1:
        out["gamma"] = [list(g) for g in gammas[1:]]
        out["cocycle"] = [[scalar_str(v) for v in row]
                          for row in algebra.cocycle.table]
    if algebra.cyclotomic_order:
        out["cyclotomic_order"] = algebra.cyclotomic_order
    return out


def load_algebra_file(path: str) -> HeckeAlgebra:
    with open(path) as fh:
        return algebra_from_config(json.load(fh))
