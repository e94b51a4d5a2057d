"""Named cubic threefolds used as reference examples."""

from __future__ import annotations

from .threefold import CubicThreefold

FORMS = {
    "fermat": "x0^3 + x1^3 + x2^3 + x3^3 + x4^3",
    "klein": "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0",
    "x1": "x0^2*x2 + x2^2*x4 + x1^2*x3 + x3^2*x0 + x4^3",
    "x2": "2*x0*x2^2 + 2*x2*x1^2 + x1^2*x3 + x3*x0^2 + 3*x3^3 + x4^3",
    "x3": "x0^2*x4 + x1^2*x3 + x3^3 + x3^2*x4 + x3*x4^2 - x4^3 + x2^3",
    "x4": "x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + 3*x0*x1*x2",
    "x5": "x0^2*x2 + x1^2*x3 + x1*x2^2 + x0*x3^2 + x1*x3^2 + x4^3",
    "x6": "x0^2*x2 + x1^2*x3 + x0*x2^2 + x1*x2^2 + x0*x3^2 + 2*x1*x2*x4 + 2*x0*x3*x4 + x4^3",
    "x7": "x0^2*x2 + x1^2*x3 + x1*x2^2 + x0*x3^2 + 2*x0*x3*x4 + x4^3",
    "x8": "x0^2*x2 + x1^2*x3 + x1*x2^2 + x1*x3^2 + x0*x3^2 + x0*x4^2 + x1*x4^2 + x4^3",
}

# x3 is the example with exactly two Eckardt points (1:0:0:0:0), (0:1:0:0:0)
ALIASES = {"canonero": "x3"}

TABLE_NAMES = ("x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8")

# (q0, q1, k) with f = x0^2 x2 + x1^2 x3 + x0 q0 + x1 q1 + k x4^3
FAMILY_DATA = {
    "x5": ("x3^2", "x2^2 + x3^2", 1),
    "x6": ("x2^2 + x3^2 + 2*x3*x4", "x2^2 + 2*x2*x4", 1),
    "x7": ("x3^2 + 2*x3*x4", "x2^2", 1),
    "x8": ("x3^2 + x4^2", "x2^2 + x3^2 + x4^2", 1),
}

# known invariants: Eckardt points, triple lines, triple lines in the big cell
EXPECTED = {
    "fermat": {"n_E": 30, "n_E_strata": [12, 9, 6, 3, 0], "n_T": 135},
    "klein": {"n_E": 0, "n_E_strata": [0, 0, 0, 0, 0], "n_T": 0},
    "x1": {"n_E": 1, "n_T": 9, "n_T_chart": 9, "n_Ep_chart": 1},
    "x2": {"n_E": 1, "n_T": 33, "n_T_chart": 33, "n_Ep_chart": 1},
    "x3": {"n_E": 2, "n_T": 39, "n_T_chart": 33, "n_Ep_chart": 2},
    "x4": {"n_E": 12, "n_T": 81, "n_T_chart": 54, "n_Ep_chart": 6},
    "x5": {"n_E": 0, "n_T": 27},
    "x6": {"n_E": 0, "n_T": 9},
    "x7": {"n_E": 0, "n_T": 2},
    "x8": {"n_E": 0, "n_T": 1},
}

# intersection numbers in the big cell (elliptic curves against the main
# component, and between elliptic curves), per elliptic curve over QQ
EXPECTED_CHART = {
    "x1": {"Ep.P": [9], "Ep.Eq": []},
    "x2": {"Ep.P": [9], "Ep.Eq": []},
    "x3": {"Ep.P": [8, 8], "Ep.Eq": [1]},
    "x4": {"Ep.P": [12, 12, 12, 6, 6, 6], "Ep.Eq": [0] * 15},
}


def names() -> list[str]:
    return list(FORMS)


def builtin(name: str) -> CubicThreefold:
    key = name.lower()
    key = ALIASES.get(key, key)
    if key not in FORMS:
        raise KeyError(f"unknown builtin cubic {name!r}; choose from {', '.join(FORMS)}")
    return CubicThreefold(FORMS[key], name=key)
