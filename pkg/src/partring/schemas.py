"""JSON Schemas for the tables the command line emits with ``--format json``."""

_INT = {"type": "integer"}
_NONNEG = {"type": "integer", "minimum": 0}
_POS = {"type": "integer", "minimum": 1}


def _table(command: str, row_props: dict, extra: dict | None = None, optional=()) -> dict:
    props = {
        "command": {"const": command},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": row_props,
                "required": sorted(row_props),
                "additionalProperties": False,
            },
        },
    }
    props.update(extra or {})
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "properties": props,
        "required": ["command", "rows"] + sorted(set(extra or {}) - set(optional)),
    }


PCOUNT = _table(
    "pcount",
    {"n": _NONNEG, "p": _POS},
    {"engine": {"enum": ["conv", "pent", "prod", "recip", "all"]}, "check": {"type": "string"}},
    optional=("check",),
)

SIGMA = _table("sigma", {"n": _POS, "sigma": _POS, "sigma_pentagonal": _INT})

CENSUS = _table(
    "census",
    {
        "weight": _POS,
        "total": _POS,
        "primes": _NONNEG,
        "by_sufficient_condition": _NONNEG,
        "extra": _NONNEG,
    },
)

ASYMPTOTICS = _table(
    "asymptotics",
    {
        "n": _POS,
        "p": _POS,
        "hr_estimate": {"type": "number"},
        "ratio": {"type": "number"},
        "nth_root": {"type": "number"},
        "root_bound": {"type": "number"},
    },
)

RHO = _table(
    "modring-rho",
    {"trial": _NONNEG, "tail": _NONNEG, "cycle": _POS},
    {
        "part_modulus": {"type": "integer", "minimum": 2},
        "coeff_modulus": {"type": "integer", "minimum": 2},
        "seed": _INT,
        "trials": _POS,
        "ring_size": _POS,
        "birthday_bound": {"type": "number"},
        "mean_tail": {"type": "number"},
        "mean_cycle": {"type": "number"},
        "mean_rho": {"type": "number"},
        "cycle_ratio": {"type": "number"},
        "rho_ratio": {"type": "number"},
    },
)

SCHEMAS = {s["properties"]["command"]["const"]: s for s in (PCOUNT, SIGMA, CENSUS, ASYMPTOTICS, RHO)}
