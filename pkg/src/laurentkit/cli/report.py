"""JSON-friendly views of results, and the shipped report schema."""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from ..laurent import LaurentPoly, format_poly

SCHEMA_VERSION = "1.0"


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report_schema.json").read_text(encoding="utf-8"))


def coef_str(c) -> str:
    return str(Fraction(c)) if not isinstance(c, int) else str(c)


def matrix_data(m) -> list:
    return [list(row) for row in m.tolist()]


def ledger_data(ledger) -> list:
    return ledger.as_list()


def _mono_str(x, names, domain) -> str:
    c, e = x
    return format_poly(LaurentPoly({e: c}, len(e), domain), names)


def trace_data(trace, a) -> dict:
    dom = a.element_domain
    names = a.names
    steps = []
    for s in trace.steps:
        steps.append(
            {
                "u": _mono_str(s.u, names, dom),
                "v": _mono_str(s.v, names, dom),
                "deg_u": s.deg_u,
                "deg_v": s.deg_v,
                "d": s.d,
                "a": s.a,
                "b": s.b,
                "m": s.m,
                "n": s.n,
                "r": coef_str(s.r),
                "w": _mono_str(s.w, names, dom),
                "localized_at": None if s.localized_at is None else coef_str(s.localized_at),
            }
        )
    return {
        "seed": _mono_str(trace.seed, names, dom),
        "steps": steps,
        "domain": str(trace.domain),
        "localizations": [coef_str(r) for r in trace.localizations],
    }
