"""JSON-ready reports shared by the command line front end."""

from __future__ import annotations

from .analysis import (
    abelian_invariants,
    center_generators,
    exchange_check,
    factorization,
    generating_group_verification,
    group_invariants,
    kernel_ball_check,
    lattice_check,
    psi_delta_index,
    section_equivalence_check,
    w0_properties_check,
    x_factor_sets,
)
from .monoid import all_simples, count_representatives, format_word
from .signed import group_closure, psi_of_atom
from .solution import YbeSolution, property_c

__all__ = ["ANALYSIS_KEYS", "GROUP_KEYS", "analysis_report", "group_report", "simples_report", "render_text"]

ANALYSIS_KEYS = (
    "order",
    "order_factorization",
    "center_order",
    "center_generators",
    "exponent",
    "nilpotency_class",
    "property_c",
    "is_section",
    "generating_group_ok",
    "lattice_ok",
    "w0_ok",
    "exchange_ok",
    "kernel_ball_ok",
    "psi_generators",
)

GROUP_KEYS = (
    "order",
    "order_factorization",
    "center_order",
    "center_generators",
    "exponent",
    "nilpotency_class",
    "is_abelian",
    "abelian_invariants",
)


def _factor_string(m: int) -> str:
    return " x ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(factorization(m).items())) or "1"


def group_report(sol: YbeSolution) -> dict:
    W = group_closure(sol)
    inv = group_invariants(W)
    return {
        "order": inv.order,
        "order_factorization": _factor_string(inv.order),
        "center_order": inv.center_order,
        "center_generators": [str(W.elements[i]) for i in center_generators(W)],
        "exponent": inv.exponent,
        "nilpotency_class": inv.nilpotency_class,
        "is_abelian": inv.is_abelian,
        "abelian_invariants": abelian_invariants(W) if inv.is_abelian else None,
    }


def analysis_report(sol: YbeSolution, ball: int = 4) -> dict:
    """Full report; w0, exchange and kernel checks are null without Property (C)."""
    W = group_closure(sol)
    g = group_report(sol)
    has_c = property_c(sol)
    is_section, _ = section_equivalence_check(sol)
    fs = x_factor_sets(W, psi_delta_index(sol, W))
    report = {k: g[k] for k in GROUP_KEYS if k in ANALYSIS_KEYS}
    report.update(
        property_c=has_c,
        is_section=is_section,
        generating_group_ok=generating_group_verification(sol),
        lattice_ok=lattice_check(fs, W),
        w0_ok=w0_properties_check(sol) if has_c else None,
        exchange_ok=exchange_check(sol) if has_c else None,
        kernel_ball_ok=kernel_ball_check(sol, ball) if has_c else None,
        psi_generators=[str(psi_of_atom(sol, x)) for x in sol.atoms],
    )
    return {k: report[k] for k in ANALYSIS_KEYS}


def simples_report(sol: YbeSolution) -> dict:
    simples = all_simples(sol)
    return {
        "n": sol.n,
        "count": len(simples),
        "length_counts": [sum(1 for s in simples if s.length == k) for k in range(sol.n + 1)],
        "simples": [
            {
                "atoms_left": sorted(s.atoms_left),
                "atoms_right": sorted(s.atoms_right),
                "canonical_word": format_word(s.canonical_word),
                "representatives": count_representatives(sol, s),
            }
            for s in simples
        ],
    }


def render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for item in value:
                lines.append("  " + "  ".join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(value, list):
            lines.append(f"{key}: " + " ".join(str(v) for v in value))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"
