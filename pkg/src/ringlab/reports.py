"""Canonical JSON reports and DOT renderings.

All serialization routes through ``canonical_json`` so identical inputs
produce byte-identical output: key order is fixed by construction order,
element sets are sorted index arrays, and nothing time- or
machine-dependent is embedded apart from the tool version.
"""

from __future__ import annotations

import json

from . import __version__
from .claims import summarize
from .ideals import members_of
from .lattices import LatticeBuildReport, build_bz, build_bzo
from .properties import build_class_report
from .rings import RingTable
from .spectrum import compute_spectrum
from .verdicts import ClaimVerdict


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def ring_info(ring: RingTable) -> dict:
    return {
        "label": ring.label,
        "size": ring.size,
        "construction": ring.construction.as_dict(),
    }


def spectrum_summary(ring: RingTable) -> dict:
    view = compute_spectrum(ring)
    return {
        "primes": [list(p.members) for p in view.primes],
        "maximal": list(view.maximal_indices()),
        "minimal": list(view.minimal_indices()),
    }


def _formula_entry(value: bool, witness) -> dict:
    return {"value": value, "witness": witness}


def lattice_report_dict(rep: LatticeBuildReport) -> dict:
    return {
        "elements": rep.node_members(),
        "has_all_joins": rep.lattice.join is not None,
        "has_all_meets": rep.lattice.meet is not None,
        "formula_well_defined": _formula_entry(rep.well_defined, rep.well_defined_witness),
        "formula_is_join": _formula_entry(rep.is_join, rep.join_witness),
        "formula_is_meet": _formula_entry(rep.is_meet, rep.meet_witness),
    }


def build_report(ring: RingTable, verdicts: list[ClaimVerdict] | None = None) -> dict:
    """The full single-ring report: class decisions under both variants,
    the spectrum summary, both lattice builds, and any claim verdicts."""
    claims = [v.as_dict() for v in (verdicts or [])]
    report = {
        "tool_version": __version__,
        "ring": ring_info(ring),
        "properties": build_class_report(ring),
        "spectrum": spectrum_summary(ring),
        "lattices": {
            "bz": lattice_report_dict(build_bz(ring)),
            "bzo": lattice_report_dict(build_bzo(ring)),
        },
        "claims": claims,
    }
    if verdicts:
        report["summary"] = summarize(verdicts)
    return report


def corpus_report(rings: tuple[RingTable, ...], verdicts: list[ClaimVerdict]) -> dict:
    return {
        "tool_version": __version__,
        "corpus": [ring_info(r) for r in rings],
        "claims": [v.as_dict() for v in verdicts],
        "summary": summarize(verdicts),
    }


# ---------------------------------------------------------------------------
# DOT

def _covering_edges(masks: list[int]) -> list[tuple[int, int]]:
    edges = []
    for i, small in enumerate(masks):
        for j, big in enumerate(masks):
            if i == j or small & ~big:
                continue
            if any(
                k not in (i, j)
                and small & ~masks[k] == 0
                and masks[k] & ~big == 0
                for k in range(len(masks))
            ):
                continue
            edges.append((i, j))
    return edges


def _dot_of_masks(name: str, masks: list[int]) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, mask in enumerate(masks):
        label = "{" + ",".join(str(x) for x in members_of(mask)) + "}"
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in _covering_edges(masks):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_spectrum(ring: RingTable) -> str:
    """One node per prime, edges the covering relation of inclusion."""
    view = compute_spectrum(ring)
    return _dot_of_masks("spectrum", list(view.primes.masks()))


def dot_lattice(ring: RingTable, which: str) -> str:
    rep = build_bz(ring) if which == "bz" else build_bzo(ring)
    return _dot_of_masks(which, list(rep.node_masks))
