"""Report envelopes and DOT output."""

import json

from ringlab.claims import run_corpus
from ringlab.reports import (
    build_report,
    canonical_json,
    corpus_report,
    dot_lattice,
    dot_spectrum,
    ring_info,
)
from ringlab.rings import make_product, make_zmod


def test_canonical_json_is_stable():
    obj = {"b": 1, "a": [2, 3]}
    assert canonical_json(obj) == canonical_json({"b": 1, "a": [2, 3]})
    assert canonical_json(obj).endswith("\n")
    # insertion order is preserved, not sorted
    assert list(json.loads(canonical_json(obj))) == ["b", "a"]


def test_ring_info_structure():
    info = ring_info(make_zmod(6))
    assert info == {"label": "Z6", "size": 6, "construction": {"kind": "zmod", "n": 6}}
    prod = make_product([make_zmod(2), make_zmod(3)])
    info = ring_info(prod)
    assert info["construction"] == {"kind": "product", "factors": ["Z2", "Z3"]}


def test_build_report_envelope():
    ring = make_zmod(6)
    report = build_report(ring)
    assert list(report) == ["tool_version", "ring", "properties", "spectrum", "lattices", "claims"]
    assert report["claims"] == []
    assert report["spectrum"]["primes"] == [[0, 3], [0, 2, 4]]
    assert report["spectrum"]["maximal"] == [0, 1]
    assert report["spectrum"]["minimal"] == [0, 1]
    assert list(report["lattices"]) == ["bz", "bzo"]


def test_build_report_with_claims_adds_summary():
    ring = make_zmod(6)
    verdicts = run_corpus(corpus=(ring,), ids=["L-P4", "P-DAVA"])
    report = build_report(ring, verdicts)
    assert [c["claim"] for c in report["claims"]] == ["L-P4", "P-DAVA"]
    assert report["summary"]["total"] == 2
    assert report["summary"]["holds"] == 2


def test_corpus_report_shape():
    rings = (make_zmod(4), make_zmod(6))
    verdicts = run_corpus(corpus=rings, ids=["L-P4"])
    doc = corpus_report(rings, verdicts)
    assert list(doc) == ["tool_version", "corpus", "claims", "summary"]
    assert [c["ring"] for c in doc["claims"]] == ["Z4", "Z6"]


def test_dot_spectrum_z6_two_isolated_nodes():
    dot = dot_spectrum(make_zmod(6))
    assert dot.count("label=") == 2
    assert '"{0,3}"' in dot and '"{0,2,4}"' in dot
    assert "->" not in dot


def test_dot_bz_z6_diamond():
    dot = dot_lattice(make_zmod(6), "bz")
    assert dot.count("label=") == 4
    assert dot.count("->") == 4
    assert '"{0}"' in dot and '"{0,1,2,3,4,5}"' in dot


def test_dot_spectrum_z12_chainless():
    dot = dot_spectrum(make_zmod(12))
    # two incomparable primes: no covering edges
    assert dot.count("label=") == 2
    assert "->" not in dot


def test_dot_deterministic():
    assert dot_lattice(make_zmod(12), "bzo") == dot_lattice(make_zmod(12), "bzo")
