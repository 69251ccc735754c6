"""Analysis reports: a deterministic dict built once, rendered as JSON or text.

Identical inputs produce byte-identical output: every collection is emitted
in a canonical order (declaration order for element sets, lexicographic
image tuples for maps, catalogue order for theorems) and the JSON renderer
preserves construction order.
"""

from __future__ import annotations

import json

from . import __version__
from .core import AlgebraSpec, PseudoBciAlgebra, atoms, bck_part, branches, classify
from .derivations import (
    CLASS_ORDER,
    DerivationClass,
    enumerate_derivations,
    map_properties,
    monoid_report,
    phi_map,
    satisfies,
)
from .dsystems import enumerate_ds
from .theorems import theorem_suite


def _names(A: PseudoBciAlgebra, members) -> list[str]:
    return [A.names[i] for i in sorted(members)]


def _map_entry(A: PseudoBciAlgebra, d) -> dict:
    props = map_properties(A, d)
    return {
        "images": [A.names[v] for v in d],
        "properties": {
            "regular": props.regular,
            "isotone": props.isotone,
            "idempotent": props.idempotent,
            "kernel": _names(A, props.kernel),
            "image": _names(A, props.image),
            "kernel_is_subalgebra": props.kernel_is_subalgebra,
            "kernel_in_bck_part": props.kernel_in_bck_part,
            "image_in_atoms": props.image_in_atoms,
            "maps_bck_into_bck": props.maps_bck_into_bck,
            "maps_atoms_into_atoms": props.maps_atoms_into_atoms,
        },
    }


def applicable_classes(A: PseudoBciAlgebra) -> list[DerivationClass]:
    """Implicative I/II and symmetric I/II everywhere; III/IV on pseudo-BCK."""
    bck = classify(A).is_pseudo_bck
    return [cls for cls in CLASS_ORDER if bck or not cls.requires_pseudo_bck]


def build_report(A: PseudoBciAlgebra, *, cap: int | None = None) -> dict:
    """The full analysis of one algebra as a deterministic plain dict."""
    spec = A.to_spec()
    cls_report = classify(A)
    ats = atoms(A)
    part = bck_part(A)
    brs = branches(A)
    systems = enumerate_ds(A, cap=cap)
    phi = phi_map(A)
    phi_classes = [str(c) for c in CLASS_ORDER
                   if (not c.requires_pseudo_bck or cls_report.is_pseudo_bck)
                   and satisfies(A, phi, c)]

    derivation_blocks = []
    idop_sets: dict[DerivationClass, list] = {}
    for cls in applicable_classes(A):
        maps = enumerate_derivations(A, cls, cap=cap)
        idop_sets[cls] = maps
        derivation_blocks.append({
            "class": str(cls),
            "count": len(maps),
            "maps": [_map_entry(A, d) for d in maps],
        })

    idop = sorted(set(idop_sets[DerivationClass.IMPLICATIVE_I])
                  & set(idop_sets[DerivationClass.IMPLICATIVE_II]))
    monoid = monoid_report(A, idop)
    suite = theorem_suite(A, cap=cap)

    return {
        "tool": {"name": "pbci", "version": __version__},
        "algebra": {
            "names": list(spec.names),
            "unit": spec.unit,
            "arrow": [list(row) for row in spec.arrow],
            "squig": [list(row) for row in spec.squig],
        },
        "summary": {
            "size": A.size,
            "elements": list(A.names),
            "unit": A.names[A.unit],
        },
        "classification": {
            "is_bci": cls_report.is_bci,
            "is_pseudo_bck": cls_report.is_pseudo_bck,
            "is_proper": cls_report.is_proper,
            "is_p_semisimple": cls_report.is_p_semisimple,
            "p_semisimple_crosscheck": [
                {"characterization": label, "holds": holds}
                for label, holds in cls_report.p_semisimple_crosscheck
            ],
            "is_commutative": cls_report.is_commutative,
            "is_branchwise_commutative": cls_report.is_branchwise_commutative,
            "is_medial_arrow": cls_report.is_medial_arrow,
            "is_medial_squig": cls_report.is_medial_squig,
        },
        "atoms": _names(A, ats),
        "bck_part": _names(A, part),
        "branches": [
            {"atom": A.names[a], "members": _names(A, block)}
            for a, block in sorted(brs.items())
        ],
        "deductive_systems": [
            {
                "members": _names(A, ds.members),
                "compatible": ds.compatible,
                "closed": ds.closed,
            }
            for ds in systems
        ],
        "phi_map": {
            "images": [A.names[v] for v in phi],
            "classes": phi_classes,
        },
        "derivations": derivation_blocks,
        "monoid": {
            "members": [[A.names[v] for v in d] for d in idop],
            "closed_under_composition": monoid.closed_under_composition,
            "commutative": monoid.commutative,
            "has_identity": monoid.has_identity,
            "composition_table": [list(row) for row in monoid.composition_table],
            "witnesses": list(monoid.witnesses),
        },
        "theorems": [
            {
                "id": r.tid,
                "statement": r.statement,
                "applicable": r.applicable,
                "passed": r.passed,
                "witness": r.witness,
                "note": r.note,
            }
            for r in suite.results
        ],
    }


def spec_from_report(report: dict) -> AlgebraSpec:
    """Rebuild the input spec from a report's embedded algebra block."""
    block = report["algebra"]
    return AlgebraSpec(
        names=tuple(block["names"]),
        unit=block["unit"],
        arrow=tuple(tuple(row) for row in block["arrow"]),
        squig=tuple(tuple(row) for row in block["squig"]),
    )


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _flag_phrase(value: bool, name: str) -> str:
    return name if value else f"not {name}"


def render_text(report: dict) -> str:
    """Human-readable summary of a report."""
    lines: list[str] = []
    summary = report["summary"]
    cl = report["classification"]
    lines.append(
        f"algebra: {summary['size']} elements "
        f"[{' '.join(summary['elements'])}], unit {summary['unit']}")
    kinds = []
    if cl["is_bci"]:
        kinds.append("BCI")
    if cl["is_pseudo_bck"]:
        kinds.append("pseudo-BCK")
    if cl["is_proper"]:
        kinds.append("proper")
    lines.append("kind: " + (", ".join(kinds) if kinds else "pseudo-BCI"))
    lines.append("classification: "
                 + "; ".join(_flag_phrase(cl[k], k.removeprefix("is_").replace("_", " "))
                             for k in ("is_p_semisimple", "is_commutative",
                                       "is_branchwise_commutative",
                                       "is_medial_arrow", "is_medial_squig")))
    lines.append("atoms: " + " ".join(report["atoms"]))
    lines.append("BCK part: " + " ".join(report["bck_part"]))
    for br in report["branches"]:
        lines.append(f"branch of {br['atom']}: {{{' '.join(br['members'])}}}")
    lines.append(f"deductive systems ({len(report['deductive_systems'])}):")
    for ds in report["deductive_systems"]:
        flags = []
        flags.append("compatible" if ds["compatible"] else "not compatible")
        flags.append("closed" if ds["closed"] else "not closed")
        lines.append(f"  {{{' '.join(ds['members'])}}}  {', '.join(flags)}")
    phi = report["phi_map"]
    lines.append(f"phi map: {' '.join(phi['images'])}  "
                 f"({', '.join(phi['classes'])})")
    for block in report["derivations"]:
        lines.append(f"derivations {block['class']} ({block['count']}):")
        for entry in block["maps"]:
            p = entry["properties"]
            facts = [
                "regular" if p["regular"] else "not regular",
                "isotone" if p["isotone"] else "not isotone",
                "idempotent" if p["idempotent"] else "not idempotent",
                f"kernel={{{' '.join(p['kernel'])}}}",
            ]
            lines.append(f"  {' '.join(entry['images'])}  {'; '.join(facts)}")
    mon = report["monoid"]
    shape = ("commutative monoid" if mon["closed_under_composition"]
             and mon["commutative"] and mon["has_identity"] else "not a commutative monoid")
    lines.append(f"two-sided implicative maps ({len(mon['members'])}): {shape} "
                 "under composition")
    results = report["theorems"]
    applicable = [r for r in results if r["applicable"]]
    failed = [r for r in applicable if r["passed"] is False]
    lines.append(f"theorems: {len(applicable)} applicable, "
                 f"{len(applicable) - len(failed)} passed, {len(failed)} failed, "
                 f"{len(results) - len(applicable)} skipped")
    for r in failed:
        lines.append(f"  FAIL {r['id']}: {r['witness']}")
    return "\n".join(lines) + "\n"
