"""Analysis reports: schema-versioned dictionaries plus a text renderer.

Every command builds one report dict, validated against ``REPORT_SCHEMA``.
The human-readable rendering is derived from the dict alone, so every number
a user sees in the text output is present in the machine-readable output.
Reports always restate which hypotheses were verified, which failed, and
which are assumed without computation (higher cohomology vanishing of the
endomorphism summands is always in the last group: it is consumed as a
hypothesis, never computed).
"""

from __future__ import annotations

import warnings
from typing import Any

from .cohomology import (
    UnverifiedAssumptionWarning,
    consistency_hh1_vs_vector_fields,
    endomorphism_dimensions,
    hochschild1_dim,
    moduli_dimension,
    vector_fields_dim,
)
from .core import DimensionVector, Quiver, StabilityParameter, path_count_matrix
from .errors import (
    AssumptionViolatedError,
    DisconnectedQuiverError,
    UnsupportedDimensionVectorError,
)
from .ff_oracle import (
    verify_double_framing_equivalence,
    weight_law_trials,
)
from .framing import (
    FramingResult,
    ReductionResult,
    double_frame,
    framed_ample_stability,
    minimal_framing_scale,
    reduce as reduce_framing,
    verify_framed_sign_partition,
    verify_reduction_pairing,
)
from .specfile import QuiverSpec
from .stability import AssumptionsReport, assumptions_report, sign_partition

SCHEMA_VERSION = 1

ASSUMED_HYPOTHESES = (
    "vanishing of higher cohomology of the endomorphism summands (consumed as a hypothesis, never computed)",
    "exact ample stability is not decided in general; the strong criterion is used as sufficient evidence",
)

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "command", "exit_code", "hypotheses"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": ["analyze", "frame", "reduce", "verify"]},
        "exit_code": {"enum": [0, 1]},
        "assumptions": {
            "type": "object",
            "required": [
                "acyclic",
                "indivisible",
                "coprime",
                "strongly_amply_stable",
                "amply_stable",
            ],
            "properties": {
                "acyclic": {"type": "boolean"},
                "indivisible": {"type": "boolean"},
                "coprime": {"type": "boolean"},
                "strongly_amply_stable": {"type": "boolean"},
                "amply_stable": {"enum": ["yes", "no", "unknown"]},
                "failing_witnesses": {
                    "type": "object",
                    "additionalProperties": {
                        "type": "array",
                        "items": {"type": "object", "additionalProperties": {"type": "integer"}},
                    },
                },
            },
        },
        "hypotheses": {
            "type": "object",
            "required": ["verified", "failed", "assumed"],
            "properties": {
                "verified": {"type": "array", "items": {"type": "string"}},
                "failed": {"type": "array", "items": {"type": "string"}},
                "assumed": {"type": "array", "items": {"type": "string"}},
            },
        },
        "dimensions": {"type": "object"},
        "framing": {"type": "object"},
        "reduction": {"type": "object"},
        "verifications": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed"],
                "properties": {"name": {"type": "string"}, "passed": {"type": "boolean"}},
            },
        },
        "error": {"type": "object"},
    },
}


def _vector_dict(vec, vertices) -> dict[str, int]:
    return {v: vec[v] for v in vertices}


def datum_dict(q: Quiver, d: DimensionVector, theta: StabilityParameter) -> dict[str, Any]:
    """A datum in spec-file shape, so framed outputs can be re-used as inputs."""
    return {
        "vertices": list(q.vertices),
        "arrows": [{"from": s, "to": t} for s, t in q.arrows],
        "dimension": _vector_dict(d, q.vertices),
        "stability": _vector_dict(theta, q.vertices),
    }


def _datum_counts(q: Quiver) -> dict[str, int]:
    return {"vertices": len(q.vertices), "arrows": len(q.arrows)}


def assumptions_dict(report: AssumptionsReport) -> dict[str, Any]:
    witnesses = {
        name: [_vector_dict(w, sorted(w.vertex_set)) for w in ws]
        for name, ws in report.failing_witnesses.items()
    }
    return {
        "acyclic": report.acyclic,
        "indivisible": report.indivisible,
        "coprime": report.coprime,
        "strongly_amply_stable": report.strongly_amply_stable,
        "amply_stable": report.amply_stable.value,
        "failing_witnesses": witnesses,
    }


def _hypotheses_dict(report: AssumptionsReport) -> dict[str, Any]:
    names = {
        "acyclic": "the quiver is acyclic",
        "indivisible": "the dimension vector is indivisible",
        "coprime": "semistable = stable (via theta-coprimality)",
        "strongly_amply_stable": "strong ample stability",
    }
    verified = [label for key, label in names.items() if getattr(report, key)]
    failed = [label for key, label in names.items() if not getattr(report, key)]
    return {
        "verified": verified,
        "failed": failed,
        "assumed": list(ASSUMED_HYPOTHESES),
    }


def build_analyze_report(spec: QuiverSpec, override_assumptions: bool = False) -> dict[str, Any]:
    q, d, theta = spec.quiver, spec.dimension, spec.stability
    report = assumptions_report(q, d, theta)
    out: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "datum": datum_dict(q, d, theta),
        "datum_counts": _datum_counts(q),
        "assumptions": assumptions_dict(report),
        "hypotheses": _hypotheses_dict(report),
    }

    dimensions: dict[str, Any] = {}
    verifications: list[dict[str, Any]] = []
    if report.acyclic:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UnverifiedAssumptionWarning)
            table = endomorphism_dimensions(q, d, assumptions=report)
        dimensions["moduli_dim"] = moduli_dimension(q, d)
        dimensions["endomorphism_table"] = {
            "vertices": list(q.vertices),
            "path_counts": [list(row) for row in table.entries],
        }
        dimensions["endomorphism_total"] = table.total()
        dimensions["hh1"] = hochschild1_dim(q)
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", UnverifiedAssumptionWarning)
                value = vector_fields_dim(q, d, theta, override_assumptions=override_assumptions)
            entry: dict[str, Any] = {"value": value}
            if override_assumptions and not report.all_verified():
                entry["override"] = True
                entry["caveat"] = (
                    "hypotheses were overridden; this is the presentation formula, "
                    "not a verified count of vector fields"
                )
            dimensions["vector_fields"] = entry
        except AssumptionViolatedError as exc:
            dimensions["vector_fields"] = {"refused": exc.assumption}
        except (DisconnectedQuiverError, UnsupportedDimensionVectorError) as exc:
            dimensions["vector_fields"] = {"refused": str(exc)}
        try:
            check = consistency_hh1_vs_vector_fields(q, d, theta)
            verifications.append(
                {
                    "name": "vector fields formula equals first Hochschild cohomology",
                    "passed": check.passed,
                    "vector_fields": check.vector_fields,
                    "hh1": check.hochschild1,
                }
            )
        except (DisconnectedQuiverError, UnsupportedDimensionVectorError):
            pass
    out["dimensions"] = dimensions
    out["verifications"] = verifications
    out["exit_code"] = 0 if report.all_verified() else 1
    return out


def _framing_dict(framing: FramingResult) -> dict[str, Any]:
    return {
        "framed_at": {"i": framing.framed_at[0], "j": framing.framed_at[1]},
        "scale": framing.framing_scale,
        "source_vertex": framing.source_vertex,
        "sink_vertex": framing.sink_vertex,
        "framed_datum": datum_dict(
            framing.framed_quiver, framing.framed_dimension, framing.framed_stability
        ),
    }


def build_frame_report(spec: QuiverSpec, i: str, j: str, scale: int | None) -> dict[str, Any]:
    q, d, theta = spec.quiver, spec.dimension, spec.stability
    if scale is None:
        scale = minimal_framing_scale(q, d, theta)
    framing = double_frame(q, d, theta, i, j, scale)
    base_report = assumptions_report(q, d, theta)
    partition = sign_partition(q, d, theta)
    check = verify_framed_sign_partition(framing, partition)
    framed_counts = path_count_matrix(framing.framed_quiver)
    base_counts = path_count_matrix(q) if base_report.acyclic else None

    verifications = [
        {
            "name": "framed sign partition matches its predicted description",
            "passed": check.passed,
            "checked": check.checked,
            "discrepancies": [
                {
                    "vector": _vector_dict(vec, framing.framed_quiver.vertices),
                    "expected": expected,
                    "actual": actual,
                }
                for vec, expected, actual in check.discrepancies
            ],
        }
    ]
    framing_block = _framing_dict(framing)
    framing_block["framed_ample_stability"] = framed_ample_stability(d, i, j)
    if base_counts is not None:
        framing_block["framed_path_space_dim"] = framed_counts.count(
            framing.source_vertex, framing.sink_vertex
        )
        framing_block["base_path_space_dim"] = base_counts.count(i, j)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "frame",
        "datum": datum_dict(q, d, theta),
        "datum_counts": _datum_counts(q),
        "assumptions": assumptions_dict(base_report),
        "hypotheses": _hypotheses_dict(base_report),
        "framing": framing_block,
        "verifications": verifications,
        "exit_code": 0 if check.passed else 1,
    }


def _reduction_dict(result: ReductionResult) -> dict[str, Any]:
    q0, qinf = result.connecting_paths
    return {
        "case": result.case_tag.value,
        "marked_vertices": {"i": result.marked_vertices[0], "j": result.marked_vertices[1]},
        "connecting_paths": {
            "q0": {"source": q0.source, "arrows": list(q0.arrows)},
            "qinf": {"source": qinf.source, "arrows": list(qinf.arrows)},
        },
        "reduced_datum": datum_dict(
            result.reduced_quiver, result.reduced_dimension, result.reduced_stability
        ),
    }


def build_reduce_report(spec: QuiverSpec, i: str, j: str, scale: int | None) -> dict[str, Any]:
    q, d, theta = spec.quiver, spec.dimension, spec.stability
    if scale is None:
        scale = minimal_framing_scale(q, d, theta)
    framing = double_frame(q, d, theta, i, j, scale)
    base_report = assumptions_report(q, d, theta)
    result = reduce_framing(framing, d)
    check = verify_reduction_pairing(result)
    reduction = _reduction_dict(result)
    reduction["reduced_path_space_dim"] = check.reduced_path_count
    reduction["base_path_space_dim"] = check.base_path_count
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "reduce",
        "datum": datum_dict(q, d, theta),
        "datum_counts": _datum_counts(q),
        "assumptions": assumptions_dict(base_report),
        "hypotheses": _hypotheses_dict(base_report),
        "framing": _framing_dict(framing),
        "reduction": reduction,
        "verifications": [
            {
                "name": "reduction pairing, thinness, and path count",
                "passed": check.passed,
                "failures": list(check.failures),
            }
        ],
        "exit_code": 0 if check.passed else 1,
    }


def build_verify_report(
    spec: QuiverSpec,
    prime: int,
    budget: int,
    seed: int,
    scale: int | None,
    weight_trials: int = 100,
) -> dict[str, Any]:
    if spec.framing is None:
        raise AssumptionViolatedError("a framing block is required for verification")
    q, d, theta = spec.quiver, spec.dimension, spec.stability
    i, j = spec.framing.i, spec.framing.j
    if scale is None:
        scale = spec.framing.scale or minimal_framing_scale(q, d, theta)
    base_report = assumptions_report(q, d, theta)
    equivalence = verify_double_framing_equivalence(
        q, d, theta, i, j, scale, prime, budget=budget, seed=seed
    )
    framing = double_frame(q, d, theta, i, j, scale)
    weights = weight_law_trials(framing, prime, trials=weight_trials, seed=seed)
    verifications = [
        {
            "name": f"framed stability description over F_{prime}",
            "passed": equivalence.passed,
            "points_checked": equivalence.instances_checked,
            "failures": len(equivalence.failures),
            "sampled": equivalence.sampled,
            "sample_size": equivalence.sample_size,
            "notes": list(equivalence.notes),
        },
        {
            "name": f"path evaluation weight law over F_{prime}",
            "passed": weights.passed,
            "trials": weights.trials,
            "failures": weights.failures,
            "paths_available": weights.paths_available,
        },
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "datum": datum_dict(q, d, theta),
        "datum_counts": _datum_counts(q),
        "assumptions": assumptions_dict(base_report),
        "hypotheses": _hypotheses_dict(base_report),
        "framing": _framing_dict(framing),
        "verifications": verifications,
        "exit_code": 0 if equivalence.passed and weights.passed else 1,
    }


# --- human-readable rendering ------------------------------------------------


def _render_vector(values: dict[str, int]) -> str:
    return "(" + ", ".join(f"{v}: {c}" for v, c in values.items()) + ")"


def render_human(report: dict[str, Any]) -> str:
    """Plain-text rendering, derived exclusively from the report dict."""
    lines: list[str] = []
    lines.append(f"command: {report['command']}")
    datum = report.get("datum")
    counts = report.get("datum_counts")
    if datum and counts:
        lines.append(
            "datum: %d vertices, %d arrows, dimension %s, stability %s"
            % (
                counts["vertices"],
                counts["arrows"],
                _render_vector(datum["dimension"]),
                _render_vector(datum["stability"]),
            )
        )
    assumptions = report.get("assumptions")
    if assumptions:
        lines.append("hypotheses on the datum:")
        for key in ("acyclic", "indivisible", "coprime", "strongly_amply_stable"):
            lines.append(f"  {key}: {'yes' if assumptions[key] else 'NO'}")
        lines.append(f"  amply_stable: {assumptions['amply_stable']}")
        for name, witnesses in assumptions.get("failing_witnesses", {}).items():
            rendered = ", ".join(_render_vector(w) for w in witnesses)
            lines.append(f"  witnesses against {name}: {rendered}")
    hypotheses = report.get("hypotheses")
    if hypotheses:
        for label in hypotheses["assumed"]:
            lines.append(f"assumed (not computed): {label}")
    dimensions = report.get("dimensions")
    if dimensions:
        lines.append("dimensions:")
        if "moduli_dim" in dimensions:
            lines.append(f"  expected moduli dimension: {dimensions['moduli_dim']}")
        if "endomorphism_total" in dimensions:
            lines.append(f"  endomorphism algebra total: {dimensions['endomorphism_total']}")
        table = dimensions.get("endomorphism_table")
        if table:
            lines.append("  path count table (rows = from, columns = to):")
            lines.append("    " + " ".join(table["vertices"]))
            for v, row in zip(table["vertices"], table["path_counts"]):
                lines.append("    " + v + ": " + " ".join(str(x) for x in row))
        if "hh1" in dimensions:
            lines.append(f"  first Hochschild cohomology: {dimensions['hh1']}")
        vf = dimensions.get("vector_fields")
        if vf is not None:
            if "value" in vf:
                suffix = "  [override: formula value only]" if vf.get("override") else ""
                lines.append(f"  vector fields: {vf['value']}{suffix}")
            else:
                lines.append(f"  vector fields: refused ({vf['refused']})")
    framing = report.get("framing")
    if framing:
        lines.append(
            "framing at (i = %s, j = %s), scale %d, fresh vertices %s and %s"
            % (
                framing["framed_at"]["i"],
                framing["framed_at"]["j"],
                framing["scale"],
                framing["source_vertex"],
                framing["sink_vertex"],
            )
        )
        fd = framing["framed_datum"]
        lines.append(
            "  framed dimension %s, framed stability %s"
            % (_render_vector(fd["dimension"]), _render_vector(fd["stability"]))
        )
        if "framed_ample_stability" in framing:
            lines.append(
                f"  framed datum amply stable: {'yes' if framing['framed_ample_stability'] else 'NO'}"
            )
        if "framed_path_space_dim" in framing:
            lines.append(
                "  path space source to sink: %d (base path space i to j: %d)"
                % (framing["framed_path_space_dim"], framing["base_path_space_dim"])
            )
    reduction = report.get("reduction")
    if reduction:
        lines.append(f"reduction case: {reduction['case']}")
        lines.append(
            "  marked vertices i' = %s, j' = %s"
            % (reduction["marked_vertices"]["i"], reduction["marked_vertices"]["j"])
        )
        rd = reduction["reduced_datum"]
        lines.append(
            "  reduced dimension %s, reduced stability %s"
            % (_render_vector(rd["dimension"]), _render_vector(rd["stability"]))
        )
        lines.append(
            "  path space at marks: %d (base: %d)"
            % (reduction["reduced_path_space_dim"], reduction["base_path_space_dim"])
        )
    for check in report.get("verifications", ()):
        status = "pass" if check["passed"] else "FAIL"
        extras = []
        for key in ("checked", "points_checked", "trials", "failures", "vector_fields", "hh1"):
            if key in check and not isinstance(check[key], list):
                extras.append(f"{key}={check[key]}")
        if check.get("sampled"):
            extras.append(f"sampled={check['sample_size']}")
        for note in check.get("notes", ()):
            extras.append(note)
        suffix = f" ({', '.join(extras)})" if extras else ""
        lines.append(f"verification: {check['name']}: {status}{suffix}")
    lines.append(f"exit code: {report['exit_code']}")
    return "\n".join(lines) + "\n"
