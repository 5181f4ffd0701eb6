"""Double framing of a quiver datum and its reduction to a thin-marked datum.

``double_frame`` adjoins a fresh source vertex and a fresh sink vertex with
one arrow into the chosen vertex i and one arrow out of the chosen vertex j,
extends the dimension vector by 1 at both new vertices, and scales the
stability parameter into the middle block: (1, N*theta, -1).

``reduce`` removes whichever framing vertices are redundant because the base
dimension vector is already thin at i or j, producing a datum whose marked
vertices are thin and whose path space between them matches the base path
space from i to j.  The four cases are keyed by (d_i > 1, d_j > 1).
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

from .core import (
    DimensionVector,
    Path,
    Quiver,
    StabilityParameter,
    enumerate_paths,
    path_count_matrix,
)
from .errors import AssumptionViolatedError, PairingNonzeroError
from .stability import (
    AssumptionsReport,
    SignPartition,
    ThreeValued,
    assumptions_report,
    sign_partition,
    subdimension_vectors,
)

__all__ = [
    "FramingResult",
    "ReductionCase",
    "ReductionResult",
    "FramedPartitionCheck",
    "ReductionPairingCheck",
    "double_frame",
    "minimal_framing_scale",
    "verify_framed_sign_partition",
    "framed_ample_stability",
    "framed_assumptions_report",
    "reduce",
    "verify_reduction_pairing",
    "reduction_path_map",
]


@dataclass(frozen=True)
class FramingResult:
    """A framed datum together with the base datum it was built from."""

    framed_quiver: Quiver
    framed_dimension: DimensionVector
    framed_stability: StabilityParameter
    framing_scale: int
    framed_at: tuple[str, str]
    source_vertex: str
    sink_vertex: str
    base_quiver: Quiver
    base_dimension: DimensionVector
    base_stability: StabilityParameter


class ReductionCase(enum.Enum):
    BOTH_BIG = "both_big"
    SOURCE_THIN = "source_thin"
    TARGET_THIN = "target_thin"
    BOTH_THIN = "both_thin"


@dataclass(frozen=True)
class ReductionResult:
    """A reduced datum with its marked vertices and connecting paths.

    ``connecting_paths`` are paths in the framed quiver: q0 from the framing
    source to i' and qinf from j' to the framing sink, each of length <= 1.
    ``arrow_map`` sends each arrow index of the reduced quiver to the
    corresponding arrow index of the framed quiver.
    """

    reduced_quiver: Quiver
    reduced_dimension: DimensionVector
    reduced_stability: StabilityParameter
    marked_vertices: tuple[str, str]
    connecting_paths: tuple[Path, Path]
    case_tag: ReductionCase
    arrow_map: tuple[int, ...]
    framing: FramingResult


@dataclass(frozen=True)
class FramedPartitionCheck:
    """Result of comparing the framed sign partition against its prediction."""

    passed: bool
    checked: int
    discrepancies: tuple[tuple[DimensionVector, str, str], ...]
    scale: int

    @property
    def first_discrepancy(self) -> tuple[DimensionVector, str, str] | None:
        return self.discrepancies[0] if self.discrepancies else None


@dataclass(frozen=True)
class ReductionPairingCheck:
    passed: bool
    failures: tuple[str, ...]
    reduced_path_count: int
    base_path_count: int


def _fresh_names(taken: tuple[str, ...]) -> tuple[str, str]:
    # The framing vertices are called 0 and infinity; prime them on collision.
    source, sink = "0", "∞"
    while source in taken:
        source += "'"
    while sink in taken:
        sink += "'"
    return source, sink


def double_frame(
    q: Quiver,
    d: DimensionVector,
    theta: StabilityParameter,
    i: str,
    j: str,
    scale: int,
) -> FramingResult:
    """Build the framed datum at vertices i and j (i = j is allowed).

    The framed quiver gains a source vertex with one arrow into i and a sink
    vertex with one arrow out of j; the framed dimension vector is (1, d, 1)
    and the framed stability parameter is (1, N*theta, -1) in the block order
    (source, base vertices, sink), which pairs to zero with (1, d, 1) exactly
    because theta(d) = 0.  Framing preserves acyclicity: the new vertices are
    a strict source and a strict sink.
    """
    if theta(d) != 0:
        raise PairingNonzeroError(f"theta(d) = {theta(d)}, expected 0")
    if scale < 1:
        raise ValueError("framing scale must be a positive integer")
    q.vertex_index(i)
    q.vertex_index(j)
    source, sink = _fresh_names(q.vertices)
    framed_q = Quiver(
        (source, *q.vertices, sink),
        (*q.arrows, (source, i), (j, sink)),
    )
    framed_d = DimensionVector({**d.as_dict(), source: 1, sink: 1})
    framed_theta = StabilityParameter(
        {**{v: scale * c for v, c in theta.entries}, source: 1, sink: -1}
    )
    return FramingResult(
        framed_quiver=framed_q,
        framed_dimension=framed_d,
        framed_stability=framed_theta,
        framing_scale=scale,
        framed_at=(i, j),
        source_vertex=source,
        sink_vertex=sink,
        base_quiver=q,
        base_dimension=d,
        base_stability=theta,
    )


def minimal_framing_scale(q: Quiver, d: DimensionVector, theta: StabilityParameter) -> int:
    """The framing scale used throughout: always 2 for integer parameters.

    The defining property is that a + N*theta(e) - b has the sign of theta(e)
    for every subdimension vector e with theta(e) != 0 and every
    a, b in {0, 1}.  Since |a - b| <= 1 and |theta(e)| >= 1, N = 2 always
    suffices; it is the least uniform choice (N = 1 breaks whenever some
    |theta(e)| = 1).  The property is re-verified exhaustively before
    returning, and by convention 2 is also returned when the quantifier is
    vacuous (theta = 0 on every subdimension vector).
    """
    if theta(d) != 0:
        raise PairingNonzeroError(f"theta(d) = {theta(d)}, expected 0")
    scale = 2
    for e in subdimension_vectors(q, d):
        value = theta(e)
        if value == 0:
            continue
        for a in (0, 1):
            for b in (0, 1):
                framed_value = a + scale * value - b
                if (framed_value > 0) != (value > 0):
                    raise AssertionError(
                        f"scale {scale} fails the sign property at e = {e}"
                    )
    return scale


def verify_framed_sign_partition(framing: FramingResult, base: SignPartition) -> FramedPartitionCheck:
    """Check the framed sign partition against its predicted description.

    Prediction, writing (a, e, b) for a subdimension vector of (1, d, 1):
    vectors over e with a positive base sign are positive, vectors over a
    negative base sign are negative, and over a zero base sign the framed
    sign is that of a - b.  The check enumerates every framed subdimension
    vector, computes the actual sign, and records all mismatches (in
    lexicographic order of the framed vertex order).  At scale >= 2 the
    prediction is exact; at scale 1 it fails whenever some |theta(e)| = 1.
    """
    fq = framing.framed_quiver
    ftheta = framing.framed_stability
    source, sink = framing.source_vertex, framing.sink_vertex
    base_vertices = framing.base_quiver.vertices

    membership: dict[DimensionVector, str] = {}
    for name, bucket in (("plus", base.plus), ("minus", base.minus), ("zero", base.zero)):
        for e in bucket:
            membership[e] = name

    discrepancies = []
    checked = 0
    for f in subdimension_vectors(fq, framing.framed_dimension):
        checked += 1
        values = f.as_dict()
        a, b = values[source], values[sink]
        e = DimensionVector({v: values[v] for v in base_vertices})
        base_bucket = membership[e]
        if base_bucket == "plus":
            expected = "plus"
        elif base_bucket == "minus":
            expected = "minus"
        else:
            expected = "plus" if (a, b) == (1, 0) else "minus" if (a, b) == (0, 1) else "zero"
        value = ftheta(f)
        actual = "plus" if value > 0 else "minus" if value < 0 else "zero"
        if actual != expected:
            discrepancies.append((f, expected, actual))
    return FramedPartitionCheck(
        passed=not discrepancies,
        checked=checked,
        discrepancies=tuple(discrepancies),
        scale=framing.framing_scale,
    )


def framed_ample_stability(d: DimensionVector, i: str, j: str) -> bool:
    """Ample stability of the framed datum: holds iff d_i > 1 and d_j > 1.

    Valid under the standing hypotheses on the base datum (the framing
    source/sink loci have codimension d_i and d_j).  This is the one place
    an ample-stability NO is decidable.
    """
    return d[i] > 1 and d[j] > 1


def framed_assumptions_report(framing: FramingResult) -> AssumptionsReport:
    """Assumptions report for the framed datum, with ample stability decided.

    The framed datum always keeps acyclicity and indivisibility, and its
    semistable and stable loci agree; theta-coprimality may nonetheless fail
    (it is only a sufficient condition, and (0, d, 0) always pairs to zero).
    Ample stability is decided exactly by the thin-framing criterion, so this
    report can say NO, unlike the base report.  A warning is emitted when the
    base datum does not verifiably satisfy its own hypotheses.
    """
    base_report = assumptions_report(
        framing.base_quiver, framing.base_dimension, framing.base_stability
    )
    if not base_report.all_verified():
        warnings.warn(
            "framed ample stability is only meaningful when the base datum "
            "satisfies the standing hypotheses; the base report does not "
            "verify them",
            stacklevel=2,
        )
    report = assumptions_report(
        framing.framed_quiver, framing.framed_dimension, framing.framed_stability
    )
    i, j = framing.framed_at
    ample = framed_ample_stability(framing.base_dimension, i, j)
    if report.strongly_amply_stable and not ample:
        raise AssertionError("strong ample stability cannot hold when ample stability fails")
    return AssumptionsReport(
        acyclic=report.acyclic,
        indivisible=report.indivisible,
        coprime=report.coprime,
        strongly_amply_stable=report.strongly_amply_stable,
        amply_stable=ThreeValued.YES if ample else ThreeValued.NO,
        failing_witnesses=report.failing_witnesses,
    )


def reduce(framing: FramingResult, d: DimensionVector) -> ReductionResult:
    """Reduce the framed datum, dropping framing vertices made redundant by
    thinness of d at the framed vertices.

    Case dispatch on (d_i > 1, d_j > 1), with |d| the total dimension and N
    the framing scale:

    * both big: keep the framed datum, mark the framing source and sink.
    * d_i > 1, d_j = 1: drop the sink; theta' is |d| at the framing source
      and (|d| + 1) * N * theta_k - 1 on base vertices; qinf is the dropped
      arrow j -> sink.
    * d_i = 1, d_j > 1: drop the source; theta' is (|d| + 1) * N * theta_k + 1
      on base vertices and -|d| at the framing sink; q0 is the dropped arrow
      source -> i.
    * both thin: the base datum itself, marked at (i, j), both connecting
      paths of length 1.

    In every case theta'(d') = 0, d' is thin at the marked vertices, and the
    reduced path space between the marked vertices matches the base path
    space from i to j.  The base datum must satisfy the decidable standing
    hypotheses (acyclicity, indivisibility, coprimality); ample stability is
    not decidable at the base level and is not gated on.
    """
    if d != framing.base_dimension:
        raise ValueError("dimension vector does not match the framed base datum")
    base_q = framing.base_quiver
    theta = framing.base_stability
    report = assumptions_report(base_q, d, theta)
    if not report.acyclic:
        raise AssumptionViolatedError("acyclicity")
    if not report.indivisible:
        raise AssumptionViolatedError("indivisibility")
    if not report.coprime:
        witness = report.failing_witnesses.get("coprime", (None,))[0]
        raise AssumptionViolatedError(
            "semistable = stable (theta-coprimality)",
            detail=f"theta vanishes on proper subdimension vector {witness}",
        )

    i, j = framing.framed_at
    scale = framing.framing_scale
    total = d.total()
    fq = framing.framed_quiver
    source, sink = framing.source_vertex, framing.sink_vertex
    n_base_arrows = len(base_q.arrows)
    source_arrow = n_base_arrows       # source -> i in the framed quiver
    sink_arrow = n_base_arrows + 1     # j -> sink in the framed quiver

    big_i, big_j = d[i] > 1, d[j] > 1
    if big_i and big_j:
        case = ReductionCase.BOTH_BIG
        reduced_q = fq
        reduced_d = framing.framed_dimension
        reduced_theta = framing.framed_stability
        marked = (source, sink)
        q0 = Path(source)
        qinf = Path(sink)
        arrow_map = tuple(range(len(fq.arrows)))
    elif big_i:
        case = ReductionCase.SOURCE_THIN
        reduced_q = Quiver((source, *base_q.vertices), (*base_q.arrows, (source, i)))
        reduced_d = DimensionVector({**d.as_dict(), source: 1})
        reduced_theta = StabilityParameter(
            {**{v: (total + 1) * scale * c - 1 for v, c in theta.entries}, source: total}
        )
        marked = (source, j)
        q0 = Path(source)
        qinf = Path(j, (sink_arrow,))
        arrow_map = tuple(range(n_base_arrows)) + (source_arrow,)
    elif big_j:
        case = ReductionCase.TARGET_THIN
        reduced_q = Quiver((*base_q.vertices, sink), (*base_q.arrows, (j, sink)))
        reduced_d = DimensionVector({**d.as_dict(), sink: 1})
        reduced_theta = StabilityParameter(
            {**{v: (total + 1) * scale * c + 1 for v, c in theta.entries}, sink: -total}
        )
        marked = (i, sink)
        q0 = Path(source, (source_arrow,))
        qinf = Path(sink)
        arrow_map = tuple(range(n_base_arrows)) + (sink_arrow,)
    else:
        case = ReductionCase.BOTH_THIN
        reduced_q = base_q
        reduced_d = d
        reduced_theta = theta
        marked = (i, j)
        q0 = Path(source, (source_arrow,))
        qinf = Path(j, (sink_arrow,))
        arrow_map = tuple(range(n_base_arrows))

    result = ReductionResult(
        reduced_quiver=reduced_q,
        reduced_dimension=reduced_d,
        reduced_stability=reduced_theta,
        marked_vertices=marked,
        connecting_paths=(q0, qinf),
        case_tag=case,
        arrow_map=arrow_map,
        framing=framing,
    )
    check = verify_reduction_pairing(result)
    if not check.passed:
        raise AssertionError(f"reduction invariants failed: {check.failures}")
    return result


def verify_reduction_pairing(result: ReductionResult) -> ReductionPairingCheck:
    """Sanity layer over a reduction: zero pairing, thin marks, path counts."""
    failures = []
    theta = result.reduced_stability
    d = result.reduced_dimension
    i_mark, j_mark = result.marked_vertices
    if theta(d) != 0:
        failures.append(f"theta'(d') = {theta(d)} != 0")
    if d[i_mark] != 1:
        failures.append(f"d' is not thin at {i_mark!r}")
    if d[j_mark] != 1:
        failures.append(f"d' is not thin at {j_mark!r}")
    reduced_count = path_count_matrix(result.reduced_quiver).count(i_mark, j_mark)
    framing = result.framing
    base_count = path_count_matrix(framing.base_quiver).count(*framing.framed_at)
    if reduced_count != base_count:
        failures.append(f"path count {reduced_count} != base path count {base_count}")
    return ReductionPairingCheck(
        passed=not failures,
        failures=tuple(failures),
        reduced_path_count=reduced_count,
        base_path_count=base_count,
    )


def reduction_path_map(result: ReductionResult) -> dict[Path, Path]:
    """The map p -> qinf . p . q0 from marked paths in the reduced quiver to
    source-to-sink paths in the framed quiver, by explicit enumeration.

    Used to certify that the map is a bijection onto the framed path space.
    """
    framing = result.framing
    i_mark, j_mark = result.marked_vertices
    q0, qinf = result.connecting_paths
    mapping: dict[Path, Path] = {}
    for p in enumerate_paths(result.reduced_quiver, i_mark, j_mark):
        translated = tuple(result.arrow_map[k] for k in p.arrows)
        mapping[p] = Path(framing.source_vertex, q0.arrows + translated + qinf.arrows)
    return mapping
