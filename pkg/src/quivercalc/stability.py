"""Dimension-vector-level stability decisions.

Everything here is a statement about the pair (d, theta) alone: the sign
partition of subdimension vectors, theta-coprimality (the implementable
sufficient condition for "semistable = stable"), the strong ample stability
criterion, and an aggregated report of the standing hypotheses.

The condition mu(e) >= mu(d - e) is implemented as theta(e) >= 0, which is
algebraically equivalent when theta(d) = 0 and both slopes are defined, and
keeps the hot loop in integer arithmetic.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .core import DimensionVector, Quiver, StabilityParameter, is_acyclic
from .errors import PairingNonzeroError

__all__ = [
    "SignPartition",
    "ThreeValued",
    "AssumptionsReport",
    "subdimension_vectors",
    "sign_partition",
    "is_theta_coprime",
    "is_strongly_amply_stable",
    "assumptions_report",
]


class ThreeValued(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SignPartition:
    """Partition of {e : 0 <= e <= d} by the sign of theta(e).

    The three lists are disjoint, jointly exhaustive, and enumerated in
    lexicographic order of the quiver's vertex order, so cardinalities sum to
    prod_i (d_i + 1).
    """

    plus: tuple[DimensionVector, ...]
    minus: tuple[DimensionVector, ...]
    zero: tuple[DimensionVector, ...]

    def size(self) -> int:
        return len(self.plus) + len(self.minus) + len(self.zero)


@dataclass(frozen=True)
class AssumptionsReport:
    """Aggregated verdicts on the standing hypotheses for a datum (q, d, theta).

    ``coprime`` is the implementable sufficient condition for "every
    semistable representation of dimension vector d is stable".  Exact ample
    stability is *not* decided here: ``amply_stable`` is YES exactly when the
    strong sufficient criterion holds and UNKNOWN otherwise (a NO can only be
    produced by the framing module's thin-framing special case).
    ``failing_witnesses`` maps a failed check name to the subdimension vectors
    that violate it, lexicographically first.
    """

    acyclic: bool
    indivisible: bool
    coprime: bool
    strongly_amply_stable: bool
    amply_stable: ThreeValued
    failing_witnesses: Mapping[str, tuple[DimensionVector, ...]] = field(default_factory=dict)

    def all_verified(self) -> bool:
        """True when every hypothesis is positively verified (amply stable
        via the strong criterion)."""
        return (
            self.acyclic
            and self.indivisible
            and self.coprime
            and self.strongly_amply_stable
            and self.amply_stable is ThreeValued.YES
        )

    def decidable_ok(self) -> bool:
        """True when the exactly decidable hypotheses (acyclicity,
        indivisibility, coprimality) all hold."""
        return self.acyclic and self.indivisible and self.coprime


def _require_zero_pairing(theta: StabilityParameter, d: DimensionVector) -> None:
    pairing = theta(d)
    if pairing != 0:
        raise PairingNonzeroError(f"theta(d) = {pairing}, expected 0")


def _subvector_tuples(dv: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(c + 1) for c in dv))


def _as_vector(q: Quiver, values: tuple[int, ...]) -> DimensionVector:
    return DimensionVector(dict(zip(q.vertices, values)))


def subdimension_vectors(q: Quiver, d: DimensionVector) -> Iterator[DimensionVector]:
    """All e with 0 <= e <= d, lexicographic in the quiver's vertex order."""
    for values in _subvector_tuples(d.aligned(q.vertices)):
        yield _as_vector(q, values)


def sign_partition(q: Quiver, d: DimensionVector, theta: StabilityParameter) -> SignPartition:
    """Split every subdimension vector of d by the sign of theta(e)."""
    _require_zero_pairing(theta, d)
    tv = theta.aligned(q.vertices)
    plus, minus, zero = [], [], []
    for e in _subvector_tuples(d.aligned(q.vertices)):
        value = sum(a * b for a, b in zip(tv, e))
        (plus if value > 0 else minus if value < 0 else zero).append(_as_vector(q, e))
    return SignPartition(tuple(plus), tuple(minus), tuple(zero))


def is_theta_coprime(
    q: Quiver, d: DimensionVector, theta: StabilityParameter
) -> tuple[bool, DimensionVector | None]:
    """True iff theta(e) != 0 for every proper nonzero e <= d.

    On failure the lexicographically first violating e is returned.
    Coprimality forces "semistable = stable" in dimension vector d.
    """
    _require_zero_pairing(theta, d)
    dv = d.aligned(q.vertices)
    tv = theta.aligned(q.vertices)
    zero = (0,) * len(dv)
    for e in _subvector_tuples(dv):
        if e == zero or e == dv:
            continue
        if sum(a * b for a, b in zip(tv, e)) == 0:
            return False, _as_vector(q, e)
    return True, None


def is_strongly_amply_stable(
    q: Quiver, d: DimensionVector, theta: StabilityParameter
) -> tuple[bool, tuple[DimensionVector, ...]]:
    """Strong ample stability: <e, d-e> <= -2 whenever mu(e) >= mu(d-e).

    The quantifier runs over proper nonzero subdimension vectors (the slope
    condition is vacuous or degenerate at the endpoints), and as stated the
    slope inequality is weak, i.e. equality theta(e) = 0 is included.  All
    violating e are returned, in lexicographic order.
    """
    _require_zero_pairing(theta, d)
    cert = is_acyclic(q)
    if not cert:
        from .errors import CyclicQuiverError

        raise CyclicQuiverError("strong ample stability is defined for acyclic quivers")
    dv = d.aligned(q.vertices)
    tv = theta.aligned(q.vertices)
    arrow_pairs = q.arrow_indices
    zero = (0,) * len(dv)
    violations = []
    for e in _subvector_tuples(dv):
        if e == zero or e == dv:
            continue
        if sum(a * b for a, b in zip(tv, e)) < 0:
            continue
        complement = tuple(a - b for a, b in zip(dv, e))
        form = sum(a * b for a, b in zip(e, complement))
        for s, t in arrow_pairs:
            form -= e[s] * complement[t]
        if form > -2:
            violations.append(_as_vector(q, e))
    return not violations, tuple(violations)


def assumptions_report(q: Quiver, d: DimensionVector, theta: StabilityParameter) -> AssumptionsReport:
    """Check acyclicity, indivisibility, coprimality, and strong ample
    stability, and aggregate the verdicts.

    Failures are report content, not errors; a nonzero pairing theta(d) is
    the one exception and still raises.  ``amply_stable`` is YES iff the
    strong criterion holds, UNKNOWN otherwise: the exact decision would need
    stratification machinery that is out of scope here.
    """
    _require_zero_pairing(theta, d)
    acyclic = bool(is_acyclic(q))
    indivisible = d.is_indivisible()
    witnesses: dict[str, tuple[DimensionVector, ...]] = {}

    coprime, coprime_witness = is_theta_coprime(q, d, theta)
    if not coprime and coprime_witness is not None:
        witnesses["coprime"] = (coprime_witness,)

    if acyclic:
        strong, violations = is_strongly_amply_stable(q, d, theta)
        if violations:
            witnesses["strongly_amply_stable"] = violations
    else:
        strong = False

    amply = ThreeValued.YES if strong else ThreeValued.UNKNOWN
    return AssumptionsReport(
        acyclic=acyclic,
        indivisible=indivisible,
        coprime=coprime,
        strongly_amply_stable=strong,
        amply_stable=amply,
        failing_witnesses=witnesses,
    )
