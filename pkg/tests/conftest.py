import random

import pytest
from hypothesis import strategies as st

from quivercalc import DimensionVector, Quiver, StabilityParameter, canonical_stability

# --- fixed fixtures: the examples every module keeps coming back to ----------


@pytest.fixture
def three_vertex() -> Quiver:
    """Vertices 1, 2, 3 with arrows 1->2, two parallel 2->3, and 1->3."""
    return Quiver(("1", "2", "3"), (("1", "2"), ("2", "3"), ("2", "3"), ("1", "3")))


@pytest.fixture
def kronecker() -> Quiver:
    return Quiver(("1", "2"), (("1", "2"), ("1", "2")))


@pytest.fixture
def three_kronecker() -> Quiver:
    return Quiver(("1", "2"), (("1", "2"), ("1", "2"), ("1", "2")))


@pytest.fixture
def a2() -> Quiver:
    return Quiver(("1", "2"), (("1", "2"),))


@pytest.fixture
def a3() -> Quiver:
    return Quiver(("1", "2", "3"), (("1", "2"), ("2", "3")))


def thin(q: Quiver) -> DimensionVector:
    return DimensionVector({v: 1 for v in q.vertices})


# --- random generation helpers (seeded, used by catalogs) --------------------


def random_acyclic_quiver(rng: random.Random, max_vertices=6, max_parallel=2, connected=False) -> Quiver:
    n = rng.randint(2 if connected else 1, max_vertices)
    vertices = tuple(f"v{k}" for k in range(n))
    arrows: list[tuple[str, str]] = []
    counts: dict[tuple[str, str], int] = {}
    if connected:
        for k in range(1, n):
            pair = (vertices[rng.randrange(k)], vertices[k])
            arrows.append(pair)
            counts[pair] = counts.get(pair, 0) + 1
    for i in range(n):
        for j in range(i + 1, n):
            pair = (vertices[i], vertices[j])
            room = max_parallel - counts.get(pair, 0)
            for _ in range(min(room, rng.randint(0, 2))):
                arrows.append(pair)
                counts[pair] = counts.get(pair, 0) + 1
    return Quiver(vertices, arrows)


def random_zero_pairing_parameter(rng: random.Random, q: Quiver, d: DimensionVector, spread=3) -> StabilityParameter:
    """A random integer parameter with theta(d) = 0, from kernel generators."""
    support = [v for v in q.vertices if d[v] > 0]
    coeffs = {v: 0 for v in q.vertices}
    for v in q.vertices:
        if v not in support:
            coeffs[v] = rng.randint(-spread, spread)
    for u, v in zip(support, support[1:]):
        c = rng.randint(-spread, spread)
        coeffs[u] += c * d[v]
        coeffs[v] -= c * d[u]
    return StabilityParameter(coeffs)


def strong_catalog_instance(rng: random.Random):
    """One connected acyclic instance passing coprimality and the strong
    ample stability criterion, by rejection sampling; None when the draw
    fails (caller retries)."""
    from quivercalc import assumptions_report

    q = random_acyclic_quiver(rng, connected=True)
    d = DimensionVector({v: rng.randint(1, 2) for v in q.vertices})
    if not d.is_indivisible():
        return None
    candidates = [canonical_stability(q, d)] + [
        random_zero_pairing_parameter(rng, q, d) for _ in range(3)
    ]
    for theta in candidates:
        if theta(d) != 0:
            continue
        report = assumptions_report(q, d, theta)
        if report.coprime and report.strongly_amply_stable:
            return q, d, theta
    return None


# --- hypothesis strategies ----------------------------------------------------


@st.composite
def acyclic_quivers(draw, max_vertices=5, max_parallel=2):
    n = draw(st.integers(1, max_vertices))
    vertices = tuple(f"v{k}" for k in range(n))
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            for _ in range(draw(st.integers(0, max_parallel))):
                arrows.append((vertices[i], vertices[j]))
    return Quiver(vertices, arrows)


@st.composite
def quiver_with_dimensions(draw, max_entry=3, min_entry=0):
    q = draw(acyclic_quivers())
    d = DimensionVector({v: draw(st.integers(min_entry, max_entry)) for v in q.vertices})
    return q, d


@st.composite
def quiver_with_datum(draw, max_entry=3, min_entry=0, spread=3):
    q, d = draw(quiver_with_dimensions(max_entry=max_entry, min_entry=min_entry))
    support = [v for v in q.vertices if d[v] > 0]
    coeffs = {v: 0 for v in q.vertices}
    for v in q.vertices:
        if v not in support:
            coeffs[v] = draw(st.integers(-spread, spread))
    for u, v in zip(support, support[1:]):
        c = draw(st.integers(-spread, spread))
        coeffs[u] += c * d[v]
        coeffs[v] -= c * d[u]
    return q, d, StabilityParameter(coeffs)
