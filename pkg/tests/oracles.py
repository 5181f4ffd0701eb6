"""Independent oracles used to cross-check library results.

These deliberately avoid the library's own algorithms: path counting is a
plain recursive walk on the arrow list, connectivity is union-find, and
subspace counts come from the closed-form product formula.
"""

from __future__ import annotations

from quivercalc import Quiver


def dfs_path_count(q: Quiver, src: str, dst: str) -> int:
    """Count directed paths src -> dst by exhaustive walk (acyclic input)."""

    def walk(at: str) -> int:
        total = 1 if at == dst else 0
        for s, t in q.arrows:
            if s == at:
                total += walk(t)
        return total

    return walk(src)


def union_find_component_count(q: Quiver) -> int:
    parent = {v: v for v in q.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s, t in q.arrows:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[rs] = rt
    return len({find(v) for v in q.vertices})


def gaussian_binomial_formula(n: int, k: int, q: int) -> int:
    """[n choose k]_q as a quotient of q-factorials (always integral)."""
    if k < 0 or k > n:
        return 0

    def q_factorial(m: int) -> int:
        out = 1
        for t in range(1, m + 1):
            out *= (q**t - 1) // (q - 1)
        return out

    num = q_factorial(n)
    den = q_factorial(k) * q_factorial(n - k)
    assert num % den == 0
    return num // den
