"""Standard gluing patterns built from the classes alpha_k in H_{2k}(Gamma_{1,2k+1}).

Each builder returns a :class:`GluingPattern` with automatic class modules.
"""

from __future__ import annotations

from .assembly import GluingPattern, MoritaGraph, Vertex

__all__ = [
    "alpha_pair",
    "self_gluing",
    "morita_pattern",
    "morita_graph",
    "eisenstein_pattern",
    "mss_pattern",
    "rank_one_stabilization",
    "maximal_torus_chain",
]


def _alpha(vid: str, k: int) -> Vertex:
    return Vertex(vid, 1, 2 * k + 1, 2 * k)


def alpha_pair(k1: int, k2: int) -> GluingPattern:
    """alpha_k1 and alpha_k2 joined along one pair of leaves."""
    return GluingPattern((_alpha("a", k1), _alpha("b", k2)), ((("a", 1), ("b", 1)),))


def self_gluing(s: int, degree: int) -> GluingPattern:
    """Two leaves of X_{1,s} glued to each other."""
    return GluingPattern((Vertex("x", 1, s, degree),), ((("x", 1), ("x", 2)),))


def morita_pattern(k: int) -> GluingPattern:
    """Two copies of alpha_k glued along all 2k+1 leaves (the Morita class in Out(F_{2k+2}))."""
    pairs = tuple((("a", j), ("b", j)) for j in range(1, 2 * k + 2))
    return GluingPattern((_alpha("a", k), _alpha("b", k)), pairs)


def morita_graph(valences: list[int], edges: list[tuple[str, str | None]] | None = None) -> MoritaGraph:
    """Graph with rank-one vertices v0, v1, ...; by default two vertices joined by all their edges."""
    ranks = {f"v{i}": 1 for i in range(len(valences))}
    if edges is None:
        if len(valences) != 2 or valences[0] != valences[1]:
            raise ValueError("default edges need two equal valences")
        edges = [("v0", "v1")] * valences[0]
    return MoritaGraph(ranks, tuple(edges))


def eisenstein_pattern(k: int) -> GluingPattern:
    """X_{2,2k+2} in degree 2k+3 glued to alpha_k along 2k+1 leaves, leaving one leaf free."""
    pairs = tuple((("e", j), ("a", j)) for j in range(1, 2 * k + 2))
    return GluingPattern((Vertex("e", 2, 2 * k + 2, 2 * k + 3), _alpha("a", k)), pairs)


def mss_pattern(k: int) -> GluingPattern:
    """alpha_k and alpha_{k+1} sharing 2k edges, with the remaining four leaves glued to X_{2,4} in degree 5."""
    left, right, mid = _alpha("L", k), _alpha("R", k + 1), Vertex("M", 2, 4, 5)
    pairs = [(("L", j), ("R", j)) for j in range(1, 2 * k + 1)]
    pairs.append((("L", 2 * k + 1), ("M", 1)))
    pairs += [(("R", 2 * k + j), ("M", j + 1)) for j in range(1, 4)]
    return GluingPattern((left, right, mid), tuple(pairs))


def rank_one_stabilization(s: int, i: int) -> GluingPattern:
    """X_{1,s} in degree i glued to the unit class of X_{1,2}."""
    return GluingPattern(
        (Vertex("x", 1, s, i), Vertex("t", 1, 2, 0)),
        ((("x", 1), ("t", 1)),),
    )


def maximal_torus_chain(n: int, k: int) -> GluingPattern:
    """X_{1,2n-1} in degree k with one self-pairing, landing in Gamma_{2,2n-3}."""
    return self_gluing(2 * n - 1, k)
