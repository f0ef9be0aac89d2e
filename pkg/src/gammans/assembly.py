"""Gluing patterns and vanishing verdicts for assembly maps.

Gluing leaves of graphs X_{n_i,s_i} in pairs gives a homomorphism
Gamma_{n_1,s_1} x ... x Gamma_{n_k,s_k} -> Gamma_{n,s} and hence an assembly
map on homology.  The engine here never proves that such a map is nonzero; it
only looks for representation-theoretic reasons that it must vanish:

(a) factor-zero      some factor homology group is zero;
(b) degree-bound     the target group is zero in that degree;
(c) full-coinvariant two vertices glued along all their leaves, and the
                     S_t-coinvariants of the tensor product vanish;
(d) induced-support  the S_s-module induced from the unglued leaves shares no
                     irreducible with the target;
(e) subgluing        some connected partial gluing with rank <= 2 is already
                     zero, and the full map factors through it.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import (
    DisconnectedPatternError,
    ForbiddenVertexError,
    GammaError,
    LeafIndexError,
    LeafReusedError,
    PatternError,
    PatternSyntaxError,
)
from .gamma import gamma_cohomology
from .partitions import Partition, format_partition
from .rep_ring import ModuleSum, coinvariant_dim, induction_product, parse_module_sum, restrict

__all__ = [
    "AUTO",
    "UNKNOWN",
    "FORCED_ZERO",
    "INCONCLUSIVE",
    "DEFAULT_BUDGET",
    "Vertex",
    "GluingPattern",
    "Signature",
    "Verdict",
    "MoritaGraph",
    "validate_pattern",
    "assembly_verdict",
    "morita_verdict",
    "coinvariant_pairing",
    "parse_pattern",
    "load_pattern",
    "format_pattern",
]

AUTO = "auto"
UNKNOWN = "unknown"
FORCED_ZERO = "ForcedZero"
INCONCLUSIVE = "Inconclusive"
DEFAULT_BUDGET = 10_000

Leaf = tuple[str, int]
ModuleInput = Union[ModuleSum, str]


@dataclass(frozen=True)
class Vertex:
    id: str
    rank: int
    leaves: int
    degree: int
    module: ModuleInput = AUTO

    def resolved_module(self) -> ModuleSum | None:
        """The class module, or None when it cannot be determined."""
        if isinstance(self.module, ModuleSum):
            return self.module
        if self.module == AUTO and self.rank <= 2:
            return gamma_cohomology(self.rank, self.leaves, self.degree)
        return None

    def label(self) -> str:
        return f"{self.id}=X({self.rank},{self.leaves})[deg {self.degree}]"


@dataclass(frozen=True)
class GluingPattern:
    vertices: tuple[Vertex, ...]
    pairings: tuple[tuple[Leaf, Leaf], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "pairings", tuple((tuple(a), tuple(b)) for a, b in self.pairings)
        )

    def vertex(self, vid: str) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise PatternError(f"unknown vertex {vid!r}")

    def glued_count(self) -> Counter:
        """Number of glued leaves per vertex id."""
        counts: Counter = Counter()
        for a, b in self.pairings:
            counts[a[0]] += 1
            counts[b[0]] += 1
        return counts


class Signature(NamedTuple):
    n: int
    s: int
    degree: int
    vcd: int

    def __str__(self):
        return f"n={self.n} s={self.s} degree={self.degree} vcd={self.vcd}"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    signature: Signature | None
    criterion: str | None = None
    trace: tuple[str, ...] = ()
    witnesses: tuple[tuple[Partition, int, int], ...] = ()  # (lam, mult in domain, mult in target)
    intermediate: Signature | None = None
    budget_exhausted: bool = False

    @property
    def forced_zero(self) -> bool:
        return self.outcome == FORCED_ZERO

    def report(self) -> str:
        lines = [f"verdict: {self.outcome}" + (f" ({self.criterion})" if self.criterion else "")]
        lines += [f"  {t}" for t in self.trace]
        for lam, a, b in self.witnesses:
            lines.append(f"  witness {format_partition(lam)}: domain {a}, target {b}")
        if self.budget_exhausted:
            lines.append("  subgluing budget exhausted")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Validation


def validate_pattern(p: GluingPattern) -> Signature:
    """Check the pattern and return the signature of the glued graph."""
    if not p.vertices:
        raise PatternError("pattern has no vertices")
    ids = [v.id for v in p.vertices]
    if len(set(ids)) != len(ids):
        raise PatternError(f"duplicate vertex ids in {ids}")
    by_id = {v.id: v for v in p.vertices}
    for v in p.vertices:
        if v.rank < 0 or v.leaves < 0 or v.degree < 0:
            raise PatternError(f"negative rank, leaf count or degree at {v.id}")
        if v.rank == 0 and v.leaves < 3:
            raise ForbiddenVertexError(f"rank-0 vertex {v.id} needs at least 3 leaves")
        if isinstance(v.module, ModuleSum):
            if v.module.degree != v.leaves:
                raise PatternError(f"module at {v.id} has degree {v.module.degree}, expected {v.leaves}")
        elif v.module not in (AUTO, UNKNOWN):
            raise PatternError(f"bad module value {v.module!r} at {v.id}")

    used: set[Leaf] = set()
    parent = {vid: vid for vid in ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in p.pairings:
        for vid, leaf in (a, b):
            if vid not in by_id:
                raise PatternError(f"pairing refers to unknown vertex {vid!r}")
            if not 1 <= leaf <= by_id[vid].leaves:
                raise LeafIndexError(f"leaf {vid}.{leaf} out of range 1..{by_id[vid].leaves}")
            if (vid, leaf) in used:
                raise LeafReusedError(f"leaf {vid}.{leaf} is glued more than once")
            used.add((vid, leaf))
        parent[find(a[0])] = find(b[0])
    if len({find(x) for x in ids}) != 1:
        raise DisconnectedPatternError("pattern graph is not connected")

    e, nv = len(p.pairings), len(p.vertices)
    n = sum(v.rank for v in p.vertices) + e - nv + 1
    s = sum(v.leaves for v in p.vertices) - 2 * e
    degree = sum(v.degree for v in p.vertices)
    return Signature(n, s, degree, 2 * n + s - 3)


# ---------------------------------------------------------------------------
# Verdicts


def coinvariant_pairing(a: ModuleSum, b: ModuleSum) -> int:
    """Dimension of (A (x) B)_{S_t}; an assembly map gluing all leaves of two vertices factors through it."""
    return coinvariant_dim(a, b)


class _Local(NamedTuple):
    criterion: str | None
    trace: tuple[str, ...]
    witnesses: tuple
    support_evaluated: bool


def _local_criteria(p: GluingPattern, sig: Signature, modules: Mapping[str, ModuleSum | None]) -> _Local:
    # (a)
    for v in p.vertices:
        mod = modules[v.id]
        if mod is not None and mod.is_zero():
            return _Local("factor-zero", (f"H_{v.degree}(Gamma_{v.rank},{v.leaves}) = 0 at vertex {v.id}",), (), False)
    # (b)
    if sig.degree > sig.vcd and sig.n > 0:
        return _Local("degree-bound", (f"degree {sig.degree} exceeds vcd {sig.vcd} of Gamma_{sig.n},{sig.s}",), (), False)
    target = None
    if sig.n <= 2:
        target = gamma_cohomology(sig.n, sig.s, sig.degree)
        if target.is_zero():
            return _Local("degree-bound", (f"H_{sig.degree}(Gamma_{sig.n},{sig.s}) = 0",), (), False)
    # (c)
    glued_to: dict[str, Counter] = {v.id: Counter() for v in p.vertices}
    for a, b in p.pairings:
        glued_to[a[0]][b[0]] += 1
        glued_to[b[0]][a[0]] += 1
    for u, v in combinations(p.vertices, 2):
        if (
            u.leaves == v.leaves
            and glued_to[u.id][v.id] == u.leaves
            and glued_to[v.id][u.id] == v.leaves
            and modules[u.id] is not None
            and modules[v.id] is not None
        ):
            dim = coinvariant_pairing(modules[u.id], modules[v.id])
            if dim == 0:
                return _Local(
                    "full-coinvariant",
                    (f"({modules[u.id]}) and ({modules[v.id]}) share no irreducible; S_{u.leaves}-coinvariants vanish",),
                    (),
                    False,
                )
    # (d)
    if target is None or any(m is None for m in modules.values()):
        return _Local(None, ("induced-support test not evaluable",), (), False)
    glued = p.glued_count()
    domain = ModuleSum.irreducible(())
    for v in p.vertices:
        domain = induction_product(domain, restrict(modules[v.id], v.leaves - glued[v.id]))
    common = [lam for lam in domain.support() if target.multiplicity(lam)]
    if not common:
        return _Local(
            "induced-support",
            (f"induced domain {domain} and target {target} have disjoint support",),
            (),
            True,
        )
    witnesses = tuple((lam, domain.multiplicity(lam), target.multiplicity(lam)) for lam in common)
    return _Local(None, (f"induced domain meets target in {len(common)} irreducible(s)",), witnesses, True)


def _subpattern(p: GluingPattern, ids: tuple[str, ...], pairings: Iterable) -> GluingPattern:
    keep = set(ids)
    return GluingPattern(tuple(v for v in p.vertices if v.id in keep), tuple(pairings))


def _connected(ids: tuple[str, ...], edges: Iterable[tuple[str, str]]) -> bool:
    parent = {x: x for x in ids}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(x) for x in ids}) == 1


def _subgluings(p: GluingPattern, max_rank: int = 2):
    """Connected partial gluings of rank <= max_rank, smallest first, one per leaf-relabelling class.

    Leaves of one vertex are interchangeable for every criterion, so a partial
    gluing is determined by how many pairings it uses between each pair of
    vertices; one representative per class is yielded.
    """
    classes: dict[tuple[str, str], list] = {}
    order = {v.id: i for i, v in enumerate(p.vertices)}
    for a, b in p.pairings:
        key = tuple(sorted((a[0], b[0]), key=order.__getitem__))
        classes.setdefault(key, []).append((a, b))
    rank = {v.id: v.rank for v in p.vertices}
    total_pairings = len(p.pairings)
    all_ids = tuple(v.id for v in p.vertices)
    for k in range(1, len(all_ids) + 1):
        for ids in combinations(all_ids, k):
            inside = set(ids)
            keys = [key for key in classes if key[0] in inside and key[1] in inside]
            max_edges = max_rank - sum(rank[x] for x in ids) + k - 1
            if max_edges < max(k - 1, 1) or not keys:
                continue
            ranges = [range(len(classes[key]) + 1) for key in keys]
            for counts in product(*ranges):
                e = sum(counts)
                if e < max(k - 1, 1) or e > max_edges:
                    continue
                if k == len(all_ids) and e == total_pairings:
                    continue
                edges = [key for key, c in zip(keys, counts) if c]
                if not _connected(ids, edges):
                    continue
                chosen = [pair for key, c in zip(keys, counts) for pair in classes[key][:c]]
                yield _subpattern(p, ids, chosen), dict(zip(keys, counts))


def assembly_verdict(p: GluingPattern, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Decide whether representation theory forces the assembly map to vanish."""
    sig = validate_pattern(p)
    modules = {v.id: v.resolved_module() for v in p.vertices}
    local = _local_criteria(p, sig, modules)
    if local.criterion is not None:
        return Verdict(FORCED_ZERO, sig, local.criterion, local.trace)

    trace = list(local.trace)
    exhausted = False
    evaluated = 0
    for sub, counts in _subgluings(p):
        if evaluated >= budget:
            exhausted = True
            break
        evaluated += 1
        sub_sig = validate_pattern(sub)
        sub_local = _local_criteria(sub, sub_sig, modules)
        if sub_local.criterion is not None:
            desc = ", ".join(
                f"{c}x {a}-{b}" if a != b else f"{c}x self-gluing at {a}" for (a, b), c in counts.items() if c
            )
            return Verdict(
                FORCED_ZERO,
                sig,
                "subgluing",
                (
                    f"partial gluing [{desc}] of {', '.join(v.id for v in sub.vertices)} lands in Gamma_{sub_sig.n},{sub_sig.s} degree {sub_sig.degree}",
                    f"intermediate criterion {sub_local.criterion}: " + "; ".join(sub_local.trace),
                ),
                intermediate=sub_sig,
            )
    trace.append(f"{evaluated} partial gluing(s) of rank <= 2 checked, none forced zero")
    return Verdict(INCONCLUSIVE, sig, None, tuple(trace), local.witnesses, budget_exhausted=exhausted)


# ---------------------------------------------------------------------------
# Generalized Morita classes


@dataclass(frozen=True)
class MoritaGraph:
    """A graph G whose vertices are labelled rank 0 or rank 1.

    ``edges`` holds pairs of vertex ids; ``(v, None)`` is a hair (a leaf of G).
    A rank-one vertex of valence 2k+1 carries the top class of Gamma_{1,2k+1},
    a rank-zero vertex of valence k the unit of H_0(Gamma_{0,k}).
    """

    ranks: Mapping[str, int]
    edges: tuple[tuple[str, str | None], ...] = field(default=())

    def valences(self) -> dict[str, int]:
        val = Counter()
        for a, b in self.edges:
            val[a] += 1
            if b is not None:
                val[b] += 1
        return {v: val[v] for v in self.ranks}

    def to_pattern(self) -> GluingPattern:
        val = self.valences()
        vertices = []
        for vid, r in self.ranks.items():
            if r == 1:
                vertices.append(Vertex(vid, 1, val[vid], val[vid] - 1))
            else:
                vertices.append(Vertex(vid, 0, val[vid], 0))
        next_leaf = Counter()
        pairings = []
        for a, b in self.edges:
            next_leaf[a] += 1
            first = (a, next_leaf[a])
            if b is None:
                continue
            next_leaf[b] += 1
            pairings.append((first, (b, next_leaf[b])))
        return GluingPattern(tuple(vertices), tuple(pairings))


def morita_verdict(graph: MoritaGraph) -> Verdict:
    """Vanishing test for generalized Morita classes built from rank-0 and rank-1 vertices."""
    val = graph.valences()
    for vid, r in graph.ranks.items():
        if r not in (0, 1):
            raise PatternError(f"vertex {vid} must have rank 0 or 1")
        if r == 1 and (val[vid] < 3 or val[vid] % 2 == 0):
            raise GammaError(f"rank-one vertex {vid} has valence {val[vid]}; must be odd and >= 3")
    for a, b in graph.edges:
        if a not in graph.ranks or (b is not None and b not in graph.ranks):
            raise PatternError(f"edge ({a}, {b}) refers to an unknown vertex")
        if b is not None and a != b and graph.ranks[a] == 0 and graph.ranks[b] == 0:
            raise PatternError(f"rank-zero vertices {a} and {b} are adjacent; collapse the edge first")
    sig = validate_pattern(graph.to_pattern())
    for a, b in graph.edges:
        if a == b and graph.ranks[a] == 1:
            return Verdict(FORCED_ZERO, sig, "morita-loop", (f"edge loops at rank-one vertex {a}",))
    one_valences = sorted({val[v] for v, r in graph.ranks.items() if r == 1})
    if len(one_valences) > 1:
        return Verdict(
            FORCED_ZERO,
            sig,
            "morita-valence",
            (f"rank-one vertices of different valences {one_valences}",),
        )
    return Verdict(INCONCLUSIVE, sig, None, ("all rank-one valences equal, no loops",))


# ---------------------------------------------------------------------------
# Pattern files


_ID = r"[A-Za-z_][A-Za-z0-9_\-]*"
_VERTEX_KEYS = ("rank", "leaves", "degree")
_LEAF = re.compile(rf"^({_ID})\.(\d+)$")


def parse_pattern(text: str) -> GluingPattern:
    """Parse the line-oriented pattern format.

    ::

        # comment
        vertex <id> rank=<int> leaves=<int> degree=<int> [module=<sum>|module=unknown]
        glue <id>.<leaf> <id>.<leaf>

    ``module=`` must be the last key; its value runs to the end of the line
    (module sums contain spaces).  Leaves are numbered from 1.
    """
    vertices: list[Vertex] = []
    pairings: list[tuple[Leaf, Leaf]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        try:
            if word == "vertex":
                vertices.append(_parse_vertex(rest))
            elif word == "glue":
                pairings.append(_parse_glue(rest))
            else:
                raise PatternSyntaxError(f"unknown directive {word!r}")
        except GammaError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    return GluingPattern(tuple(vertices), tuple(pairings))


def _parse_vertex(rest: str) -> Vertex:
    head, sep, module_text = rest.partition("module=")
    tokens = head.split()
    if not tokens or not re.fullmatch(_ID, tokens[0]):
        raise PatternSyntaxError(f"bad vertex id in {rest!r}")
    vid, values = tokens[0], {}
    for tok in tokens[1:]:
        key, eq, value = tok.partition("=")
        if not eq or key not in _VERTEX_KEYS:
            raise PatternSyntaxError(f"unknown key {tok!r}")
        if key in values:
            raise PatternSyntaxError(f"duplicate key {key!r}")
        if not value.isdigit():
            raise PatternSyntaxError(f"{key} must be a non-negative integer, got {value!r}")
        values[key] = int(value)
    missing = [k for k in _VERTEX_KEYS if k not in values]
    if missing:
        raise PatternSyntaxError(f"vertex {vid} missing {', '.join(missing)}")
    module: ModuleInput = AUTO
    if sep:
        module_text = module_text.strip()
        if module_text == UNKNOWN:
            module = UNKNOWN
        else:
            module = parse_module_sum(module_text, values["leaves"])
    return Vertex(vid, values["rank"], values["leaves"], values["degree"], module)


def _parse_glue(rest: str) -> tuple[Leaf, Leaf]:
    tokens = rest.split()
    if len(tokens) != 2:
        raise PatternSyntaxError(f"glue needs two leaves, got {rest!r}")
    leaves = []
    for tok in tokens:
        m = _LEAF.match(tok)
        if m is None:
            raise PatternSyntaxError(f"bad leaf reference {tok!r}")
        leaves.append((m.group(1), int(m.group(2))))
    return leaves[0], leaves[1]


def load_pattern(path: str | Path) -> GluingPattern:
    return parse_pattern(Path(path).read_text())


def format_pattern(p: GluingPattern) -> str:
    lines = []
    for v in p.vertices:
        line = f"vertex {v.id} rank={v.rank} leaves={v.leaves} degree={v.degree}"
        if isinstance(v.module, ModuleSum):
            line += f" module={v.module}"
        elif v.module == UNKNOWN:
            line += " module=unknown"
        lines.append(line)
    for (a, i), (b, j) in p.pairings:
        lines.append(f"glue {a}.{i} {b}.{j}")
    return "\n".join(lines) + "\n"
