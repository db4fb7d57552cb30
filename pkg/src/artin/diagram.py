"""Labelled Coxeter diagrams: parsing, presets, classification, taxonomy.

A diagram is a finite labelled graph on generator names.  An edge {s, t}
carries an integer label m >= 3 or infinity; a missing edge means m = 2.
Finite-type recognition matches every connected component against the ten
classification families by an explicit label-preserving isomorphism, so the
answer is exact and independent of floating point.  The numeric signature
test (module tits) is a cross-check, never the authority.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field

from .errors import DiagramError, RankGuardError

INF = float("inf")

DEFAULT_RANK_GUARD = 20

_FAMILIES = ("A", "B", "D", "I2", "F4", "H3", "H4", "E6", "E7", "E8")


@dataclass(frozen=True)
class CoxeterDiagram:
    """Vertex set S with symmetric labels m_st in {3, 4, ...} or infinity.

    ``vertices`` is the declared generator order; it fixes the ShortLex
    order used by every normal form downstream.  ``edges`` holds triples
    (a, b, m) with a before b in vertex order; absent pairs mean m = 2.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, float], ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        if not verts:
            raise DiagramError("diagram needs at least one vertex")
        for v in verts:
            if not isinstance(v, str) or not v:
                raise DiagramError(f"vertex names must be nonempty strings, got {v!r}")
        if len(set(verts)) != len(verts):
            raise DiagramError(f"duplicate vertices in {verts}")
        pos = {v: i for i, v in enumerate(verts)}
        seen = set()
        canon = []
        for a, b, m in self.edges:
            if a not in pos or b not in pos:
                raise DiagramError(f"edge ({a},{b}) uses an unknown vertex")
            if a == b:
                raise DiagramError(f"self-loop at {a}")
            if m != INF:
                if not isinstance(m, int) or isinstance(m, bool) or m < 3:
                    raise DiagramError(
                        f"edge ({a},{b}) label {m!r}: labels must be integers >= 3 "
                        "or infinity (m = 2 is encoded by edge absence)"
                    )
            lo, hi = (a, b) if pos[a] < pos[b] else (b, a)
            if (lo, hi) in seen:
                raise DiagramError(f"duplicate edge ({a},{b})")
            seen.add((lo, hi))
            canon.append((lo, hi, m))
        canon.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "_label_map", {(a, b): m for a, b, m in canon})

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def index(self, s: str) -> int:
        try:
            return self.vertices.index(s)
        except ValueError:
            raise DiagramError(f"unknown generator {s!r}") from None

    def m(self, s: str, t: str) -> float:
        """Label m_st; 2 when no edge.  m_ss is undefined."""
        i, j = self.index(s), self.index(t)
        if i == j:
            raise DiagramError(f"m({s},{s}) is undefined")
        if i > j:
            s, t = t, s
        return self._label_map.get((s, t), 2)

    def pairs(self):
        """All unordered vertex pairs (s, t, m_st), including m = 2 pairs."""
        for s, t in itertools.combinations(self.vertices, 2):
            yield s, t, self.m(s, t)

    def neighbors(self, s: str) -> tuple[str, ...]:
        """Vertices joined to s by an edge (label >= 3 or infinity)."""
        return tuple(t for t in self.vertices if t != s and self.m(s, t) != 2)

    def subdiagram(self, T) -> "CoxeterDiagram":
        """Induced subdiagram spanned by T, keeping the declared order."""
        keep = set(T)
        unknown = keep - set(self.vertices)
        if unknown:
            raise DiagramError(f"unknown generators {sorted(unknown)}")
        verts = tuple(v for v in self.vertices if v in keep)
        edges = tuple(e for e in self.edges if e[0] in keep and e[1] in keep)
        return CoxeterDiagram(verts, edges)

    def components(self) -> tuple[tuple[str, ...], ...]:
        """Connected components, each ordered by vertex position."""
        remaining = set(self.vertices)
        comps = []
        for v in self.vertices:
            if v not in remaining:
                continue
            stack, comp = [v], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(y for y in self.neighbors(x) if y not in comp)
            remaining -= comp
            comps.append(tuple(u for u in self.vertices if u in comp))
        return tuple(comps)

    def to_json_obj(self) -> dict:
        edges = [
            {"a": a, "b": b, "m": "inf" if m == INF else m} for a, b, m in self.edges
        ]
        return {"vertices": list(self.vertices), "edges": edges}


@dataclass(frozen=True)
class TypeLabel:
    """A classification family name with an isomorphism witness.

    ``assignment`` maps each component vertex to its 1-based position in
    the reference diagram of the named family.
    """

    family: str
    rank: int
    p: int | None = None
    assignment: tuple[tuple[str, int], ...] = ()

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.p})"
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.rank}"
        return self.family

    def assignment_map(self) -> dict[str, int]:
        return dict(self.assignment)


@dataclass(frozen=True)
class TaxonomyReport:
    """Boolean taxonomy flags plus per-component classification labels.

    ``components`` holds one entry per connected component, in vertex
    order: a TypeLabel when the component is finite type, else None.
    """

    finite_type: bool
    fc_type: bool
    two_dimensional: bool
    large_type: bool
    locally_reducible: bool
    free_of_infinity: bool
    almost_spherical: bool
    components: tuple[TypeLabel | None, ...] = field(default=())


def _names(n: int) -> tuple[str, ...]:
    """Generator names for presets: single letters up to rank 8, then s1..sn."""
    if n <= 8:
        return tuple("stuvwxyz"[:n])
    return tuple(f"s{i}" for i in range(1, n + 1))


def _path(names, labels) -> CoxeterDiagram:
    edges = tuple((names[i], names[i + 1], labels[i]) for i in range(len(names) - 1))
    return CoxeterDiagram(tuple(names), edges)


def _build_family(family: str, n: int, p: int | None = None) -> CoxeterDiagram:
    v = _names(n)
    if family == "A":
        return _path(v, [3] * (n - 1))
    if family == "B":
        return _path(v, [4] + [3] * (n - 2))
    if family == "D":
        edges = [(v[0], v[2], 3), (v[1], v[2], 3)]
        edges += [(v[i], v[i + 1], 3) for i in range(2, n - 1)]
        return CoxeterDiagram(v, tuple(edges))
    if family == "I2":
        return CoxeterDiagram(v, ((v[0], v[1], p),))
    if family == "F4":
        return _path(v, [3, 4, 3])
    if family == "H3":
        return _path(v, [5, 3])
    if family == "H4":
        return _path(v, [5, 3, 3])
    if family in ("E6", "E7", "E8"):
        # path on n-1 vertices with the last vertex hung off the third one
        edges = [(v[i], v[i + 1], 3) for i in range(n - 2)]
        edges.append((v[2], v[n - 1], 3))
        return CoxeterDiagram(v, tuple(edges))
    raise DiagramError(f"unknown family {family!r}")


_PRESET_RE = re.compile(r"^([ABD])n?\(?([0-9]+)\)?$")
_I2_RE = re.compile(r"^I2\(([0-9]+)\)$")


def preset(name: str) -> CoxeterDiagram:
    """Build a named preset diagram.

    Accepted: A<k> (k >= 1), B<k> (k >= 2), D<k> (k >= 4), I2(p) (p >= 3),
    F4, H3, H4, E6, E7, E8, Atilde2.  An(k)-style spellings are accepted
    for the parametric families.
    """
    name = name.strip()
    if name == "Atilde2":
        v = _names(3)
        return CoxeterDiagram(v, ((v[0], v[1], 3), (v[0], v[2], 3), (v[1], v[2], 3)))
    if name in ("F4", "H3", "H4"):
        return _build_family(name, int(name[1]))
    if name in ("E6", "E7", "E8"):
        return _build_family(name, int(name[1]))
    m = _I2_RE.match(name)
    if m:
        point = int(m.group(1))
        if point < 3:
            raise DiagramError(f"I2({point}): dihedral presets need p >= 3")
        return _build_family("I2", 2, point)
    m = _PRESET_RE.match(name)
    if m:
        family, k = m.group(1), int(m.group(2))
        minimum = {"A": 1, "B": 2, "D": 4}[family]
        if k < minimum:
            raise DiagramError(f"{family}{k}: family {family} needs rank >= {minimum}")
        return _build_family(family, k)
    raise DiagramError(f"unknown preset {name!r}")


def _from_json_obj(obj) -> CoxeterDiagram:
    if not isinstance(obj, dict):
        raise DiagramError(f"diagram JSON must be an object, got {type(obj).__name__}")
    extra = set(obj) - {"vertices", "edges"}
    if extra:
        raise DiagramError(f"unexpected diagram keys {sorted(extra)}")
    verts = obj.get("vertices")
    if not isinstance(verts, list):
        raise DiagramError("diagram JSON needs a 'vertices' list")
    edges = []
    for e in obj.get("edges", []):
        if not isinstance(e, dict) or set(e) - {"a", "b", "m"}:
            raise DiagramError(f"bad edge entry {e!r}")
        m = e.get("m")
        if m == "inf":
            m = INF
        edges.append((e.get("a"), e.get("b"), m))
    return CoxeterDiagram(tuple(verts), tuple(edges))


def parse_diagram(source) -> CoxeterDiagram:
    """Parse a diagram from JSON text, a parsed JSON object, or a preset name."""
    if isinstance(source, CoxeterDiagram):
        return source
    if isinstance(source, dict):
        return _from_json_obj(source)
    if not isinstance(source, str):
        raise DiagramError(f"cannot parse diagram from {type(source).__name__}")
    text = source.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"malformed diagram JSON: {exc}") from None
        return _from_json_obj(obj)
    return preset(text)


def _degree_key(d: CoxeterDiagram, v: str) -> tuple:
    labels = sorted(d.m(v, u) for u in d.neighbors(v))
    return (len(labels), tuple(labels))


def _find_isomorphism(comp: CoxeterDiagram, ref: CoxeterDiagram):
    """Label-preserving isomorphism comp -> ref as a vertex -> position map.

    Backtracking over reference positions in a connectivity-friendly order;
    candidates must match degree and incident-label multiset, and agree with
    every already-placed vertex on the pair label (including m = 2 pairs).
    """
    if comp.rank != ref.rank:
        return None
    comp_key = {v: _degree_key(comp, v) for v in comp.vertices}
    ref_key = {v: _degree_key(ref, v) for v in ref.vertices}
    if sorted(comp_key.values()) != sorted(ref_key.values()):
        return None

    order = []
    placed = set()
    # BFS over the reference graph so each new position touches a placed one
    for start in ref.vertices:
        if start in placed:
            continue
        queue = [start]
        placed.add(start)
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in ref.neighbors(x):
                if y not in placed:
                    placed.add(y)
                    queue.append(y)

    position = {v: i + 1 for i, v in enumerate(ref.vertices)}
    assignment: dict[str, str] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        target = order[i]
        for cand in comp.vertices:
            if cand in assignment:
                continue
            if comp_key[cand] != ref_key[target]:
                continue
            if any(
                comp.m(cand, placed_v) != ref.m(placed_t, target)
                for placed_v, placed_t in assignment.items()
            ):
                continue
            assignment[cand] = target
            if extend(i + 1):
                return True
            del assignment[cand]
        return False

    if not extend(0):
        return None
    return {v: position[t] for v, t in assignment.items()}


def _candidate_families(sub: CoxeterDiagram):
    n = sub.rank
    labels = sorted(m for _, _, m in sub.edges)
    if n == 1:
        yield ("A", n, None)
        return
    if all(m == 3 for m in labels):
        yield ("A", n, None)
        if n >= 4:
            yield ("D", n, None)
        if n in (6, 7, 8):
            yield (f"E{n}", n, None)
    if n >= 2 and labels.count(4) == 1:
        yield ("B", n, None)
    if n == 2 and len(labels) == 1 and labels[0] != INF and labels[0] >= 5:
        yield ("I2", n, int(labels[0]))
    if n == 4 and labels == [3, 3, 4]:
        yield ("F4", n, None)
    if n == 3 and labels == [3, 5]:
        yield ("H3", n, None)
    if n == 4 and labels == [3, 3, 5]:
        yield ("H4", n, None)


def _component_label(d: CoxeterDiagram, comp) -> TypeLabel | None:
    """Classify one connected component; None when it matches no family."""
    sub = d.subdiagram(comp)
    if len(sub.edges) != sub.rank - 1:
        # every classification diagram is a tree (a connected component with
        # more edges has a cycle and cannot match)
        return None
    for family, n, p in _candidate_families(sub):
        ref = _build_family(family, n, p)
        iso = _find_isomorphism(sub, ref)
        if iso is not None:
            return TypeLabel(
                family=family,
                rank=n,
                p=p,
                assignment=tuple(sorted(iso.items(), key=lambda kv: d.index(kv[0]))),
            )
    return None


def is_finite_type(d: CoxeterDiagram):
    """(True, [TypeLabel per component]) when every component is classified.

    Rank-2 components with label 3 or 4 come back canonicalized as A2 / B2
    rather than I2(3) / I2(4).
    """
    labels = []
    for comp in d.components():
        lab = _component_label(d, comp)
        if lab is None:
            return False, None
        labels.append(lab)
    return True, labels


def _is_finite_subset(d: CoxeterDiagram, T: frozenset) -> bool:
    if not T:
        return True
    return is_finite_type(d.subdiagram(T))[0]


def finite_type_subsets(
    d: CoxeterDiagram, rank_guard: int = DEFAULT_RANK_GUARD
) -> set[frozenset]:
    """All T subseteq S whose induced subdiagram is finite type.

    Built level by level; downward closure of the family prunes the search.
    Always contains the empty set and every singleton.
    """
    if d.rank > rank_guard:
        raise RankGuardError("finite_type_subsets", d.rank, rank_guard)
    sf = {frozenset()}
    level = [frozenset()]
    while level:
        nxt = []
        for T in level:
            top = max((d.index(v) for v in T), default=-1)
            for v in d.vertices[top + 1 :]:
                T2 = T | {v}
                if any(T2 - {u} not in sf for u in T2):
                    continue
                if _is_finite_subset(d, T2):
                    sf.add(T2)
                    nxt.append(T2)
        level = nxt
    return sf


def _infinity_free_subsets(d: CoxeterDiagram):
    """Subsets containing no pair with an infinite label, smallest first."""
    inf_pairs = {frozenset((a, b)) for a, b, m in d.edges if m == INF}
    level = [frozenset()]
    yield frozenset()
    while level:
        nxt = []
        for T in level:
            top = max((d.index(v) for v in T), default=-1)
            for v in d.vertices[top + 1 :]:
                if any(frozenset((u, v)) in inf_pairs for u in T):
                    continue
                T2 = T | {v}
                nxt.append(T2)
                yield T2
        level = nxt


def classify_taxonomy(
    d: CoxeterDiagram, rank_guard: int = DEFAULT_RANK_GUARD
) -> TaxonomyReport:
    """Evaluate every taxonomy flag literally from its definition."""
    if d.rank > rank_guard:
        raise RankGuardError("classify_taxonomy", d.rank, rank_guard)
    finite, _ = is_finite_type(d)
    components = tuple(_component_label(d, comp) for comp in d.components())
    sf = finite_type_subsets(d, rank_guard)

    fc = all(T in sf for T in _infinity_free_subsets(d))
    two_dim = max(len(T) for T in sf) <= 2
    large = all(m != 2 for _, _, m in d.pairs())
    free_inf = all(m != INF for _, _, m in d.edges)

    locally_reducible = True
    for T in sf:
        if len(T) < 3:
            continue
        sub = d.subdiagram(T)
        for comp in sub.components():
            if len(comp) <= 2:
                continue
            lab = _component_label(sub, comp)
            if lab is None or not (lab.family == "A" and lab.rank == 3):
                locally_reducible = False
                break
        if not locally_reducible:
            break

    almost_spherical = (
        free_inf
        and not finite
        and all(
            frozenset(d.vertices) - {v} in sf for v in d.vertices
        )  # downward closure: all proper subsets finite iff all corank-1 are
    )
    return TaxonomyReport(
        finite_type=finite,
        fc_type=fc,
        two_dimensional=two_dim,
        large_type=large,
        locally_reducible=locally_reducible,
        free_of_infinity=free_inf,
        almost_spherical=almost_spherical,
        components=components,
    )
