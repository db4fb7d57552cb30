"""Union-of-chambers connectivity verifier and shelling-order checks.

A chamber complex is a pure family of n-simplices given combinatorially by
their vertex sets.  An index function filters it into levels C(k); the
verifier checks, level by level, that every new chamber meets the previous
union in a non-empty union of its own facets (Claim A) and that same-level
chambers meet each other inside the previous level (Claim B).  When both
hold the complex is contractible, unless some chamber glues along its
entire boundary, in which case only (n-1)-connectivity is certified.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import coxeter
from .coxeter import DEFAULT_CAP
from .diagram import CoxeterDiagram
from .errors import DiagramError


@dataclass(frozen=True)
class ChamberComplex:
    """Pure n-dimensional complex listed by its chambers (n-simplices)."""

    n: int
    chambers: tuple[frozenset, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"dimension must be >= 0, got {self.n}")
        if not self.chambers:
            raise ValueError("chamber complex needs at least one chamber")
        for i, c in enumerate(self.chambers):
            if len(c) != self.n + 1:
                raise ValueError(
                    f"chamber {i} has {len(c)} vertices, expected {self.n + 1}"
                )

    @property
    def vertices(self) -> tuple:
        return tuple(sorted({v for c in self.chambers for v in c}, key=repr))

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "chambers": [sorted(c, key=repr) for c in self.chambers],
        }


def _check_index(cc: ChamberComplex, index) -> tuple[int, ...]:
    idx = tuple(int(v) for v in index)
    if len(idx) != len(cc.chambers):
        raise ValueError(
            f"index function covers {len(idx)} chambers, complex has {len(cc.chambers)}"
        )
    if any(v < 0 for v in idx):
        raise ValueError("index values must be naturals")
    if idx.count(0) != 1:
        raise ValueError(f"exactly one chamber must have index 0, found {idx.count(0)}")
    return idx


def build_filtration(cc: ChamberComplex, index, k: int) -> ChamberComplex:
    """C(k): the union of the chambers with index <= k, as a facet list."""
    idx = _check_index(cc, index)
    kept = tuple(c for c, v in zip(cc.chambers, idx) if v <= k)
    if not kept:
        raise ValueError(f"C({k}) is empty; the base chamber has index 0")
    return ChamberComplex(cc.n, kept)


def _meets_in_facet_union(chamber: frozenset, others, n: int):
    """(ok, witness) for: the intersection of `chamber` with the union of
    `others` is a non-empty union of (n-1)-faces of `chamber`.

    Maximal shared vertex sets must all have size n.  An empty intersection
    or a maximal shared face of smaller dimension is a violation.
    """
    shared = {chamber & o for o in others}
    shared.discard(frozenset())
    if not shared:
        return False, "empty intersection with the previous union"
    maximal = [f for f in shared if not any(f < g for g in shared)]
    for f in maximal:
        if len(f) != n:
            return (
                False,
                f"maximal shared face {sorted(f, key=repr)} has dimension "
                f"{len(f) - 1}, expected {n - 1}",
            )
    return True, None


@dataclass(frozen=True)
class ClaimCheck:
    level: int
    chambers: tuple[int, ...]
    ok: bool
    witness: str | None = None

    def to_json_obj(self) -> dict:
        return {
            "level": self.level,
            "chambers": list(self.chambers),
            "ok": self.ok,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class ClaimsReport:
    n: int
    claim_a: tuple[ClaimCheck, ...]
    claim_b: tuple[ClaimCheck, ...]
    conclusion: str | None

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.claim_a) and all(c.ok for c in self.claim_b)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "claim_a": [c.to_json_obj() for c in self.claim_a],
            "claim_b": [c.to_json_obj() for c in self.claim_b],
            "passed": self.passed,
            "conclusion": self.conclusion,
        }


def verify_claims(cc: ChamberComplex, index) -> ClaimsReport:
    """Check Claims (A) and (B) at every level of the filtration.

    (A): each chamber at level k+1 meets C(k) in a non-empty union of its
    facets.  (B): two distinct chambers at the same level k+1 intersect
    inside C(k).  When both pass everywhere, the union is contractible if
    no chamber glued along its whole boundary, and (n-1)-connected
    otherwise.
    """
    idx = _check_index(cc, index)
    by_level: dict[int, list[int]] = {}
    for i, v in enumerate(idx):
        by_level.setdefault(v, []).append(i)
    levels = sorted(by_level)

    claim_a, claim_b = [], []
    full_boundary_glue = False
    for lv in levels:
        if lv == 0:
            continue
        previous = [cc.chambers[i] for i, v in enumerate(idx) if v < lv]
        for i in by_level[lv]:
            ok, witness = _meets_in_facet_union(cc.chambers[i], previous, cc.n)
            claim_a.append(ClaimCheck(lv, (i,), ok, witness))
            if ok:
                shared = {cc.chambers[i] & o for o in previous} - {frozenset()}
                maximal = [f for f in shared if not any(f < g for g in shared)]
                if len(maximal) == cc.n + 1:
                    full_boundary_glue = True
        for a, b in _same_level_pairs(by_level[lv]):
            inter = cc.chambers[a] & cc.chambers[b]
            inside = not inter or any(
                inter <= c for c, v in zip(cc.chambers, idx) if v < lv
            )
            witness = None
            if not inside:
                witness = (
                    f"chambers {a} and {b} share {sorted(inter, key=repr)}, "
                    f"which is not a face of C({lv - 1})"
                )
            claim_b.append(ClaimCheck(lv, (a, b), inside, witness))

    report = ClaimsReport(cc.n, tuple(claim_a), tuple(claim_b), None)
    if not report.passed:
        return report
    if len(cc.chambers) == 1 or not full_boundary_glue:
        conclusion = "contractible"
    else:
        conclusion = f"{cc.n - 1}-connected"
    return ClaimsReport(cc.n, tuple(claim_a), tuple(claim_b), conclusion)


def _same_level_pairs(ids):
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            yield a, b


@dataclass(frozen=True)
class ShellingCheck:
    ok: bool
    violation_position: int | None = None
    witness: str | None = None

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "violation_position": self.violation_position,
            "witness": self.witness,
        }


def is_shelling(cc: ChamberComplex, order) -> ShellingCheck:
    """Check a total chamber order: every chamber after the first must meet
    the union of its predecessors in a non-empty union of its facets."""
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(len(cc.chambers))):
        raise ValueError("order must be a permutation of the chamber indices")
    for pos in range(1, len(order)):
        chamber = cc.chambers[order[pos]]
        previous = [cc.chambers[j] for j in order[:pos]]
        ok, witness = _meets_in_facet_union(chamber, previous, cc.n)
        if not ok:
            return ShellingCheck(False, pos, f"chamber {order[pos]}: {witness}")
    return ShellingCheck(True)


def coxeter_chamber_system(
    d: CoxeterDiagram, ball="all", cap: int = DEFAULT_CAP
) -> tuple[ChamberComplex, tuple[int, ...]]:
    """The chamber system of a Coxeter group with its length index.

    Chambers are the group elements; the chamber of w is the (rank-1)-simplex
    whose vertex for each generator s is the coset w W_{S \\ {s}}, named by
    its minimal representative.  The index function is Coxeter length, so
    the unique index-0 chamber is the identity.
    """
    if d.rank < 2:
        raise DiagramError("chamber system needs rank >= 2 (chambers must be simplices)")
    if ball == "all":
        layers = coxeter.enumerate_elements(d, "all", cap)
    else:
        layers = coxeter.enumerate_elements(d, int(ball), cap)
    elements = [w for layer in layers for w in layer]
    chambers = []
    for w in elements:
        verts = []
        for s in d.vertices:
            T = tuple(t for t in d.vertices if t != s)
            rep = coxeter.t_minimal_representative(d, w, T, cap)
            verts.append((s, "".join(rep.word) or "e"))
        chamber = frozenset(verts)
        if len(chamber) != d.rank:
            raise DiagramError(f"degenerate chamber for element {w!r}")
        chambers.append(chamber)
    cc = ChamberComplex(d.rank - 1, tuple(chambers))
    return cc, tuple(w.length for w in elements)


def parse_chamber_json(text: str) -> tuple[ChamberComplex, tuple[int, ...] | None]:
    """Read {"n": int, "chambers": [[ids]...], "index": [naturals...]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed chamber JSON: {exc}") from None
    if not isinstance(obj, dict) or "n" not in obj or "chambers" not in obj:
        raise ValueError("chamber JSON needs keys 'n' and 'chambers'")
    extra = set(obj) - {"n", "chambers", "index"}
    if extra:
        raise ValueError(f"unexpected chamber JSON keys {sorted(extra)}")
    chambers = tuple(frozenset(c) for c in obj["chambers"])
    cc = ChamberComplex(int(obj["n"]), chambers)
    idx = obj.get("index")
    return cc, (None if idx is None else tuple(int(v) for v in idx))
