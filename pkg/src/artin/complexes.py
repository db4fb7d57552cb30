"""Posets and complexes attached to a diagram, with exact integer homology.

Three posets are built: the Salvetti poset W x Sf with its T-minimality
order, the Davis poset of cosets w W_T under inclusion, and the
fundamental-domain poset Sf under subset order.  Order complexes realize
posets simplicially; homology is computed over Z by a sparse Smith normal
form with arbitrary-precision integers, so every Betti number and torsion
coefficient is exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import coxeter
from .coxeter import DEFAULT_CAP
from .diagram import CoxeterDiagram, finite_type_subsets, is_finite_type
from .errors import CapExceededError, FiniteTypeRequiredError

DEFAULT_POSET_GUARD = 3000
DEFAULT_FACE_GUARD = 200_000


@dataclass(frozen=True)
class Poset:
    """Finite poset: opaque element labels plus the strict order as index
    pairs (i, j) meaning elements[i] < elements[j]."""

    elements: tuple
    labels: tuple[str, ...]
    less: frozenset
    metadata: tuple = ()

    def __post_init__(self):
        n = len(self.elements)
        arr = np.zeros((n, n), dtype=bool)
        for i, j in self.less:
            arr[i, j] = True
        if np.any(arr & arr.T):
            raise ValueError("order relation is not antisymmetric")
        two_step = (arr.astype(np.float64) @ arr.astype(np.float64)) > 0.5
        if np.any(two_step & ~arr):
            raise ValueError("order relation is not transitive")

    def __len__(self):
        return len(self.elements)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges: i < j with nothing strictly between."""
        below = {}
        for i, j in self.less:
            below.setdefault(j, set()).add(i)
        out = []
        for i, j in self.less:
            if not any((i, k) in self.less for k in below.get(j, ())):
                out.append((i, j))
        return sorted(out)

    def maximal_chains(self) -> list[tuple[int, ...]]:
        """All inclusion-maximal chains, as index tuples bottom to top."""
        n = len(self.elements)
        cov_up = {i: [] for i in range(n)}
        for i, j in self.covers():
            cov_up[i].append(j)
        has_lower = {j for _, j in self.less}
        minimals = [i for i in range(n) if i not in has_lower]
        chains = []

        def walk(path):
            ups = cov_up[path[-1]]
            if not ups:
                chains.append(tuple(path))
                return
            for j in sorted(ups):
                path.append(j)
                walk(path)
                path.pop()

        for i in sorted(minimals):
            walk([i])
        return chains

    def to_json_obj(self) -> dict:
        return {
            "elements": list(self.labels),
            "less": sorted([i, j] for i, j in self.less),
            "metadata": dict(self.metadata),
        }

    def to_dot(self, name: str = "poset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, lab in enumerate(self.labels):
            lines.append(f'  n{i} [label="{lab}"];')
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def _poset(elements, labels, leq, metadata=()) -> Poset:
    n = len(elements)
    if n > DEFAULT_POSET_GUARD:
        raise CapExceededError("poset size", DEFAULT_POSET_GUARD)
    less = set()
    for i in range(n):
        for j in range(n):
            if i != j and leq(elements[i], elements[j]):
                less.add((i, j))
    return Poset(tuple(elements), tuple(labels), frozenset(less), tuple(metadata))


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex given by its facets (maximal faces)."""

    vertices: tuple
    facets: tuple[frozenset, ...]

    @staticmethod
    def from_faces(faces) -> "SimplicialComplex":
        faces = [frozenset(f) for f in faces if f]
        facets = [f for f in faces if not any(f < g for g in faces)]
        uniq = sorted(set(facets), key=lambda f: (len(f), sorted(map(repr, f))))
        verts = sorted({v for f in uniq for v in f}, key=repr)
        return SimplicialComplex(tuple(verts), tuple(uniq))

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    def faces_by_dim(self) -> list[list[tuple]]:
        """All faces, dimension by dimension, each as a sorted vertex tuple."""
        index = {v: i for i, v in enumerate(self.vertices)}
        seen = set()
        for f in self.facets:
            fs = tuple(sorted(f, key=index.__getitem__))
            for r in range(1, len(fs) + 1):
                seen.update(itertools.combinations(fs, r))
        out = [[] for _ in range(self.dimension + 1)]
        for face in seen:
            out[len(face) - 1].append(face)
        for dim_faces in out:
            dim_faces.sort(key=lambda f: tuple(index[v] for v in f))
        return out

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(fs) for fs in self.faces_by_dim())

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def to_json_obj(self) -> dict:
        index = {v: i for i, v in enumerate(self.vertices)}
        facets = sorted(
            (sorted(f, key=index.__getitem__) for f in self.facets),
            key=lambda f: (len(f), [index[v] for v in f]),
        )
        return {
            "vertices": [repr(v) if not isinstance(v, str) else v for v in self.vertices],
            "facets": [[repr(v) if not isinstance(v, str) else v for v in f] for f in facets],
            "f_vector": list(self.f_vector()),
        }


def order_complex(p: Poset) -> SimplicialComplex:
    """Simplices are the chains of p; facets are its maximal chains."""
    chains = p.maximal_chains()
    if not chains:
        return SimplicialComplex((), ())
    return SimplicialComplex.from_faces(chains)


def _snf_diagonal(rows: dict[int, dict[int, int]]) -> list[int]:
    """Diagonalize an integer matrix (destructively) and return the nonzero
    diagonal entries, not yet arranged into a divisibility chain.

    rows maps row index -> {column index: nonzero value}.  Elimination
    prefers unit pivots with low fill-in; non-unit pivots fall back to
    Euclidean reduction.
    """
    cols: dict[int, set[int]] = {}
    for r, rd in rows.items():
        for c in rd:
            cols.setdefault(c, set()).add(r)

    def row_axpy(dst: int, src: int, q: int):
        # row[dst] += q * row[src]
        for c, v in list(rows[src].items()):
            new = rows.get(dst, {}).get(c, 0) + q * v
            if new:
                rows.setdefault(dst, {})[c] = new
                cols.setdefault(c, set()).add(dst)
            elif c in rows.get(dst, {}):
                del rows[dst][c]
                cols[c].discard(dst)

    def col_axpy(dst: int, src: int, q: int):
        # col[dst] += q * col[src]
        for r in list(cols.get(src, set())):
            v = rows[r][src]
            new = rows[r].get(dst, 0) + q * v
            if new:
                rows[r][dst] = new
                cols.setdefault(dst, set()).add(r)
            elif dst in rows[r]:
                del rows[r][dst]
                cols[dst].discard(r)

    diagonal = []
    while True:
        best = None
        for r, rd in rows.items():
            if not rd:
                continue
            for c, v in rd.items():
                av = abs(v)
                fill = (len(rd) - 1) * (len(cols[c]) - 1)
                key = (av != 1, av, fill)
                if best is None or key < best[0]:
                    best = (key, r, c)
                    if key == (False, 1, 0):
                        break
            if best is not None and best[0] == (False, 1, 0):
                break
        if best is None:
            break
        _, r, c = best
        while True:
            v = rows[r][c]
            if v < 0:
                for c2 in list(rows[r]):
                    rows[r][c2] = -rows[r][c2]
                v = -v
            moved = False
            for r2 in sorted(cols[c] - {r}):
                q = rows[r2][c] // v
                if q:
                    row_axpy(r2, r, -q)
                if c in rows.get(r2, {}):
                    r = r2  # strictly smaller remainder becomes the pivot
                    moved = True
                    break
            if moved:
                continue
            for c2 in sorted(set(rows[r]) - {c}):
                q = rows[r][c2] // v
                if q:
                    col_axpy(c2, c, -q)
                if c2 in rows[r]:
                    c = c2
                    moved = True
                    break
            if not moved:
                break
        diagonal.append(abs(rows[r][c]))
        del rows[r][c]
        cols[c].discard(r)
    return diagonal


def invariant_factors(rows: dict[int, dict[int, int]]) -> list[int]:
    """Invariant factors d1 | d2 | ... of an integer matrix (sparse rows)."""
    diag = _snf_diagonal(rows)
    done = False
    while not done:
        done = True
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i]:
                    g = math.gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    done = False
    return sorted(diag)


@dataclass(frozen=True)
class HomologyResult:
    """Unreduced integer homology: per dimension a Betti number and the
    torsion coefficients (each > 1, each dividing the next)."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def group(self, k: int) -> str:
        if k >= len(self.betti):
            return "0"
        parts = []
        b = self.betti[k]
        if b == 1:
            parts.append("Z")
        elif b > 1:
            parts.append(f"Z^{b}")
        parts.extend(f"Z/{t}" for t in self.torsion[k])
        return " + ".join(parts) if parts else "0"

    def pretty(self) -> str:
        return ", ".join(f"H_{k} = {self.group(k)}" for k in range(len(self.betti)))

    def to_json_obj(self) -> dict:
        return {
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
            "pretty": self.pretty(),
        }


def homology(c: SimplicialComplex, face_guard: int = DEFAULT_FACE_GUARD) -> HomologyResult:
    """Integer simplicial homology via Smith normal form of the boundaries."""
    faces = c.faces_by_dim()
    if not faces:
        return HomologyResult((), ())
    if sum(len(fs) for fs in faces) > face_guard:
        raise CapExceededError("homology face count", face_guard)
    dim = len(faces) - 1
    position = [{f: i for i, f in enumerate(fs)} for fs in faces]

    factors = []  # factors[k]: invariant factors of boundary_(k+1)
    for k in range(dim):
        rows: dict[int, dict[int, int]] = {}
        for j, face in enumerate(faces[k + 1]):
            for i in range(len(face)):
                sub = face[:i] + face[i + 1 :]
                rows.setdefault(position[k][sub], {})[j] = (-1) ** i
        factors.append(invariant_factors(rows))

    betti, torsion = [], []
    for k in range(dim + 1):
        rank_out = len(factors[k - 1]) if k >= 1 else 0
        rank_in = len(factors[k]) if k < dim else 0
        betti.append(len(faces[k]) - rank_out - rank_in)
        torsion.append(tuple(t for t in factors[k] if t > 1) if k < dim else ())
    return HomologyResult(tuple(betti), tuple(torsion))


def _sf_sorted(d: CoxeterDiagram):
    return sorted(
        finite_type_subsets(d), key=lambda T: (len(T), sorted(d.index(v) for v in T))
    )


def _set_label(d: CoxeterDiagram, T) -> str:
    return "{" + ",".join(sorted(T, key=d.index)) + "}"


def _w_elements(d: CoxeterDiagram, ball, cap: int):
    if ball == "all":
        if not is_finite_type(d)[0]:
            raise FiniteTypeRequiredError(
                "ball='all' needs a finite-type diagram; pass an integer ball"
            )
        layers = coxeter.enumerate_elements(d, "all", cap)
    else:
        layers = coxeter.enumerate_elements(d, int(ball), cap)
    return [w for layer in layers for w in layer]


def salvetti_poset(d: CoxeterDiagram, ball="all", cap: int = DEFAULT_CAP) -> Poset:
    """Elements (u, T) in W x Sf with (u,T) <= (v,R) iff T is a subset of R,
    v^-1 u lies in W_R, and v^-1 u is T-minimal."""
    elements_w = _w_elements(d, ball, cap)
    sf = _sf_sorted(d)
    elems = [(u, frozenset(T)) for u in elements_w for T in sf]
    labels = [f"({''.join(u.word) or 'e'},{_set_label(d, T)})" for u, T in elems]

    inv = {u: coxeter.invert(u, cap) for u in elements_w}

    def leq(x, y):
        (u, T), (v, R) = x, y
        if not T <= R:
            return False
        w = coxeter.multiply(inv[v], u, cap)
        if not set(w.word) <= R:
            return False
        for t in T:
            if coxeter.multiply(w, coxeter.normalize(d, (t,), cap), cap).length < w.length:
                return False
        return True

    meta = (("complex", "salvetti"), ("ball", "all" if ball == "all" else int(ball)))
    pairs = [(e, lab) for e, lab in zip(elems, labels)]
    pairs.sort(key=lambda el: (len(el[0][1]), sorted(d.index(v) for v in el[0][1]),
                               el[0][0].sort_key()))
    return _poset([e for e, _ in pairs], [l for _, l in pairs], leq, meta)


def davis_poset(d: CoxeterDiagram, ball="all", cap: int = DEFAULT_CAP) -> Poset:
    """Cosets w W_T for T in Sf, named by T-minimal representatives and
    ordered by coset inclusion."""
    elements_w = _w_elements(d, ball, cap)
    sf = _sf_sorted(d)
    elems = []
    seen = set()
    for T in sf:
        Tf = frozenset(T)
        for w in elements_w:
            rep = coxeter.t_minimal_representative(d, w, T, cap)
            key = (rep.word, Tf)
            if key not in seen:
                seen.add(key)
                elems.append((rep, Tf))
    labels = [f"{''.join(rep.word) or 'e'}W{_set_label(d, T)}" for rep, T in elems]
    inv = {rep: coxeter.invert(rep, cap) for rep, _ in elems}

    def leq(x, y):
        (w, T), (v, R) = x, y
        if not T <= R:
            return False
        u = coxeter.multiply(inv[v], w, cap)
        return set(u.word) <= R

    meta = (("complex", "davis"), ("ball", "all" if ball == "all" else int(ball)))
    order = sorted(
        range(len(elems)),
        key=lambda i: (len(elems[i][1]), sorted(d.index(v) for v in elems[i][1]),
                       elems[i][0].sort_key()),
    )
    return _poset([elems[i] for i in order], [labels[i] for i in order], leq, meta)


def deligne_fundamental_domain(d: CoxeterDiagram) -> tuple[Poset, SimplicialComplex]:
    """The fundamental-domain poset {A_T : T in Sf} under inclusion (a copy
    of Sf ordered by subset), with its order complex."""
    sf = [frozenset(T) for T in _sf_sorted(d)]
    labels = [f"A{_set_label(d, T)}" for T in sf]
    p = _poset(sf, labels, lambda T, R: T < R, (("complex", "deligne-fd"),))
    return p, order_complex(p)


@dataclass(frozen=True)
class QuotientCells:
    """Cell counts of the quotient Salvetti complex: one k-cell per T in Sf
    with |T| = k, up to the dimension actually attained."""

    f_vector: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector))

    def to_json_obj(self) -> dict:
        return {"f_vector": list(self.f_vector), "euler": self.euler_characteristic}


def salvetti_quotient_cells(d: CoxeterDiagram) -> QuotientCells:
    sf = finite_type_subsets(d)
    top = max(len(T) for T in sf)
    counts = [0] * (top + 1)
    for T in sf:
        counts[len(T)] += 1
    return QuotientCells(tuple(counts))


@dataclass(frozen=True)
class Abelianization:
    """H_1 of the group presentation: free rank plus invariant factors."""

    rank: int
    torsion: tuple[int, ...]

    def pretty(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json_obj(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "pretty": self.pretty()}


def abelianization(d: CoxeterDiagram) -> Abelianization:
    """Smith normal form of the abelianized braid-relation matrix.

    A relation of odd length m identifies its two generators; even or
    infinite labels abelianize to nothing.
    """
    idx = {s: i for i, s in enumerate(d.vertices)}
    rows: dict[int, dict[int, int]] = {}
    r = 0
    for s, t, m in d.pairs():
        if m == float("inf"):
            continue
        m = int(m)
        # letter counts of the two sides of sts... = tst... (length m)
        cs = (m + 1) // 2 - m // 2
        if cs:
            rows[r] = {idx[s]: cs, idx[t]: -cs}
            r += 1
    factors = invariant_factors(rows)
    return Abelianization(
        rank=d.rank - len(factors), torsion=tuple(t for t in factors if t > 1)
    )
