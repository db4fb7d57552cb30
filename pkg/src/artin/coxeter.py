"""Coxeter group word problem by braid-move closure, plus enumeration tools.

A word over the generators is reduced exactly when no member of its
braid-move closure contains an adjacent repeated letter; the normal form of
an element is the ShortLex minimum of the closure of any reduced
representative.  ShortLex uses the diagram's declared vertex order, which is
therefore part of the normal-form contract.  The closure method is
exponential in the worst case but total, exact, and matches the defining
relation set with nothing added.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .diagram import INF, CoxeterDiagram
from .errors import CapExceededError, DiagramError, FiniteTypeRequiredError, RankGuardError

DEFAULT_CAP = 10**6
DEFAULT_SIZE_GUARD = 10**6


def _alternating(a: str, b: str, m: int) -> tuple[str, ...]:
    return tuple(a if i % 2 == 0 else b for i in range(m))


class _Rewriter:
    """Per-diagram braid-move machinery with memoized closures.

    Closure classes are cached under their ShortLex-minimal member, and
    every encountered word is mapped to that representative, so repeated
    equality tests across a session amortize to dictionary lookups.
    """

    def __init__(self, d: CoxeterDiagram):
        self.diagram = d
        self.key = {s: i for i, s in enumerate(d.vertices)}
        by_first: dict[str, list[tuple[tuple, tuple]]] = {s: [] for s in d.vertices}
        for a, b, m in d.pairs():
            if m == INF:
                continue
            lhs = _alternating(a, b, int(m))
            rhs = _alternating(b, a, int(m))
            by_first[a].append((lhs, rhs))
            by_first[b].append((rhs, lhs))
        self.rels_by_first = by_first
        self._canon: dict[tuple, tuple] = {}
        self._class_of: dict[tuple, frozenset] = {}
        # Representatives whose class is known to contain no adjacent repeat.
        # A closure cached by the monoid side may contain repeats even when
        # the queried word does not, so reduce() must not trust a bare
        # _canon hit as evidence of reducedness.
        self._repeat_free: set[tuple] = set()

    def shortlex_key(self, word: tuple):
        return (len(word), tuple(self.key[x] for x in word))

    def check_letters(self, word) -> tuple:
        w = tuple(word)
        for x in w:
            if x not in self.key:
                raise DiagramError(f"unknown generator {x!r}")
        return w

    def _neighbors(self, w: tuple):
        for i, letter in enumerate(w):
            for lhs, rhs in self.rels_by_first[letter]:
                if w[i : i + len(lhs)] == lhs:
                    yield w[:i] + rhs + w[i + len(lhs) :]

    def closure(self, word: tuple, cap: int) -> frozenset:
        """Full braid-move closure of the word (all members share its length)."""
        known = self._canon.get(word)
        if known is not None:
            return self._class_of[known]
        seen = {word}
        dq = deque([word])
        while dq:
            w = dq.popleft()
            for w2 in self._neighbors(w):
                if w2 not in seen:
                    if len(seen) >= cap:
                        raise CapExceededError("relation closure", cap)
                    seen.add(w2)
                    dq.append(w2)
        cl = frozenset(seen)
        rep = min(cl, key=self.shortlex_key)
        for w in cl:
            self._canon[w] = rep
        self._class_of[rep] = cl
        return cl

    def canon(self, word: tuple, cap: int) -> tuple:
        """ShortLex-minimal member of the closure class."""
        known = self._canon.get(word)
        if known is not None:
            return known
        self.closure(word, cap)
        return self._canon[word]

    @staticmethod
    def _delete_repeat(w: tuple):
        for i in range(len(w) - 1):
            if w[i] == w[i + 1]:
                return w[:i] + w[i + 2 :]
        return None

    def reduce(self, word: tuple, cap: int) -> tuple:
        """Coxeter normal form: delete an adjacent repeat found anywhere in
        the closure, restart, and return the ShortLex minimum once the
        closure is repetition-free."""
        w = word
        while True:
            shorter = self._delete_repeat(w)
            if shorter is not None:
                w = shorter
                continue
            known = self._canon.get(w)
            if known is not None:
                if known in self._repeat_free:
                    return known
                for member in self._class_of[known]:
                    shorter = self._delete_repeat(member)
                    if shorter is not None:
                        break
                if shorter is not None:
                    w = shorter
                    continue
                self._repeat_free.add(known)
                return known
            seen = {w}
            dq = deque([w])
            deleted = None
            while dq and deleted is None:
                x = dq.popleft()
                for x2 in self._neighbors(x):
                    if x2 in seen:
                        continue
                    shorter = self._delete_repeat(x2)
                    if shorter is not None:
                        deleted = shorter
                        break
                    if len(seen) >= cap:
                        raise CapExceededError("braid-move closure", cap)
                    seen.add(x2)
                    dq.append(x2)
            if deleted is not None:
                w = deleted
                continue
            cl = frozenset(seen)
            rep = min(cl, key=self.shortlex_key)
            for x in cl:
                self._canon[x] = rep
            self._class_of[rep] = cl
            self._repeat_free.add(rep)
            return rep


@lru_cache(maxsize=None)
def _rewriter(d: CoxeterDiagram) -> _Rewriter:
    return _Rewriter(d)


@dataclass(frozen=True)
class CoxeterElement:
    """A group element carried by its ShortLex-minimal reduced word.

    Build these through normalize / multiply / invert; equality and hashing
    are on the (diagram, word) pair.
    """

    diagram: CoxeterDiagram
    word: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def sort_key(self):
        return _rewriter(self.diagram).shortlex_key(self.word)

    def __repr__(self):
        return f"CoxeterElement({''.join(self.word) or 'e'})"


def normalize(d: CoxeterDiagram, word, cap: int = DEFAULT_CAP) -> CoxeterElement:
    """Unique normal form of a word: reduced, ShortLex-minimal, idempotent."""
    rw = _rewriter(d)
    w = rw.check_letters(word)
    return CoxeterElement(d, rw.reduce(w, cap))


def identity(d: CoxeterDiagram) -> CoxeterElement:
    return CoxeterElement(d, ())


def multiply(a: CoxeterElement, b: CoxeterElement, cap: int = DEFAULT_CAP) -> CoxeterElement:
    if a.diagram != b.diagram:
        raise DiagramError("cannot multiply elements over different diagrams")
    return normalize(a.diagram, a.word + b.word, cap)


def invert(a: CoxeterElement, cap: int = DEFAULT_CAP) -> CoxeterElement:
    """Generators are involutions, so inversion reverses the word."""
    return normalize(a.diagram, a.word[::-1], cap)


def enumerate_elements(
    d: CoxeterDiagram,
    max_length="all",
    cap: int = DEFAULT_CAP,
    size_guard: int = DEFAULT_SIZE_GUARD,
) -> list[list[CoxeterElement]]:
    """BFS ball of the group, grouped by length (layer index = length).

    max_length="all" walks the whole group and requires finite type.
    """
    from .diagram import is_finite_type

    if max_length == "all":
        if not is_finite_type(d)[0]:
            raise FiniteTypeRequiredError(
                "enumerate_elements(max_length='all') needs a finite-type diagram"
            )
        limit = None
    else:
        limit = int(max_length)
        if limit < 0:
            raise ValueError(f"max_length must be >= 0, got {limit}")
    rw = _rewriter(d)
    layers = [[identity(d)]]
    seen = {()}
    total = 1
    while layers[-1] and (limit is None or len(layers) <= limit):
        nxt = []
        for el in layers[-1]:
            for s in d.vertices:
                nf = rw.reduce(el.word + (s,), cap)
                if len(nf) == el.length + 1 and nf not in seen:
                    seen.add(nf)
                    total += 1
                    if total > size_guard:
                        raise CapExceededError("element enumeration", size_guard)
                    nxt.append(CoxeterElement(d, nf))
        if not nxt:
            break
        nxt.sort(key=lambda e: e.sort_key())
        layers.append(nxt)
    return layers


def longest_element(d: CoxeterDiagram, cap: int = DEFAULT_CAP) -> CoxeterElement:
    """The unique maximal-length element of a finite Coxeter group."""
    layers = enumerate_elements(d, "all", cap)
    top = layers[-1]
    if len(top) != 1:
        raise FiniteTypeRequiredError(
            f"longest element is not unique (top layer has {len(top)} elements)"
        )
    return top[0]


def reflections(
    d: CoxeterDiagram, ball: int | None = None, cap: int = DEFAULT_CAP
) -> set[CoxeterElement]:
    """The set R of conjugates of generators.

    Finite type: closure of the generators under conjugation by generators.
    Infinite type: requires a ball bound; conjugates w s w^-1 over all w of
    length <= ball.
    """
    from .diagram import is_finite_type

    gens = [normalize(d, (s,), cap) for s in d.vertices]
    if is_finite_type(d)[0]:
        rw = _rewriter(d)
        out = {g.word for g in gens}
        frontier = list(out)
        while frontier:
            nxt = []
            for w in frontier:
                for s in d.vertices:
                    conj = rw.reduce((s,) + w + (s,), cap)
                    if conj not in out:
                        out.add(conj)
                        nxt.append(conj)
            frontier = nxt
        return {CoxeterElement(d, w) for w in out}
    if ball is None:
        raise FiniteTypeRequiredError(
            "reflections on a non-finite-type diagram needs a ball bound"
        )
    rw = _rewriter(d)
    out = set()
    for layer in enumerate_elements(d, ball, cap):
        for el in layer:
            for s in d.vertices:
                out.add(rw.reduce(el.word + (s,) + el.word[::-1], cap))
    return {CoxeterElement(d, w) for w in out}


def t_minimal_representative(
    d: CoxeterDiagram, w: CoxeterElement, T, cap: int = DEFAULT_CAP
) -> CoxeterElement:
    """Shortest element of the coset w W_T, by greedy right descent in T."""
    unknown = set(T) - set(d.vertices)
    if unknown:
        raise DiagramError(f"unknown generators {sorted(unknown)}")
    T = [t for t in d.vertices if t in set(T)]
    rw = _rewriter(d)
    cur = w.word
    improved = True
    while improved:
        improved = False
        for t in T:
            cand = rw.reduce(cur + (t,), cap)
            if len(cand) < len(cur):
                cur = cand
                improved = True
                break
    return CoxeterElement(d, cur)


def coxeter_elements(
    d: CoxeterDiagram, rank_guard: int = 8, cap: int = DEFAULT_CAP
) -> set[CoxeterElement]:
    """Normal forms of products of all generators, one per permutation."""
    if d.rank > rank_guard:
        raise RankGuardError("coxeter_elements", d.rank, rank_guard)
    out = set()
    for perm in itertools.permutations(d.vertices):
        out.add(normalize(d, perm, cap))
    return out
