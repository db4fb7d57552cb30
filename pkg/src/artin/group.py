"""Finite-type Artin group elements as Delta-normalized pairs (k, a).

Every element factors as Delta^k * a with a a positive-monoid element not
left-divisible by Delta; taking k maximal makes the pair unique, so group
equality is syntactic.  Inversion goes through the Garside normal form of
the positive part: each block satisfies Delta_T^{-1} = Delta^{-1} * c_T with
Delta = c_T * Delta_T, which keeps every intermediate closure small.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from . import coxeter, monoid
from .coxeter import DEFAULT_CAP, CoxeterElement
from .diagram import CoxeterDiagram, is_finite_type
from .errors import DiagramError, FiniteTypeRequiredError, GarsideError
from .monoid import MonoidElement


@lru_cache(maxsize=None)
def _delta(d: CoxeterDiagram) -> MonoidElement:
    if not is_finite_type(d)[0]:
        raise FiniteTypeRequiredError("group elements require a finite-type diagram")
    return monoid.garside_element(d, d.vertices)


@lru_cache(maxsize=None)
def _sigma(d: CoxeterDiagram) -> dict:
    return monoid.garside_permutation(d)


def _sigma_power(d: CoxeterDiagram, word: tuple, n: int, cap: int) -> tuple:
    """Apply sigma^n letterwise (sigma extended to positive words)."""
    if n == 0 or not word:
        return word
    table = _sigma(d)
    if n < 0:
        table = {v: k for k, v in table.items()}
        n = -n
    for _ in range(n):
        word = tuple(table[s] for s in word)
    return word


@dataclass(frozen=True)
class GroupElement:
    """Delta^k * a with k maximal (Delta does not left-divide a)."""

    diagram: CoxeterDiagram
    k: int
    a: MonoidElement

    def __repr__(self):
        return f"GroupElement(k={self.k}, a={''.join(self.a.word) or 'e'})"

    def to_json_obj(self) -> dict:
        return {"k": self.k, "a": list(self.a.word)}


def _normalized(d: CoxeterDiagram, k: int, a: MonoidElement, cap: int) -> GroupElement:
    delta = _delta(d)
    while a.length >= delta.length:
        cof = monoid.divides(d, delta, a, side="left", cap=cap)
        if cof is None:
            break
        a = cof
        k += 1
    return GroupElement(d, k, a)


def identity(d: CoxeterDiagram) -> GroupElement:
    _delta(d)
    return GroupElement(d, 0, monoid.identity(d))


def delta_element(d: CoxeterDiagram) -> GroupElement:
    """Delta as a group element: the pair (1, e)."""
    _delta(d)
    return GroupElement(d, 1, monoid.identity(d))


def embed(d: CoxeterDiagram, a, cap: int = DEFAULT_CAP) -> GroupElement:
    """The image of a positive monoid element in the group."""
    el = monoid.canonicalize(d, a, cap)
    return _normalized(d, 0, el, cap)


def parse_signed_word(text: str) -> tuple[tuple[str, int], ...]:
    """Parse 's t^-1 s' into ((s,+1), (t,-1), (s,+1))."""
    out = []
    for tok in text.split():
        m = re.fullmatch(r"([^\^\s]+)(?:\^(-?1))?", tok)
        if m is None:
            raise DiagramError(f"bad group-word token {tok!r} (use s or s^-1)")
        out.append((m.group(1), int(m.group(2) or 1)))
    return tuple(out)


def from_letters(d: CoxeterDiagram, word, cap: int = DEFAULT_CAP) -> GroupElement:
    """Build a group element from (generator, +-1) letters, left to right.

    A positive letter multiplies by (0, s); an inverse letter by (-1, b)
    where Delta = b*s.
    """
    if isinstance(word, str):
        word = parse_signed_word(word)
    delta = _delta(d)
    g = identity(d)
    for s, e in word:
        if s not in d.vertices:
            raise DiagramError(f"unknown generator {s!r}")
        if e == 1:
            h = GroupElement(d, 0, monoid.canonicalize(d, (s,), cap))
        elif e == -1:
            b = monoid.divides(d, (s,), delta, side="right", cap=cap)
            if b is None:
                raise GarsideError(f"generator {s} does not right-divide Delta")
            h = GroupElement(d, -1, b)
        else:
            raise DiagramError(f"exponent must be +1 or -1, got {e}")
        g = multiply(g, h, cap)
    return g


def multiply(g: GroupElement, h: GroupElement, cap: int = DEFAULT_CAP) -> GroupElement:
    if g.diagram != h.diagram:
        raise DiagramError("cannot multiply elements over different diagrams")
    d = g.diagram
    twisted = _sigma_power(d, g.a.word, -h.k, cap)
    a = monoid.canonicalize(d, twisted + h.a.word, cap)
    return _normalized(d, g.k + h.k, a, cap)


def invert(g: GroupElement, cap: int = DEFAULT_CAP) -> GroupElement:
    """g = Delta^k a  =>  g^{-1} = a^{-1} Delta^{-k}, with a^{-1} expanded
    block by block through the Garside normal form of a."""
    d = g.diagram
    delta = _delta(d)
    nf = monoid.garside_normal_form(d, g.a, cap)
    res = identity(d)
    for T in reversed(nf.blocks):
        c = monoid.divides(d, monoid.garside_element(d, T, cap), delta, side="right", cap=cap)
        if c is None:
            raise GarsideError(f"Delta_{set(T)} does not right-divide Delta")
        res = multiply(res, GroupElement(d, -1, c), cap)
    return multiply(res, GroupElement(d, -g.k, monoid.identity(d)), cap)


def equal(g: GroupElement, h: GroupElement) -> bool:
    return g == h


def fraction_decomposition(
    g: GroupElement, cap: int = DEFAULT_CAP
) -> tuple[MonoidElement, MonoidElement]:
    """Left fraction g = A^{-1} B with A, B positive and left-coprime.

    Starting from the Delta-form (A, B) = (Delta^{-k}, a) when k < 0 and
    (e, Delta^k a) otherwise, the common left gcd is cancelled so the pair
    is reduced.
    """
    d = g.diagram
    delta = _delta(d)
    if g.k < 0:
        a_raw = monoid.canonicalize(d, delta.word * (-g.k), cap)
        b_raw = g.a
    else:
        a_raw = monoid.identity(d)
        b_raw = monoid.canonicalize(d, delta.word * g.k + g.a.word, cap)
    c = monoid.gcd(d, a_raw, b_raw, side="left", cap=cap)
    if c.length:
        a_red = monoid.divides(d, c, a_raw, side="left", cap=cap)
        b_red = monoid.divides(d, c, b_raw, side="left", cap=cap)
        if a_red is None or b_red is None:
            raise GarsideError("gcd does not divide its arguments")
        return a_red, b_red
    return a_raw, b_raw


def canonical_section(d: CoxeterDiagram, w: CoxeterElement, cap: int = DEFAULT_CAP) -> GroupElement:
    """The set-theoretic section W -> A sending w to its minimal word."""
    if w.diagram != d:
        raise DiagramError("element belongs to a different diagram")
    return embed(d, w.word, cap)


def project(g: GroupElement, cap: int = DEFAULT_CAP) -> CoxeterElement:
    """The natural map A -> W.  Delta maps to the longest element w0, and
    w0 is an involution, so Delta^k contributes w0^(k mod 2)."""
    d = g.diagram
    w0 = coxeter.longest_element(d, cap)
    return coxeter.normalize(d, w0.word * (g.k % 2) + g.a.word, cap)


def is_pure(g: GroupElement, cap: int = DEFAULT_CAP) -> bool:
    """Pure elements are the kernel of the projection to W."""
    return project(g, cap).length == 0
