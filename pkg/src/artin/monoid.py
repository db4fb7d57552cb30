"""Artin monoid word problem, divisibility, and Garside structure.

Positive words are compared through their relation closure: the defining
braid relations preserve length, so each element's word class is finite and
the ShortLex minimum is a canonical representative.  Divisibility, gcd, lcm,
the Garside element Delta, the permutation sigma, the block normal form
Delta_{T_k}...Delta_{T_0}, and an exhaustive bounded axiom verifier are all
built on top of that closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import coxeter
from .coxeter import DEFAULT_CAP, _rewriter
from .diagram import CoxeterDiagram, is_finite_type
from .errors import DiagramError, FiniteTypeRequiredError, GarsideError


@dataclass(frozen=True)
class MonoidElement:
    """A positive-monoid element carried by the ShortLex-minimal word of its
    relation-closure class."""

    diagram: CoxeterDiagram
    word: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def __repr__(self):
        return f"MonoidElement({''.join(self.word) or 'e'})"


def _as_word(d: CoxeterDiagram, w) -> tuple[str, ...]:
    if isinstance(w, MonoidElement):
        if w.diagram != d:
            raise DiagramError("element belongs to a different diagram")
        return w.word
    if isinstance(w, str):
        w = w.split()
    return _rewriter(d).check_letters(tuple(w))


def relation_closure(d: CoxeterDiagram, w, cap: int = DEFAULT_CAP) -> frozenset:
    """All positive words reachable from w by braid moves (same length)."""
    word = _as_word(d, w)
    return _rewriter(d).closure(word, cap)


def canonicalize(d: CoxeterDiagram, w, cap: int = DEFAULT_CAP) -> MonoidElement:
    word = _as_word(d, w)
    return MonoidElement(d, _rewriter(d).canon(word, cap))


def identity(d: CoxeterDiagram) -> MonoidElement:
    return MonoidElement(d, ())


def product(a: MonoidElement, b: MonoidElement, cap: int = DEFAULT_CAP) -> MonoidElement:
    if a.diagram != b.diagram:
        raise DiagramError("cannot multiply elements over different diagrams")
    return canonicalize(a.diagram, a.word + b.word, cap)


def monoid_equal(d: CoxeterDiagram, u, v, cap: int = DEFAULT_CAP) -> bool:
    """Two positive words are equal iff they have the same length and lie in
    the same relation closure."""
    uw, vw = _as_word(d, u), _as_word(d, v)
    if len(uw) != len(vw):
        return False
    rw = _rewriter(d)
    return rw.canon(uw, cap) == rw.canon(vw, cap)


def divides(
    d: CoxeterDiagram, dvr, a, side: str = "left", cap: int = DEFAULT_CAP
) -> MonoidElement | None:
    """Cofactor of a division, or None.

    side="left":  returns z with a = dvr * z when dvr left-divides a.
    side="right": returns z with a = z * dvr when dvr right-divides a.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    dw, aw = _as_word(d, dvr), _as_word(d, a)
    k = len(dw)
    if k > len(aw):
        return None
    rw = _rewriter(d)
    dcl = rw.closure(dw, cap)
    for w in rw.closure(aw, cap):
        if side == "left":
            if w[:k] in dcl:
                return MonoidElement(d, rw.canon(w[k:], cap))
        else:
            if w[len(w) - k :] in dcl:
                return MonoidElement(d, rw.canon(w[: len(w) - k], cap))
    return None


def divisor_set(
    d: CoxeterDiagram, a, side: str = "left", cap: int = DEFAULT_CAP
) -> set[MonoidElement]:
    """All left (right) divisors of a: canonical forms of all prefixes
    (suffixes) of all words in the closure of a."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    aw = _as_word(d, a)
    rw = _rewriter(d)
    out = set()
    for w in rw.closure(aw, cap):
        for i in range(len(w) + 1):
            piece = w[:i] if side == "left" else w[len(w) - i :]
            out.add(rw.canon(piece, cap))
    return {MonoidElement(d, w) for w in out}


def gcd(d: CoxeterDiagram, a, b, side: str = "left", cap: int = DEFAULT_CAP) -> MonoidElement:
    """Maximal-length common divisor on the given side.

    The common divisors of two elements always have a unique maximal one in
    an Artin monoid; a violation would mean the closure machinery is broken,
    so it raises GarsideError rather than returning an arbitrary choice.
    """
    ae, be = canonicalize(d, a, cap), canonicalize(d, b, cap)
    if be.length < ae.length:
        ae, be = be, ae
    rw = _rewriter(d)
    bcl = rw.closure(be.word, cap)
    common = []
    for dv in divisor_set(d, ae, side, cap):
        k = dv.length
        dcl = rw.closure(dv.word, cap)
        if side == "left":
            hit = any(w[:k] in dcl for w in bcl)
        else:
            hit = any(w[len(w) - k :] in dcl for w in bcl)
        if hit:
            common.append(dv)
    top = max(dv.length for dv in common)
    best = [dv for dv in common if dv.length == top]
    if len(best) != 1:
        raise GarsideError(
            f"gcd is not unique: {len(best)} maximal common divisors of length {top}"
        )
    return best[0]


def lcm(
    d: CoxeterDiagram,
    a,
    b,
    side: str = "left",
    cap: int = DEFAULT_CAP,
    length_bound: int | None = None,
) -> MonoidElement | None:
    """Least common multiple on the given side, or None when the bounded
    search finds no common multiple.

    side="left" searches for the shortest c with a and b both left-dividing
    c (candidates a*x); side="right" symmetrically (candidates x*a).  For a
    finite-type diagram the default bound (l(a)+l(b))*l(Delta) always
    contains the lcm, so None is impossible there; for other diagrams the
    bounded search defaults to 2*(l(a)+l(b)) and None means "none within the
    bound", not a nonexistence certificate.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    ae, be = canonicalize(d, a, cap), canonicalize(d, b, cap)
    finite = is_finite_type(d)[0]
    if length_bound is None:
        if finite:
            delta_len = len(garside_element(d, d.vertices, cap).word)
            length_bound = (ae.length + be.length) * max(delta_len, 1)
        else:
            length_bound = 2 * (ae.length + be.length)
    rw = _rewriter(d)
    bcl = rw.closure(be.word, cap)
    k = be.length

    def multiple_of_b(word: tuple) -> bool:
        for w in rw.closure(word, cap):
            piece = w[:k] if side == "left" else w[len(w) - k :]
            if piece in bcl:
                return True
        return False

    if multiple_of_b(ae.word):
        return ae
    frontier = [ae.word]
    seen = {ae.word}
    length = ae.length
    while frontier and length < length_bound:
        length += 1
        nxt, hits = [], set()
        for w in frontier:
            for s in d.vertices:
                cand = w + (s,) if side == "left" else (s,) + w
                c = rw.canon(cand, cap)
                if c in seen:
                    continue
                seen.add(c)
                if multiple_of_b(c):
                    hits.add(c)
                else:
                    nxt.append(c)
        if hits:
            if len(hits) > 1:
                raise GarsideError(
                    f"lcm is not unique: {len(hits)} minimal common multiples at length {length}"
                )
            return MonoidElement(d, next(iter(hits)))
        frontier = nxt
    if finite:
        raise GarsideError(
            f"lcm search exhausted its bound {length_bound} on a finite-type diagram"
        )
    return None


def garside_element(d: CoxeterDiagram, T, cap: int = DEFAULT_CAP) -> MonoidElement:
    """Delta_T: the positive word of the longest element of W_T.

    The empty subset is allowed and gives the identity (W_{} is trivial).
    """
    T = tuple(t for t in d.vertices if t in set(T))
    if not T:
        return identity(d)
    sub = d.subdiagram(T)
    if not is_finite_type(sub)[0]:
        raise FiniteTypeRequiredError(
            f"Delta_T requires a finite-type subset, got T = {set(T) or '{}'}"
        )
    w0 = coxeter.longest_element(sub, cap)
    return canonicalize(d, w0.word, cap)


def garside_permutation(d: CoxeterDiagram, cap: int = DEFAULT_CAP) -> dict[str, str]:
    """The permutation sigma of the generators with Delta*s = sigma(s)*Delta."""
    if not is_finite_type(d)[0]:
        raise FiniteTypeRequiredError("sigma requires a finite-type diagram")
    delta = garside_element(d, d.vertices, cap)
    sigma = {}
    for s in d.vertices:
        lhs = delta.word + (s,)
        for t in d.vertices:
            if monoid_equal(d, lhs, (t,) + delta.word, cap):
                sigma[s] = t
                break
        else:
            raise GarsideError(f"no generator t satisfies Delta*{s} = t*Delta")
    if set(sigma.values()) != set(d.vertices):
        raise GarsideError(f"sigma is not a bijection: {sigma}")
    return sigma


@dataclass(frozen=True)
class NormalForm:
    """Block normal form a = Delta_{T_k} ... Delta_{T_1} Delta_{T_0}.

    blocks holds T_k first (most significant), each as a tuple of generator
    names in diagram vertex order.
    """

    diagram: CoxeterDiagram
    blocks: tuple[tuple[str, ...], ...]

    def word(self, cap: int = DEFAULT_CAP) -> tuple[str, ...]:
        out: tuple[str, ...] = ()
        for T in self.blocks:
            out += garside_element(self.diagram, T, cap).word
        return out

    def to_json_obj(self) -> list[list[str]]:
        return [list(T) for T in self.blocks]


def garside_normal_form(d: CoxeterDiagram, a, cap: int = DEFAULT_CAP) -> NormalForm:
    """Peel blocks off the right: T_0 is the set of length-1 right divisors,
    divide by Delta_{T_0}, repeat.  Deterministic on the element, so any two
    words of a closure class produce the identical block sequence."""
    rest = canonicalize(d, a, cap)
    rw = _rewriter(d)
    blocks = []
    while rest.length > 0:
        cl = rw.closure(rest.word, cap)
        lasts = {w[-1] for w in cl}
        T = tuple(s for s in d.vertices if s in lasts)
        sub = d.subdiagram(T)
        if not is_finite_type(sub)[0]:
            raise GarsideError(
                f"length-1 right-divisor set {set(T)} is not finite type"
            )
        quotient = divides(d, garside_element(d, T, cap), rest, side="right", cap=cap)
        if quotient is None:
            raise GarsideError(f"Delta_{set(T)} does not right-divide {rest!r}")
        blocks.append(T)
        rest = quotient
    return NormalForm(d, tuple(reversed(blocks)))


def monoid_elements(
    d: CoxeterDiagram, max_length: int, cap: int = DEFAULT_CAP
) -> list[list[MonoidElement]]:
    """All monoid elements grouped by length, lengths 0..max_length."""
    rw = _rewriter(d)
    layers = [[identity(d)]]
    for _ in range(max_length):
        nxt = set()
        for el in layers[-1]:
            for s in d.vertices:
                nxt.add(rw.canon(el.word + (s,), cap))
        layers.append([MonoidElement(d, w) for w in sorted(nxt, key=rw.shortlex_key)])
    return layers


@dataclass(frozen=True)
class GarsideAxiomReport:
    """Outcome of the bounded exhaustive axiom check.

    The finite-type-only fields (divisor symmetry, divisor/section match,
    divisor count, group order) are None when skipped.
    """

    diagram: CoxeterDiagram
    length_cap: int
    finite_type: bool
    cancellative: bool
    length_additive: bool
    gcd_ok: bool
    lcm_ok: bool
    lcm_failures: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...] = ()
    divisors_symmetric: bool | None = None
    divisors_match_section: bool | None = None
    divisor_count: int | None = None
    group_order: int | None = None

    @property
    def passed(self) -> bool:
        checks = [self.cancellative, self.length_additive, self.gcd_ok, self.lcm_ok]
        for extra in (self.divisors_symmetric, self.divisors_match_section):
            if extra is not None:
                checks.append(extra)
        if self.divisor_count is not None:
            checks.append(self.divisor_count == self.group_order)
        return all(checks)

    def to_json_obj(self) -> dict:
        return {
            "length_cap": self.length_cap,
            "finite_type": self.finite_type,
            "cancellative": self.cancellative,
            "length_additive": self.length_additive,
            "gcd_ok": self.gcd_ok,
            "lcm_ok": self.lcm_ok,
            "lcm_failures": [[list(a), list(b)] for a, b in self.lcm_failures],
            "divisors_symmetric": self.divisors_symmetric,
            "divisors_match_section": self.divisors_match_section,
            "divisor_count": self.divisor_count,
            "group_order": self.group_order,
            "passed": self.passed,
        }


def verify_garside_axioms(
    d: CoxeterDiagram, length_cap: int = 4, cap: int = DEFAULT_CAP
) -> GarsideAxiomReport:
    """Exhaustively check the Garside axioms on all elements up to length_cap.

    (i) left/right cancellativity; (ii) length additivity; (iii) gcd
    uniqueness on all pairs plus lcm existence (all pairs in finite type,
    generator pairs otherwise, within the bound 2*length_cap); finite type
    only: (iv) left-divisors(Delta) = right-divisors(Delta) = section image
    of W, and (v) |divisors(Delta)| = |W|.
    """
    finite = is_finite_type(d)[0]
    rw = _rewriter(d)
    layers = monoid_elements(d, length_cap, cap)
    elements = [el for layer in layers for el in layer]

    cancellative = True
    additive = True
    for c in elements:
        right_img = {}
        left_img = {}
        for x in elements:
            xc = rw.canon(x.word + c.word, cap)
            cx = rw.canon(c.word + x.word, cap)
            if len(xc) != x.length + c.length or len(cx) != x.length + c.length:
                additive = False
            if xc in right_img and right_img[xc] != x.word:
                cancellative = False
            if cx in left_img and left_img[cx] != x.word:
                cancellative = False
            right_img[xc] = x.word
            left_img[cx] = x.word

    gcd_ok = True
    lcm_ok = True
    lcm_failures = []
    for a in elements:
        for b in elements:
            try:
                gcd(d, a, b, "left", cap)
                gcd(d, a, b, "right", cap)
            except GarsideError:
                gcd_ok = False
    if finite:
        lcm_pairs = [(a, b) for a in elements for b in elements]
    else:
        gens = [canonicalize(d, (s,), cap) for s in d.vertices]
        lcm_pairs = [(a, b) for a in gens for b in gens]
    for a, b in lcm_pairs:
        bound = None if finite else 2 * length_cap
        if lcm(d, a, b, "left", cap, length_bound=bound) is None:
            lcm_ok = False
            lcm_failures.append((a.word, b.word))

    divisors_symmetric = None
    divisors_match_section = None
    divisor_count = None
    group_order = None
    if finite:
        delta = garside_element(d, d.vertices, cap)
        left = divisor_set(d, delta, "left", cap)
        right = divisor_set(d, delta, "right", cap)
        divisors_symmetric = left == right
        group = [el for layer in coxeter.enumerate_elements(d, "all", cap) for el in layer]
        section_image = {canonicalize(d, w.word, cap) for w in group}
        divisors_match_section = left == section_image
        divisor_count = len(left)
        group_order = len(group)

    return GarsideAxiomReport(
        diagram=d,
        length_cap=length_cap,
        finite_type=finite,
        cancellative=cancellative,
        length_additive=additive,
        gcd_ok=gcd_ok,
        lcm_ok=lcm_ok,
        lcm_failures=tuple(lcm_failures),
        divisors_symmetric=divisors_symmetric,
        divisors_match_section=divisors_match_section,
        divisor_count=divisor_count,
        group_order=group_order,
    )
