"""Noncommutative polynomial arithmetic in a weighted free algebra.

Words are tuples of generator indices (the empty tuple is the identity),
polynomials are sparse maps from words to exact rational coefficients, and
all comparisons go through a weighted graded lexicographic order.  On top of
the arithmetic this module provides reduction to normal form modulo a
relation set, overlap (S-element) analysis, a Groebner-basis check, and a
degree-bounded completion procedure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .errors import InputError

Word = tuple[int, ...]
Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

EMPTY: Word = ()


def scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"not an exact rational: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"not an exact rational: {value!r}") from exc


@dataclass(frozen=True)
class Generator:
    """A free-algebra generator: 0-based index, display name, positive weight."""

    index: int
    name: str
    weight: int = 1

    def __post_init__(self):
        if self.weight < 1:
            raise InputError(f"generator {self.name}: weight must be >= 1")


def word_degree(word: Word, weights: Sequence[int]) -> int:
    """Weighted degree of a word; the empty word has degree 0."""
    try:
        return sum(weights[g] for g in word)
    except IndexError:
        raise InputError(f"word {word} uses a generator unknown to the order")


def find_subword(word: Word, pattern: Word, start: int = 0) -> int:
    """Index of the first occurrence of ``pattern`` in ``word`` at or after
    ``start``, or -1.  The empty pattern matches at ``start``."""
    n, m = len(word), len(pattern)
    for i in range(start, n - m + 1):
        if word[i:i + m] == pattern:
            return i
    return -1


class WeightedOrder:
    """Graded lexicographic order on words.

    Compares weighted degree first; equal degrees are broken by reading the
    words left to right through a precedence permutation (listed smallest
    generator first).  With positive weights two distinct words of equal
    degree always disagree at some position, so the comparison is total.
    """

    def __init__(self, weights: Sequence[int], precedence: Optional[Sequence[int]] = None):
        self.weights = tuple(int(w) for w in weights)
        if not self.weights or any(w < 1 for w in self.weights):
            raise InputError("weights must be positive integers")
        n = len(self.weights)
        if precedence is None:
            precedence = range(n)
        self.precedence = tuple(precedence)
        if sorted(self.precedence) != list(range(n)):
            raise InputError("precedence must be a permutation of the generator indices")
        rank = [0] * n
        for r, g in enumerate(self.precedence):
            rank[g] = r
        self._rank = tuple(rank)

    @property
    def ngens(self) -> int:
        return len(self.weights)

    def degree(self, word: Word) -> int:
        self._check(word)
        return sum(self.weights[g] for g in word)

    def key(self, word: Word):
        """Sort key: ascending in the order.  Usable with max()/sorted()."""
        self._check(word)
        return (sum(self.weights[g] for g in word),
                tuple(self._rank[g] for g in word))

    def compare(self, u: Word, v: Word) -> int:
        """-1, 0 or 1 as u precedes, equals or follows v."""
        ku, kv = self.key(u), self.key(v)
        return -1 if ku < kv else (0 if ku == kv else 1)

    def _check(self, word: Word) -> None:
        n = len(self.weights)
        for g in word:
            if not 0 <= g < n:
                raise InputError(f"unknown generator index {g}")


class FreePoly:
    """A finite rational combination of words; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Word, ScalarLike]] = None):
        clean: dict[Word, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                c = scalar(coeff)
                if c:
                    clean[tuple(word)] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "FreePoly":
        return cls()

    @classmethod
    def one(cls) -> "FreePoly":
        return cls({EMPTY: 1})

    @classmethod
    def word(cls, word: Iterable[int], coeff: ScalarLike = 1) -> "FreePoly":
        return cls({tuple(word): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, word: Word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "FreePoly":
        return FreePoly({w: -c for w, c in self.terms.items()})

    def __add__(self, other: "FreePoly") -> "FreePoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        result = FreePoly()
        result.terms = out
        return result

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        return self + (-other)

    def __mul__(self, other) -> "FreePoly":
        if isinstance(other, FreePoly):
            out: dict[Word, Fraction] = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    w = u + v
                    s = out.get(w, 0) + a * b
                    if s:
                        out[w] = s
                    else:
                        out.pop(w, None)
            result = FreePoly()
            result.terms = out
            return result
        c = scalar(other)
        return FreePoly({w: c * a for w, a in self.terms.items()})

    def __rmul__(self, other) -> "FreePoly":
        c = scalar(other)
        return FreePoly({w: c * a for w, a in self.terms.items()})

    def degree(self, weights: Sequence[int]) -> int:
        """Maximal weighted degree over the terms; raises on the zero polynomial."""
        if not self.terms:
            raise InputError("the zero polynomial has no degree")
        return max(word_degree(w, weights) for w in self.terms)

    def is_homogeneous(self, weights: Sequence[int]) -> bool:
        degs = {word_degree(w, weights) for w in self.terms}
        return len(degs) <= 1

    def __repr__(self):
        return f"FreePoly({self.terms!r})"


def leading(poly: FreePoly, order: WeightedOrder) -> tuple[Word, Fraction]:
    """Leading (word, coefficient) pair of a nonzero polynomial."""
    if poly.is_zero():
        raise InputError("the zero polynomial has no leading term")
    lm = max(poly.terms, key=order.key)
    return lm, poly.terms[lm]


def leading_homogeneous(poly: FreePoly, weights: Sequence[int]) -> FreePoly:
    """Sum of the terms of maximal weighted degree of a nonzero polynomial."""
    if poly.is_zero():
        raise InputError("the zero polynomial has no leading homogeneous part")
    top = poly.degree(weights)
    return FreePoly({w: c for w, c in poly.terms.items()
                     if word_degree(w, weights) == top})


def monic(poly: FreePoly, order: WeightedOrder) -> FreePoly:
    lm, lc = leading(poly, order)
    if lc == 1:
        return poly
    return poly * (1 / lc)


class RelationSet:
    """A finite list of nonzero monic relations, sorted by leading monomial.

    Relations are normalized monic on ingestion; zero relations are rejected
    and leading monomials must be nonempty words (a relation with leading
    word 1 would collapse the algebra).
    """

    def __init__(self, polys: Iterable[FreePoly], order: WeightedOrder):
        self.order = order
        normalized = []
        for p in polys:
            if p.is_zero():
                raise InputError("zero relation rejected")
            q = monic(p, order)
            lm, _ = leading(q, order)
            if lm == EMPTY:
                raise InputError("relation with constant leading term rejected")
            normalized.append((lm, q))
        normalized.sort(key=lambda item: order.key(item[0]))
        self.polys: tuple[FreePoly, ...] = tuple(q for _, q in normalized)
        self.leading_words: tuple[Word, ...] = tuple(lm for lm, _ in normalized)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        return isinstance(other, RelationSet) and self.polys == other.polys

    def __repr__(self):
        return f"RelationSet({list(self.polys)!r})"


def _first_reduction(word: Word, rels: RelationSet, order: WeightedOrder):
    """The reduction site used by the deterministic strategy.

    Among the relation leading words occurring in ``word``, take the
    order-largest one and its leftmost occurrence.  Returns
    (leading word, position, relation) or None.
    """
    best = None
    for lm, rel in zip(rels.leading_words, rels.polys):
        pos = find_subword(word, lm)
        if pos < 0:
            continue
        if best is None:
            best = (lm, pos, rel)
        else:
            cmp = order.compare(lm, best[0])
            if cmp > 0 or (cmp == 0 and pos < best[1]):
                best = (lm, pos, rel)
    return best


def normal_form(poly: FreePoly, rels: RelationSet, order: WeightedOrder) -> FreePoly:
    """Reduce ``poly`` modulo ``rels`` until no term contains a leading word.

    Strategy: always rewrite the order-largest reducible term, replacing the
    leftmost occurrence of the order-largest applicable leading word.  Each
    step strictly decreases the rewritten term, so the loop terminates; when
    ``rels`` is a Groebner basis the result is independent of the strategy.
    """
    work = dict(poly.terms)
    done: dict[Word, Fraction] = {}
    while work:
        word = max(work, key=order.key)
        coeff = work.pop(word)
        site = _first_reduction(word, rels, order)
        if site is None:
            done[word] = done.get(word, 0) + coeff
            if not done[word]:
                del done[word]
            continue
        lm, pos, rel = site
        # word = prefix . lm . suffix and lm = rel - tail, so the term
        # rewrites to -coeff * prefix . tail . suffix.
        tail = rel - FreePoly.word(lm)
        prefix, suffix = word[:pos], word[pos + len(lm):]
        for t_word, t_coeff in tail.terms.items():
            w = prefix + t_word + suffix
            s = work.get(w, 0) - coeff * t_coeff
            if s:
                work[w] = s
            else:
                work.pop(w, None)
    result = FreePoly()
    result.terms = done
    return result


def is_normal(poly: FreePoly, rels: RelationSet) -> bool:
    return all(find_subword(w, lm) < 0
               for w in poly.terms for lm in rels.leading_words)


def _overlap_windows(u: Word, v: Word, same: bool) -> Iterator[tuple[Word, Word]]:
    """Cofactor pairs (p, s) with u+s == p+v, covering proper overlaps and
    inclusions of v inside u.  ``same`` suppresses the trivial self-match."""
    # proper overlaps: a nonempty proper suffix of u equals a proper prefix of v
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k:] == v[:k]:
            yield u[:len(u) - k], v[k:]
    # inclusions: v occurs inside u (u = p.v.s)
    if len(v) <= len(u):
        pos = find_subword(u, v)
        while pos >= 0:
            if not (same and len(u) == len(v)):
                yield u[:pos], u[pos + len(v):]
            pos = find_subword(u, v, pos + 1)


def s_elements(g: FreePoly, h: FreePoly, order: WeightedOrder) -> list[tuple[Word, FreePoly]]:
    """All S-elements of the ordered pair (g, h), with their common word.

    For each window u+s == p+v (u = LM(g), v = LM(h)) the S-element is
    g*s - p*h; its two leading terms cancel, so a nonzero reduced remainder
    witnesses a genuinely new ideal element.
    """
    u, _ = leading(g, order)
    v, _ = leading(h, order)
    gm, hm = monic(g, order), monic(h, order)
    out = []
    for p, s in _overlap_windows(u, v, same=g is h):
        elem = gm * FreePoly.word(s) - FreePoly.word(p) * hm
        out.append((u + s, elem))
    return out


def overlaps(g: FreePoly, h: FreePoly, order: WeightedOrder) -> list[FreePoly]:
    """The S-elements of the ordered pair (g, h); empty when no window exists."""
    if g.is_zero() or h.is_zero():
        raise InputError("overlaps of the zero polynomial are undefined")
    return [elem for _, elem in s_elements(g, h, order)]


@dataclass(frozen=True)
class GroebnerWitness:
    i: int
    j: int
    word: Word
    remainder: FreePoly


@dataclass(frozen=True)
class GroebnerResult:
    ok: bool
    witness: Optional[GroebnerWitness] = None

    def __bool__(self):
        return self.ok


def is_groebner(rels: RelationSet, order: WeightedOrder) -> GroebnerResult:
    """Check that every S-element of every ordered pair reduces to zero.

    Returns the first offending pair with its nonzero remainder otherwise.
    Complete for finite relation sets: by the diamond lemma the check is
    equivalent to the Groebner property under a compatible order.
    """
    polys = rels.polys
    for i, g in enumerate(polys):
        for j, h in enumerate(polys):
            for word, elem in s_elements(g, h, order):
                rem = normal_form(elem, rels, order)
                if not rem.is_zero():
                    return GroebnerResult(False, GroebnerWitness(i, j, word, rem))
    return GroebnerResult(True)


def interreduce(polys: Sequence[FreePoly], order: WeightedOrder) -> list[FreePoly]:
    """Reduce each polynomial modulo the others until stable; monic output,
    sorted by leading word."""
    current = [monic(p, order) for p in polys if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        for idx in range(len(current)):
            rest = current[:idx] + current[idx + 1:]
            if not rest:
                continue
            rels = RelationSet(rest, order)
            reduced = normal_form(current[idx], rels, order)
            if reduced.is_zero():
                current.pop(idx)
                changed = True
                break
            reduced = monic(reduced, order)
            if reduced != current[idx]:
                current[idx] = reduced
                changed = True
                break
    current.sort(key=lambda p: order.key(leading(p, order)[0]))
    return current


COMPLETE = "complete"
COMPLETE_UP_TO_BOUND = "complete up to bound"


def complete(rels: RelationSet, order: WeightedOrder,
             degree_bound: int) -> tuple[RelationSet, str]:
    """Degree-bounded completion.

    Adds reduced nonzero S-element remainders of weighted degree <= bound
    until none remain below the bound, then inter-reduces.  The flag is
    ``COMPLETE`` when no unresolved S-element exists at all and
    ``COMPLETE_UP_TO_BOUND`` when remainders above the bound were left open.
    Termination: every added leading word is a new word of bounded degree.
    """
    if rels.polys and degree_bound < max(p.degree(order.weights) for p in rels):
        raise InputError("degree_bound must be at least the maximal relation degree")
    current = RelationSet(rels.polys, order)
    grew = True
    while grew:
        grew = False
        for g in current.polys:
            for h in current.polys:
                for _, elem in s_elements(g, h, order):
                    rem = normal_form(elem, current, order)
                    if rem.is_zero() or rem.degree(order.weights) > degree_bound:
                        continue
                    current = RelationSet(list(current.polys) + [rem], order)
                    grew = True
                    break
                if grew:
                    break
            if grew:
                break
    reduced = RelationSet(interreduce(list(current.polys), order), order)
    unresolved = any(
        not normal_form(elem, reduced, order).is_zero()
        for g in reduced.polys for h in reduced.polys
        for _, elem in s_elements(g, h, order))
    return reduced, (COMPLETE_UP_TO_BOUND if unresolved else COMPLETE)


def normal_words(obstructions: Iterable[Word], weights: Sequence[int],
                 max_degree: int) -> Iterator[Word]:
    """All words of weighted degree <= max_degree avoiding every obstruction
    as a subword, in length-lexicographic generation order."""
    obst = [tuple(o) for o in obstructions]
    longest = max((len(o) for o in obst), default=1)
    ngens = len(weights)

    def extend(word: Word, degree: int) -> Iterator[Word]:
        yield word
        for g in range(ngens):
            d = degree + weights[g]
            if d > max_degree:
                continue
            new = word + (g,)
            window = new[-longest:]
            if any(find_subword(window, o) >= 0 for o in obst if len(o) <= len(new)):
                continue
            yield from extend(new, d)

    yield from extend(EMPTY, 0)


def count_normal_words(obstructions: Iterable[Word], weights: Sequence[int],
                       max_degree: int) -> list[int]:
    """Number of obstruction-free words at each weighted degree 0..max_degree."""
    counts = [0] * (max_degree + 1)
    for word in normal_words(obstructions, weights, max_degree):
        counts[word_degree(word, weights)] += 1
    return counts


def format_word(word: Word, names: Sequence[str]) -> str:
    """Render a word with runs grouped into powers; the empty word is '1'."""
    if not word:
        return "1"
    parts = []
    for g, run in ((g, len(tuple(r))) for g, r in itertools.groupby(word)):
        parts.append(names[g] if run == 1 else f"{names[g]}^{run}")
    return "*".join(parts)


def format_poly(poly: FreePoly, order: WeightedOrder, names: Sequence[str]) -> str:
    """Render a polynomial with terms in descending order."""
    if poly.is_zero():
        return "0"
    pieces = []
    for word in sorted(poly.terms, key=order.key, reverse=True):
        coeff = poly.terms[word]
        mag = -coeff if coeff < 0 else coeff
        body = format_word(word, names)
        if word and mag == 1:
            text = body
        elif not word:
            text = str(mag)
        else:
            text = f"{mag}*{body}"
        if not pieces:
            pieces.append(text if coeff > 0 else f"-{text}")
        else:
            pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
    return " ".join(pieces)
