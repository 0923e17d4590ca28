"""Independent brute-force oracles the tests freeze expected values against.

Nothing here shares code paths with the reducers under test: reduction is
re-done by exhaustive position exploration, and ideal membership / Groebner
detection is re-done with dense linear algebra over the rationals on a
degree-bounded slice of the ideal.
"""

from __future__ import annotations

from fractions import Fraction

from downup.freealg import (FreePoly, RelationSet, WeightedOrder,
                            find_subword, word_degree)
from downup.solvable import SolvableAlgebra, exponents_up_to, leading_exp


def canonical(poly: FreePoly) -> tuple:
    return tuple(sorted(poly.terms.items()))


def exhaustive_normal_forms(poly: FreePoly, rels: RelationSet,
                            order: WeightedOrder) -> set[tuple]:
    """All irreducible results reachable by single-step rewrites at every
    position of every term with every relation.  A singleton set certifies
    confluence on this input."""
    results: set[tuple] = set()
    seen: set[tuple] = set()

    def rewrites(p: FreePoly):
        found = False
        for word, coeff in sorted(p.terms.items()):
            for lm, rel in zip(rels.leading_words, rels.polys):
                pos = find_subword(word, lm)
                while pos >= 0:
                    found = True
                    tail = rel - FreePoly.word(lm)
                    replacement = (FreePoly.word(word[:pos]) * (-tail)
                                   * FreePoly.word(word[pos + len(lm):]))
                    yield p - FreePoly.word(word, coeff) + coeff * replacement
                    pos = find_subword(word, lm, pos + 1)
        if not found:
            results.add(canonical(p))

    stack = [poly]
    while stack:
        p = stack.pop()
        key = canonical(p)
        if key in seen:
            continue
        seen.add(key)
        stack.extend(rewrites(p))
    return results


def reduce_rightmost(poly: FreePoly, rels: RelationSet,
                     order: WeightedOrder) -> FreePoly:
    """Alternative reduction strategy: smallest reducible term first, and
    within it the rightmost occurrence of the smallest applicable leading
    word.  Must agree with normal_form whenever the set is a Groebner basis."""
    work = dict(poly.terms)
    done: dict[tuple, Fraction] = {}
    while work:
        reducible = None
        for word in sorted(work, key=order.key):
            sites = []
            for lm, rel in zip(rels.leading_words, rels.polys):
                pos = -1
                nxt = find_subword(word, lm)
                while nxt >= 0:
                    pos = nxt
                    nxt = find_subword(word, lm, nxt + 1)
                if pos >= 0:
                    sites.append((order.key(lm), -pos, lm, rel))
            if sites:
                sites.sort()
                _, negpos, lm, rel = sites[0]
                reducible = (word, -negpos, lm, rel)
                break
        if reducible is None:
            for word, coeff in work.items():
                done[word] = done.get(word, 0) + coeff
            break
        word, pos, lm, rel = reducible
        coeff = work.pop(word)
        tail = rel - FreePoly.word(lm)
        update = (FreePoly.word(word[:pos]) * (-coeff * tail)
                  * FreePoly.word(word[pos + len(lm):]))
        for w, c in update.terms.items():
            s = work.get(w, 0) + c
            if s:
                work[w] = s
            else:
                work.pop(w, None)
    return FreePoly({w: c for w, c in done.items() if c})


def words_up_to(weights, max_degree):
    """All words of weighted degree <= max_degree (not only normal ones)."""
    ngens = len(weights)
    out = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for word in frontier:
            base = word_degree(word, weights)
            for g in range(ngens):
                if base + weights[g] <= max_degree:
                    new = word + (g,)
                    nxt.append(new)
        out.extend(nxt)
        frontier = nxt
    return out


class Echelon:
    """Sparse row echelon over the rationals keyed by arbitrary monomials."""

    def __init__(self, sort_key):
        self.sort_key = sort_key
        self.rows: dict = {}

    def _reduce(self, vec: dict) -> dict:
        vec = {k: v for k, v in vec.items() if v}
        while vec:
            pivot = max(vec, key=self.sort_key)
            row = self.rows.get(pivot)
            if row is None:
                return vec
            coeff = vec[pivot]
            for k, v in row.items():
                s = vec.get(k, 0) - coeff * v
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
        return vec

    def insert(self, vec: dict) -> bool:
        red = self._reduce(dict(vec))
        if not red:
            return False
        pivot = max(red, key=self.sort_key)
        lead = red[pivot]
        self.rows[pivot] = {k: v / lead for k, v in red.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self._reduce(dict(vec))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self):
        return set(self.rows)


def two_sided_span(polys, order: WeightedOrder, max_degree: int) -> Echelon:
    """Echelon basis of span{p * g * q : deg(p g q) <= max_degree}."""
    span = Echelon(order.key)
    words = words_up_to(order.weights, max_degree)
    for g in polys:
        gdeg = g.degree(order.weights)
        for p in words:
            pdeg = word_degree(p, order.weights)
            if pdeg + gdeg > max_degree:
                continue
            for q in words:
                if pdeg + gdeg + word_degree(q, order.weights) > max_degree:
                    continue
                span.insert((FreePoly.word(p) * g * FreePoly.word(q)).terms)
    return span


def reducible_word_count(leading_words, weights, max_degree: int) -> int:
    return sum(1 for w in words_up_to(weights, max_degree)
               if any(find_subword(w, lm) >= 0 for lm in leading_words))


def groebner_by_dimension(rels: RelationSet, order: WeightedOrder,
                          max_degree: int) -> bool:
    """Degree-bounded Groebner detection by pure linear algebra.

    The span of {p*g*q} always has every reducible word among its pivots;
    the set is a Groebner basis up to the bound iff no extra pivot (a normal
    word) shows up, i.e. iff the span dimension equals the reducible count.
    """
    span = two_sided_span(rels.polys, order, max_degree)
    expected = reducible_word_count(rels.leading_words, order.weights, max_degree)
    assert span.dim >= expected
    return span.dim == expected


def ideal_member(span: Echelon, poly: FreePoly) -> bool:
    return span.contains(poly.terms)


def left_span(alg: SolvableAlgebra, gens, max_degree: int) -> Echelon:
    """Echelon basis of span{m . g : PBW monomials m, deg(m g) <= max_degree}."""
    span = Echelon(alg.order.key)
    for g in gens:
        gdeg = alg.order.degree(leading_exp(g, alg.order)[0])
        for m in exponents_up_to(alg.weights, max_degree - gdeg):
            span.insert(alg.multiply(alg.monomial(m), g).terms)
    return span


def brute_multiply_check(alg: SolvableAlgebra, exps) -> bool:
    """Associativity probe on a triple of monomials, fully parenthesized both ways."""
    a, b, c = (alg.monomial(e) for e in exps)
    left = alg.multiply(alg.multiply(a, b), c)
    right = alg.multiply(a, alg.multiply(b, c))
    return left == right


def pbw_triples(x2_weight: int, degree: int):
    """Exponent triples (i, j, l) with x2_weight*(i+l) + j == degree."""
    out = []
    for i in range(degree // x2_weight + 1):
        for l in range(degree // x2_weight - i + 1):
            j = degree - x2_weight * (i + l)
            out.append((i, j, l))
    return out


def enumerate_normal_words(leading_words, weights, max_degree):
    """Direct DFS enumeration of obstruction-free words, degree-capped."""
    ngens = len(weights)
    found = []

    def rec(word):
        found.append(word)
        for g in range(ngens):
            new = word + (g,)
            if word_degree(new, weights) > max_degree:
                continue
            if any(find_subword(new, lm) >= 0 for lm in leading_words):
                continue
            rec(new)

    rec(())
    return found
