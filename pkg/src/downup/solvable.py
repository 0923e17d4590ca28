"""Arithmetic in solvable polynomial algebras via PBW normal forms.

Monomials are exponent vectors over a fixed generator sequence (listed
smallest-first in the monomial order); the product is driven by one
commutation rule per generator pair,

    a_j a_i  =  lambda_ji a_i a_j + f_ji        (i < j, lambda_ji != 0),

with the lower part f_ji preceding a_i a_j in the order.  On top of the
product the module provides checks for the monomial-ordering and
solvable-algebra axioms, left-ideal Groebner bases, and left normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InputError
from .freealg import scalar, ScalarLike

Exponent = tuple[int, ...]


class PBWGrlexOrder:
    """Graded lexicographic order on exponent vectors.

    Weighted degree first; equal degrees are broken by the corresponding
    sorted words read left to right, i.e. more copies of an earlier (smaller)
    generator make the monomial smaller.
    """

    def __init__(self, weights: Sequence[int]):
        self.weights = tuple(int(w) for w in weights)
        if not self.weights or any(w < 1 for w in self.weights):
            raise InputError("weights must be positive integers")

    def degree(self, exp: Exponent) -> int:
        return sum(w * a for w, a in zip(self.weights, exp))

    def key(self, exp: Exponent):
        return (self.degree(exp), tuple(-a for a in exp))

    def compare(self, e1: Exponent, e2: Exponent) -> int:
        k1, k2 = self.key(e1), self.key(e2)
        return -1 if k1 < k2 else (0 if k1 == k2 else 1)


class PBWPoly:
    """Finite rational combination of PBW monomials (exponent vectors)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Exponent, ScalarLike]] = None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                c = scalar(coeff)
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "PBWPoly":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, PBWPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return PBWPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other: "PBWPoly") -> "PBWPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        result = PBWPoly()
        result.terms = out
        return result

    def __sub__(self, other: "PBWPoly") -> "PBWPoly":
        return self + (-other)

    def __rmul__(self, other) -> "PBWPoly":
        c = scalar(other)
        return PBWPoly({e: c * a for e, a in self.terms.items()})

    def __mul__(self, other) -> "PBWPoly":
        return self.__rmul__(other)

    def __repr__(self):
        return f"PBWPoly({self.terms!r})"


@dataclass(frozen=True)
class CommutationRule:
    """Rewrite data for one generator pair: a_j a_i = lam * a_i a_j + f."""

    j: int
    i: int
    lam: Fraction
    f: PBWPoly

    def __post_init__(self):
        if not 0 <= self.i < self.j:
            raise InputError("commutation rule requires generator positions i < j")


def leading_exp(poly: PBWPoly, order: PBWGrlexOrder) -> tuple[Exponent, Fraction]:
    if poly.is_zero():
        raise InputError("the zero polynomial has no leading monomial")
    lm = max(poly.terms, key=order.key)
    return lm, poly.terms[lm]


def monic(poly: PBWPoly, order: PBWGrlexOrder) -> PBWPoly:
    _, lc = leading_exp(poly, order)
    return poly if lc == 1 else (1 / lc) * poly


def word_of_exponent(exp: Exponent) -> tuple[int, ...]:
    """Flatten an exponent vector into the sorted generator word it denotes."""
    out: list[int] = []
    for g, a in enumerate(exp):
        out.extend([g] * a)
    return tuple(out)


def exponents_up_to(weights: Sequence[int], bound: int) -> list[Exponent]:
    """All exponent vectors of weighted degree <= bound, sorted by degree-lex."""
    out: list[Exponent] = []

    def rec(prefix: tuple[int, ...], remaining: int, pos: int):
        if pos == len(weights):
            out.append(prefix)
            return
        w = weights[pos]
        for a in range(remaining // w + 1):
            rec(prefix + (a,), remaining - a * w, pos + 1)

    rec((), bound, 0)
    order = PBWGrlexOrder(weights)
    out.sort(key=order.key)
    return out


class SolvableAlgebra:
    """A PBW algebra presented by one commutation rule per generator pair.

    Generators are listed smallest-first; the default order is the weighted
    graded lexicographic one.  Construction validates only the shape of the
    data -- use :func:`verify_solvable` / :func:`verify_ordering_axioms` for
    the axioms themselves.  The product assumes the solvable axioms hold
    (rewriting may fail to terminate otherwise).
    """

    def __init__(self, names: Sequence[str], weights: Sequence[int],
                 rules: Iterable[CommutationRule],
                 order: Optional[PBWGrlexOrder] = None):
        self.names = tuple(names)
        self.weights = tuple(int(w) for w in weights)
        if len(self.names) != len(self.weights):
            raise InputError("one weight per generator required")
        n = len(self.names)
        self.order = order if order is not None else PBWGrlexOrder(self.weights)
        self.rules: dict[tuple[int, int], CommutationRule] = {}
        for rule in rules:
            if rule.j >= n:
                raise InputError(f"rule for unknown generator position {rule.j}")
            self.rules[(rule.j, rule.i)] = rule
        for j in range(n):
            for i in range(j):
                if (j, i) not in self.rules:
                    raise InputError(f"missing commutation rule for pair ({j}, {i})")
        self._word_cache: dict[tuple[int, ...], PBWPoly] = {}

    @property
    def ngens(self) -> int:
        return len(self.names)

    def unit_exponent(self) -> Exponent:
        return (0,) * self.ngens

    def one(self) -> PBWPoly:
        return PBWPoly({self.unit_exponent(): 1})

    def generator(self, position: int) -> PBWPoly:
        exp = [0] * self.ngens
        exp[position] = 1
        return PBWPoly({tuple(exp): 1})

    def monomial(self, exp: Exponent, coeff: ScalarLike = 1) -> PBWPoly:
        if len(exp) != self.ngens:
            raise InputError("exponent length does not match the generator count")
        return PBWPoly({tuple(exp): coeff})

    def _normalize_word(self, word: tuple[int, ...]) -> PBWPoly:
        """Rewrite an arbitrary generator word into the PBW basis."""
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached
        descent = next((t for t in range(len(word) - 1) if word[t] > word[t + 1]), None)
        if descent is None:
            exp = [0] * self.ngens
            for g in word:
                exp[g] += 1
            result = PBWPoly({tuple(exp): 1})
        else:
            j, i = word[descent], word[descent + 1]
            prefix, suffix = word[:descent], word[descent + 2:]
            rule = self.rules[(j, i)]
            result = rule.lam * self._normalize_word(prefix + (i, j) + suffix)
            for exp, c in rule.f.terms.items():
                result = result + c * self._normalize_word(
                    prefix + word_of_exponent(exp) + suffix)
        self._word_cache[word] = result
        return result

    def multiply(self, p: PBWPoly, q: PBWPoly) -> PBWPoly:
        """Bilinear associative product in the PBW basis."""
        result = PBWPoly.zero()
        for e1, c1 in p.terms.items():
            w1 = word_of_exponent(e1)
            for e2, c2 in q.terms.items():
                result = result + (c1 * c2) * self._normalize_word(
                    w1 + word_of_exponent(e2))
        return result

    def product(self, *factors: PBWPoly) -> PBWPoly:
        out = self.one()
        for f in factors:
            out = self.multiply(out, f)
        return out


@dataclass(frozen=True)
class AxiomCheck:
    ok: bool
    violations: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.ok


def verify_solvable(alg: SolvableAlgebra) -> AxiomCheck:
    """Check lambda_ji != 0 and LM(f_ji) < a_i a_j for every rule."""
    problems = []
    order = alg.order
    for (j, i), rule in sorted(alg.rules.items()):
        pair = [0] * alg.ngens
        pair[i] += 1
        pair[j] += 1
        swap = tuple(pair)
        if rule.lam == 0:
            problems.append(
                f"rule {alg.names[j]}*{alg.names[i]}: unit coefficient is 0")
        if not rule.f.is_zero():
            lm, _ = leading_exp(rule.f, order)
            if order.compare(lm, swap) >= 0:
                problems.append(
                    f"rule {alg.names[j]}*{alg.names[i]}: lower part leads with "
                    f"{lm}, not below {swap}")
    return AxiomCheck(not problems, tuple(problems))


def verify_ordering_axioms(alg: SolvableAlgebra, bound: int = 4,
                           order=None) -> AxiomCheck:
    """Exhaustively certify the monomial-ordering axioms on bounded monomials.

    Checks, over all PBW monomials of weighted degree <= bound and all
    bounded products formed with the algebra's multiplication:

    1. the comparison is a (finitely certified) total order;
    2. a monomial never exceeds a nonunit product it divides into, i.e.
       whenever gamma = LM(a^alpha a^beta a^eta) != 1 and beta != gamma,
       beta precedes gamma;
    3. taking leading monomials of products is strictly monotone in each
       factor, skipping the degenerate zero/unit branches (unreachable here).

    Returns the first violation found.
    """
    if bound < 2:
        raise InputError("bound must be at least 2")
    if order is None:
        order = alg.order
    monos = exponents_up_to(alg.weights, bound)
    unit = alg.unit_exponent()
    wdeg = {m: sum(w * a for w, a in zip(alg.weights, m)) for m in monos}

    keys = {}
    for m in monos:
        k = order.key(m)
        if k in keys:
            return AxiomCheck(False, (f"order ties distinct monomials {keys[k]} and {m}",))
        keys[k] = m

    def lm_of_product(*exps: Exponent) -> Optional[Exponent]:
        prod = alg.product(*(alg.monomial(e) for e in exps))
        if prod.is_zero():
            return None
        return max(prod.terms, key=order.key)

    for alpha in monos:
        for beta in monos:
            if wdeg[alpha] + wdeg[beta] > bound:
                continue
            for eta in monos:
                if wdeg[alpha] + wdeg[beta] + wdeg[eta] > bound:
                    continue
                gamma = lm_of_product(alpha, beta, eta)
                if gamma is None or gamma == unit or beta == gamma:
                    continue
                if order.compare(beta, gamma) >= 0:
                    return AxiomCheck(False, (
                        f"axiom 2: beta={beta} does not precede "
                        f"gamma=LM({alpha}*{beta}*{eta})={gamma}",))

    for a_pos, alpha in enumerate(monos):
        for beta in monos[a_pos + 1:]:
            if order.compare(alpha, beta) >= 0:
                alpha2, beta2 = beta, alpha
            else:
                alpha2, beta2 = alpha, beta
            top = max(wdeg[alpha2], wdeg[beta2])
            for gamma in monos:
                if wdeg[gamma] + top > bound:
                    continue
                for eta in monos:
                    if wdeg[gamma] + top + wdeg[eta] > bound:
                        continue
                    left = lm_of_product(gamma, alpha2, eta)
                    right = lm_of_product(gamma, beta2, eta)
                    if left is None or right is None or right == unit:
                        continue
                    if order.compare(left, right) >= 0:
                        return AxiomCheck(False, (
                            f"axiom 3: alpha={alpha2} < beta={beta2} but "
                            f"LM({gamma}*{alpha2}*{eta})={left} does not precede "
                            f"LM({gamma}*{beta2}*{eta})={right}",))
    return AxiomCheck(True)


def _divides(d: Exponent, e: Exponent) -> bool:
    return all(a <= b for a, b in zip(d, e))


def nf_left(alg: SolvableAlgebra, p: PBWPoly, basis: Sequence[PBWPoly]) -> PBWPoly:
    """Left normal form: no term of the remainder is left-divisible by any
    basis leading monomial.  ``p`` lies in the left ideal iff the result is 0."""
    order = alg.order
    lms = [leading_exp(b, order)[0] for b in basis]
    work = dict(p.terms)
    remainder: dict[Exponent, Fraction] = {}
    while work:
        exp = max(work, key=order.key)
        coeff = work.pop(exp)
        hit = next((t for t, lm in enumerate(lms) if _divides(lm, exp)), None)
        if hit is None:
            remainder[exp] = remainder.get(exp, 0) + coeff
            if not remainder[exp]:
                del remainder[exp]
            continue
        sigma = tuple(a - b for a, b in zip(exp, lms[hit]))
        h = alg.multiply(alg.monomial(sigma), basis[hit])
        rho = h.coeff(exp)
        # the popped term cancels against (coeff/rho) * h; fold in the rest
        for e, c in h.terms.items():
            if e == exp:
                continue
            s = work.get(e, 0) - (coeff / rho) * c
            if s:
                work[e] = s
            else:
                work.pop(e, None)
    result = PBWPoly()
    result.terms = remainder
    return result


def _left_spoly(alg: SolvableAlgebra, g1: PBWPoly, g2: PBWPoly) -> PBWPoly:
    order = alg.order
    lm1, _ = leading_exp(g1, order)
    lm2, _ = leading_exp(g2, order)
    lcm = tuple(max(a, b) for a, b in zip(lm1, lm2))
    h1 = alg.multiply(alg.monomial(tuple(a - b for a, b in zip(lcm, lm1))), g1)
    h2 = alg.multiply(alg.monomial(tuple(a - b for a, b in zip(lcm, lm2))), g2)
    return (1 / h1.coeff(lcm)) * h1 - (1 / h2.coeff(lcm)) * h2


def interreduce_left(alg: SolvableAlgebra, polys: Sequence[PBWPoly]) -> list[PBWPoly]:
    order = alg.order
    current = [monic(p, order) for p in polys if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        for idx in range(len(current)):
            rest = current[:idx] + current[idx + 1:]
            reduced = nf_left(alg, current[idx], rest)
            if reduced.is_zero():
                current.pop(idx)
                changed = True
                break
            reduced = monic(reduced, order)
            if reduced != current[idx]:
                current[idx] = reduced
                changed = True
                break
    current.sort(key=lambda p: order.key(leading_exp(p, order)[0]))
    return current


def left_buchberger(alg: SolvableAlgebra, gens: Iterable[PBWPoly]) -> list[PBWPoly]:
    """Finite left Groebner basis of the left ideal generated by ``gens``.

    S-polynomials are formed on componentwise least common multiples of the
    leading exponents and reduced by left division; Dickson's lemma bounds
    the chain of new leading exponents, so the loop terminates.  The output
    is inter-reduced, monic and sorted by leading monomial.
    """
    order = alg.order
    basis = [monic(g, order) for g in gens if not g.is_zero()]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        rem = nf_left(alg, _left_spoly(alg, basis[i], basis[j]), basis)
        if rem.is_zero():
            continue
        basis.append(monic(rem, order))
        new = len(basis) - 1
        pairs.extend((k, new) for k in range(new))
    return interreduce_left(alg, basis)
