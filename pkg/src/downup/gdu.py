"""Generalized down-up algebras from their defining relations.

The family is presented on free generators X1, X2, X3 by three relations

    X3*X1 - lambda*X1*X3 + gamma*X3
    X1*X2 - lambda*X2*X1 + gamma*X2
    X3*X2 - omega*X2*X3  + f(X1)

under the graded lexicographic order X2 < X1 < X3, with one of two weight
schemes.  Construction certifies that the relations form a Groebner basis
(a failed certificate is an internal error, not user error), and the module
derives the PBW count check and the solvable-algebra structure from the
certified data.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import CertificationError, HypothesisError, InputError
from .freealg import (FreePoly, Generator, GroebnerResult, RelationSet,
                      WeightedOrder, count_normal_words, is_groebner, leading,
                      scalar, ScalarLike, Word)
from .solvable import CommutationRule, PBWPoly, SolvableAlgebra, verify_solvable

# free-algebra generator indices
X1, X2, X3 = 0, 1, 2
GEN_NAMES = ("X1", "X2", "X3")
PRECEDENCE = (X2, X1, X3)  # X2 < X1 < X3


@dataclass(frozen=True)
class GDUParams:
    """Parameters (lambda, omega, gamma, f) of a generalized down-up algebra.

    ``f_coeffs`` lists the coefficients of f(X1) constant-first; trailing
    zeros are trimmed so the last entry is nonzero whenever deg f >= 1.
    """

    lam: Fraction
    omega: Fraction
    gamma: Fraction
    f_coeffs: tuple[Fraction, ...]

    @classmethod
    def make(cls, lam: ScalarLike, omega: ScalarLike, gamma: ScalarLike,
             f_coeffs: Sequence[ScalarLike]) -> "GDUParams":
        coeffs = [scalar(c) for c in f_coeffs]
        if not coeffs:
            raise InputError("f requires at least one coefficient (use [0] for f = 0)")
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return cls(scalar(lam), scalar(omega), scalar(gamma), tuple(coeffs))

    @property
    def deg_f(self) -> int:
        return len(self.f_coeffs) - 1

    def f_poly(self) -> FreePoly:
        """f(X1) as a free polynomial."""
        return FreePoly({(X1,) * k: c for k, c in enumerate(self.f_coeffs)})


class WeightScheme(enum.Enum):
    """Generator weight assignment: all generators weight 1 (needs deg f <= 2),
    or X1 weight 1 with X2, X3 weight deg f (needs deg f >= 1)."""

    ALL_ONES = "all-ones"
    DEG_F = "deg-f"

    def validate(self, deg_f: int) -> None:
        if self is WeightScheme.ALL_ONES and deg_f > 2:
            raise InputError(f"all-ones weights require deg f <= 2 (got {deg_f})")
        if self is WeightScheme.DEG_F and deg_f < 1:
            raise InputError("deg-f weights require deg f >= 1")

    def weights(self, deg_f: int) -> tuple[int, int, int]:
        if self is WeightScheme.ALL_ONES:
            return (1, 1, 1)
        return (1, deg_f, deg_f)


class GDUAlgebra:
    """A certified generalized down-up algebra presentation.

    The Groebner certificate is established at construction; use
    :func:`build` rather than calling the constructor directly.
    """

    def __init__(self, params: GDUParams, scheme: WeightScheme,
                 order: WeightedOrder, relations: RelationSet,
                 certificate: GroebnerResult, notes: tuple[str, ...] = ()):
        self.params = params
        self.scheme = scheme
        self.order = order
        self.relations = relations
        self.certificate = certificate
        self.notes = notes
        self.generators = tuple(
            Generator(i, GEN_NAMES[i], order.weights[i]) for i in range(3))

    @property
    def gen_names(self) -> tuple[str, ...]:
        return GEN_NAMES

    @property
    def deg_f(self) -> int:
        return self.params.deg_f

    @property
    def x2_weight(self) -> int:
        return self.order.weights[X2]

    def supports_solvable(self) -> bool:
        return self.params.lam * self.params.omega != 0 and self.deg_f >= 1

    def supports_graded(self) -> bool:
        return self.deg_f >= 1

    def __repr__(self):
        p = self.params
        return (f"GDUAlgebra(lambda={p.lam}, omega={p.omega}, gamma={p.gamma}, "
                f"f={list(p.f_coeffs)}, scheme={self.scheme.value})")


def defining_relations(params: GDUParams) -> list[FreePoly]:
    """The three defining relations, leading words X3X1, X1X2, X3X2."""
    lam, omega, gamma = params.lam, params.omega, params.gamma
    r31 = FreePoly({(X3, X1): 1, (X1, X3): -lam, (X3,): gamma})
    r12 = FreePoly({(X1, X2): 1, (X2, X1): -lam, (X2,): gamma})
    r32 = FreePoly({(X3, X2): 1, (X2, X3): -omega}) + params.f_poly()
    return [r31, r12, r32]


def build(params: GDUParams, scheme: WeightScheme,
          notes: tuple[str, ...] = ()) -> GDUAlgebra:
    """Construct and certify the algebra for the given parameters and scheme."""
    scheme.validate(params.deg_f)
    order = WeightedOrder(scheme.weights(params.deg_f), PRECEDENCE)
    relations = RelationSet(defining_relations(params), order)
    certificate = is_groebner(relations, order)
    if not certificate.ok:
        raise CertificationError(
            "defining relations failed the Groebner check", certificate.witness)
    return GDUAlgebra(params, scheme, order, relations, certificate, notes)


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def _preset_sl2(scheme: Optional[str] = None) -> GDUAlgebra:
    params = GDUParams.make(1, 1, 2, [0, -1])
    return build(params, _scheme_arg(scheme, params), notes=("preset sl2",))


def _preset_smith(f: Sequence[ScalarLike] = (0, 1),
                  scheme: Optional[str] = None) -> GDUAlgebra:
    given = [scalar(c) for c in f]
    params = GDUParams.make(1, 1, 1, [-c for c in given])
    note = ("preset smith: relations [X1,X3]=X3, [X1,X2]=-X2, [X3,X2]=f(X1) "
            "converted to the standard form with lambda=omega=1, gamma=1 and "
            "the f coefficients negated")
    return build(params, _scheme_arg(scheme, params), notes=(note,))


def _preset_woronowicz(zeta: ScalarLike = 2,
                       scheme: Optional[str] = None) -> GDUAlgebra:
    z = scalar(zeta)
    if z == 0:
        raise InputError("woronowicz requires zeta != 0")
    params = GDUParams.make(z ** 4, z ** 2, -(1 + z ** 2), [0, -z])
    note = ("preset woronowicz: lambda=zeta^4, omega=zeta^2, gamma=-(1+zeta^2), "
            "f(X1) = -zeta*X1 (reading a, b, c as the coefficients of "
            "f = a*X1^2 + b*X1 + c)")
    return build(params, _scheme_arg(scheme, params), notes=(note,))


def _preset_conformal(b: ScalarLike = 1, lam: ScalarLike = 1,
                      omega: ScalarLike = 1, gamma: ScalarLike = 1,
                      scheme: Optional[str] = None) -> GDUAlgebra:
    bb, ll, ww, gg = scalar(b), scalar(lam), scalar(omega), scalar(gamma)
    if ll * ww * gg * bb == 0:
        raise InputError("conformal requires lambda*omega*gamma*b != 0")
    params = GDUParams.make(ll, ww, gg, [0, 1, bb])
    return build(params, _scheme_arg(scheme, params),
                 notes=("preset conformal: f(X1) = b*X1^2 + X1",))


def _preset_down_up(alpha: ScalarLike, beta: ScalarLike, gamma: ScalarLike,
                    scheme: Optional[str] = None) -> GDUAlgebra:
    a, b, g = scalar(alpha), scalar(beta), scalar(gamma)
    root = _rational_sqrt(a * a + 4 * b)
    if root is None:
        raise InputError(
            "down_up over the rationals requires z^2 - alpha*z - beta to have "
            f"rational roots; alpha^2 + 4*beta = {a * a + 4 * b} is not a "
            "rational square")
    lam = (a + root) / 2
    omega = (a - root) / 2
    params = GDUParams.make(lam, omega, g, [0, 1])
    note = (f"preset down_up: alpha=lambda+omega, beta=-lambda*omega with "
            f"lambda={lam}, omega={omega} (lambda takes the larger root), f(X1)=X1")
    return build(params, _scheme_arg(scheme, params), notes=(note,))


def _scheme_arg(scheme: Optional[str], params: GDUParams) -> WeightScheme:
    if scheme is None:
        return WeightScheme.ALL_ONES if params.deg_f <= 2 else WeightScheme.DEG_F
    try:
        return WeightScheme(scheme)
    except ValueError:
        raise InputError(f"unknown weight scheme {scheme!r}")


PRESETS = {
    "sl2": (_preset_sl2, "lambda=omega=1, gamma=2, f=-X1 (enveloping algebra of sl2)"),
    "smith": (_preset_smith, "args: f (coefficient list, constant first); "
                             "Smith's family, converted to the standard form"),
    "woronowicz": (_preset_woronowicz, "args: zeta (nonzero rational)"),
    "conformal": (_preset_conformal, "args: b (nonzero), lam, omega, gamma "
                                     "(nonzero, default 1); f = b*X1^2 + X1"),
    "down_up": (_preset_down_up, "args: alpha, beta, gamma; requires rational "
                                 "roots of z^2 - alpha*z - beta"),
}


def preset(name: str, **kwargs) -> GDUAlgebra:
    """Build a named member of the family; see PRESETS for the argument docs."""
    try:
        builder, _ = PRESETS[name]
    except KeyError:
        raise InputError(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}")
    try:
        return builder(**kwargs)
    except TypeError as exc:
        raise InputError(f"bad arguments for preset {name!r}: {exc}")


def pbw_degree_counts(x2_weight: int, max_degree: int) -> list[int]:
    """Number of exponent triples (i, j, l) with w*(i+l) + j == q, per q."""
    counts = [0] * (max_degree + 1)
    w = x2_weight
    for i in range(max_degree // w + 1):
        for l in range(max_degree // w - i + 1):
            for j in range(max_degree - w * (i + l) + 1):
                counts[w * (i + l) + j] += 1
    return counts


@dataclass(frozen=True)
class PBWCheck:
    ok: bool
    rows: tuple[tuple[int, int, int], ...]  # (degree, normal words, exponent triples)

    def __bool__(self):
        return self.ok


def check_pbw(alg: GDUAlgebra, max_degree: int = 8) -> PBWCheck:
    """Compare normal-word counts against PBW exponent counts per degree."""
    if max_degree < 0:
        raise InputError("degree must be >= 0")
    normal = count_normal_words(alg.relations.leading_words, alg.order.weights,
                                max_degree)
    expected = pbw_degree_counts(alg.x2_weight, max_degree)
    rows = tuple((q, normal[q], expected[q]) for q in range(max_degree + 1))
    return PBWCheck(all(n == e for _, n, e in rows), rows)


def solvable_from_relations(relations: RelationSet, order: WeightedOrder,
                            sequence: Sequence[int], names: Sequence[str],
                            weights: Sequence[int]) -> SolvableAlgebra:
    """Derive a solvable-algebra commutation table from certified relations.

    ``sequence`` lists the free-algebra generator indices in PBW order
    (smallest first).  For each pair the relation with leading word
    a_j*a_i is rewritten as a_j*a_i = lam*a_i*a_j + f with f expressed in
    the PBW basis; tails that are not PBW-sorted are rejected.
    """
    position = {g: p for p, g in enumerate(sequence)}
    by_lm = {leading(r, order)[0]: r for r in relations}
    rules = []
    for pj in range(len(sequence)):
        for pi in range(pj):
            gj, gi = sequence[pj], sequence[pi]
            pair_word = (gj, gi)
            rel = by_lm.get(pair_word)
            if rel is None:
                raise CertificationError(
                    f"no relation with leading word {names[pi]}-after-{names[pj]}")
            rhs = FreePoly.word(pair_word) - rel  # a_j a_i = rhs
            swap = (gi, gj)
            lam = rhs.coeff(swap)
            f_terms = {}
            for word, coeff in rhs.terms.items():
                if word == swap:
                    continue
                exp = [0] * len(sequence)
                last = -1
                for g in word:
                    p = position.get(g)
                    if p is None or p < last:
                        raise CertificationError(
                            f"relation tail term {word} is not a PBW monomial")
                    last = p
                    exp[p] += 1
                f_terms[tuple(exp)] = coeff
            rules.append(CommutationRule(pj, pi, lam, PBWPoly(f_terms)))
    return SolvableAlgebra(names, weights, rules)


def to_solvable(alg: GDUAlgebra) -> SolvableAlgebra:
    """The solvable polynomial algebra on the PBW basis a_2^i a_1^j a_3^l.

    Requires lambda*omega != 0 and deg f >= 1; the order weights are
    (n, 1, n) on (a_2, a_1, a_3) with n = deg f, independent of the free
    algebra's weight scheme.
    """
    if alg.params.lam * alg.params.omega == 0:
        raise HypothesisError("solvable structure requires lambda*omega != 0")
    n = alg.deg_f
    if n < 1:
        raise HypothesisError("solvable structure requires deg f >= 1")
    sol = solvable_from_relations(
        alg.relations, alg.order, sequence=(X2, X1, X3),
        names=("X2", "X1", "X3"), weights=(n, 1, n))
    check = verify_solvable(sol)
    if not check.ok:
        raise CertificationError("derived commutation table is not solvable",
                                 check.violations)
    return sol


def normal_word_of_exponent(exp: Sequence[int]) -> Word:
    """The normal word X2^i X1^j X3^l for a PBW exponent (i, j, l)."""
    i, j, l = exp
    return (X2,) * i + (X1,) * j + (X3,) * l


def exponent_of_normal_word(word: Word) -> tuple[int, int, int]:
    """Inverse of :func:`normal_word_of_exponent`; rejects non-normal words."""
    counts = [0, 0, 0]
    last = -1
    for g in word:
        pos = (X2, X1, X3).index(g)
        if pos < last:
            raise InputError(f"word {word} is not of the form X2^i X1^j X3^l")
        last = pos
        counts[pos] += 1
    return tuple(counts)


def random_params(rng, deg_f: Optional[int] = None) -> GDUParams:
    """A seeded random parameter tuple with lambda, omega nonzero and the
    leading f coefficient nonzero; deg f defaults to a draw from {1, 2}."""
    def nonzero() -> Fraction:
        num = rng.choice([-3, -2, -1, 1, 2, 3])
        den = rng.choice([1, 2, 3])
        return Fraction(num, den)

    def any_rational() -> Fraction:
        return Fraction(rng.randint(-3, 3), rng.choice([1, 2, 3]))

    n = rng.choice([1, 2]) if deg_f is None else deg_f
    coeffs = [any_rational() for _ in range(n)] + [nonzero()]
    return GDUParams.make(nonzero(), nonzero(), any_rational(), coeffs)
