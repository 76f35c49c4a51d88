from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from src.algebra.polynomial import (
    COEFFICIENT_VARIABLES,
    Exponents,
    MultiPoly,
    Scalar,
    render_monomial,
    universe,
)
from src.algebra.rational import LinForm, RationalExpr
from src.errors import NotLaurent, VariableMismatch, ZeroDenominator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaurentPoly:
    """Finite sum of c_m * prod_i l_i^(-m_i) with c_m in Q[Q, hbar].

    Keys are the exponent vectors m; a positive entry is a negative power.
    """

    n: int
    terms: Tuple[Tuple[Exponents, MultiPoly], ...] = ()

    @classmethod
    def from_dict(cls, n: int, terms: Mapping[Exponents, Union[MultiPoly, Scalar]]) -> LaurentPoly:
        cleaned = {}
        for key, coeff in terms.items():
            if len(key) != n:
                raise VariableMismatch(f"exponent vector {key} for {n} colors")
            if not isinstance(coeff, MultiPoly):
                coeff = MultiPoly.constant(COEFFICIENT_VARIABLES, coeff)
            if not coeff.is_zero():
                cleaned[tuple(key)] = coeff
        return cls(n, tuple(sorted(cleaned.items())))

    @classmethod
    def zero(cls, n: int) -> LaurentPoly:
        return cls(n, ())

    def as_dict(self) -> Dict[Exponents, MultiPoly]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: Exponents) -> MultiPoly:
        return self.as_dict().get(tuple(key), MultiPoly.zero(COEFFICIENT_VARIABLES))

    def _check(self, other: LaurentPoly) -> None:
        if self.n != other.n:
            raise VariableMismatch(f"{self.n} colors vs {other.n} colors")

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._check(other)
        acc = self.as_dict()
        for key, coeff in other.terms:
            acc[key] = acc[key] + coeff if key in acc else coeff
        return LaurentPoly.from_dict(self.n, acc)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.n, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def scale(self, factor: Union[MultiPoly, Scalar]) -> LaurentPoly:
        return LaurentPoly.from_dict(self.n, {k: c * factor for k, c in self.terms})

    def __mul__(self, other: Union[LaurentPoly, MultiPoly, Scalar]) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        acc: Dict[Exponents, MultiPoly] = {}
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(k1, k2))
                product = c1 * c2
                acc[key] = acc[key] + product if key in acc else product
        return LaurentPoly.from_dict(self.n, acc)

    def permute(self, perm: Sequence[int]) -> LaurentPoly:
        """Rename l_k to l_{perm[k-1]} (perm is a permutation of 1..n)."""
        acc = {}
        for key, coeff in self.terms:
            new = [0] * self.n
            for k, m in enumerate(key):
                new[perm[k] - 1] = m
            acc[tuple(new)] = coeff
        return LaurentPoly.from_dict(self.n, acc)

    def degrees(self) -> Tuple[int, ...]:
        """Sorted distinct values of sum(m) over the terms."""
        return tuple(sorted({sum(k) for k, _ in self.terms}))

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(k) == degree for k, _ in self.terms)

    def is_symmetric(self) -> bool:
        table = self.as_dict()
        for key, coeff in self.terms:
            for other in set(itertools.permutations(key)):
                if table.get(other) != coeff:
                    return False
        return True

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for key, coeff in self.terms:
            term = coeff.evaluate(values)
            for k, m in enumerate(key, start=1):
                if m == 0:
                    continue
                name = f"l{k}"
                if name not in values:
                    raise VariableMismatch(f"no value supplied for {name}")
                value = Fraction(values[name])
                if value == 0 and m > 0:
                    raise ZeroDenominator(f"l{k} = 0")
                term *= value ** (-m)
            total += term
        return total

    def to_ratexpr(self) -> RationalExpr:
        """The same function as a RationalExpr with single-form denominators."""
        variables = universe(self.n)
        terms = []
        for key, coeff in self.terms:
            lifted = coeff.embed(variables)
            numerator_powers = tuple(max(-m, 0) for m in key) + (0, 0)
            if any(numerator_powers):
                lifted = lifted * MultiPoly.monomial(variables, numerator_powers)
            denominator = []
            for k, m in enumerate(key, start=1):
                denominator.extend([LinForm.single(k)] * max(m, 0))
            terms.append((lifted, denominator))
        return RationalExpr.from_terms(self.n, terms)

    def render(self) -> str:
        """One "monomial: coefficient" entry per term, in key order."""
        if not self.terms:
            return "0"
        names = tuple(f"l{k}" for k in range(1, self.n + 1))
        parts = []
        for key, coeff in self.terms:
            mono = render_monomial(names, tuple(-m for m in key)) or "1"
            parts.append(f"{mono}: {coeff.render()}")
        return "; ".join(parts)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class ClearedForm:
    """A rational expression written as numerator / (l^A * prod P^D).

    The integer numerator is stored scaled by `scale`, i.e. the true
    numerator is numerator / scale.
    """

    n: int
    monomial: Exponents
    pairs: Tuple[Tuple[LinForm, int], ...]
    numerator: Tuple[Tuple[Exponents, int], ...]
    scale: int

    def numerator_poly(self) -> MultiPoly:
        return MultiPoly.from_dict(
            universe(self.n), {e: Fraction(c, self.scale) for e, c in self.numerator}
        )


def _normalize_summand(denominator: Sequence[LinForm], n: int) -> Tuple[List[int], Counter, int]:
    singles = [0] * n
    pairs: Counter = Counter()
    halves = 0
    for form in denominator:
        if form.is_single:
            singles[form.i - 1] += 1
        elif form.i == form.j:
            # 1/(2 l_i) is monomial-like
            singles[form.i - 1] += 1
            halves += 1
        else:
            pairs[(form.i, form.j)] += 1
    return singles, pairs, halves


def _times_pair(poly: Dict[Exponents, int], i: int, j: int) -> Dict[Exponents, int]:
    out: Dict[Exponents, int] = {}
    for exponents, coeff in poly.items():
        for k in (i, j):
            bumped = list(exponents)
            bumped[k] += 1
            key = tuple(bumped)
            out[key] = out.get(key, 0) + coeff
    return out


def clear_denominators(a: RationalExpr) -> ClearedForm:
    """Bring every summand over the common denominator l^A * prod P^D.

    A_i is the largest single exponent of l_i (2 l_i counts as l_i with a
    factor 1/2 moved to the coefficient) and D_P the largest multiplicity of
    each pair form l_i + l_j, i < j. Numerator arithmetic is done in
    integers after scaling by the lcm of all coefficient denominators.
    """
    n = a.n
    normalized = []
    for denominator, coeff in a.summands:
        singles, pairs, halves = _normalize_summand(denominator, n)
        normalized.append((singles, pairs, coeff.scale(Fraction(1, 2 ** halves))))

    monomial = [0] * n
    pair_max: Counter = Counter()
    scale = 1
    for singles, pairs, coeff in normalized:
        monomial = [max(a_, s) for a_, s in zip(monomial, singles)]
        for key, mult in pairs.items():
            pair_max[key] = max(pair_max[key], mult)
        for _, value in coeff.terms:
            scale = math.lcm(scale, value.denominator)
    pair_keys = sorted(pair_max)

    cache: Dict[Tuple[int, ...], Dict[Exponents, int]] = {
        (0,) * len(pair_keys): {(0,) * n: 1}
    }

    def cofactor(exps: Tuple[int, ...]) -> Dict[Exponents, int]:
        if exps in cache:
            return cache[exps]
        last = max(k for k, e in enumerate(exps) if e)
        previous = list(exps)
        previous[last] -= 1
        i, j = pair_keys[last]
        result = _times_pair(cofactor(tuple(previous)), i - 1, j - 1)
        cache[exps] = result
        return result

    numerator: Dict[Exponents, int] = {}
    for singles, pairs, coeff in normalized:
        shift = [m - s for m, s in zip(monomial, singles)]
        cof = cofactor(tuple(pair_max[key] - pairs[key] for key in pair_keys))
        for exponents, value in coeff.terms:
            scaled = int(value * scale)
            base = [exponents[t] + shift[t] for t in range(n)]
            tail = exponents[n:]
            for lam, mult in cof.items():
                key = tuple(b + e for b, e in zip(base, lam)) + tail
                numerator[key] = numerator.get(key, 0) + scaled * mult

    return ClearedForm(
        n=n,
        monomial=tuple(monomial),
        pairs=tuple((LinForm.pair(i, j), pair_max[(i, j)]) for i, j in pair_keys),
        numerator=tuple(sorted((k, v) for k, v in numerator.items() if v)),
        scale=scale,
    )


def _divide_by_pair(poly: Dict[Exponents, int], i: int, j: int) -> Dict[Exponents, int]:
    """Exact quotient by (l_i + l_j), positions i < j, or None if inexact.

    Each slice with fixed other exponents and fixed e_i + e_j = s is a
    binary form sum_k a_k l_i^(s-k) l_j^k; synthetic division gives
    q_0 = a_0, q_k = a_k - q_(k-1), with remainder a_s - q_(s-1).
    """
    slices: Dict[Tuple[Tuple[int, ...], int], Dict[int, int]] = {}
    for exponents, coeff in poly.items():
        rest = exponents[:i] + exponents[i + 1:j] + exponents[j + 1:]
        slot = slices.setdefault((rest, exponents[i] + exponents[j]), {})
        slot[exponents[j]] = coeff

    quotient: Dict[Exponents, int] = {}
    for (rest, s), coeffs in slices.items():
        if s == 0:
            return None
        previous = 0
        for k in range(s):
            q = coeffs.get(k, 0) - previous
            if q:
                exponents = list(rest)
                exponents.insert(i, s - 1 - k)
                exponents.insert(j, k)
                quotient[tuple(exponents)] = q
            previous = q
        if coeffs.get(s, 0) != previous:
            return None
    return quotient


def reduce_to_laurent(a: RationalExpr) -> LaurentPoly:
    """Rewrite a rational expression as an exact Laurent polynomial.

    Raises:
        NotLaurent: the cleared numerator is not divisible by some pair
            factor; the exception carries that numerator.
    """
    cleared = clear_denominators(a)
    n = a.n
    poly = dict(cleared.numerator)
    for form, power in cleared.pairs:
        for _ in range(power):
            divided = _divide_by_pair(poly, form.i - 1, form.j - 1)
            if divided is None:
                logger.debug(f"Numerator not divisible by ({form.render()})")
                raise NotLaurent(
                    f"cleared numerator is not divisible by ({form.render()})",
                    numerator=cleared.numerator_poly(),
                )
            poly = divided

    acc: Dict[Exponents, Dict[Exponents, Fraction]] = {}
    for exponents, coeff in poly.items():
        key = tuple(cleared.monomial[t] - exponents[t] for t in range(n))
        inner = acc.setdefault(key, {})
        tail = exponents[n:]
        inner[tail] = inner.get(tail, 0) + Fraction(coeff, cleared.scale)
    return LaurentPoly.from_dict(
        n, {k: MultiPoly.from_dict(COEFFICIENT_VARIABLES, v) for k, v in acc.items()}
    )


def reexpand(laurent: LaurentPoly, cleared: ClearedForm) -> MultiPoly:
    """Multiply a Laurent polynomial back by the common denominator of `cleared`."""
    n = laurent.n
    variables = universe(n)
    poly: Dict[Exponents, Fraction] = {}
    for key, coeff in laurent.terms:
        for tail, value in coeff.terms:
            lam = tuple(cleared.monomial[t] - key[t] for t in range(n))
            poly[lam + tail] = poly.get(lam + tail, 0) + value
    for form, power in cleared.pairs:
        for _ in range(power):
            poly = _times_pair(poly, form.i - 1, form.j - 1)
    return MultiPoly.from_dict(variables, poly)


def eval_numeric(a: Union[RationalExpr, LaurentPoly], values: Mapping[str, Scalar]) -> Fraction:
    """Exact rational value of an expression at the given point."""
    return a.evaluate(values)


def monomial_inverse(n: int, exponents: Iterable[int], coeff: Union[MultiPoly, Scalar] = 1) -> LaurentPoly:
    """The Laurent monomial coeff * prod l_i^(-m_i)."""
    return LaurentPoly.from_dict(n, {tuple(exponents): coeff})
