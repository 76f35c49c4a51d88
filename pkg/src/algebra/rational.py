from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, NamedTuple, Sequence, Tuple, Union

from src.algebra.polynomial import MultiPoly, Scalar, universe
from src.errors import VariableMismatch, ZeroDenominator

logger = logging.getLogger(__name__)


class LinForm(NamedTuple):
    """A denominator factor: l_i when j == 0, otherwise l_i + l_j with i <= j.

    pair(i, i) is the form l_i + l_i = 2 l_i; the factor 2 belongs to the
    form, not to the coefficient.
    """

    i: int
    j: int = 0

    @classmethod
    def single(cls, i: int) -> LinForm:
        return cls(i, 0)

    @classmethod
    def pair(cls, i: int, j: int) -> LinForm:
        return cls(min(i, j), max(i, j))

    @property
    def is_single(self) -> bool:
        return self.j == 0

    @property
    def is_pair(self) -> bool:
        return self.j != 0

    def indices(self) -> Tuple[int, ...]:
        return (self.i,) if self.is_single else (self.i, self.j)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for k in self.indices():
            name = f"l{k}"
            if name not in values:
                raise VariableMismatch(f"no value supplied for {name}")
            total += Fraction(values[name])
        return total

    def relabel(self, mapping: Sequence[int]) -> LinForm:
        """Send l_k to l_{mapping[k-1]}."""
        if self.is_single:
            return LinForm.single(mapping[self.i - 1])
        return LinForm.pair(mapping[self.i - 1], mapping[self.j - 1])

    def render(self) -> str:
        if self.is_single:
            return f"l{self.i}"
        if self.i == self.j:
            return f"2 l{self.i}"
        return f"l{self.i} + l{self.j}"


Denominator = Tuple[LinForm, ...]


@dataclass(frozen=True)
class RationalExpr:
    """A sum of coefficient/denominator summands over l1..ln, Q, hbar.

    Summands are keyed by their sorted denominator multiset; like
    denominators are merged and zero summands dropped on construction, which
    makes addition associative on the stored representation.
    """

    n: int
    summands: Tuple[Tuple[Denominator, MultiPoly], ...] = ()

    @property
    def variables(self) -> Tuple[str, ...]:
        return universe(self.n)

    @classmethod
    def from_terms(
        cls, n: int, terms: Iterable[Tuple[Union[MultiPoly, Scalar], Iterable[LinForm]]]
    ) -> RationalExpr:
        variables = universe(n)
        merged: Dict[Denominator, MultiPoly] = {}
        for coeff, denominator in terms:
            if not isinstance(coeff, MultiPoly):
                coeff = MultiPoly.constant(variables, coeff)
            elif coeff.variables != variables:
                raise VariableMismatch(f"coefficient over {coeff.variables}, expected {variables}")
            key = tuple(sorted(denominator))
            for form in key:
                if any(k < 1 or k > n for k in form.indices()):
                    raise VariableMismatch(f"form {form} outside l1..l{n}")
            merged[key] = merged[key] + coeff if key in merged else coeff
        kept = tuple(sorted((k, v) for k, v in merged.items() if not v.is_zero()))
        return cls(n, kept)

    @classmethod
    def zero(cls, n: int) -> RationalExpr:
        return cls(n, ())

    @classmethod
    def constant(cls, n: int, value: Union[MultiPoly, Scalar]) -> RationalExpr:
        return cls.from_terms(n, [(value, ())])

    def is_zero(self) -> bool:
        return not self.summands

    def _check(self, other: RationalExpr) -> None:
        if self.n != other.n:
            raise VariableMismatch(f"{self.n} colors vs {other.n} colors")

    def __add__(self, other: RationalExpr) -> RationalExpr:
        self._check(other)
        return RationalExpr.from_terms(
            self.n, [(c, d) for d, c in self.summands] + [(c, d) for d, c in other.summands]
        )

    def __neg__(self) -> RationalExpr:
        return RationalExpr(self.n, tuple((d, -c) for d, c in self.summands))

    def __sub__(self, other: RationalExpr) -> RationalExpr:
        return self + (-other)

    def scale(self, factor: Union[MultiPoly, Scalar]) -> RationalExpr:
        return RationalExpr.from_terms(self.n, [(c * factor, d) for d, c in self.summands])

    def __mul__(self, other: Union[RationalExpr, MultiPoly, Scalar]) -> RationalExpr:
        if not isinstance(other, RationalExpr):
            return self.scale(other)
        self._check(other)
        terms = []
        for d1, c1 in self.summands:
            for d2, c2 in other.summands:
                terms.append((c1 * c2, d1 + d2))
        return RationalExpr.from_terms(self.n, terms)

    def __rmul__(self, other: Union[MultiPoly, Scalar]) -> RationalExpr:
        return self.scale(other)

    def substitute(self, mapping: Sequence[int], n: int) -> RationalExpr:
        """Rename l_k to l_{mapping[k-1]} in a universe of n colors.

        Two face variables sent to one color turn a pair form into 2 l_c.
        """
        target = universe(n)
        terms: List[Tuple[MultiPoly, Denominator]] = []
        for denominator, coeff in self.summands:
            acc: Dict[Tuple[int, ...], Fraction] = {}
            for exponents, value in coeff.terms:
                new = [0] * len(target)
                for k in range(self.n):
                    if exponents[k]:
                        new[mapping[k] - 1] += exponents[k]
                new[n] = exponents[self.n]
                new[n + 1] = exponents[self.n + 1]
                key = tuple(new)
                acc[key] = acc.get(key, 0) + value
            terms.append(
                (MultiPoly.from_dict(target, acc), tuple(f.relabel(mapping) for f in denominator))
            )
        return RationalExpr.from_terms(n, terms)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for denominator, coeff in self.summands:
            den = Fraction(1)
            for form in denominator:
                den *= form.evaluate(values)
            if den == 0:
                raise ZeroDenominator(f"denominator {render_denominator(denominator)} vanishes")
            total += coeff.evaluate(values) / den
        return total

    def render(self) -> str:
        if not self.summands:
            return "0"
        parts = []
        for denominator, coeff in self.summands:
            text = f"({coeff.render()})"
            if denominator:
                text += f" / ({render_denominator(denominator)})"
            parts.append(text)
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()


def render_denominator(denominator: Denominator) -> str:
    return " * ".join(f"({f.render()})" for f in denominator)


def ratexpr_add(a: RationalExpr, b: RationalExpr) -> RationalExpr:
    """Exact sum of two rational expressions over the same color universe."""
    return a + b


def lambda_values(*values: Scalar, Q: Scalar = 1, hbar: Scalar = 1) -> Dict[str, Fraction]:
    """Build an evaluation point {l1: .., ln: .., Q: .., hbar: ..}."""
    point = {f"l{k}": Fraction(v) for k, v in enumerate(values, start=1)}
    point["Q"] = Fraction(Q)
    point["hbar"] = Fraction(hbar)
    return point


def ratexpr_mul(a: RationalExpr, b: RationalExpr) -> RationalExpr:
    """Exact product, denominators concatenated."""
    return a * b


def ratexpr_scale(a: RationalExpr, factor: Union[MultiPoly, Scalar]) -> RationalExpr:
    """Multiply every numerator by a polynomial in Q, hbar."""
    return a.scale(factor)


def ratexpr_substitute(a: RationalExpr, mapping: Sequence[int], n: int) -> RationalExpr:
    """l_i -> l_(mapping[i-1]) into an n-color universe."""
    return a.substitute(mapping, n)
