from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from src.errors import VariableMismatch, ZeroDenominator

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]

# The two formal coefficient variables. They are never specialized inside
# the algebra core.
COEFFICIENT_VARIABLES: Tuple[str, ...] = ("Q", "hbar")


def lambda_variables(n: int) -> Tuple[str, ...]:
    """Names of the face variables l1..ln."""
    return tuple(f"l{i}" for i in range(1, n + 1))


def universe(n: int) -> Tuple[str, ...]:
    """Full variable universe of an n-color rational expression."""
    return lambda_variables(n) + COEFFICIENT_VARIABLES


def render_rational(value: Fraction) -> str:
    """Render a rational as "p/q" (or "p" when q == 1)."""
    return str(Fraction(value))


def render_monomial(variables: Tuple[str, ...], exponents: Exponents) -> str:
    parts = []
    for name, power in zip(variables, exponents):
        if power == 0:
            continue
        parts.append(name if power == 1 else f"{name}^{power}")
    return " ".join(parts)


@dataclass(frozen=True)
class MultiPoly:
    """Sparse polynomial with exact rational coefficients.

    Exponents may be negative; the hbar grading of closed planar types
    needs hbar^-2. Terms are kept sorted by exponent vector and never hold
    a zero coefficient, so structural equality is polynomial equality.
    """

    variables: Tuple[str, ...]
    terms: Tuple[Tuple[Exponents, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, variables: Iterable[str], terms: Mapping[Exponents, Scalar]) -> MultiPoly:
        variables = tuple(variables)
        width = len(variables)
        cleaned: Dict[Exponents, Fraction] = {}
        for exponents, coeff in terms.items():
            if len(exponents) != width:
                raise VariableMismatch(
                    f"exponent vector {exponents} does not match variables {variables}"
                )
            value = Fraction(coeff)
            if value:
                cleaned[tuple(exponents)] = value
        return cls(variables, tuple(sorted(cleaned.items())))

    @classmethod
    def zero(cls, variables: Iterable[str]) -> MultiPoly:
        return cls(tuple(variables), ())

    @classmethod
    def constant(cls, variables: Iterable[str], value: Scalar) -> MultiPoly:
        variables = tuple(variables)
        return cls.from_dict(variables, {(0,) * len(variables): value})

    @classmethod
    def monomial(cls, variables: Iterable[str], exponents: Exponents, coeff: Scalar = 1) -> MultiPoly:
        return cls.from_dict(tuple(variables), {tuple(exponents): coeff})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str, power: int = 1) -> MultiPoly:
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatch(f"unknown variable {name!r}")
        exponents = tuple(power if v == name else 0 for v in variables)
        return cls.from_dict(variables, {exponents: 1})

    def as_dict(self) -> Dict[Exponents, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exponents: Exponents) -> Fraction:
        return self.as_dict().get(tuple(exponents), Fraction(0))

    def _check(self, other: MultiPoly) -> None:
        if self.variables != other.variables:
            raise VariableMismatch(f"{self.variables} vs {other.variables}")

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        acc = self.as_dict()
        for exponents, coeff in other.terms:
            acc[exponents] = acc.get(exponents, 0) + coeff
        return MultiPoly.from_dict(self.variables, acc)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.variables, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def scale(self, factor: Scalar) -> MultiPoly:
        factor = Fraction(factor)
        if not factor:
            return MultiPoly.zero(self.variables)
        return MultiPoly(self.variables, tuple((e, c * factor) for e, c in self.terms))

    def __mul__(self, other: Union[MultiPoly, Scalar]) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        acc: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, 0) + c1 * c2
        return MultiPoly.from_dict(self.variables, acc)

    def __rmul__(self, other: Scalar) -> MultiPoly:
        return self.scale(other)

    def __pow__(self, power: int) -> MultiPoly:
        if power < 0:
            raise ValueError("negative powers of a polynomial are not polynomials")
        result = MultiPoly.constant(self.variables, 1)
        for _ in range(power):
            result = result * self
        return result

    def embed(self, variables: Iterable[str]) -> MultiPoly:
        """Re-express in a larger universe containing all current variables."""
        variables = tuple(variables)
        missing = [v for v in self.variables if v not in variables]
        if missing:
            raise VariableMismatch(f"cannot embed: {missing} absent from {variables}")
        index = {v: k for k, v in enumerate(self.variables)}
        acc = {}
        for exponents, coeff in self.terms:
            acc[tuple(exponents[index[v]] if v in index else 0 for v in variables)] = coeff
        return MultiPoly.from_dict(variables, acc)

    def restrict(self, variables: Iterable[str]) -> MultiPoly:
        """Drop variables that do not occur; fails if a dropped one occurs."""
        variables = tuple(variables)
        keep = [self.variables.index(v) for v in variables]
        dropped = [k for k, v in enumerate(self.variables) if v not in variables]
        acc: Dict[Exponents, Fraction] = {}
        for exponents, coeff in self.terms:
            if any(exponents[k] for k in dropped):
                raise VariableMismatch("restricting away a variable that occurs")
            key = tuple(exponents[k] for k in keep)
            acc[key] = acc.get(key, 0) + coeff
        return MultiPoly.from_dict(variables, acc)

    def degrees(self, name: str) -> Tuple[int, ...]:
        """Sorted distinct exponents of one variable across all terms."""
        k = self.variables.index(name)
        return tuple(sorted({e[k] for e, _ in self.terms}))

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for exponents, coeff in self.terms:
            term = coeff
            for name, power in zip(self.variables, exponents):
                if power == 0:
                    continue
                if name not in values:
                    raise VariableMismatch(f"no value supplied for {name}")
                value = Fraction(values[name])
                if power < 0 and value == 0:
                    raise ZeroDenominator(f"{name} = 0 with exponent {power}")
                term *= value ** power
            total += term
        return total

    def render(self) -> str:
        """Canonical text: terms in ascending exponent order, rationals as p/q."""
        if not self.terms:
            return "0"
        pieces = []
        for position, (exponents, coeff) in enumerate(self.terms):
            mono = render_monomial(self.variables, exponents)
            magnitude = abs(coeff)
            if mono and magnitude == 1:
                body = mono
            elif mono:
                body = f"{render_rational(magnitude)} {mono}"
            else:
                body = render_rational(magnitude)
            if position == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()
