from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple

import sympy

from src.algebra.laurent import LaurentPoly
from src.algebra.polynomial import COEFFICIENT_VARIABLES, MultiPoly
from src.errors import IncompleteTable, InvariantViolation

logger = logging.getLogger(__name__)

# sorted multiset {k_1, ..., k_n} of t-indices
TMonomial = Tuple[int, ...]


def t_degree(monomial: TMonomial) -> int:
    return sum(monomial)


def render_t_monomial(monomial: TMonomial) -> str:
    """"t1^2 t3" style; the empty monomial renders as "1"."""
    if not monomial:
        return "1"
    counts = Counter(monomial)
    return " ".join(f"t{k}" if c == 1 else f"t{k}^{c}" for k, c in sorted(counts.items()))


def parse_t_monomial(text: str) -> TMonomial:
    if text.strip() == "1":
        return ()
    parts: List[int] = []
    for token in text.split():
        name, _, power = token.partition("^")
        parts.extend([int(name[1:])] * (int(power) if power else 1))
    return tuple(sorted(parts))


@dataclass(frozen=True)
class CoefficientTable:
    """Map from t-monomials to polynomials in Q, hbar.

    complete_through is the largest t-degree for which every contribution
    is present.
    """

    entries: Tuple[Tuple[TMonomial, MultiPoly], ...] = ()
    complete_through: int = 0

    @classmethod
    def from_dict(cls, entries: Mapping[TMonomial, MultiPoly], complete_through: int = 0) -> CoefficientTable:
        kept = {tuple(sorted(k)): v for k, v in entries.items() if not v.is_zero()}
        ordered = sorted(kept.items(), key=lambda item: (t_degree(item[0]), item[0]))
        return cls(tuple(ordered), complete_through)

    def as_dict(self) -> Dict[TMonomial, MultiPoly]:
        return dict(self.entries)

    def coefficient(self, monomial: Iterable[int]) -> MultiPoly:
        return self.as_dict().get(tuple(sorted(monomial)), MultiPoly.zero(COEFFICIENT_VARIABLES))

    def merge(self, other: CoefficientTable) -> CoefficientTable:
        acc = self.as_dict()
        for key, value in other.entries:
            acc[key] = acc[key] + value if key in acc else value
        return CoefficientTable.from_dict(acc, min(self.complete_through, other.complete_through))

    def of_degree(self, degree: int) -> CoefficientTable:
        return CoefficientTable.from_dict(
            {k: v for k, v in self.entries if t_degree(k) == degree}, self.complete_through
        )

    def rows(self) -> List[Tuple[str, str]]:
        return [(render_t_monomial(k), v.render()) for k, v in self.entries]


def _product(
    a: Mapping[TMonomial, MultiPoly], b: Mapping[TMonomial, MultiPoly], max_degree: int
) -> Dict[TMonomial, MultiPoly]:
    out: Dict[TMonomial, MultiPoly] = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            if t_degree(k1) + t_degree(k2) > max_degree:
                continue
            key = tuple(sorted(k1 + k2))
            product = v1 * v2
            out[key] = out[key] + product if key in out else product
    return out


def tau_truncation(F: CoefficientTable, total_degree: int) -> CoefficientTable:
    """exp(F) up to t-degree `total_degree`.

    Raises:
        IncompleteTable: F is not complete through the requested degree.
    """
    if total_degree > F.complete_through:
        raise IncompleteTable(
            f"F is complete through degree {F.complete_through}, {total_degree} requested"
        )
    one = MultiPoly.constant(COEFFICIENT_VARIABLES, 1)
    connected = {k: v for k, v in F.entries if 0 < t_degree(k) <= total_degree}
    result: Dict[TMonomial, MultiPoly] = {(): one}
    power: Dict[TMonomial, MultiPoly] = {(): one}
    for k in range(1, total_degree + 1):
        power = {
            key: value.scale(Fraction(1, k))
            for key, value in _product(power, connected, total_degree).items()
        }
        if not power:
            break
        for key, value in power.items():
            result[key] = result[key] + value if key in result else value
    return CoefficientTable.from_dict(result, total_degree)


@lru_cache(maxsize=None)
def power_sum(k: int, colors: int) -> LaurentPoly:
    """p_k = sum_i l_i^(-k) over `colors` variables."""
    terms = {}
    for i in range(colors):
        key = [0] * colors
        key[i] = k
        terms[tuple(key)] = 1
    return LaurentPoly.from_dict(colors, terms)


def specialize_monomial(monomial: TMonomial, colors: int) -> LaurentPoly:
    """prod_j t_(k_j) with t_k = p_k / k."""
    result = LaurentPoly.from_dict(colors, {(0,) * colors: 1})
    for k in monomial:
        result = result * power_sum(k, colors).scale(Fraction(1, k))
    return result


def specialize(table: CoefficientTable, colors: int) -> Dict[int, LaurentPoly]:
    """Substitute t_k = (1/k) sum_(i<=colors) l_i^(-k); one Laurent polynomial per t-degree."""
    out: Dict[int, LaurentPoly] = {}
    for monomial, coeff in table.entries:
        degree = t_degree(monomial)
        term = specialize_monomial(monomial, colors).scale(coeff)
        out[degree] = out[degree] + term if degree in out else term
    return out


def partitions(total: int, largest: int = None) -> List[TMonomial]:
    """Partitions of `total` as ascending tuples."""
    largest = total if largest is None else largest
    if total == 0:
        return [()]
    found = []
    for k in range(min(total, largest), 0, -1):
        for rest in partitions(total - k, k):
            found.append(tuple(sorted(rest + (k,))))
    return sorted(found)


def extract_t_coefficients(laurent: LaurentPoly, degree: int) -> CoefficientTable:
    """Write a symmetric degree-homogeneous Laurent polynomial in the t_k.

    The power-sum products of a fixed degree are independent once the
    number of colors is at least the degree.

    Raises:
        IncompleteTable: fewer colors than the degree.
        InvariantViolation: the polynomial is not in the span of the t-products.
    """
    colors = laurent.n
    if degree > colors:
        raise IncompleteTable(f"degree {degree} needs at least {degree} colors, have {colors}")
    basis = partitions(degree)
    keys = [tuple(sorted(mu, reverse=True)) + (0,) * (colors - len(mu)) for mu in basis]
    specialized = [specialize_monomial(mu, colors) for mu in basis]
    matrix = sympy.Matrix(
        [[_to_sympy(s.coefficient(key).coefficient((0, 0))) for s in specialized] for key in keys]
    )
    inverse = matrix.inv()

    monomials = sorted({e for key in keys for e, _ in laurent.coefficient(key).terms})
    entries: Dict[TMonomial, Dict[Tuple[int, ...], Fraction]] = {mu: {} for mu in basis}
    for exponents in monomials:
        rhs = sympy.Matrix([_to_sympy(laurent.coefficient(key).coefficient(exponents)) for key in keys])
        solution = inverse * rhs
        for mu, value in zip(basis, solution):
            entries[mu][exponents] = Fraction(int(value.p), int(value.q))
    table = CoefficientTable.from_dict(
        {mu: MultiPoly.from_dict(COEFFICIENT_VARIABLES, v) for mu, v in entries.items()}, degree
    )

    rebuilt = specialize(table, colors).get(degree, LaurentPoly.zero(colors))
    if rebuilt != laurent:
        raise InvariantViolation("t-span", f"degree-{degree} polynomial is not a combination of t-products")
    return table


def _to_sympy(value: Fraction) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)
