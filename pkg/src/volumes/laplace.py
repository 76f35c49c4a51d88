from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from src.algebra.rational import lambda_values
from src.amplitude.graph_sum import compute_W
from src.config import settings
from src.enumeration.generate import MarkedGraphClass, generate_by_type
from src.errors import InvalidProfile
from src.events import emit_event
from src.ribbon.types import GraphType
from src.volumes.fiber import incidence_matrix, split_incidence
from src.volumes.total import class_weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaplaceReport:
    type: GraphType
    lambdas: tuple
    w_exact: float
    integral_estimate: float
    rel_error: float
    samples: int
    seed: int
    tolerance: float

    @property
    def within_tolerance(self) -> bool:
        return self.rel_error <= self.tolerance


@dataclass(frozen=True)
class _Cell:
    weight: float
    inverse: np.ndarray
    products: np.ndarray
    determinant: int


def _cell(c: MarkedGraphClass) -> _Cell:
    incidence = incidence_matrix(c.graph, c.marking)
    basis, free, a_b, det = split_incidence(incidence)
    a = incidence.as_sympy()
    inverse = a_b.inv()
    products = inverse * a.extract(list(range(a.rows)), list(free)) if free else None
    return _Cell(
        float(class_weight(c)),
        np.array(inverse.tolist(), dtype=float),
        np.array(products.tolist(), dtype=float) if free else np.zeros((len(basis), 0)),
        det,
    )


def laplace_check(
    t: GraphType,
    lambdas: Sequence,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    tolerance: Optional[float] = None,
    max_edges: Optional[int] = None,
) -> LaplaceReport:
    """Monte Carlo estimate of the Laplace transform of the volume, against W(lambda).

    x_i is drawn from Exp(lambda_i), so e^(-lambda . x) becomes the factor
    prod 1/lambda_i. y is uniform on {y >= 0, sum y <= s} with s = sum x,
    volume s^b / b!, and the free edge lengths z are uniform on [0, s]^k,
    which contains every fiber since no edge is longer than a perimeter.
    """
    samples = settings.DEFAULT_SAMPLES if samples is None else samples
    seed = settings.DEFAULT_SEED if seed is None else seed
    tolerance = settings.LAPLACE_TOLERANCE if tolerance is None else tolerance
    lambdas = tuple(Fraction(v) for v in lambdas)
    if len(lambdas) != t.n or any(v <= 0 for v in lambdas):
        raise InvalidProfile(f"type {t} needs {t.n} positive lambdas")

    w_exact = float(compute_W(t, max_edges=max_edges).laurent.evaluate(lambda_values(*lambdas)))
    cells: List[_Cell] = [_cell(c) for c in generate_by_type(t, max_edges=max_edges)]
    k = t.edges - t.n - t.b

    rng = np.random.default_rng(seed)
    rates = np.array([float(v) for v in lambdas])
    prefactor = 1.0 / float(np.prod(rates)) / math.factorial(t.b)
    total = 0.0
    done = 0
    while done < samples:
        size = min(settings.SAMPLE_CHUNK, samples - done)
        x = rng.exponential(1.0 / rates, size=(size, t.n))
        s = x.sum(axis=1)
        y = rng.dirichlet(np.ones(t.b + 1), size=size)[:, : t.b] * s[:, None]
        z = rng.uniform(0.0, 1.0, size=(size, k)) * s[:, None]
        target = np.concatenate([x, y], axis=1)
        scale = prefactor * s ** (t.b + k)
        for cell in cells:
            bound = target @ cell.inverse.T
            inside = np.all(z @ cell.products.T <= bound, axis=1)
            total += cell.weight / cell.determinant * float(np.sum(scale * inside))
        done += size
    estimate = total / samples
    rel_error = abs(estimate - w_exact) / abs(w_exact)
    report = LaplaceReport(t, tuple(str(v) for v in lambdas), w_exact, estimate, rel_error, samples, seed, tolerance)
    logger.info(f"Laplace check {t}: exact {w_exact:.6g}, estimate {estimate:.6g}, rel error {rel_error:.3g}")
    emit_event("laplace_sampled", {"type": t.label(), "samples": samples, "rel_error": rel_error})
    return report
