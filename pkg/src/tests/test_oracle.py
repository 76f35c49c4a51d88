from fractions import Fraction

import pytest

from src.algebra import COEFFICIENT_VARIABLES, LaurentPoly, MultiPoly, lambda_values, reduce_to_laurent
from src.errors import BoundExceeded
from src.oracle import (
    PairingConfig,
    compare_oracle,
    compare_profiles,
    correlator,
    graph_side_profile_tau,
    orbit_stabilizer_audit,
    pairings,
    profile_term,
    tau_coefficients_oracle,
)
from src.oracle.wick import face_signature, is_connected_pairing, oracle_degree_laurent
from src.ribbon.types import VertexProfile


def profile(*values):
    return VertexProfile.from_sequence(values)


def test_pairing_counts():
    """(h-1)!! pairings, split evenly by the partner of 0."""
    assert len(list(pairings(4))) == 3
    assert len(list(pairings(6))) == 15
    assert len(list(pairings(6, first_partner=1))) == 3
    assert list(pairings(3)) == []


def test_pairing_config_layout():
    """Internal 3-cycles come first, then boundary vertices."""
    config = PairingConfig.of(profile(1, 1))
    assert config.sigma0 == (1, 2, 0, 3)
    assert config.boundary == frozenset({3})
    assert config.h == 4


def test_face_signature_of_boundary_dumbbell():
    """Two boundary legs joined by one propagator trace a single face."""
    config = PairingConfig.of(profile(0, 2))
    sigma1 = (1, 0)
    assert is_connected_pairing(config, sigma1)
    assert face_signature(config, sigma1) == (1, ((0, 0),), (0, 0))


def test_profile_term_matches_amplitude():
    """The [0,2] term is Q^2 / (2 l^3), the same as W((0,2),1)."""
    term = reduce_to_laurent(profile_term(profile(0, 2), 1))
    expected = MultiPoly.monomial(COEFFICIENT_VARIABLES, (2, 0), Fraction(1, 2))
    assert term == LaurentPoly.from_dict(1, {(3,): expected})


def test_odd_profiles_vanish():
    """An odd number of half-edges has no pairing."""
    assert profile_term(profile(1), 2).is_zero()
    assert correlator(PairingConfig.of(profile(0, 1)), 2).is_zero()


def test_profiles_agree_with_graph_side():
    """Each small profile gives the same rational function both ways."""
    checks = compare_profiles(6, 2)
    assert checks
    assert all(c.matches for c in checks)


def test_graph_side_tau_of_boundary_dumbbell():
    """With no sub-profiles to combine, tau equals the connected part."""
    p = profile(0, 2)
    assert reduce_to_laurent(graph_side_profile_tau(p, 1)) == reduce_to_laurent(profile_term(p, 1))


def test_oracle_reproduces_degree_three():
    """With three colors the pairing sum yields [t3] = 1/8 + 3/2 Q^2 and [t1 t2] = 2 Q."""
    tau = tau_coefficients_oracle(6, 3)
    assert tau.coefficient((3,)).render() == "1/8 + 3/2 Q^2"
    assert tau.coefficient((1, 2)).render() == "2 Q"
    assert tau.coefficient((1, 1, 1)).render() == "1/6"
    assert tau.complete_through == 3


def test_oracle_comparison_small():
    """|h| <= 6 with two colors: no differences at any level."""
    report = compare_oracle(6, 2)
    assert report.ok
    assert report.diff == []
    assert [d.degree for d in report.degrees] == [3]


def test_oracle_comparison_three_colors():
    """Three colors resolve every t-monomial of degree 3."""
    report = compare_oracle(6, 3)
    assert report.ok
    assert report.oracle_table == report.graph_table


def test_orbit_stabilizer_audit():
    """Labeled pairings count each class |G| / |Aut| times."""
    for p in (profile(0, 2), profile(2), profile(1, 1), profile(0, 0, 1), profile(2, 2)):
        result = orbit_stabilizer_audit(p, strict=True)
        assert result.matches, p


def test_oracle_bound():
    """More half-edges than the bound are refused."""
    with pytest.raises(BoundExceeded):
        oracle_degree_laurent(14, 2)


@pytest.mark.slow
def test_oracle_comparison_ten_half_edges():
    """The full comparison at |h| <= 10 with three colors."""
    report = compare_oracle(10, 3)
    assert report.ok
    assert all(c.matches for c in report.profiles)


def test_correlator_ignores_half_edge_numbering():
    """Conjugating the rotation and the boundary legs leaves the correlator unchanged."""
    config = PairingConfig.of(profile(1, 1, 1))
    perm = (4, 0, 5, 2, 1, 3)
    sigma0 = [0] * config.h
    for x in range(config.h):
        sigma0[perm[x]] = perm[config.sigma0[x]]
    relabeled = PairingConfig(config.profile, tuple(sigma0), frozenset(perm[x] for x in config.boundary))
    for point in (lambda_values(1, 2), lambda_values(3, 5)):
        assert correlator(relabeled, 2).evaluate(point) == correlator(config, 2).evaluate(point)
    assert not correlator(config, 2).is_zero()
