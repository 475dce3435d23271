"""Matching computed layer-algebra presentations against the reference
quiver-and-relations pattern for the Brauer line family."""

import pytest

from adrlab.adr import ADRData
from adrlab.fields import QQ
from adrlab.generators import brauer_line_presentation
from adrlab.patterns import (expected_arrows, expected_relations,
                             match_adr_pattern, reference_presentation,
                             solve_multiplicative)
from adrlab.presentation import AlgebraBasis


def test_expected_counts():
    for n in (3, 4, 5):
        assert len(expected_arrows(n)) == 6 * n - 4
        assert len(expected_relations(n)) == 4 * (n - 1) + 3 * (n - 2)


def test_reference_dimension():
    for n in (3, 4):
        assert AlgebraBasis(reference_presentation(n, QQ)).dim == 19 * n - 10


def test_solve_multiplicative():
    # x0^2 = 4, x0 * x1 = 6 over Q
    assign = solve_multiplicative(QQ, 2, [({0: 2}, QQ.of(4)),
                                          ({0: 1, 1: 1}, QQ.of(6))])
    assert assign is not None
    x0, x1 = assign
    assert x0 * x0 == QQ.of(4) and x0 * x1 == QQ.of(6)
    assert solve_multiplicative(QQ, 1, [({}, QQ.of(2))]) is None


@pytest.mark.parametrize("n", [3, 4])
def test_pattern_match(n):
    adr = ADRData(AlgebraBasis(brauer_line_presentation(n)))
    rep = match_adr_pattern(adr)
    assert rep["quiver_counts_match"]
    assert rep["scaling_found"]
    assert rep["relations_verified"]
    assert rep["dim_matches"]
    assert rep["match"]


def test_pattern_match_gf5(gf5):
    adr = ADRData(AlgebraBasis(brauer_line_presentation(3, gf5)))
    assert match_adr_pattern(adr)["match"]
