"""Quivers, path-algebra presentations, normal-form bases and the JSON
interchange format."""

import pytest

from adrlab.fields import Field, QQ
from adrlab.generators import (brauer_line_presentation,
                               linear_quiver_presentation,
                               loop_square_zero_presentation,
                               semisimple_presentation,
                               star_quiver_presentation)
from adrlab.presentation import (AlgebraBasis, AlgebraPresentation, Path,
                                 PresentationError, Quiver, Relation, path_mul)


def test_quiver_validation():
    with pytest.raises(PresentationError):
        Quiver(["1", "1"], [])
    with pytest.raises(PresentationError):
        Quiver(["1"], [("a", 0, 5)])


def test_path_multiplication_order():
    q = Quiver(["1", "2", "3"], [("a", 0, 1), ("b", 1, 2)])
    ab = path_mul(q, Path(1, (1,)), Path(0, (0,)))  # b * a: apply a first
    assert ab is not None and ab.arrows == (0, 1)
    assert path_mul(q, Path(0, (0,)), Path(1, (1,))) is None


def test_brauer_dimension_family():
    for n, expected in ((3, 10), (4, 14), (5, 18)):
        basis = AlgebraBasis(brauer_line_presentation(n))
        assert basis.dim == expected


def test_brauer_requires_three_vertices():
    with pytest.raises(PresentationError):
        brauer_line_presentation(2)


def test_linear_quiver_basis():
    basis = AlgebraBasis(linear_quiver_presentation(3))
    assert basis.dim == 6  # 3 trivial paths + c1, c2, c1c2


def test_loop_square_zero():
    basis = AlgebraBasis(loop_square_zero_presentation())
    assert basis.dim == 2
    assert basis.reduce_path(Path(0, (0, 0))) == {}


def test_semisimple_and_star():
    assert AlgebraBasis(semisimple_presentation(4)).dim == 4
    assert AlgebraBasis(star_quiver_presentation()).dim == 5


def test_normal_form_commutation():
    basis = AlgebraBasis(brauer_line_presentation(3))
    q = basis.quiver
    a1, a2 = q.arrow_index["a1"], q.arrow_index["a2"]
    b1, b2 = q.arrow_index["b1"], q.arrow_index["b2"]
    # the two loops at the middle vertex agree in the quotient
    left = basis.reduce_path(Path(1, (b1, a1)))
    right = basis.reduce_path(Path(1, (a2, b2)))
    assert left == right and len(left) == 1
    assert basis.reduce_path(Path(0, (a1, a2))) == {}


def test_json_roundtrip():
    pres = brauer_line_presentation(4, Field(5))
    again = AlgebraPresentation.from_json(pres.to_json())
    assert again.to_json() == pres.to_json()
    assert AlgebraBasis(again).dim == AlgebraBasis(pres).dim


def test_json_rejects_unknown_field():
    with pytest.raises(PresentationError):
        AlgebraPresentation.from_json_dict({"field": {"type": "real"},
                                            "quiver": {"vertices": [],
                                                       "arrows": []},
                                            "relations": []})


def test_opposite_involution():
    pres = brauer_line_presentation(3)
    assert pres.opposite().opposite().to_json() == pres.to_json()


def test_opposite_dimension_matches():
    pres = star_quiver_presentation()
    assert AlgebraBasis(pres.opposite()).dim == AlgebraBasis(pres).dim


def test_infinite_dimension_guard():
    # one loop, no relations: the basis builder must refuse
    q = Quiver(["1"], [("x", 0, 0)])
    pres = AlgebraPresentation(QQ, q, [], max_path_length=12)
    with pytest.raises(PresentationError):
        AlgebraBasis(pres)


def test_relation_diagnostics():
    q = Quiver(["1", "2"], [("a", 0, 1)])
    rel = Relation([(QQ.one, Path(0, (0,)))])
    pres = AlgebraPresentation(QQ, q, [rel])
    assert any("non-admissible" in d for d in pres.validate())
