"""Built-in algebra presentations used by the CLI and the test suite."""

from .fields import Field
from .presentation import (AlgebraPresentation, Path, PresentationError,
                           Quiver, Relation)


def brauer_line_presentation(n, field=None):
    """The Brauer tree algebra of a line with n vertices.

    Quiver: alternating arrows a_i: i -> i+1 and b_i: i+1 -> i, relations
    a_{i+1}a_i = 0, b_i b_{i+1} = 0 and the commutation of the two loops
    at each interior vertex, for i = 1..n-2.  The relation family is
    vacuous for n = 2, which would leave an infinite-dimensional path
    algebra, so n >= 3 is required.
    """
    if n < 3:
        raise PresentationError("the Brauer line generator requires n >= 3")
    field = field or Field(0)
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i in range(1, n):
        arrows.append((f"a{i}", i - 1, i))
    for i in range(1, n):
        arrows.append((f"b{i}", i, i - 1))
    quiver = Quiver(vertices, arrows)
    a = {i: quiver.arrow_index[f"a{i}"] for i in range(1, n)}
    b = {i: quiver.arrow_index[f"b{i}"] for i in range(1, n)}
    one = field.one
    neg_one = field.neg(one)
    relations = []
    for i in range(1, n - 1):
        # word a_{i+1} a_i: apply a_i first
        relations.append(Relation([(one, Path(i - 1, (a[i], a[i + 1])))]))
        # word b_i b_{i+1}: apply b_{i+1} first
        relations.append(Relation([(one, Path(i + 1, (b[i + 1], b[i])))]))
        # word a_i b_i - b_{i+1} a_{i+1}: loops at vertex i+1
        relations.append(Relation([
            (one, Path(i, (b[i], a[i]))),
            (neg_one, Path(i, (a[i + 1], b[i + 1]))),
        ]))
    return AlgebraPresentation(field, quiver, relations)


def linear_quiver_presentation(n, field=None):
    """Path algebra of the linear quiver n -> n-1 -> ... -> 1 (no relations).

    Vertex labels are "1".."n"; the arrow c_k runs from vertex k+1 to k.
    """
    if n < 1:
        raise PresentationError("linear quiver requires n >= 1")
    field = field or Field(0)
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = [(f"c{k}", k, k - 1) for k in range(1, n)]
    return AlgebraPresentation(field, Quiver(vertices, arrows), [])


def semisimple_presentation(n, field=None):
    """Product of n copies of the base field (no arrows)."""
    field = field or Field(0)
    return AlgebraPresentation(field, Quiver([str(i) for i in range(1, n + 1)], []), [])


def loop_square_zero_presentation(field=None):
    """K[x]/(x^2): one vertex, one loop, the loop squared is zero."""
    field = field or Field(0)
    quiver = Quiver(["1"], [("x", 0, 0)])
    rel = Relation([(field.one, Path(0, (0, 0)))])
    return AlgebraPresentation(field, quiver, [rel])


def star_quiver_presentation(field=None):
    """Path algebra of the star 1 -> 2, 1 -> 3 (no relations)."""
    field = field or Field(0)
    quiver = Quiver(["1", "2", "3"], [("s2", 0, 1), ("s3", 0, 2)])
    return AlgebraPresentation(field, quiver, [])
