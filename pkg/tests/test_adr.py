"""The radical-layer endomorphism algebra R = End(G)^op: presentation
extraction, the hom functor, and the corner recovery of the base algebra."""

import pytest

from adrlab.adr import ADRData, build_G, corner_algebra, endo_presentation
from adrlab.fields import QQ
from adrlab.generators import (brauer_line_presentation,
                               semisimple_presentation)
from adrlab.modrep import (Representation, hom_basis, hom_dim,
                           is_isomorphic, loewy_length, radical_series,
                           random_module)
from adrlab.presentation import AlgebraBasis


def test_semisimple_fixed_point():
    algebra = AlgebraBasis(semisimple_presentation(3))
    adr = ADRData(algebra)
    assert adr.dim == 3
    assert adr.presentation.quiver.n_arrows == 0
    assert adr.labels == [(0, 1), (1, 1), (2, 1)]


def test_summand_labels_and_loewy(brauer3):
    summands, labels, loewy = build_G(brauer3)
    assert loewy == [3, 3, 3]
    assert labels == [(i, j) for i in range(3) for j in (1, 2, 3)]
    # the layer-1 summand is the simple, the top layer is P_i itself
    for u, (i, j) in enumerate(labels):
        assert loewy_length(summands[u]) == j
        if j == loewy[i]:
            assert summands[u].dims == Representation.projective(brauer3, i).dims


@pytest.mark.parametrize("n,dim,arrows,relations",
                         [(3, 47, 14, 11), (4, 66, 20, 18), (5, 85, 26, 25)])
def test_brauer_family_counts(n, dim, arrows, relations):
    adr = ADRData(AlgebraBasis(brauer_line_presentation(n)))
    assert adr.dim == dim == 19 * n - 10
    assert adr.presentation.quiver.n_vertices == 3 * n
    assert adr.presentation.quiver.n_arrows == arrows == 6 * n - 4
    assert len(adr.presentation.relations) == relations


def test_presentation_dimension_certified(adr3):
    # the extracted presentation is re-expanded and must reproduce dim End
    assert AlgebraBasis(adr3.presentation).dim == adr3.dim


def test_corner_recovers_base(adr3):
    rep = corner_algebra(adr3)
    assert rep["dim"] == adr3.algebra.dim == 10
    assert rep["dim_matches"] and rep["quiver_matches"]


def test_functor_on_simples_gives_uniserial_projectives(adr3, ctx3):
    # Hom(G, L_i) is the projective at (i, 1) and is uniserial of the
    # full Loewy length
    for i in range(3):
        Li = Representation.simple(adr3.algebra, i)
        F = adr3.functor.module(Li)
        u = adr3.vertex_of(i, 1)
        Pu = Representation.projective(adr3.basis, u)
        assert F.dims == Pu.dims and is_isomorphic(F, Pu)
        layers, _ = radical_series(F)
        assert len(layers) == adr3.loewy[i]
        assert all(sum(l) == 1 for l in layers)


def test_functor_on_summands_gives_projectives(adr3):
    for u, X in enumerate(adr3.summands):
        F = adr3.functor.module(X)
        Pu = Representation.projective(adr3.basis, u)
        assert F.dims == Pu.dims


def test_functor_fullness_on_hom_spaces(adr3):
    import random
    rng = random.Random(7)
    for _ in range(6):
        M = random_module(adr3.algebra, rng)
        N = random_module(adr3.algebra, rng)
        lhs = hom_dim(M, N)
        rhs = hom_dim(adr3.functor.module(M), adr3.functor.module(N))
        assert lhs == rhs


def test_functor_is_exact_enough_on_maps(adr3):
    M = Representation.projective(adr3.algebra, 1)
    for f in hom_basis(M, M):
        Ff = adr3.functor.map(f)
        assert Ff.is_intertwiner()
        if f.is_isomorphism():
            assert Ff.is_isomorphism()


def test_calibration_matches_ext_quiver(adr3):
    # arrows u -> v are in bijection with a basis of rad/rad^2 at (u, v),
    # equivalently with Ext^1(L_u, L_v) over R
    from adrlab.modrep import ext1
    R = adr3.basis
    q = R.quiver
    for u in range(min(q.n_vertices, 4)):
        for v in range(q.n_vertices):
            count = sum(1 for name, s, t in q.arrows if s == u and t == v)
            d, _ = ext1(Representation.simple(R, u),
                        Representation.simple(R, v))
            assert d == count


def test_endo_presentation_rejects_isomorphic_summands(brauer3):
    P0 = Representation.projective(brauer3, 0)
    with pytest.raises(Exception):
        endo_presentation([P0, P0], ["x", "y"])


def test_gf5_dimensions(gf5):
    adr = ADRData(AlgebraBasis(brauer_line_presentation(3, gf5)))
    assert adr.dim == 47
    assert corner_algebra(adr)["dim_matches"]
