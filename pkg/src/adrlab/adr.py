"""Endomorphism-algebra presentations and the radical-layer construction.

Given a basic algebra A, the central object is the algebra
R = End_A(G)^op for G the direct sum of all radical-power quotients
P_i / rad^j P_i of the projectives.  ``endo_presentation`` works for any
list of pairwise non-isomorphic indecomposable summands with split-local
endomorphism rings, so it is reused verbatim for tilting-module
endomorphism algebras.

Direction convention: an arrow u -> v of R's quiver corresponds to an
A-module map X_v -> X_u (the opposite twist), and a path traversed
a1, a2, ..., ak maps to the composite phi_{a1} o phi_{a2} o ... o phi_{ak}.
Under this convention ``e_v R e_u`` is spanned by the paths u -> v and is
identified with Hom_A(X_v, X_u).
"""

from .linalg import Matrix, unique_eigenvalue
from .modrep import (ModRepError, ModuleMap, NonSplitError, Representation,
                     _Echelon, hom_basis, quotient, radical_series)
from .presentation import (AlgebraBasis, AlgebraPresentation, Path,
                           PresentationError, Quiver, Relation)


class ADRError(ModRepError):
    pass


# -- generic End(X)^op presentation ------------------------------------------


def _local_radical(X):
    """Basis of the maximal ideal of End(X) for split-local X.

    Raises NonSplitError if End(X)/rad is bigger than the base field
    (in particular if X is decomposable).
    """
    f = X.field
    endos = hom_basis(X, X)
    parts = []
    for h in endos:
        big = _total_matrix(h)
        lam = unique_eigenvalue(big)
        if lam is None:
            raise NonSplitError("non-split summand: an endomorphism has no "
                                "unique eigenvalue in the base field")
        parts.append(h.add(ModuleMap.identity(X).scale(f.neg(lam))))
    size = len(endos[0].flatten()) if endos else 0
    span = _Echelon(f, size)
    nil = []
    for n in parts:
        if span.insert(n.flatten()):
            nil.append(n)
    if len(nil) != len(endos) - 1:
        raise NonSplitError("non-split summand: End/rad has dimension > 1")
    return nil


def _total_matrix(fmap):
    from .modrep import _total_matrix as tm
    return tm(fmap)


def _check_pairwise_noniso(summands):
    from .modrep import is_isomorphic
    for i in range(len(summands)):
        for j in range(i + 1, len(summands)):
            if summands[i].dims != summands[j].dims:
                continue
            if is_isomorphic(summands[i], summands[j]):
                raise ADRError(f"summands {i} and {j} are isomorphic; "
                               "the endomorphism algebra would not be basic")


def _free_paths(quiver, s, t, degree, _cache={}):
    """All paths s -> t of exactly the given length in the free quiver."""
    key = (id(quiver), s, t, degree)
    if key not in _cache:
        if degree == 0:
            out = [Path(s)] if s == t else []
        else:
            out = []
            for p in _free_paths_from(quiver, s, degree):
                if p.target_in(quiver) == t:
                    out.append(p)
        _cache[key] = out
    return _cache[key]


def _free_paths_from(quiver, s, degree, _cache={}):
    key = (id(quiver), s, degree)
    if key not in _cache:
        if degree == 0:
            out = [Path(s)]
        else:
            out = []
            for p in _free_paths_from(quiver, s, degree - 1):
                at = p.target_in(quiver)
                for a in quiver.arrows_from(at):
                    out.append(Path(s, p.arrows + (a,)))
        _cache[key] = out
    return _cache[key]


class _RelationPruner:
    """Ideal-membership filter for candidate relations.

    Keeps the accepted relation generators and answers whether a new
    candidate already lies in the ideal they generate, by spanning all
    consequences q * r * p inside the finite path space of bounded degree.
    """

    def __init__(self, field, quiver):
        self.field = field
        self.quiver = quiver
        self.kept = []

    def _vectorize(self, terms, index):
        f = self.field
        vec = [f.zero] * len(index)
        for c, p in terms:
            vec[index[p.key()]] = f.add(vec[index[p.key()]], c)
        return vec

    def is_redundant(self, terms, degree):
        f, q = self.field, self.quiver
        s = terms[0][1].source
        t = terms[0][1].target_in(q)
        paths = []
        for d in range(2, degree + 1):
            paths.extend(_free_paths(q, s, t, d))
        index = {p.key(): i for i, p in enumerate(paths)}
        span = _Echelon(f, len(paths))
        for rel in self.kept:
            rs = rel.terms[0][1].source
            rt = rel.terms[0][1].target_in(q)
            e = rel.max_length()
            for m in range(0, degree - e + 1):
                for left in _free_paths(q, s, rs, m):
                    for l in range(0, degree - e - m + 1):
                        for right in _free_paths(q, rt, t, l):
                            cons = [(c, Path(s, left.arrows + p.arrows + right.arrows))
                                    for c, p in rel.terms]
                            span.insert(self._vectorize(cons, index))
        return span.contains(self._vectorize(terms, index))

    def keep(self, terms):
        self.kept.append(Relation(terms))


def endo_presentation(summands, vertex_labels, max_path_length=32):
    """Present End(X_0 (+) ... (+) X_m)^op by quiver and relations.

    Returns (presentation, basis, calibration) where calibration[a] is
    the realizing module map X_{target(a)} -> X_{source(a)} of each arrow
    and basis is the computed AlgebraBasis of the presentation, whose
    dimension is certified to equal dim End.
    """
    if not summands:
        raise ADRError("empty summand list")
    field = summands[0].field
    m = len(summands)
    _check_pairwise_noniso(summands)

    # component hom bases: comp[(u, v)] ~ e_v R e_u = Hom(X_v, X_u)
    comp = {}
    for u in range(m):
        for v in range(m):
            comp[(u, v)] = hom_basis(summands[v], summands[u])
    dim_R = sum(len(h) for h in comp.values())

    # radical components (split-local diagonal criterion)
    rad = {}
    for u in range(m):
        for v in range(m):
            rad[(u, v)] = _local_radical(summands[u]) if u == v else comp[(u, v)]

    # rad^2 and the arrow complement
    arrows = []        # (name, u, v)
    calibration = []   # phi: X_v -> X_u per arrow
    for u in range(m):
        for v in range(m):
            if not rad[(u, v)]:
                continue
            size = len(rad[(u, v)][0].flatten())
            span = _Echelon(field, size)
            for w in range(m):
                for g in rad[(u, w)]:
                    for h in rad[(w, v)]:
                        span.insert(g.compose(h).flatten())
            for h in rad[(u, v)]:
                if span.insert(h.flatten()):
                    arrows.append((f"x{len(arrows)}", u, v))
                    calibration.append(h)
    quiver = Quiver(vertex_labels, arrows)

    # degreewise basis paths and relation extraction
    class _Comp:
        def __init__(self, u, v):
            self.paths = []      # (Path, ModuleMap)
            self.size = (len(comp[(u, v)][0].flatten())
                         if comp[(u, v)] else 0)
            self.span = _Echelon(field, self.size) if self.size else None

        def coords(self, fmap):
            if not self.paths:
                return None
            cols = Matrix.from_columns(field, self.size,
                                       [h.flatten() for _, h in self.paths])
            return cols.solve(fmap.flatten())

        def add(self, path, fmap):
            if self.span is None:
                return False
            if self.span.insert(fmap.flatten()):
                self.paths.append((path, fmap))
                return True
            return False

    comps = {(u, v): _Comp(u, v) for u in range(m) for v in range(m)}
    for u in range(m):
        comps[(u, u)].add(Path(u), ModuleMap.identity(summands[u]))
    last = []
    for a, phi in enumerate(calibration):
        u, v = arrows[a][1], arrows[a][2]
        if not comps[(u, v)].add(Path(u, (a,)), phi):
            raise ADRError("arrow image unexpectedly dependent")
        last.append((Path(u, (a,)), phi))

    pruner = _RelationPruner(field, quiver)
    degree = 2
    while last:
        if degree > max_path_length:
            raise PresentationError("endomorphism presentation exceeded the "
                                    "path length bound")
        current = []
        for p, fmap in last:
            w = p.target_in(quiver)
            for a in quiver.arrows_from(w):
                t = quiver.target(a)
                newp = Path(p.source, p.arrows + (a,))
                newmap = fmap.compose(calibration[a])
                c = comps[(p.source, t)]
                if c.add(newp, newmap):
                    current.append((newp, newmap))
                    continue
                terms = [(field.one, newp)]
                coords = c.coords(newmap)
                if coords is not None:
                    for x, (q, _) in zip(coords, c.paths):
                        if x != field.zero:
                            terms.append((field.neg(x), q))
                if not pruner.is_redundant(terms, degree):
                    pruner.keep(terms)
        last = current
        degree += 1

    presentation = AlgebraPresentation(field, quiver, pruner.kept,
                                       max_path_length=max_path_length)
    bad = presentation.validate()
    if bad:
        raise ADRError("extracted presentation is malformed: " + "; ".join(bad))
    basis = AlgebraBasis(presentation)
    if basis.dim != dim_R:
        raise ADRError(f"presentation dimension {basis.dim} does not match "
                       f"dim End = {dim_R}")
    return presentation, basis, calibration


# -- the radical-layer construction -------------------------------------------


class ADRData:
    """G, R = End_A(G)^op, labels, calibration and the corner idempotent.

    labels[u] = (i, j) means vertex u of R's quiver carries the summand
    P_i / rad^j P_i (i an A-vertex index, 1 <= j <= loewy[i]).
    """

    def __init__(self, algebra):
        self.algebra = algebra
        self.field = algebra.field
        quiver = algebra.quiver
        self.summands, self.labels, self.loewy = build_G(algebra)
        names = [f"({quiver.vertices[i]},{j})" for i, j in self.labels]
        self.presentation, self.basis, self.calibration = endo_presentation(
            self.summands, names, max_path_length=algebra.presentation.max_path_length)
        self.functor = HomFunctor(self.summands, self.calibration, self.basis)
        self.label_index = {lab: u for u, lab in enumerate(self.labels)}
        self.xi_vertices = [self.label_index[(i, self.loewy[i])]
                            for i in range(quiver.n_vertices)]

    @property
    def dim(self):
        return self.basis.dim

    def vertex_of(self, i, j):
        return self.label_index[(i, j)]


def build_G(algebra):
    """Labelled radical-layer summands: [(label (i, j), P_i / rad^j P_i)].

    Also returns the Loewy lengths, so callers can form the label set
    without presenting the endomorphism algebra.
    """
    quiver = algebra.quiver
    summands, labels, loewy = [], [], []
    for i in range(quiver.n_vertices):
        P = Representation.projective(algebra, i)
        _, chain = radical_series(P)
        l_i = len(chain) - 1
        loewy.append(l_i)
        for j in range(1, l_i + 1):
            _, incl = chain[j]
            Xij, _, _ = quotient(P, incl)
            summands.append(Xij)
            labels.append((i, j))
    return summands, labels, loewy


class HomFunctor:
    """Hom(X, -) into modules over the presented algebra End(X)^op,
    where X = X_0 (+) ... (+) X_m with calibrated arrow maps.

    Fiber of the image module at vertex u is Hom(X_u, M); an arrow
    u -> v with calibrated map phi: X_v -> X_u acts by precomposition
    f |-> f o phi.
    """

    def __init__(self, summands, calibration, basis):
        self.summands = summands
        self.calibration = calibration
        self.basis = basis
        self.field = basis.field
        self.base_algebra = summands[0].algebra

    def _fibers(self, M):
        field = self.field
        fibers = [hom_basis(X, M) for X in self.summands]
        coords = []
        for fb in fibers:
            if fb:
                coords.append(Matrix.from_columns(field, len(fb[0].flatten()),
                                                  [h.flatten() for h in fb]))
            else:
                coords.append(None)
        return fibers, coords

    def module(self, M):
        if M.algebra is not self.base_algebra:
            raise ADRError("module is not over the functor's base algebra")
        field = self.field
        fibers, coords = self._fibers(M)
        dims = [len(fb) for fb in fibers]
        quiver = self.basis.quiver
        action = {}
        for a in range(quiver.n_arrows):
            u, v = quiver.source(a), quiver.target(a)
            phi = self.calibration[a]
            cols = []
            for f in fibers[u]:
                g = f.compose(phi)
                if coords[v] is None:
                    if not g.is_zero():
                        raise ADRError("hom functor inconsistency")
                    cols.append([])
                else:
                    x = coords[v].solve(g.flatten())
                    if x is None:
                        raise ADRError("hom functor inconsistency")
                    cols.append(x)
            if dims[v] and dims[u]:
                action[a] = Matrix.from_columns(field, dims[v], cols)
            else:
                action[a] = Matrix.zeros(field, dims[v], dims[u])
        return Representation(self.basis, dims, action, check=False)

    def map(self, fmap, FM=None, FN=None):
        """Functorial image of a module map."""
        field = self.field
        FM = FM if FM is not None else self.module(fmap.source)
        FN = FN if FN is not None else self.module(fmap.target)
        blocks = []
        for u, X in enumerate(self.summands):
            src_fibers = hom_basis(X, fmap.source)
            tgt_fibers = hom_basis(X, fmap.target)
            if not tgt_fibers:
                blocks.append(Matrix.zeros(field, 0, len(src_fibers)))
                continue
            coords = Matrix.from_columns(field, len(tgt_fibers[0].flatten()),
                                         [h.flatten() for h in tgt_fibers])
            cols = []
            for h in src_fibers:
                x = coords.solve(fmap.compose(h).flatten())
                if x is None:
                    raise ADRError("hom functor inconsistency on maps")
                cols.append(x)
            if cols:
                blocks.append(Matrix.from_columns(field, len(tgt_fibers), cols))
            else:
                blocks.append(Matrix.zeros(field, len(tgt_fibers), 0))
        return ModuleMap(FM, FN, blocks, check=False)


def hom_G_module(adr, M):
    """The R-module Hom_A(G, M) of an A-module M."""
    return adr.functor.module(M)


def hom_G_map(adr, fmap, FM=None, FN=None):
    """Functorial image of an A-module map under Hom_A(G, -)."""
    return adr.functor.map(fmap, FM, FN)


def corner_algebra(adr):
    """dim and Ext-quiver of the corner xi R xi, compared against A.

    Returns a dict with the corner dimension, the arrow-count matrix of
    its Ext-quiver (indexed by A-vertices), and the two verdicts.
    """
    R = adr.basis
    field = adr.field
    xi = adr.xi_vertices
    xiset = set(xi)
    corner_idx = [b for b, p in enumerate(R.basis)
                  if p.source in xiset and R.path_target(p) in xiset]
    corner_dim = len(corner_idx)
    pos = {b: k for k, b in enumerate(corner_idx)}
    nA = adr.algebra.quiver.n_vertices

    def comp_of(b):
        p = R.basis[b]
        return (xi.index(p.source), xi.index(R.path_target(p)))

    radc = [b for b in corner_idx if len(R.basis[b]) >= 1]
    # rad(xi R xi) = xi rad(R) xi; square it with structure constants
    rad2 = {}
    for b1 in radc:
        for b2 in radc:
            prod = R.product(b1, b2)  # b1 * b2 (b2 applied first)
            if not prod:
                continue
            src = R.basis[b2].source
            tgt = R.path_target(R.basis[b1])
            if R.basis[b1].source != R.path_target(R.basis[b2]):
                continue
            key = (xi.index(src), xi.index(tgt))
            vec = {}
            for b, c in prod.items():
                vec[b] = c
            rad2.setdefault(key, []).append(vec)
    counts = [[0] * nA for _ in range(nA)]
    for i in range(nA):
        for k in range(nA):
            members = [b for b in radc if comp_of(b) == (i, k)]
            if not members:
                continue
            idx = {b: t for t, b in enumerate(members)}
            span = _Echelon(field, len(members))
            for vec in rad2.get((i, k), []):
                row = [field.zero] * len(members)
                for b, c in vec.items():
                    row[idx[b]] = c
                span.insert(row)
            counts[i][k] = len(members) - span.dim()
    # component (u -> v) of R corresponds to paths i -> k of A
    a_counts = [[0] * nA for _ in range(nA)]
    for name, s, t in adr.algebra.quiver.arrows:
        a_counts[s][t] += 1
    return {
        "dim": corner_dim,
        "dim_matches": corner_dim == adr.algebra.dim,
        "arrow_counts": counts,
        "quiver_matches": counts == a_counts,
    }
