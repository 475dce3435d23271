"""Finite-dimensional modules over a presented algebra, as quiver
representations, with the homological toolkit: hom spaces, radical and
socle series, traces and rejects, duality, projective covers, syzygies,
injective hulls, Ext^1, extension realization, isomorphism and
indecomposability tests.

Conventions.  A representation assigns to vertex v a column space of
dimension dims[v] and to an arrow a: u -> w a matrix of shape
(dims[w], dims[u]) acting on column vectors.  Simple modules are the
vertex simples, so composition multiplicities are fiber dimensions.
"""

from .linalg import Matrix, field_eigenvalues
from .presentation import AlgebraBasis, Path


class ModRepError(ValueError):
    pass


class NonSplitError(ModRepError):
    """An endomorphism has no eigenvalue in the base field; deciding the
    question would require a field extension."""


class InconclusiveIsomorphism(ModRepError):
    """The isomorphism search space was exhausted without a witness and no
    nondegeneracy certificate is available."""


def _opposite_of(algebra):
    if not hasattr(algebra, "_opposite_cache"):
        algebra._opposite_cache = None
    if algebra._opposite_cache is None:
        op = algebra.opposite_basis()
        op._opposite_cache = algebra
        algebra._opposite_cache = op
    return algebra._opposite_cache


class Representation:
    def __init__(self, algebra, dims, action, check=True):
        self.algebra = algebra
        self.field = algebra.field
        self.dims = list(dims)
        quiver = algebra.quiver
        if len(self.dims) != quiver.n_vertices:
            raise ModRepError("dimension vector length mismatch")
        self.action = {}
        for a in range(quiver.n_arrows):
            m = action.get(a)
            s, t = quiver.source(a), quiver.target(a)
            if m is None:
                m = Matrix.zeros(self.field, self.dims[t], self.dims[s])
            if m.shape() != (self.dims[t], self.dims[s]):
                raise ModRepError(f"arrow {quiver.arrows[a][0]} matrix has shape "
                                  f"{m.shape()}, expected {(self.dims[t], self.dims[s])}")
            self.action[a] = m
        if check:
            self._check_relations()

    def _check_relations(self):
        for i, rel in enumerate(self.algebra.presentation.relations):
            src = rel.source()
            tgt = rel.terms[0][1].target_in(self.algebra.quiver)
            acc = Matrix.zeros(self.field, self.dims[tgt], self.dims[src])
            for c, p in rel.terms:
                acc = acc + self.path_matrix(p).scale(c)
            if not acc.is_zero():
                raise ModRepError(f"relation {i} does not act by zero")

    # -- basics ----------------------------------------------------------

    @property
    def total_dim(self):
        return sum(self.dims)

    def offsets(self):
        out = []
        acc = 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return out

    def is_zero(self):
        return self.total_dim == 0

    def path_matrix(self, path):
        """Action of a path (traversal order: first arrow applied first)."""
        src = path.source
        m = Matrix.identity(self.field, self.dims[src])
        for a in path.arrows:
            m = self.action[a] @ m
        return m

    def dimension_vector(self):
        return tuple(self.dims)

    def same_algebra(self, other):
        return self.algebra is other.algebra

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, algebra):
        n = algebra.quiver.n_vertices
        return cls(algebra, [0] * n, {}, check=False)

    @classmethod
    def simple(cls, algebra, v):
        dims = [0] * algebra.quiver.n_vertices
        dims[v] = 1
        return cls(algebra, dims, {}, check=False)

    @classmethod
    def projective(cls, algebra, v):
        rep, _ = projective_with_paths(algebra, v)
        return rep

    def __repr__(self):
        return f"Representation(dims={self.dims})"


def projective_with_paths(algebra, v):
    """The projective P_v = A.e_v together with its path coordinates.

    Returns (Representation, cols) where cols[t] lists the basis indices
    of the normal-form paths with source v and target t; position in the
    list is the fiber coordinate.
    """
    quiver = algebra.quiver
    field = algebra.field
    cols = {t: [] for t in range(quiver.n_vertices)}
    for i in algebra.basis_with_source(v):
        cols[algebra.path_target(algebra.basis[i])].append(i)
    pos = {}
    for t in range(quiver.n_vertices):
        for j, i in enumerate(cols[t]):
            pos[i] = j
    dims = [len(cols[t]) for t in range(quiver.n_vertices)]
    action = {}
    for a in range(quiver.n_arrows):
        u, w = quiver.source(a), quiver.target(a)
        m = Matrix.zeros(field, dims[w], dims[u])
        data = [row[:] for row in m.data]
        for j, i in enumerate(cols[u]):
            p = algebra.basis[i]
            nf = algebra.reduce_path(Path(p.source, p.arrows + (a,)))
            for bi, c in nf.items():
                data[pos[bi]][j] = c
        action[a] = Matrix(field, data, cols=dims[u])
    return Representation(algebra, dims, action), cols


class ModuleMap:
    """A homomorphism of representations: one matrix per vertex."""

    def __init__(self, source, target, blocks, check=True):
        if not source.same_algebra(target):
            raise ModRepError("module map between different algebras")
        self.source = source
        self.target = target
        self.blocks = list(blocks)
        for v, b in enumerate(self.blocks):
            if b.shape() != (target.dims[v], source.dims[v]):
                raise ModRepError(f"block at vertex {v} has wrong shape")
        if check and not self.is_intertwiner():
            raise ModRepError("blocks do not intertwine the arrow actions")

    def is_intertwiner(self):
        q = self.source.algebra.quiver
        for a in range(q.n_arrows):
            u, w = q.source(a), q.target(a)
            lhs = self.blocks[w] @ self.source.action[a]
            rhs = self.target.action[a] @ self.blocks[u]
            if lhs != rhs:
                return False
        return True

    @classmethod
    def identity(cls, rep):
        f = rep.field
        return cls(rep, rep, [Matrix.identity(f, d) for d in rep.dims], check=False)

    @classmethod
    def zero(cls, source, target):
        f = source.field
        return cls(source, target,
                   [Matrix.zeros(f, target.dims[v], source.dims[v])
                    for v in range(len(source.dims))], check=False)

    def compose(self, first):
        """self after first."""
        if first.target is not self.source and first.target.dims != self.source.dims:
            raise ModRepError("composition mismatch")
        return ModuleMap(first.source, self.target,
                         [b2 @ b1 for b1, b2 in zip(first.blocks, self.blocks)],
                         check=False)

    def add(self, other):
        return ModuleMap(self.source, self.target,
                         [b1 + b2 for b1, b2 in zip(self.blocks, other.blocks)],
                         check=False)

    def scale(self, c):
        return ModuleMap(self.source, self.target,
                         [b.scale(c) for b in self.blocks], check=False)

    def neg(self):
        return ModuleMap(self.source, self.target,
                         [-b for b in self.blocks], check=False)

    def flatten(self):
        out = []
        for b in self.blocks:
            for row in b.data:
                out.extend(row)
        return out

    def is_zero(self):
        return all(b.is_zero() for b in self.blocks)

    def is_injective(self):
        return all(len(b.kernel_basis()) == 0 for b in self.blocks)

    def is_surjective(self):
        return all(b.rank() == b.rows for b in self.blocks)

    def is_isomorphism(self):
        return all(b.is_invertible() for b in self.blocks)

    def __repr__(self):
        return f"ModuleMap({self.source.dims} -> {self.target.dims})"


def hom_basis(M, N):
    """Deterministic basis of Hom(M, N) as a list of ModuleMaps."""
    if not M.same_algebra(N):
        raise ModRepError("hom between modules over different algebras")
    f = M.field
    q = M.algebra.quiver
    nv = q.n_vertices
    sizes = [N.dims[v] * M.dims[v] for v in range(nv)]
    offs = []
    acc = 0
    for s in sizes:
        offs.append(acc)
        acc += s
    nvars = acc

    def var(v, i, j):
        # entry (i, j) of the block at v, row-major
        return offs[v] + i * M.dims[v] + j

    rows = []
    z = f.zero
    for a in range(q.n_arrows):
        u, w = q.source(a), q.target(a)
        Ma, Na = M.action[a], N.action[a]
        # f_w @ Ma - Na @ f_u = 0; one equation per (i, j) entry.
        for i in range(N.dims[w]):
            for j in range(M.dims[u]):
                row = [z] * nvars
                for k in range(M.dims[w]):
                    c = Ma.data[k][j]
                    if c != z:
                        idx = var(w, i, k)
                        row[idx] = f.add(row[idx], c)
                for k in range(N.dims[u]):
                    c = Na.data[i][k]
                    if c != z:
                        idx = var(u, k, j)
                        row[idx] = f.sub(row[idx], c)
                if any(x != z for x in row):
                    rows.append(row)
    if not rows:
        kernel = Matrix.identity(f, nvars).columns() if nvars else []
    else:
        kernel = Matrix(f, rows, cols=nvars).kernel_basis()
    maps = []
    for vec in kernel:
        blocks = []
        for v in range(nv):
            chunk = vec[offs[v]:offs[v] + sizes[v]]
            blocks.append(Matrix.from_entries(f, N.dims[v], M.dims[v], chunk)
                          if sizes[v] else Matrix.zeros(f, N.dims[v], M.dims[v]))
        maps.append(ModuleMap(M, N, blocks, check=False))
    return maps


def hom_dim(M, N):
    return len(hom_basis(M, N))


# -- subspace bookkeeping -------------------------------------------------


class _Echelon:
    """Incremental reduced row echelon basis of a subspace of K^n."""

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self.rows = []    # kept in rref, sorted by pivot
        self.pivots = []

    def _reduce(self, vec):
        f = self.field
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c != f.zero:
                vec = [f.sub(a, f.mul(c, b)) for a, b in zip(vec, row)]
        return vec

    def contains(self, vec):
        return all(x == self.field.zero for x in self._reduce(vec))

    def insert(self, vec):
        """Add vec to the span; True if the dimension grew."""
        f = self.field
        vec = self._reduce(vec)
        p = next((i for i, x in enumerate(vec) if x != f.zero), None)
        if p is None:
            return False
        inv = f.inv(vec[p])
        vec = [f.mul(inv, x) for x in vec]
        for i, row in enumerate(self.rows):
            c = row[p]
            if c != f.zero:
                self.rows[i] = [f.sub(a, f.mul(c, b)) for a, b in zip(row, vec)]
        at = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, vec)
        self.pivots.insert(at, p)
        return True

    def dim(self):
        return len(self.rows)

    def basis_matrix(self):
        """Columns are the echelon basis vectors (n x dim)."""
        return Matrix.from_columns(self.field, self.n, self.rows)


def subrepresentation(M, vectors):
    """Smallest subrepresentation containing the given vectors.

    ``vectors`` is a list of (vertex, vector-in-fiber) pairs.  Returns
    (sub, inclusion ModuleMap); the per-vertex basis is the canonical
    echelon basis of the closure.
    """
    f = M.field
    q = M.algebra.quiver
    spans = [_Echelon(f, M.dims[v]) for v in range(q.n_vertices)]
    queue = []
    for v, vec in vectors:
        if len(vec) != M.dims[v]:
            raise ModRepError("generator vector has wrong fiber dimension")
        if spans[v].insert(vec):
            queue.append((v, list(vec)))
    while queue:
        v, vec = queue.pop()
        for a in q.arrows_from(v):
            w = q.target(a)
            img = M.action[a].apply(vec)
            if spans[w].insert(img):
                queue.append((w, img))
    incl_blocks = [spans[v].basis_matrix() for v in range(q.n_vertices)]
    dims = [b.cols for b in incl_blocks]
    action = {}
    for a in range(q.n_arrows):
        u, w = q.source(a), q.target(a)
        rhs = M.action[a] @ incl_blocks[u]
        sol = incl_blocks[w].solve_matrix(rhs)
        if sol is None:
            raise ModRepError("closure failure building subrepresentation")
        action[a] = sol
    sub = Representation(M.algebra, dims, action, check=False)
    return sub, ModuleMap(sub, M, incl_blocks, check=False)


def subrep_from_spans(M, span_vectors_per_vertex):
    """Subrepresentation from per-vertex spanning sets (closed or not)."""
    vecs = []
    for v, lst in enumerate(span_vectors_per_vertex):
        for vec in lst:
            vecs.append((v, vec))
    return subrepresentation(M, vecs)


def quotient(M, inclusion):
    """Quotient of M by the submodule given by an inclusion map.

    Returns (Q, projection ModuleMap, section blocks); the section is a
    per-vertex right inverse of the projection (not a module map).
    """
    f = M.field
    q = M.algebra.quiver
    proj_blocks = []
    sect_blocks = []
    for v in range(q.n_vertices):
        d = M.dims[v]
        sub = inclusion.blocks[v]
        red, pivots = sub.transpose().rref()
        rrows = red.data[:len(pivots)]
        free = [c for c in range(d) if c not in set(pivots)]
        proj = Matrix.zeros(f, len(free), d)
        pdata = [row[:] for row in proj.data]
        for r_i, fc in enumerate(free):
            pdata[r_i][fc] = f.one
            for rr, pc in zip(rrows, pivots):
                if rr[fc] != f.zero:
                    pdata[r_i][pc] = f.neg(rr[fc])
        proj_blocks.append(Matrix(f, pdata, cols=d))
        sect = Matrix.zeros(f, d, len(free))
        sdata = [row[:] for row in sect.data]
        for r_i, fc in enumerate(free):
            sdata[fc][r_i] = f.one
        sect_blocks.append(Matrix(f, sdata, cols=len(free)))
    dims = [b.rows for b in proj_blocks]
    action = {}
    for a in range(q.n_arrows):
        u, w = q.source(a), q.target(a)
        action[a] = proj_blocks[w] @ M.action[a] @ sect_blocks[u]
    Q = Representation(M.algebra, dims, action, check=False)
    return Q, ModuleMap(M, Q, proj_blocks, check=False), sect_blocks


def image(fmap):
    """Image of a module map as a subrepresentation of its target."""
    spans = [[col for col in b.columns()] for b in fmap.blocks]
    return subrep_from_spans(fmap.target, spans)


def kernel(fmap):
    """Kernel of a module map as a subrepresentation of its source."""
    spans = [b.kernel_basis() for b in fmap.blocks]
    return subrep_from_spans(fmap.source, spans)


def direct_sum(reps):
    """Direct sum with canonical injections and projections."""
    if not reps:
        raise ModRepError("empty direct sum")
    algebra = reps[0].algebra
    f = reps[0].field
    q = algebra.quiver
    nv = q.n_vertices
    dims = [sum(r.dims[v] for r in reps) for v in range(nv)]
    action = {}
    for a in range(q.n_arrows):
        u, w = q.source(a), q.target(a)
        big = Matrix.zeros(f, dims[w], dims[u])
        data = [row[:] for row in big.data]
        ro = co = 0
        for r in reps:
            blk = r.action[a]
            for i in range(blk.rows):
                for j in range(blk.cols):
                    data[ro + i][co + j] = blk.data[i][j]
            ro += r.dims[w]
            co += r.dims[u]
        action[a] = Matrix(f, data, cols=dims[u])
    total = Representation(algebra, dims, action, check=False)
    injections, projections = [], []
    off = [0] * nv
    for r in reps:
        inj_blocks, proj_blocks = [], []
        for v in range(nv):
            inj = Matrix.zeros(f, dims[v], r.dims[v])
            idata = [row[:] for row in inj.data]
            for i in range(r.dims[v]):
                idata[off[v] + i][i] = f.one
            inj_blocks.append(Matrix(f, idata, cols=r.dims[v]))
            proj_blocks.append(inj_blocks[-1].transpose())
        injections.append(ModuleMap(r, total, inj_blocks, check=False))
        projections.append(ModuleMap(total, r, proj_blocks, check=False))
        for v in range(nv):
            off[v] += r.dims[v]
    return total, injections, projections


# -- radical / socle -------------------------------------------------------


def radical(M):
    """rad M: span of all arrow-action images, as a subrepresentation."""
    q = M.algebra.quiver
    spans = [[] for _ in range(q.n_vertices)]
    for a in range(q.n_arrows):
        w = q.target(a)
        spans[w].extend(M.action[a].columns())
    return subrep_from_spans(M, spans)


def radical_series(M):
    """Radical layers and the chain of radical powers.

    Returns (layers, chain): layers[k] is the per-vertex multiplicity
    list of rad^k M / rad^{k+1} M; chain[k] = (rad^k M, inclusion into M),
    starting at k = 0 with M itself.
    """
    chain = [(M, ModuleMap.identity(M))]
    layers = []
    current, incl = chain[0]
    while not current.is_zero():
        sub, sub_incl = radical(current)
        incl_to_M = incl.compose(sub_incl)
        layers.append([current.dims[v] - sub.dims[v] for v in range(len(M.dims))])
        chain.append((sub, incl_to_M))
        current, incl = sub, incl_to_M
    return layers, chain


def loewy_length(M):
    return len(radical_series(M)[0])


def top_multiplicities(M):
    layers, _ = radical_series(M)
    return layers[0] if layers else [0] * len(M.dims)


def socle(M):
    """soc M: the joint kernel of all arrow actions."""
    f = M.field
    q = M.algebra.quiver
    spans = []
    for v in range(q.n_vertices):
        outgoing = [M.action[a] for a in q.arrows_from(v)]
        if not outgoing:
            spans.append(Matrix.identity(f, M.dims[v]).columns())
            continue
        stacked = outgoing[0]
        for m in outgoing[1:]:
            stacked = stacked.vstack(m)
        spans.append(stacked.kernel_basis())
    return subrep_from_spans(M, spans)


def socle_series(M):
    """Socle layers (per-vertex multiplicities) and the ascending chain.

    chain[k] = (soc^k M, inclusion into M) with soc^0 = 0.
    """
    f = M.field
    zero_sub, zero_incl = subrepresentation(M, [])
    chain = [(zero_sub, zero_incl)]
    layers = []
    while chain[-1][0].total_dim < M.total_dim:
        cur, cur_incl = chain[-1]
        Q, proj, _ = quotient(M, cur_incl)
        s, s_incl = socle(Q)
        # preimage of s under proj
        spans = []
        for v in range(len(M.dims)):
            sp = [vec for vec in cur_incl.blocks[v].columns()]
            target_span = _Echelon(f, Q.dims[v])
            for col in s_incl.blocks[v].columns():
                target_span.insert(col)
            # solve proj_v x = b for each socle basis vector
            for col in s_incl.blocks[v].columns():
                x = proj.blocks[v].solve(col)
                if x is None:
                    raise ModRepError("projection not surjective")
                sp.append(x)
            spans.append(sp)
        nxt, nxt_incl = subrep_from_spans(M, spans)
        layers.append([nxt.dims[v] - cur.dims[v] for v in range(len(M.dims))])
        chain.append((nxt, nxt_incl))
    return layers, chain


# -- trace / reject --------------------------------------------------------


def generated_submodule(M, vectors):
    return subrepresentation(M, vectors)


def trace(theta, M):
    """Largest submodule of M generated by the modules in theta."""
    spans = [[] for _ in range(len(M.dims))]
    for X in theta:
        if not X.same_algebra(M):
            raise ModRepError("trace: algebra mismatch")
        for fmap in hom_basis(X, M):
            for v in range(len(M.dims)):
                spans[v].extend(fmap.blocks[v].columns())
    return subrep_from_spans(M, spans)


def reject(M, theta):
    """Smallest submodule of M with quotient cogenerated by theta:
    the intersection of kernels of all maps M -> X, X in theta."""
    f = M.field
    nv = len(M.dims)
    all_maps = []
    for X in theta:
        if not X.same_algebra(M):
            raise ModRepError("reject: algebra mismatch")
        all_maps.extend(hom_basis(M, X))
    spans = []
    for v in range(nv):
        blocks = [g.blocks[v] for g in all_maps if g.blocks[v].rows > 0]
        if not blocks:
            spans.append(Matrix.identity(f, M.dims[v]).columns())
            continue
        stacked = blocks[0]
        for b in blocks[1:]:
            stacked = stacked.vstack(b)
        spans.append(stacked.kernel_basis())
    return subrep_from_spans(M, spans)


# -- duality ----------------------------------------------------------------


def dual(M):
    """Standard duality: a module over the opposite algebra."""
    op = _opposite_of(M.algebra)
    action = {a: M.action[a].transpose() for a in range(M.algebra.quiver.n_arrows)}
    return Representation(op, list(M.dims), action, check=False)


def dual_map(fmap):
    """D is contravariant: dual_map(f: M -> N) : D(N) -> D(M)."""
    return ModuleMap(dual(fmap.target), dual(fmap.source),
                     [b.transpose() for b in fmap.blocks], check=False)


# -- projective covers, injective hulls, Ext^1 ------------------------------


def projective_cover_syzygy(M):
    """Projective cover P -> M and the syzygy.

    Returns (P, cover, (omega, omega_incl)) with omega the kernel of the
    cover as a subrepresentation of P.
    """
    algebra = M.algebra
    f = M.field
    q = algebra.quiver
    nv = q.n_vertices
    tops = top_multiplicities(M)
    _, proj_to_top, sections = _top_quotient_data(M)
    summands = []
    gens = []  # (vertex, generator vector in M)
    for v in range(nv):
        for k in range(tops[v]):
            summands.append(v)
            unit = [f.zero] * tops[v]
            unit[k] = f.one
            gens.append((v, sections[v].apply(unit)))
    if not summands:
        P = Representation.zero(algebra)
        cover = ModuleMap.zero(P, M)
        omega, omega_incl = subrepresentation(P, [])
        return P, cover, (omega, omega_incl)
    parts = []
    part_cols = []
    for v in summands:
        rep, cols = projective_with_paths(algebra, v)
        parts.append(rep)
        part_cols.append(cols)
    P, injections, _ = direct_sum(parts)
    blocks = [Matrix.zeros(f, M.dims[v], P.dims[v]) for v in range(nv)]
    bdata = [[row[:] for row in b.data] for b in blocks]
    for idx, (rep, cols, (gv, gvec)) in enumerate(zip(parts, part_cols, gens)):
        for t in range(nv):
            for j, bi in enumerate(cols[t]):
                p = algebra.basis[bi]
                img = M.path_matrix(p).apply(gvec)
                # column j of summand idx at vertex t, offset via injection
                col_in_P = injections[idx].blocks[t].column(j)
                pos = col_in_P.index(f.one)
                for i in range(M.dims[t]):
                    bdata[t][i][pos] = img[i]
    cover_blocks = [Matrix(f, bdata[v], cols=P.dims[v]) for v in range(nv)]
    cover = ModuleMap(P, M, cover_blocks, check=False)
    omega, omega_incl = kernel(cover)
    return P, cover, (omega, omega_incl)


def _top_quotient_data(M):
    rad, rad_incl = radical(M)
    return quotient(M, rad_incl)


def injective_hull(M):
    """Injective hull via the projective cover of the dual module.

    Returns (Q, embedding M -> Q).
    """
    dM = dual(M)
    P, cover, _ = projective_cover_syzygy(dM)
    Q = dual(P)
    embedding = dual_map(cover)  # D(dM) -> D(P); D(dM) == M on the nose
    return Q, ModuleMap(M, Q, embedding.blocks, check=False)


def injective(algebra, v):
    """The indecomposable injective with socle L_v."""
    op = _opposite_of(algebra)
    return dual(Representation.projective(op, v))


class ExtClass:
    """A class in Ext^1(M, N): a map from the syzygy of M to N, modulo
    restrictions of maps from the projective cover."""

    def __init__(self, M, N, theta, cover_data):
        self.M = M
        self.N = N
        self.theta = theta
        self.cover_data = cover_data  # (P, cover, omega, omega_incl)


def ext1(M, N):
    """(dim Ext^1(M, N), coset-representative ExtClasses)."""
    if not M.same_algebra(N):
        raise ModRepError("ext1: algebra mismatch")
    f = M.field
    P, cover, (omega, omega_incl) = projective_cover_syzygy(M)
    hom_omega = hom_basis(omega, N)
    if not hom_omega:
        return 0, []
    coords = Matrix.from_columns(f, len(hom_omega[0].flatten()),
                                 [h.flatten() for h in hom_omega])
    restricted = _Echelon(f, len(hom_omega))
    for g in hom_basis(P, N):
        r = g.compose(omega_incl)
        x = coords.solve(r.flatten())
        if x is None:
            raise ModRepError("restriction left the hom space (internal error)")
        restricted.insert(x)
    pivots = set(restricted.pivots)
    reps = []
    cover_data = (P, cover, omega, omega_incl)
    for i, h in enumerate(hom_omega):
        if i not in pivots:
            reps.append(ExtClass(M, N, h, cover_data))
    return len(hom_omega) - restricted.dim(), reps


def realize_extension(M, N, ext_class):
    """Middle term of the extension of M by N along an ExtClass.

    Returns (E, incl N -> E, proj E -> M); the zero class (theta = 0)
    yields the split extension.
    """
    if ext_class.M is not M or ext_class.N is not N:
        raise ModRepError("extension class does not belong to (M, N)")
    f = M.field
    P, cover, omega, omega_incl = ext_class.cover_data
    theta = ext_class.theta
    S, injections, _ = direct_sum([N, P])
    iN, iP = injections
    graph = iP.compose(omega_incl).add(iN.compose(theta).neg())
    W, W_incl = image(graph)
    E, proj_S, sections = quotient(S, W_incl)
    n_to_e = proj_S.compose(iN)
    # E -> M induced by [0 | cover] on N (+) P, which kills W.
    blocks = []
    for v in range(len(M.dims)):
        gv = cover.blocks[v] @ iP.blocks[v].transpose()
        blocks.append(gv @ sections[v])
    e_to_m = ModuleMap(E, M, blocks, check=False)
    return E, n_to_e, e_to_m


def zero_ext_class(M, N):
    """The split class in Ext^1(M, N)."""
    P, cover, (omega, omega_incl) = projective_cover_syzygy(M)
    return ExtClass(M, N, ModuleMap.zero(omega, N), (P, cover, omega, omega_incl))


# -- isomorphism and indecomposability --------------------------------------

_SCAN_LIMIT = 200000


def is_isomorphic(M, N, witness=False):
    """Exact isomorphism test; returns bool, or (bool, map-or-None).

    A found witness proves yes.  No is proved by differing dimension
    vectors, by an exhausted scan over a small prime field, or over Q by
    the vanishing of the product-of-determinants polynomial.  Raises
    InconclusiveIsomorphism when neither route is available.
    """
    if not M.same_algebra(N):
        raise ModRepError("isomorphism test: algebra mismatch")
    result = _iso_witness(M, N)
    if witness:
        return (result is not None), result
    return result is not None


def _iso_witness(M, N):
    f = M.field
    if M.dims != N.dims:
        return None
    if M.total_dim == 0:
        return ModuleMap(M, N, [Matrix.zeros(f, 0, 0)] * len(M.dims), check=False)
    # cheap invariants first
    if [l for l in radical_series(M)[0]] != [l for l in radical_series(N)[0]]:
        return None
    homs = hom_basis(M, N)
    if not homs:
        return None

    def combo(coeffs):
        g = homs[0].scale(coeffs[0])
        for c, h in zip(coeffs[1:], homs[1:]):
            g = g.add(h.scale(c))
        return g

    def invertible(g):
        return all(b.is_invertible() for b in g.blocks)

    k = len(homs)
    # single maps and the all-ones combination first
    for h in homs:
        if invertible(h):
            return h
    ones = combo([f.one] * k)
    if invertible(ones):
        return ones

    if f.p != 0:
        if f.p ** k > _SCAN_LIMIT:
            raise InconclusiveIsomorphism(
                f"search space {f.p}^{k} too large for exhaustive scan")
        from itertools import product
        for coeffs in product(range(f.p), repeat=k):
            g = combo([f.of(c) for c in coeffs])
            if invertible(g):
                return g
        return None

    # over Q: small integer grid, then certified determinant polynomial
    if 5 ** k <= _SCAN_LIMIT:
        from itertools import product
        for coeffs in product([0, 1, -1, 2, -2], repeat=k):
            g = combo([f.of(c) for c in coeffs])
            if invertible(g):
                return g
    import sympy
    xs = sympy.symbols(f"c0:{k}")
    det_poly = sympy.Integer(1)
    for v in range(len(M.dims)):
        d = M.dims[v]
        if d == 0:
            continue
        sm = sympy.zeros(d, d)
        for idx, h in enumerate(homs):
            b = h.blocks[v]
            for i in range(d):
                for j in range(d):
                    if b.data[i][j] != f.zero:
                        sm[i, j] += xs[idx] * sympy.Rational(b.data[i][j])
        det_poly *= sm.det(method="berkowitz")
    det_poly = sympy.expand(det_poly)
    if det_poly == 0:
        return None
    # the polynomial is nonzero, so a rational witness exists; fix variables
    # one at a time keeping the specialization nonzero.
    values = {}
    for x in xs:
        t = 0
        while True:
            spec = det_poly.subs(x, t)
            if sympy.expand(spec) != 0:
                det_poly = spec
                values[x] = t
                break
            t = -t + (1 if t <= 0 else 0)  # 0, 1, -1, 2, -2, ...
    g = combo([f.of(int(values[x])) for x in xs])
    if not invertible(g):
        raise InconclusiveIsomorphism("certified witness failed invertibility "
                                      "(internal error)")
    return g


def _total_matrix(fmap):
    """Block-diagonal matrix of an endomorphism on the total space."""
    f = fmap.source.field
    n = fmap.source.total_dim
    big = Matrix.zeros(f, n, n)
    data = [row[:] for row in big.data]
    off = 0
    for b in fmap.blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                data[off + i][off + j] = b.data[i][j]
        off += b.rows
    return Matrix(f, data, cols=n)


def is_indecomposable(M):
    """Whether End(M) is local, assuming split-local summands.

    Raises NonSplitError when some endomorphism has an eigenvalue outside
    the base field (the verdict would need a field extension).
    """
    if M.total_dim == 0:
        return False
    f = M.field
    endos = hom_basis(M, M)
    nilpotent_parts = []
    for h in endos:
        big = _total_matrix(h)
        roots, residual = field_eigenvalues(big)
        # two coprime characteristic factors give a primary decomposition
        # by polynomials in h, hence a direct module decomposition
        if len(roots) + (1 if residual else 0) > 1:
            return False
        if residual:
            raise NonSplitError("endomorphism with no eigenvalue in the field")
        lam = roots[0][0]
        nilpotent_parts.append(h.add(ModuleMap.identity(M).scale(f.neg(lam))))
    dim_end = len(endos)
    size = len(endos[0].flatten())
    span = _Echelon(f, size)
    for n in nilpotent_parts:
        span.insert(n.flatten())
    if span.contains(ModuleMap.identity(M).flatten()):
        return False
    # closure under multiplication
    base = [n for n in nilpotent_parts]
    for n1 in base:
        for n2 in base:
            prod = n1.compose(n2)
            if not span.contains(prod.flatten()):
                return False
    # nilpotency of the ideal
    current = base
    steps = 0
    while current and steps <= dim_end + 1:
        nxt_span = _Echelon(f, size)
        nxt = []
        for n1 in current:
            for n2 in base:
                prod = n1.compose(n2)
                if not prod.is_zero() and nxt_span.insert(prod.flatten()):
                    nxt.append(prod)
        current = nxt
        steps += 1
    if current:
        return False
    return True


# -- misc helpers ------------------------------------------------------------


def composition_multiplicities(M):
    """[M : L_v] for each vertex v (vertex simples, split basic algebra)."""
    return list(M.dims)


def random_module(algebra, rng, max_proj=2, max_gens=2):
    """A pseudo-random quotient of a small projective sum (valid by
    construction); deterministic for a fixed rng state."""
    nv = algebra.quiver.n_vertices
    count = rng.randint(1, max_proj)
    verts = [rng.randrange(nv) for _ in range(count)]
    parts = [Representation.projective(algebra, v) for v in verts]
    P, _, _ = direct_sum(parts)
    rad, rad_incl = radical(P)
    vectors = []
    for _ in range(rng.randint(0, max_gens)):
        v = rng.randrange(nv)
        if rad.dims[v] == 0:
            continue
        coeffs = [algebra.field.of(rng.randint(-2, 2)) for _ in range(rad.dims[v])]
        vec = rad_incl.blocks[v].apply(coeffs)
        vectors.append((v, vec))
    sub, sub_incl = subrepresentation(P, vectors)
    Q, _, _ = quotient(P, sub_incl)
    return Q
