"""Quasihereditary structure: label posets, standard and costandard
modules, filtration certification, the ultra-strong axioms (A1)/(A2),
relabelling, tilting modules, Ringel duals, global dimension and the
aggregate structure-theorem verifier.

A QHContext pairs a presented algebra with a strict partial order on its
vertex labels.  All certificates are exact: filtrations come with witness
chains whose successive quotients are isomorphism-checked against the
claimed standard or costandard factors.
"""

import random

from .adr import ADRData, HomFunctor, endo_presentation
from .modrep import (ModRepError, ModuleMap, Representation, direct_sum,
                     dual, ext1, hom_basis, hom_dim, injective,
                     is_indecomposable, is_isomorphic, kernel,
                     projective_cover_syzygy, quotient, radical,
                     radical_series, realize_extension, subrepresentation,
                     top_multiplicities, trace, _opposite_of)


class QHError(ModRepError):
    pass


class LabelPoset:
    """Strict partial order on the vertex labels 0..n-1."""

    def __init__(self, n, less_pairs, display=None):
        self.n = n
        self.display = list(display) if display else [str(i) for i in range(n)]
        less = set()
        for a, b in less_pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise QHError("label out of range in poset")
            less.add((a, b))
        # transitive closure
        changed = True
        while changed:
            changed = False
            for a, b in list(less):
                for c in range(n):
                    if (b, c) in less and (a, c) not in less:
                        less.add((a, c))
                        changed = True
        for a in range(n):
            if (a, a) in less:
                raise QHError(f"poset has a cycle through label {a}")
        self._less = less

    def less(self, a, b):
        return (a, b) in self._less

    def leq(self, a, b):
        return a == b or (a, b) in self._less

    def maximal(self, subset=None):
        items = list(subset) if subset is not None else list(range(self.n))
        return [a for a in items if not any(self.less(a, b) for b in items)]

    def minimal(self, subset=None):
        items = list(subset) if subset is not None else list(range(self.n))
        return [a for a in items if not any(self.less(b, a) for b in items)]

    def opposite(self):
        return LabelPoset(self.n, [(b, a) for a, b in self._less], self.display)

    def linear_extension(self, rng=None):
        """A total order (list, smallest first) refining the poset;
        pseudo-random when an rng is supplied."""
        remaining = list(range(self.n))
        out = []
        while remaining:
            ready = [a for a in remaining
                     if not any(self.less(b, a) for b in remaining if b != a)]
            out.append(rng.choice(ready) if rng else ready[0])
            remaining.remove(out[-1])
        return out

    @classmethod
    def total(cls, order, display=None):
        """Total order from a list of labels, smallest first."""
        pairs = [(order[i], order[j])
                 for i in range(len(order)) for j in range(i + 1, len(order))]
        return cls(len(order), pairs, display)

    @classmethod
    def natural(cls, n, display=None):
        return cls.total(list(range(n)), display)

    @classmethod
    def adr(cls, labels, display=None):
        """The radical-layer order: (i,j) < (k,l) iff j > l."""
        pairs = []
        for a, (i, j) in enumerate(labels):
            for b, (k, l) in enumerate(labels):
                if j > l:
                    pairs.append((a, b))
        return cls(len(labels), pairs, display)


class QHContext:
    """A presented algebra with a labelling poset and per-label caches."""

    def __init__(self, basis, poset, adaptedness="sampled", adr_data=None):
        if poset.n != basis.quiver.n_vertices:
            raise QHError("poset size does not match the vertex count")
        self.basis = basis
        self.field = basis.field
        self.poset = poset
        self.adaptedness = adaptedness
        self.adr_data = adr_data
        self.n = poset.n
        self._cache = {}
        self._op = None

    def _get(self, kind, v, builder):
        key = (kind, v)
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    def simple(self, v):
        return self._get("L", v, lambda: Representation.simple(self.basis, v))

    def projective(self, v):
        return self._get("P", v, lambda: Representation.projective(self.basis, v))

    def injective(self, v):
        return self._get("Q", v, lambda: injective(self.basis, v))

    def delta(self, v):
        return self._get("D", v, lambda: standard_module(self, v))

    def nabla(self, v):
        return self._get("N", v, lambda: costandard_module(self, v))

    def tilting(self, v):
        return self._get("T", v, lambda: tilting_module(self, v))

    def opposite(self):
        if self._op is None:
            self._op = QHContext(_opposite_of(self.basis), self.poset,
                                 adaptedness=self.adaptedness)
            self._op._op = self
        return self._op


def standard_module(ctx, v, poset=None):
    """Largest quotient of P_v with composition factors at most v:
    P_v modulo the trace of all P_j with j not <= v."""
    poset = poset or ctx.poset
    P = ctx.projective(v)
    theta = [ctx.projective(j) for j in range(ctx.n) if not poset.leq(j, v)]
    if not theta:
        return P
    U, incl = trace(theta, P)
    D, _, _ = quotient(P, incl)
    return D


def costandard_module(ctx, v):
    """Largest submodule of Q_v with factors at most v, via duality."""
    return dual(standard_module(ctx.opposite(), v))


class FiltrationReport:
    """Certified Delta- (or nabla-) filtration of a module, or refutation.

    ``factors`` lists (label, multiplicity) in peel order; for the Delta
    version the witness ``chain`` is the ascending submodule chain of M
    whose k-th quotient is Delta(label_k)^(mult_k); the nabla version
    certifies through the dual module.
    """

    def __init__(self, kind, verdict, factors, chain=None, failure=None):
        self.kind = kind
        self.verdict = verdict
        self.factors = factors
        self.chain = chain or []
        self.failure = failure

    def multiplicity(self, v):
        return sum(m for lab, m in self.factors if lab == v)

    def __repr__(self):
        tag = "ok" if self.verdict else f"refuted ({self.failure})"
        return f"FiltrationReport({self.kind}, {tag}, factors={self.factors})"


def delta_filtration(ctx, M):
    """Greedy certification that M has a Delta-filtration.

    Peels the trace of P_i for i maximal in the composition support and
    demands it be an exact multiple of Delta(i); refutation is a verdict,
    not an error.
    """
    factors = []
    chain = []
    current = M
    cum_proj = ModuleMap.identity(M)
    while current.total_dim > 0:
        support = [v for v in range(ctx.n) if current.dims[v] > 0]
        i = min(ctx.poset.maximal(support))
        delta = ctx.delta(i)
        U, incl = trace([ctx.projective(i)], current)
        if U.total_dim == 0:
            return FiltrationReport("delta", False, factors, chain,
                                    failure=f"trace of P_{i} vanishes")
        m = top_multiplicities(U)[i]
        if U.dims != [m * d for d in delta.dims]:
            return FiltrationReport(
                "delta", False, factors, chain,
                failure=f"trace of P_{i} is not a multiple of Delta({i})")
        factors.append((i, m))
        current, proj, _ = quotient(current, incl)
        cum_proj = proj.compose(cum_proj)
        chain.append(kernel(cum_proj))
    return FiltrationReport("delta", True, factors, chain)


def nabla_filtration(ctx, M):
    """nabla-filtration certificate, by duality with the opposite context."""
    rep = delta_filtration(ctx.opposite(), dual(M))
    return FiltrationReport("nabla", rep.verdict, rep.factors, rep.chain,
                            rep.failure)


def _sampled_linear_extensions(ctx, samples, seed):
    rng = random.Random(seed)
    stable = True
    for _ in range(samples):
        order = ctx.poset.linear_extension(rng)
        total = LabelPoset.total(order, ctx.poset.display)
        for v in range(ctx.n):
            alt = standard_module(ctx, v, poset=total)
            ref = ctx.delta(v)
            if alt.dims != ref.dims or any(alt.action[a] != ref.action[a]
                                           for a in alt.action):
                stable = False
    return stable


def check_quasihereditary(ctx, samples=5, seed=20260823):
    """Full QH certification with the adaptedness surrogate.

    Checks [Delta(v) : L_v] = 1 everywhere, Delta-filters every
    projective, nabla-filters every injective, and confirms Delta is
    stable under sampled linear extensions of the poset (unless the
    context carries a stronger adaptedness guarantee).
    """
    report = {"multiplicity_one": {}, "projectives": {}, "injectives": {},
              "adaptedness": ctx.adaptedness}
    ok = True
    for v in range(ctx.n):
        good = ctx.delta(v).dims[v] == 1
        report["multiplicity_one"][v] = good
        ok = ok and good
    for v in range(ctx.n):
        rep = delta_filtration(ctx, ctx.projective(v))
        report["projectives"][v] = rep
        ok = ok and rep.verdict
    for v in range(ctx.n):
        rep = nabla_filtration(ctx, ctx.injective(v))
        report["injectives"][v] = rep
        ok = ok and rep.verdict
    if ctx.adaptedness == "sampled":
        stable = _sampled_linear_extensions(ctx, samples, seed)
        report["adaptedness_stable"] = stable
        ok = ok and stable
    report["verdict"] = ok
    return report


def check_usq(ctx):
    """The two ultra-strong axioms.

    (A1): rad Delta(v) is zero or again a standard module;
    (A2): when rad Delta(v) = 0, the injective Q_v is Delta-filtered.
    """
    report = {"A1": {}, "A2": {}}
    ok = True
    for v in range(ctx.n):
        delta = ctx.delta(v)
        rad, _ = radical(delta)
        if rad.total_dim == 0:
            rep = delta_filtration(ctx, ctx.injective(v))
            report["A2"][v] = rep.verdict
            report["A1"][v] = True
            ok = ok and rep.verdict
            continue
        match = None
        for j in range(ctx.n):
            if ctx.delta(j).dims == rad.dims and is_isomorphic(rad, ctx.delta(j)):
                match = j
                break
        report["A1"][v] = match
        if match is None:
            report["A1"][v] = False
            ok = False
    report["verdict"] = ok
    return report


class UsqRelabel:
    """The derived order on labels of an ultra strongly quasihereditary
    algebra, its maximal chains, and the (i, j) relabelling."""

    def __init__(self, preceq, maximal, chains, pairs, socle_labels):
        self.preceq = preceq          # set of (a, b) with a < b
        self.maximal = maximal        # maximal labels, one per chain
        self.chains = chains          # chains[c] = [labels top-down]
        self.pairs = pairs            # old label -> (chain index, j)
        self.socle_labels = socle_labels  # chain index -> label i*

    def chain_length(self, c):
        return len(self.chains[c])


def usq_relabel(ctx):
    """Relabel the simples as (i, j) along the rad-Delta chains.

    Builds the order a < b iff L_a is a composition factor of Delta(b)
    (a != b), verifies it is a suborder of the input poset, walks each
    maximal chain Delta(i), rad Delta(i) = Delta(i_2), ... and checks the
    structural facts about maximal chains: simple chain ends, disjoint
    supports, Delta-filtered injectives at chain ends, and the chain-end
    injective being the tilting module of the chain top.
    """
    preceq = set()
    for b in range(ctx.n):
        for a in range(ctx.n):
            if a != b and ctx.delta(b).dims[a] > 0:
                preceq.add((a, b))
    for a, b in preceq:
        if (b, a) in preceq:
            raise QHError("derived label order is not antisymmetric")
        if not ctx.poset.less(a, b):
            raise QHError("input poset does not refine the derived order")
    for a, b in preceq:
        for c in range(ctx.n):
            if (b, c) in preceq and (a, c) not in preceq and a != c:
                raise QHError("derived label order is not transitive")
    maximal = [b for b in range(ctx.n)
               if not any((b, c) in preceq for c in range(ctx.n))]
    chains, pairs, socle_labels = [], {}, []
    seen = set()
    for ci, top in enumerate(sorted(maximal)):
        chain = []
        v = top
        while True:
            chain.append(v)
            rad, _ = radical(ctx.delta(v))
            if rad.total_dim == 0:
                break
            nxt = None
            for j in range(ctx.n):
                if ctx.delta(j).dims == rad.dims and is_isomorphic(rad, ctx.delta(j)):
                    nxt = j
                    break
            if nxt is None:
                raise QHError("rad Delta is not standard; algebra is not USQ")
            v = nxt
        for j, lab in enumerate(chain, start=1):
            if lab in seen:
                raise QHError("maximal chains are not disjoint")
            seen.add(lab)
            pairs[lab] = (ci, j)
        chains.append(chain)
        socle_labels.append(chain[-1])
        # chain-end facts
        end = chain[-1]
        if ctx.delta(end).total_dim != 1:
            raise QHError("chain-end standard module is not simple")
        if not delta_filtration(ctx, ctx.injective(end)).verdict:
            raise QHError("chain-end injective is not Delta-filtered")
    if len(seen) != ctx.n:
        raise QHError("chains do not exhaust the label set")
    # supports of distinct maximal Delta's are disjoint
    for a in range(len(chains)):
        for b in range(a + 1, len(chains)):
            da, db = ctx.delta(chains[a][0]), ctx.delta(chains[b][0])
            if any(da.dims[v] > 0 and db.dims[v] > 0 for v in range(ctx.n)):
                raise QHError("maximal standard modules share a factor")
    for ci, chain in enumerate(chains):
        Q = ctx.injective(socle_labels[ci])
        T = ctx.tilting(chain[0])
        if not is_isomorphic(Q, T):
            raise QHError("chain-end injective differs from the tilting module")
    return UsqRelabel(preceq, [c[0] for c in chains], chains, pairs, socle_labels)


def tilting_module(ctx, v):
    """The indecomposable relative-injective T(v) in F(Delta), built by
    universal extensions: repeatedly absorb Ext^1(Delta(j), -) for j
    maximal below v until all such groups vanish."""
    current = ctx.delta(v)
    bound = sum(ctx.delta(j).total_dim for j in range(ctx.n)) * ctx.n + ctx.n
    steps = 0
    while True:
        lower = [j for j in range(ctx.n) if ctx.poset.less(j, v)]
        candidates = [j for j in lower if ext1(ctx.delta(j), current)[0] > 0]
        if not candidates:
            break
        j = min(ctx.poset.maximal(candidates))
        while True:
            d, reps = ext1(ctx.delta(j), current)
            if d == 0:
                break
            current, _, _ = realize_extension(ctx.delta(j), current, reps[0])
            steps += 1
            if steps > bound:
                raise QHError("tilting construction exceeded its iteration "
                              "bound (internal error)")
    if not is_indecomposable(current):
        raise QHError("constructed tilting module is decomposable")
    rep = delta_filtration(ctx, current)
    if not rep.verdict or rep.multiplicity(v) != 1:
        raise QHError("tilting module fails its Delta-filtration checks")
    if not nabla_filtration(ctx, current).verdict:
        raise QHError("tilting module fails its nabla-filtration check")
    return current


class RingelDual:
    """The Ringel dual context together with its comparison functor."""

    def __init__(self, ctx):
        self.base = ctx
        summands = [ctx.tilting(v) for v in range(ctx.n)]
        names = [f"{lab}'" for lab in ctx.poset.display]
        presentation, basis, calibration = endo_presentation(
            summands, names, max_path_length=ctx.basis.presentation.max_path_length)
        self.functor = HomFunctor(summands, calibration, basis)
        self.ctx = QHContext(basis, ctx.poset.opposite(),
                             adaptedness=ctx.adaptedness)

    def projective_image(self, v):
        """Hom(T, T(v)) = the projective at v over the dual."""
        return self.functor.module(self.base.tilting(v))

    def standard_image(self, v):
        """Hom(T, nabla(v)) = the standard module at v over the dual."""
        return self.functor.module(self.base.nabla(v))

    def tilting_image(self, v):
        """Hom(T, Q_v) = the tilting module at v over the dual."""
        return self.functor.module(self.base.injective(v))


def ringel_dual(ctx):
    return RingelDual(ctx)


def projective_dimension(basis, M):
    """Length of a minimal projective resolution, by syzygy iteration."""
    if M.total_dim == 0:
        return 0
    d = 0
    current = M
    while True:
        _, _, (omega, _) = projective_cover_syzygy(current)
        if omega.total_dim == 0:
            return d
        d += 1
        if d > basis.dim:
            raise QHError("possibly infinite projective dimension")
        current = omega


def injective_dimension(basis, M):
    """Projective dimension of the dual module over the opposite algebra."""
    return projective_dimension(_opposite_of(basis), dual(M))


def global_dimension(ctx):
    """Max projective dimension over the simple modules."""
    return max(projective_dimension(ctx.basis, ctx.simple(v))
               for v in range(ctx.n))


def reciprocity_multiplicity(ctx, M, v, kind="delta"):
    """Filtration multiplicity by hom count.

    delta version: (M : Delta(v)) = dim Hom(M, nabla(v)) / dim End(nabla(v));
    nabla version: (M : nabla(v)) = dim Hom(Delta(v), M) / dim End(Delta(v)).
    """
    if kind == "delta":
        num = hom_dim(M, ctx.nabla(v))
        den = hom_dim(ctx.nabla(v), ctx.nabla(v))
    else:
        num = hom_dim(ctx.delta(v), M)
        den = hom_dim(ctx.delta(v), ctx.delta(v))
    if num % den:
        raise QHError("hom dimension is not a multiple of the endomorphism "
                      "dimension; module is not filtered")
    return num // den


# -- random Delta-filtered modules and submodules ------------------------------


def _random_submodule(M, rng, max_gens=3):
    vectors = []
    for _ in range(rng.randint(1, max_gens)):
        v = rng.randrange(len(M.dims))
        if M.dims[v] == 0:
            continue
        vec = [M.field.of(rng.randint(-2, 2)) for _ in range(M.dims[v])]
        vectors.append((v, vec))
    return subrepresentation(M, vectors)


def _random_delta_filtered(ctx, rng, max_parts=3):
    parts = [ctx.projective(rng.randrange(ctx.n))
             for _ in range(rng.randint(1, max_parts))]
    if len(parts) == 1:
        return parts[0]
    return direct_sum(parts)[0]


# -- aggregate verification -----------------------------------------------------


def verify_structure_theorems(ctx, samples=50, seed=20260823):
    """Machine verification of the structure theory on a USQ algebra.

    Items (each a verdict in the returned report):
      a. unique tilting chain 0 < T(i,l_i) < ... < T(i,1) = Q at the chain
         end, with successive quotients the costandard modules, and the
         label of each quotient forced;
      b. T(i,j) equals the largest submodule of the chain-end injective
         with composition factors at most (i,j) (the reject description);
      c. Q_{i,j} is isomorphic to T(i,1)/T(i,j+1);
      d. inj.dim nabla <= 1, rad Delta in F(Delta), and random submodules
         of Delta-filtered modules stay Delta-filtered;
      e. Ringel dual: P' = T' at chain tops, T'(i,j) = P'(i,1)/P'(i,j+1),
         costandard duals uniserial with the expected radical chain, and
         the opposite of the dual is again USQ;
      f. (ADR contexts only) Hom_A(G, M) is Delta-filtered for random
         A-modules, and the projective short exact sequences hold.
    """
    rng = random.Random(seed)
    report = {}
    relabel = usq_relabel(ctx)
    report["relabel"] = relabel

    # (a) + (c): tilting chains inside the chain-end injective
    a_ok, c_ok = True, True
    chain_tails = {}  # old label -> (T-module, inclusion into Q_end)
    for ci, chain in enumerate(relabel.chains):
        Qend = ctx.injective(relabel.socle_labels[ci])
        # descending chain of submodules of Qend by the reject description
        mods = []
        for j, lab in enumerate(chain, start=1):
            T = ctx.tilting(lab)
            sub, incl = _largest_submodule_below(ctx, Qend, lab)
            if sub.dims != T.dims or not is_isomorphic(sub, T):
                a_ok = False
                continue
            mods.append((lab, sub, incl))
            chain_tails[lab] = (sub, incl)
        # successive quotients and forced labels
        for k in range(len(mods)):
            lab, sub, incl = mods[k]
            if k + 1 < len(mods):
                nlab, nsub, nincl = mods[k + 1]
                Qt, proj, _ = quotient(sub, _restrict_inclusion(sub, incl,
                                                                nsub, nincl))
            else:
                Qt = sub
            nab = ctx.nabla(lab)
            if not (Qt.dims == nab.dims and is_isomorphic(Qt, nab)):
                a_ok = False
            for other in range(ctx.n):
                if other != lab and ctx.nabla(other).dims == Qt.dims \
                        and is_isomorphic(Qt, ctx.nabla(other)):
                    a_ok = False  # label would not be forced
        # (c): Q_{i,j} = T(i,1)/T(i,j+1)
        top_sub, top_incl = chain_tails[chain[0]]
        for k, lab in enumerate(chain):
            if k + 1 < len(chain):
                nsub, nincl = chain_tails[chain[k + 1]]
                Qt, _, _ = quotient(top_sub,
                                    _restrict_inclusion(top_sub, top_incl,
                                                        nsub, nincl))
            else:
                Qt = top_sub
            if not is_isomorphic(Qt, ctx.injective(lab)):
                c_ok = False
    report["a_tilting_chain"] = a_ok
    report["c_injective_quotients"] = c_ok

    # (b) is the reject description used above; record it separately by
    # re-deriving T(i,j) independently from the universal-extension builder
    b_ok = all(is_isomorphic(ctx.tilting(v), chain_tails[v][0])
               for v in chain_tails)
    report["b_reject_formula"] = b_ok

    # (d)
    d_ok = True
    for v in range(ctx.n):
        if injective_dimension(ctx.basis, ctx.nabla(v)) > 1:
            d_ok = False
        rad, _ = radical(ctx.delta(v))
        if rad.total_dim and not delta_filtration(ctx, rad).verdict:
            d_ok = False
    for _ in range(samples):
        M = _random_delta_filtered(ctx, rng)
        sub, _ = _random_submodule(M, rng)
        if not delta_filtration(ctx, sub).verdict:
            d_ok = False
    report["d_submodule_closure"] = d_ok

    # (e) Ringel dual
    dualctx = ringel_dual(ctx)
    e_ok = True
    for ci, chain in enumerate(relabel.chains):
        top, end = chain[0], chain[-1]
        P1 = dualctx.projective_image(top)
        Tend = dualctx.tilting_image(end)
        if not is_isomorphic(P1, Tend):
            e_ok = False
        # T'(i,j) = P'(i,1)/P'(i,j+1) via the projective chain over the dual
        for k, lab in enumerate(chain):
            if k + 1 < len(chain):
                nxt = chain[k + 1]
                Pn = dualctx.projective_image(nxt)
                maps = hom_basis(Pn, P1)
                emb = _injective_map(maps)
                if emb is None:
                    e_ok = False
                    continue
                img, incl = _image_sub(emb)
                Qt, _, _ = quotient(P1, incl)
            else:
                Qt = P1
            if not is_isomorphic(Qt, dualctx.tilting_image(lab)):
                e_ok = False
        # costandard modules of the dual: uniserial with the radical chain
        for k, lab in enumerate(chain):
            j = k + 1
            nabd = dualctx.ctx.nabla(lab)
            layers, _ = radical_series(nabd)
            if len(layers) != j or any(sum(l) != 1 for l in layers):
                e_ok = False
    usq_op = check_usq(QHContext(_opposite_of(dualctx.ctx.basis),
                                 dualctx.ctx.poset, adaptedness="assumed"))
    e_ok = e_ok and usq_op["verdict"]
    report["e_ringel_dual"] = e_ok

    # (f) ADR-only items
    if ctx.adr_data is not None:
        from .modrep import random_module
        adr = ctx.adr_data
        f_ok = True
        for _ in range(samples):
            M = random_module(adr.algebra, rng)
            FM = adr.functor.module(M)
            if FM.total_dim and not delta_filtration(ctx, FM).verdict:
                f_ok = False
        f_ok = f_ok and _projective_sequences_hold(ctx, adr)
        report["f_adr_items"] = f_ok
    report["verdict"] = all(v for v in report.values() if isinstance(v, bool))
    return report


def _largest_submodule_below(ctx, M, v):
    """Largest submodule of M whose composition factors are <= v,
    as the joint kernel of all maps to injectives at other labels."""
    theta = [ctx.injective(j) for j in range(ctx.n) if not ctx.poset.leq(j, v)]
    from .modrep import reject
    if not theta:
        return M, ModuleMap.identity(M)
    return reject(M, theta)


def _restrict_inclusion(big_sub, big_incl, small_sub, small_incl):
    """Given small <= big <= M (both as inclusions into M), the induced
    inclusion of small into big."""
    blocks = []
    for v in range(len(big_sub.dims)):
        sol = big_incl.blocks[v].solve_matrix(small_incl.blocks[v])
        if sol is None:
            raise QHError("submodule is not contained in the larger one")
        blocks.append(sol)
    return ModuleMap(small_sub, big_sub, blocks, check=False)


def _injective_map(maps):
    """Some injective map in the span of the given hom basis, or None."""
    if not maps:
        return None
    for f in maps:
        if f.is_injective():
            return f
    acc = maps[0]
    for f in maps[1:]:
        acc = acc.add(f)
    return acc if acc.is_injective() else None


def _image_sub(fmap):
    from .modrep import image
    return image(fmap)


def _projective_sequences_hold(ctx, adr):
    """The exact sequences 0 -> Hom(G, rad X/rad^j) -> P -> rad^{j-1} P_1 -> 0
    relating projectives at (i, j) to the radical powers at (i, 1)."""
    from .modrep import image as im
    ok = True
    for u, (i, j) in enumerate(adr.labels):
        P_ij = ctx.projective(u)
        X = adr.summands[u]                       # P_i / rad^j P_i
        radX, _ = radical(X)
        FradX = adr.functor.module(radX)          # Hom(G, rad P_i / rad^j P_i)
        u1 = adr.vertex_of(i, 1)
        P_i1 = ctx.projective(u1)
        _, chain = radical_series(P_i1)
        radj, _ = chain[min(j - 1, len(chain) - 1)]
        if P_ij.total_dim != FradX.total_dim + radj.total_dim:
            ok = False
            continue
        # realize the epi P_{i,j} -> rad^{j-1} P_{i,1} and check its kernel
        found = False
        for f in hom_basis(P_ij, radj):
            if f.is_surjective():
                ker, _ = kernel(f)
                if ker.dims == FradX.dims and is_isomorphic(ker, FradX):
                    found = True
                    break
        ok = ok and found
    return ok
