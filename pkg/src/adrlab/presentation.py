"""Quivers, paths, admissible relations and normal-form bases.

A path stores its arrows in traversal order: the algebraic word
``b.a`` ("apply a, then b") is stored as the list ``[a, b]``.  The
algebra product ``x * y`` therefore concatenates ``y``'s arrows before
``x``'s ("apply y first"), matching left modules ``P_v = A.e_v`` whose
basis consists of the normal-form paths with source ``v``.
"""

import json
from fractions import Fraction

from .fields import Field

DEFAULT_MAX_PATH_LENGTH = 32


class PresentationError(ValueError):
    pass


class PossiblyInfiniteDimensional(PresentationError):
    """Raised when the degreewise basis search exceeds the length bound."""


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = list(vertices)
        self.arrows = [(name, int(s), int(t)) for name, s, t in arrows]
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex labels")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate arrow names")
        for name, s, t in self.arrows:
            if not (0 <= s < len(self.vertices) and 0 <= t < len(self.vertices)):
                raise PresentationError(f"arrow {name} has out-of-range endpoint")
        self.arrow_index = {a[0]: i for i, a in enumerate(self.arrows)}
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_arrows(self):
        return len(self.arrows)

    def source(self, arrow_idx):
        return self.arrows[arrow_idx][1]

    def target(self, arrow_idx):
        return self.arrows[arrow_idx][2]

    def arrows_from(self, v):
        return [i for i, a in enumerate(self.arrows) if a[1] == v]

    def arrows_into(self, v):
        return [i for i, a in enumerate(self.arrows) if a[2] == v]

    def opposite(self):
        return Quiver(self.vertices, [(name, t, s) for name, s, t in self.arrows])

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)


class Path:
    """A path in a quiver: source vertex plus arrows in traversal order."""

    __slots__ = ("source", "arrows")

    def __init__(self, source, arrows=()):
        self.source = source
        self.arrows = tuple(arrows)

    def key(self):
        return (self.source, self.arrows)

    def __len__(self):
        return len(self.arrows)

    def __eq__(self, other):
        return isinstance(other, Path) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Path({self.source}, {list(self.arrows)})"

    def target_in(self, quiver):
        return quiver.target(self.arrows[-1]) if self.arrows else self.source

    def is_valid_in(self, quiver):
        at = self.source
        for a in self.arrows:
            if not (0 <= a < quiver.n_arrows) or quiver.source(a) != at:
                return False
            at = quiver.target(a)
        return True

    def reversed_in(self, quiver):
        """The same walk in the opposite quiver."""
        return Path(self.target_in(quiver), tuple(reversed(self.arrows)))

    def order_key(self):
        return (len(self.arrows), self.source, self.arrows)


def path_mul(quiver, x, y):
    """Algebra product x*y (apply y first); None if not composable."""
    if x.source != y.target_in(quiver):
        return None
    return Path(y.source, y.arrows + x.arrows)


class Relation:
    """K-linear combination of parallel paths, each of length >= 2."""

    def __init__(self, terms):
        self.terms = [(c, p) for c, p in terms]
        if not self.terms:
            raise PresentationError("empty relation")

    def source(self):
        return self.terms[0][1].source

    def max_length(self):
        return max(len(p) for _, p in self.terms)

    def diagnostics(self, quiver):
        out = []
        for _, p in self.terms:
            if not p.is_valid_in(quiver):
                out.append(f"relation path {p!r} is not a valid walk")
        if out:
            return out
        src = {p.source for _, p in self.terms}
        tgt = {p.target_in(quiver) for _, p in self.terms}
        if len(src) > 1 or len(tgt) > 1:
            out.append("non-parallel paths in relation")
        for _, p in self.terms:
            if len(p) < 2:
                out.append(f"non-admissible relation: path {p!r} has length {len(p)} < 2")
        return out

    def reversed_in(self, quiver):
        return Relation([(c, p.reversed_in(quiver)) for c, p in self.terms])


class AlgebraPresentation:
    def __init__(self, field, quiver, relations, max_path_length=DEFAULT_MAX_PATH_LENGTH):
        self.field = field
        self.quiver = quiver
        self.relations = list(relations)
        self.max_path_length = max_path_length

    def validate(self):
        """List of diagnostics; empty means the presentation is well formed."""
        out = []
        for i, rel in enumerate(self.relations):
            for d in rel.diagnostics(self.quiver):
                out.append(f"relation {i}: {d}")
        return out

    def opposite(self):
        return AlgebraPresentation(
            self.field,
            self.quiver.opposite(),
            [r.reversed_in(self.quiver) for r in self.relations],
            self.max_path_length,
        )

    # -- JSON interchange ------------------------------------------------

    def to_json_dict(self):
        field = {"type": "rational"} if self.field.p == 0 else {"type": "prime", "p": self.field.p}
        return {
            "field": field,
            "quiver": {
                "vertices": list(self.quiver.vertices),
                "arrows": [
                    {"name": n, "from": self.quiver.vertices[s], "to": self.quiver.vertices[t]}
                    for n, s, t in self.quiver.arrows
                ],
            },
            "relations": [
                [
                    {"coef": str(c), "path": [self.quiver.arrows[a][0] for a in p.arrows]}
                    for c, p in rel.terms
                ]
                for rel in self.relations
            ],
        }

    @classmethod
    def from_json_dict(cls, obj, max_path_length=None):
        fobj = obj["field"]
        if fobj.get("type") == "rational":
            field = Field(0)
        elif fobj.get("type") == "prime":
            field = Field(int(fobj["p"]))
        else:
            raise PresentationError(f"unsupported field {fobj!r}")
        q = obj["quiver"]
        vidx = {v: i for i, v in enumerate(q["vertices"])}
        arrows = []
        for a in q["arrows"]:
            if a["from"] not in vidx or a["to"] not in vidx:
                raise PresentationError(f"arrow {a['name']} references unknown vertex")
            arrows.append((a["name"], vidx[a["from"]], vidx[a["to"]]))
        quiver = Quiver(q["vertices"], arrows)
        relations = []
        for rel in obj.get("relations", []):
            terms = []
            for term in rel:
                names = term["path"]
                if not names:
                    raise PresentationError("empty path in relation")
                idxs = [quiver.arrow_index[n] for n in names]
                path = Path(quiver.source(idxs[0]), idxs)
                terms.append((field.of(Fraction(str(term["coef"]))), path))
            relations.append(Relation(terms))
        kwargs = {}
        if max_path_length is not None:
            kwargs["max_path_length"] = max_path_length
        return cls(field, quiver, relations, **kwargs)

    @classmethod
    def from_json(cls, text, max_path_length=None):
        return cls.from_json_dict(json.loads(text), max_path_length=max_path_length)

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=1)


class _Reducer:
    """Triangular reduction system over paths of one (source, target) pair."""

    def __init__(self, field):
        self.field = field
        self.rows = {}  # leading path key -> dict path key -> coeff

    def reduce(self, vec):
        f = self.field
        vec = {k: c for k, c in vec.items() if c != f.zero}
        while True:
            reducible = [k for k in vec if k in self.rows]
            if not reducible:
                return vec
            k = max(reducible, key=_key_order)
            c = vec.pop(k)
            for k2, c2 in self.rows[k].items():
                if k2 == k:
                    continue
                new = f.sub(vec.get(k2, f.zero), f.mul(c, c2))
                if new == f.zero:
                    vec.pop(k2, None)
                else:
                    vec[k2] = new

    def insert(self, vec):
        """Reduce and, if nonzero, add as a new reduction row; returns the
        leading key or None."""
        f = self.field
        vec = self.reduce(vec)
        if not vec:
            return None
        lead = max(vec, key=_key_order)
        inv = f.inv(vec[lead])
        self.rows[lead] = {k: f.mul(inv, c) for k, c in vec.items()}
        return lead


def _key_order(k):
    source, arrows = k
    return (len(arrows), source, arrows)


class AlgebraBasis:
    """Normal-form path basis of KQ/I with lazy structure constants."""

    def __init__(self, presentation):
        diagnostics = presentation.validate()
        if diagnostics:
            raise PresentationError("; ".join(diagnostics))
        self.presentation = presentation
        self.field = presentation.field
        self.quiver = presentation.quiver
        self._reducers = {}
        self._build()
        self._product_cache = {}

    # -- construction ----------------------------------------------------

    def _reducer(self, s, t):
        key = (s, t)
        if key not in self._reducers:
            self._reducers[key] = _Reducer(self.field)
        return self._reducers[key]

    def _build(self):
        quiver = self.quiver
        trivial = [Path(v) for v in range(quiver.n_vertices)]
        arrows = [Path(quiver.source(a), (a,)) for a in range(quiver.n_arrows)]
        paths_by_deg = {0: trivial, 1: arrows}
        basis_by_deg = {0: trivial, 1: arrows}
        relations = self.presentation.relations
        max_len = self.presentation.max_path_length
        d = 1
        while True:
            d += 1
            if d > max_len:
                raise PossiblyInfiniteDimensional(
                    f"no stable basis within path length {max_len}; "
                    "the ideal may not be admissible")
            prev = paths_by_deg[d - 1]
            paths_d = []
            for p in prev:
                t = p.target_in(quiver)
                for a in quiver.arrows_from(t):
                    paths_d.append(Path(p.source, p.arrows + (a,)))
            paths_d.sort(key=Path.order_key)
            paths_by_deg[d] = paths_d
            # Span all ideal consequences whose leading degree is d.
            for rel in relations:
                m = rel.max_length()
                rel_src = rel.source()
                rel_tgt = rel.terms[0][1].target_in(quiver)
                for dq in range(0, d - m + 1):
                    dp = d - m - dq
                    for q in paths_by_deg.get(dq, []):
                        if q.target_in(quiver) != rel_src:
                            continue
                        for p in paths_by_deg.get(dp, []):
                            if p.source != rel_tgt:
                                continue
                            vec = {}
                            for c, term in rel.terms:
                                comb = Path(q.source, q.arrows + term.arrows + p.arrows)
                                vec[comb.key()] = self.field.add(
                                    vec.get(comb.key(), self.field.zero), c)
                            red = self._reducer(q.source, p.target_in(quiver))
                            red.insert(vec)
            new_basis = []
            for p in paths_d:
                red = self._reducer(p.source, p.target_in(quiver))
                if p.key() not in red.rows:
                    new_basis.append(p)
            if not new_basis:
                break
            basis_by_deg[d] = new_basis
        self._stop_degree = d
        self.basis = [p for dd in sorted(basis_by_deg) for p in
                      sorted(basis_by_deg[dd], key=Path.order_key)]
        self.basis_index = {p.key(): i for i, p in enumerate(self.basis)}
        self.idempotent_index = {v: self.basis_index[Path(v).key()]
                                 for v in range(self.quiver.n_vertices)}

    # -- queries ---------------------------------------------------------

    @property
    def dim(self):
        return len(self.basis)

    def path_target(self, p):
        return p.target_in(self.quiver)

    def basis_with_source(self, v):
        return [i for i, p in enumerate(self.basis) if p.source == v]

    def basis_with_target(self, v):
        return [i for i, p in enumerate(self.basis) if self.path_target(p) == v]

    def reduce_path(self, path):
        """Normal form of a single path as {basis index: coeff}."""
        if not path.is_valid_in(self.quiver):
            raise PresentationError(f"malformed path {path!r}")
        if len(path) >= self._stop_degree:
            return {}
        red = self._reducer(path.source, path.target_in(self.quiver))
        vec = red.reduce({path.key(): self.field.one})
        return {self.basis_index[k]: c for k, c in vec.items()}

    def normal_form(self, terms):
        """Normal form of a list of (coeff, Path) as {basis index: coeff}."""
        f = self.field
        out = {}
        for c, p in terms:
            for i, c2 in self.reduce_path(p).items():
                new = f.add(out.get(i, f.zero), f.mul(c, c2))
                if new == f.zero:
                    out.pop(i, None)
                else:
                    out[i] = new
        return out

    def product(self, i, j):
        """Structure constants of basis[i] * basis[j] (apply j first)."""
        key = (i, j)
        if key not in self._product_cache:
            x, y = self.basis[i], self.basis[j]
            prod = path_mul(self.quiver, x, y)
            self._product_cache[key] = {} if prod is None else self.reduce_path(prod)
        return self._product_cache[key]

    def structure_constants(self):
        return {(i, j): self.product(i, j)
                for i in range(self.dim) for j in range(self.dim)}

    def opposite_basis(self):
        return AlgebraBasis(self.presentation.opposite())
