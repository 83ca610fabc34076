"""Quiver representations (right modules), morphisms, and decompositions."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    InvalidRepresentation,
    NonSplit,
    NonSplitEndomorphismRing,
)
from .linalg import Mat, SpanTracker, col_space, hstack, inverse, is_invertible, kernel_basis, solve, vstack


class Representation:
    """A right module: vector space dims per vertex plus arrow matrices.

    Arrow matrices act on column vectors, shape dim(target) x dim(source).
    Instances are immutable after construction; relations of the algebra
    are verified to evaluate to zero.
    """

    def __init__(self, algebra, dims, mats, summands=None, check=True):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        q = algebra.quiver
        if len(self.dims) != q.n_vertices:
            raise InvalidRepresentation("dimension vector has wrong length")
        mats = tuple(mats)
        if len(mats) != q.n_arrows:
            raise InvalidRepresentation("need one matrix per arrow")
        for a, m in enumerate(mats):
            if m.rows != self.dims[q.arrow_tgt[a]] or m.cols != self.dims[q.arrow_src[a]]:
                raise InvalidRepresentation(
                    "matrix for arrow %s has shape %dx%d, expected %dx%d"
                    % (q.arrow_names[a], m.rows, m.cols, self.dims[q.arrow_tgt[a]], self.dims[q.arrow_src[a]])
                )
        self.mats = mats
        self.summands = summands
        if check:
            self._check_relations()

    def _check_relations(self):
        f = self.algebra.field
        for rel in self.algebra.relations:
            start = rel[0][1].start
            end = rel[0][1].end(self.algebra.quiver)
            acc = Mat.zeros(f, self.dims[end], self.dims[start])
            for (s, p) in rel:
                acc = acc.add(path_action(self, p).scale(s))
            if not acc.is_zero():
                raise InvalidRepresentation("relation does not vanish on the representation")

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def __repr__(self):
        return "Representation(dims=%s)" % (self.dims,)


def path_action(rep: Representation, p) -> Mat:
    """Matrix of the path acting on rep (first arrow applied first)."""
    q = rep.algebra.quiver
    m = Mat.identity(rep.algebra.field, rep.dims[p.start])
    for a in p.arrows:
        m = rep.mats[a].mul(m)
    return m


@dataclass(frozen=True)
class ModuleMorphism:
    source: Representation
    target: Representation
    mats: tuple

    def __post_init__(self):
        for v in range(len(self.source.dims)):
            m = self.mats[v]
            if m.rows != self.target.dims[v] or m.cols != self.source.dims[v]:
                raise DimensionMismatch("morphism matrix shape mismatch at vertex %d" % v)

    def check(self):
        q = self.source.algebra.quiver
        for a in range(q.n_arrows):
            i, j = q.arrow_src[a], q.arrow_tgt[a]
            lhs = self.mats[j].mul(self.source.mats[a])
            rhs = self.target.mats[a].mul(self.mats[i])
            if not lhs.eq(rhs):
                raise InvalidRepresentation("morphism does not commute with arrow %s" % q.arrow_names[a])
        return self

    def is_zero(self):
        return all(m.is_zero() for m in self.mats)

    def __repr__(self):
        return "ModuleMorphism(%s -> %s)" % (self.source.dims, self.target.dims)


def zero_rep(alg) -> Representation:
    q = alg.quiver
    dims = (0,) * q.n_vertices
    mats = [Mat.zeros(alg.field, 0, 0) for _ in range(q.n_arrows)]
    return Representation(alg, dims, mats, check=False)


def identity_morphism(m: Representation) -> ModuleMorphism:
    f = m.algebra.field
    return ModuleMorphism(m, m, tuple(Mat.identity(f, d) for d in m.dims))


def zero_morphism(src: Representation, dst: Representation) -> ModuleMorphism:
    f = src.algebra.field
    return ModuleMorphism(src, dst, tuple(Mat.zeros(f, dst.dims[v], src.dims[v]) for v in range(len(src.dims))))


def compose(g: ModuleMorphism, f: ModuleMorphism) -> ModuleMorphism:
    """g after f."""
    if f.target is not g.source and f.target.dims != g.source.dims:
        raise DimensionMismatch("composition mismatch")
    return ModuleMorphism(f.source, g.target, tuple(g.mats[v].mul(f.mats[v]) for v in range(len(f.mats))))


def morphism_add(f: ModuleMorphism, g: ModuleMorphism) -> ModuleMorphism:
    return ModuleMorphism(f.source, f.target, tuple(a.add(b) for a, b in zip(f.mats, g.mats)))


def morphism_scale(s, f: ModuleMorphism) -> ModuleMorphism:
    return ModuleMorphism(f.source, f.target, tuple(m.scale(s) for m in f.mats))


def morphism_combo(fld, basis, coeffs, source, target) -> ModuleMorphism:
    out = zero_morphism(source, target)
    for c, b in zip(coeffs, basis):
        if c != fld.zero:
            out = morphism_add(out, morphism_scale(c, b))
    return out


def morphism_flat(f: ModuleMorphism):
    vec = []
    for m in f.mats:
        vec.extend(m.entries)
    return tuple(vec)


def morphism_from_flat(source, target, vec) -> ModuleMorphism:
    fld = source.algebra.field
    mats = []
    pos = 0
    for v in range(len(source.dims)):
        r, c = target.dims[v], source.dims[v]
        mats.append(Mat(fld, r, c, tuple(vec[pos : pos + r * c])))
        pos += r * c
    return ModuleMorphism(source, target, tuple(mats))


def morphism_is_invertible(f: ModuleMorphism) -> bool:
    return all(is_invertible(m) for m in f.mats)


def morphism_inverse(f: ModuleMorphism) -> ModuleMorphism:
    return ModuleMorphism(f.target, f.source, tuple(inverse(m) for m in f.mats))


# -- canonical modules -------------------------------------------------------


def projective_paths(alg, v):
    """P(v) together with its per-vertex lists of basis paths."""
    q = alg.quiver
    vi = q.vindex[str(v)] if not isinstance(v, int) else v
    f = alg.field
    local = [[] for _ in range(q.n_vertices)]  # per end vertex: global basis idx
    for i in alg.basis_from[vi]:
        local[alg.basis[i].end(q)].append(i)
    dims = [len(L) for L in local]
    pos = {}
    for c, L in enumerate(local):
        for k, i in enumerate(L):
            pos[i] = (c, k)
    mats = []
    for a in range(q.n_arrows):
        i, j = q.arrow_src[a], q.arrow_tgt[a]
        cols = []
        for bidx in local[i]:
            coords = alg.path_times_arrow(bidx, a)
            col = [f.zero] * dims[j]
            for gidx, cval in enumerate(coords):
                if cval != f.zero:
                    cvert, ck = pos[gidx]
                    if cvert != j:
                        raise InvalidRepresentation("path product left the expected vertex")
                    col[ck] = cval
            cols.append(col)
        ent = tuple(cols[c][r] for r in range(dims[j]) for c in range(len(cols)))
        mats.append(Mat(f, dims[j], dims[i], ent))
    rep = Representation(alg, dims, mats)
    plists = tuple(tuple(alg.basis[i] for i in L) for L in local)
    return rep, plists


def projective_at(alg, v) -> Representation:
    """P(v) = paths starting at v, with the right action of arrows."""
    return projective_paths(alg, v)[0]


def injective_at(alg, v) -> Representation:
    """I(v), the dual of the opposite-algebra projective at v."""
    q = alg.quiver
    vi = q.vindex[str(v)] if not isinstance(v, int) else v
    pop = projective_at(alg.opposite, vi)
    mats = [pop.mats[a].transpose() for a in range(q.n_arrows)]
    return Representation(alg, pop.dims, mats)


def simple_at(alg, v) -> Representation:
    q = alg.quiver
    vi = q.vindex[str(v)] if not isinstance(v, int) else v
    dims = [1 if u == vi else 0 for u in range(q.n_vertices)]
    mats = [
        Mat.zeros(alg.field, dims[q.arrow_tgt[a]], dims[q.arrow_src[a]])
        for a in range(q.n_arrows)
    ]
    return Representation(alg, dims, mats, check=False)


def dual_module(m: Representation) -> Representation:
    """The dual as a module over the opposite algebra."""
    op = m.algebra.opposite
    mats = [m.mats[a].transpose() for a in range(len(m.mats))]
    return Representation(op, m.dims, mats, check=False)


def dual_morphism(f: ModuleMorphism) -> ModuleMorphism:
    return ModuleMorphism(dual_module(f.target), dual_module(f.source), tuple(m.transpose() for m in f.mats))


# -- hom spaces ---------------------------------------------------------------


def hom_basis(m: Representation, n: Representation):
    """A basis of Hom(m, n) from the commuting-square linear system."""
    if m.algebra is not n.algebra:
        raise DimensionMismatch("modules over different algebras")
    f = m.algebra.field
    q = m.algebra.quiver
    nv = q.n_vertices
    off = []
    total = 0
    for v in range(nv):
        off.append(total)
        total += n.dims[v] * m.dims[v]
    rows = []
    z = f.zero
    for a in range(q.n_arrows):
        i, j = q.arrow_src[a], q.arrow_tgt[a]
        Ma, Na = m.mats[a], n.mats[a]
        for r in range(n.dims[j]):
            for c in range(m.dims[i]):
                row = [z] * total
                # (f_j * Ma)[r,c] = sum_k f_j[r,k] Ma[k,c]
                for k in range(m.dims[j]):
                    val = Ma.at(k, c)
                    if val != z:
                        row[off[j] + r * m.dims[j] + k] = f.add(row[off[j] + r * m.dims[j] + k], val)
                # -(Na * f_i)[r,c] = -sum_l Na[r,l] f_i[l,c]
                for l in range(n.dims[i]):
                    val = Na.at(r, l)
                    if val != z:
                        idx = off[i] + l * m.dims[i] + c
                        row[idx] = f.sub(row[idx], val)
                if any(x != z for x in row):
                    rows.append(row)
    if total == 0:
        return []
    if not rows:
        ker = Mat.identity(f, total)
    else:
        ker = kernel_basis(Mat.from_rows(f, rows))
    out = []
    for jcol in range(ker.cols):
        out.append(morphism_from_flat(m, n, ker.col(jcol)))
    return out


def hom_dim(m, n) -> int:
    return len(hom_basis(m, n))


# -- constructions ------------------------------------------------------------


def subrep_from_bases(m: Representation, bases):
    """Subrepresentation spanned by the given per-vertex column bases."""
    f = m.algebra.field
    q = m.algebra.quiver
    dims = [b.cols for b in bases]
    mats = []
    for a in range(q.n_arrows):
        i, j = q.arrow_src[a], q.arrow_tgt[a]
        img = m.mats[a].mul(bases[i])
        x = solve(bases[j], img)
        if x is None:
            raise InvalidRepresentation("subspace is not arrow invariant")
        mats.append(x)
    sub = Representation(m.algebra, dims, mats)
    incl = ModuleMorphism(sub, m, tuple(bases))
    return sub, incl


def kernel_of(f: ModuleMorphism):
    bases = [kernel_basis(m) for m in f.mats]
    return subrep_from_bases(f.source, bases)


def image_of(f: ModuleMorphism):
    bases = [col_space(m) for m in f.mats]
    return subrep_from_bases(f.target, bases)


def cokernel_of(f: ModuleMorphism):
    rep, proj, _ = cokernel_with_section(f)
    return rep, proj


def cokernel_with_section(f: ModuleMorphism):
    """Cokernel plus a linear section of the projection (not a morphism)."""
    fld = f.source.algebra.field
    q = f.source.algebra.quiver
    n = f.target
    projs = []
    sections = []
    dims = []
    for v in range(len(n.dims)):
        b = col_space(f.mats[v])
        r = b.cols
        d = n.dims[v]
        t = _extend_basis_cols(fld, b, d)
        tinv = inverse(t) if d else Mat.zeros(fld, 0, 0)
        # projection: last d-r rows of t^{-1}; section: last d-r columns of t
        pent = tuple(tinv.entries[(r + i) * d + j] for i in range(d - r) for j in range(d))
        projs.append(Mat(fld, d - r, d, pent))
        sent = tuple(t.entries[i * d + (r + j)] for i in range(d) for j in range(d - r))
        sections.append(Mat(fld, d, d - r, sent))
        dims.append(d - r)
    mats = []
    for a in range(q.n_arrows):
        i, j = q.arrow_src[a], q.arrow_tgt[a]
        mats.append(projs[j].mul(n.mats[a]).mul(sections[i]))
    cok = Representation(f.source.algebra, dims, mats)
    proj = ModuleMorphism(n, cok, tuple(projs)).check()
    return cok, proj, tuple(sections)


def _extend_basis_cols(fld, b: Mat, d: int) -> Mat:
    tracker = SpanTracker(fld, d)
    cols = [b.col(j) for j in range(b.cols)]
    for c in cols:
        tracker.add(c)
    z, o = fld.zero, fld.one
    for k in range(d):
        if tracker.dim == d:
            break
        vec = [z] * d
        vec[k] = o
        if tracker.add(vec):
            cols.append(tuple(vec))
    ent = tuple(cols[j][i] for i in range(d) for j in range(d))
    return Mat(fld, d, d, ent)


def direct_sum(alg, reps):
    """Block-diagonal direct sum; remembers the summand list."""
    reps = list(reps)
    for r in reps:
        if r.algebra is not alg:
            raise DimensionMismatch("direct sum over mixed algebras")
    q = alg.quiver
    if not reps:
        return zero_rep(alg)
    dims = [sum(r.dims[v] for r in reps) for v in range(q.n_vertices)]
    from .linalg import block_diag

    mats = [block_diag(alg.field, [r.mats[a] for r in reps]) for a in range(q.n_arrows)]
    return Representation(alg, dims, mats, summands=tuple(reps))


def summand_inclusion(total: Representation, reps, k) -> ModuleMorphism:
    fld = total.algebra.field
    mats = []
    for v in range(len(total.dims)):
        before = sum(r.dims[v] for r in reps[:k])
        dk = reps[k].dims[v]
        m = [[fld.zero] * dk for _ in range(total.dims[v])]
        for t in range(dk):
            m[before + t][t] = fld.one
        mats.append(Mat.from_rows(fld, m) if total.dims[v] else Mat.zeros(fld, 0, dk))
    return ModuleMorphism(reps[k], total, tuple(mats))


def summand_projection(total: Representation, reps, k) -> ModuleMorphism:
    fld = total.algebra.field
    mats = []
    for v in range(len(total.dims)):
        before = sum(r.dims[v] for r in reps[:k])
        dk = reps[k].dims[v]
        m = [[fld.zero] * total.dims[v] for _ in range(dk)]
        for t in range(dk):
            m[t][before + t] = fld.one
        mats.append(Mat.from_rows(fld, m) if dk else Mat.zeros(fld, 0, total.dims[v]))
    return ModuleMorphism(total, reps[k], tuple(mats))


def radical_of(m: Representation):
    """Sum of images of all arrow maps, as a subrepresentation."""
    fld = m.algebra.field
    q = m.algebra.quiver
    bases = []
    for v in range(q.n_vertices):
        incoming = [m.mats[a] for a in range(q.n_arrows) if q.arrow_tgt[a] == v]
        if incoming:
            bases.append(col_space(hstack(fld, incoming, rows=m.dims[v])))
        else:
            bases.append(Mat.zeros(fld, m.dims[v], 0))
    return subrep_from_bases(m, bases)


def socle_of(m: Representation):
    """Joint kernel of all arrow maps, as a subrepresentation."""
    fld = m.algebra.field
    q = m.algebra.quiver
    bases = []
    for v in range(q.n_vertices):
        outgoing = [m.mats[a] for a in range(q.n_arrows) if q.arrow_src[a] == v]
        if outgoing:
            bases.append(kernel_basis(vstack(fld, outgoing, cols=m.dims[v])))
        else:
            bases.append(Mat.identity(fld, m.dims[v]))
    return subrep_from_bases(m, bases)


def top_of(m: Representation):
    """m / rad m together with the projection."""
    _, incl = radical_of(m)
    return cokernel_of(incl)


# -- decomposition ------------------------------------------------------------


def endomorphism_idempotents(m: Representation):
    """Complete orthogonal primitive idempotents of End(m), as morphisms."""
    from .endo import endomorphism_algebra, primitive_idempotents

    if m.is_zero():
        return []
    g = endomorphism_algebra(m)
    try:
        idems = primitive_idempotents(g)
    except NonSplit as exc:
        raise NonSplitEndomorphismRing(str(exc)) from exc
    fld = m.algebra.field
    return [morphism_combo(fld, g.labels, coords, m, m) for coords in idems]


def indecomposable_summands(m: Representation):
    """The indecomposable pieces of m, in a deterministic order."""
    if m.is_zero():
        return []
    pieces = []
    for e in endomorphism_idempotents(m):
        piece, _ = image_of(e)
        pieces.append(piece)
    if sum(p.total_dim for p in pieces) != m.total_dim:
        raise NonSplitEndomorphismRing("idempotent images do not exhaust the module")
    return pieces


@dataclass
class Decomposition:
    pieces: list          # list of (Representation, multiplicity)
    idempotents: list     # splitting idempotents as ModuleMorphisms

    @property
    def summand_count(self):
        return sum(mult for _, mult in self.pieces)


def decompose(m: Representation) -> Decomposition:
    idems = endomorphism_idempotents(m)
    raw = [image_of(e)[0] for e in idems]
    grouped = []
    for p in raw:
        for k, (q0, mult) in enumerate(grouped):
            if indec_isomorphic(p, q0):
                grouped[k] = (q0, mult + 1)
                break
        else:
            grouped.append((p, 1))
    return Decomposition(grouped, idems)


def indec_isomorphic(x: Representation, y: Representation) -> bool:
    """Isomorphism test for modules with local endomorphism rings."""
    if x.dims != y.dims:
        return False
    if x.total_dim == 0:
        return True
    fwd = hom_basis(x, y)
    if not fwd:
        return False
    bwd = hom_basis(y, x)
    for f in fwd:
        for g in bwd:
            if morphism_is_invertible(compose(g, f)):
                return True
    return False


def is_isomorphic(m: Representation, n: Representation) -> bool:
    if m.algebra is not n.algebra:
        raise DimensionMismatch("modules over different algebras")
    if m.dims != n.dims:
        return False
    if m.total_dim == 0:
        return True
    left = indecomposable_summands(m)
    right = list(indecomposable_summands(n))
    if len(left) != len(right):
        return False
    for p in left:
        for k, q0 in enumerate(right):
            if indec_isomorphic(p, q0):
                right.pop(k)
                break
        else:
            return False
    return True
