"""Covers, syzygies, translates, extensions, and minimal approximations."""
from __future__ import annotations

from dataclasses import dataclass

from .dims import DimValue
from .errors import VerificationFailed, ZProjective
from .linalg import Mat, SpanTracker, rank, solve, vstack
from .modules import (
    ModuleMorphism,
    Representation,
    cokernel_of,
    cokernel_with_section,
    compose,
    direct_sum,
    dual_module,
    dual_morphism,
    hom_basis,
    identity_morphism,
    image_of,
    indec_isomorphic,
    indecomposable_summands,
    kernel_of,
    morphism_add,
    morphism_combo,
    morphism_flat,
    morphism_scale,
    path_action,
    projective_at,
    projective_paths,
    radical_of,
    zero_morphism,
    zero_rep,
)


@dataclass(frozen=True)
class ShortExactSequence:
    """0 -> X -> E -> Z -> 0 given by the two middle morphisms."""

    left: ModuleMorphism   # X -> E, mono
    right: ModuleMorphism  # E -> Z, epi

    @property
    def middle(self):
        return self.left.target

    def verify(self):
        x, e, z = self.left.source, self.middle, self.right.source
        if self.right.source is not e:
            raise VerificationFailed("sequence maps do not share the middle term")
        for v in range(len(e.dims)):
            if e.dims[v] != x.dims[v] + self.right.target.dims[v]:
                raise VerificationFailed("middle term dimensions are off")
            if rank(self.left.mats[v]) != x.dims[v]:
                raise VerificationFailed("left map is not mono")
            if rank(self.right.mats[v]) != self.right.target.dims[v]:
                raise VerificationFailed("right map is not epi")
            if not self.right.mats[v].mul(self.left.mats[v]).is_zero():
                raise VerificationFailed("composite is nonzero")
        return self


# -- covers and envelopes ------------------------------------------------------


def _cover_data(m: Representation):
    """Projective cover as (morphism, list of summand vertices)."""
    alg = m.algebra
    fld = alg.field
    q = alg.quiver
    rad, incl = radical_of(m)
    gens = []  # (vertex, generator column)
    for v in range(q.n_vertices):
        tracker = SpanTracker(fld, m.dims[v])
        b = incl.mats[v]
        for j in range(b.cols):
            tracker.add(b.col(j))
        z, o = fld.zero, fld.one
        for k in range(m.dims[v]):
            vec = [z] * m.dims[v]
            vec[k] = o
            if tracker.add(vec):
                gens.append((v, tuple(vec)))
    parts = []
    paths = []
    for (v, _) in gens:
        p, plists = projective_paths(alg, v)
        parts.append(p)
        paths.append(plists)
    p0 = direct_sum(alg, parts)
    mats = []
    for c in range(q.n_vertices):
        cols = []
        for idx, (v, w) in enumerate(gens):
            for pth in paths[idx][c]:
                cols.append(path_action(m, pth).apply(w))
        ent = tuple(cols[j][i] for i in range(m.dims[c]) for j in range(len(cols)))
        mats.append(Mat(fld, m.dims[c], p0.dims[c], ent))
    f = ModuleMorphism(p0, m, tuple(mats)).check()
    for v in range(q.n_vertices):
        if rank(f.mats[v]) != m.dims[v]:
            raise VerificationFailed("projective cover is not surjective")
    return f, [v for (v, _) in gens], paths


def projective_cover(m: Representation) -> ModuleMorphism:
    """The epi P0(m) -> m lifting a basis of the top."""
    return _cover_data(m)[0]


def injective_envelope(m: Representation) -> ModuleMorphism:
    """The mono m -> I0(m), computed through the dual cover."""
    dm = dual_module(m)
    pi = projective_cover(dm)
    env = dual_morphism(pi)  # dual(dm) -> dual(P0)
    return ModuleMorphism(m, env.target, env.mats).check()


def syzygy(m: Representation, k: int = 1) -> Representation:
    cur = m
    for _ in range(k):
        cur = kernel_of(projective_cover(cur))[0]
    return cur


def cosyzygy(m: Representation, k: int = 1) -> Representation:
    cur = m
    for _ in range(k):
        cur = cokernel_of(injective_envelope(cur))[0]
    return cur


class _PieceRegistry:
    """Canonical indices for indecomposables seen while iterating syzygies."""

    def __init__(self):
        self.items = []

    def key(self, rep: Representation):
        pieces = indecomposable_summands(rep)
        out = []
        for p in pieces:
            for i, q0 in enumerate(self.items):
                if indec_isomorphic(p, q0):
                    out.append(i)
                    break
            else:
                self.items.append(p)
                out.append(len(self.items) - 1)
        return tuple(sorted(out))


def proj_dim(m: Representation, bound: int | None = None) -> DimValue:
    """Projective dimension with an isomorphism-cycle certificate for infinity."""
    if bound is None:
        bound = 2 * m.algebra.dim
    if m.is_zero():
        return DimValue.finite(0)
    reg = _PieceRegistry()
    seen = {}
    cur = m
    seen[reg.key(cur)] = 0
    for i in range(1, bound + 1):
        cur = kernel_of(projective_cover(cur))[0]
        if cur.is_zero():
            return DimValue.finite(i - 1)
        k = reg.key(cur)
        if k in seen:
            return DimValue.infinite()
        seen[k] = i
    return DimValue.at_least(bound)


def inj_dim(m: Representation, bound: int | None = None) -> DimValue:
    if m.is_zero():
        return DimValue.finite(0)
    return proj_dim(dual_module(m), bound)


# -- transpose and translates ---------------------------------------------------


def left_mult_hom(alg, a_vertex: int, b_vertex: int, combo):
    """Left multiplication P(b) -> P(a) by an element of e_a A e_b.

    combo is a list of (coeff, Path from a_vertex to b_vertex).
    """
    fld = alg.field
    q = alg.quiver
    pa, pa_paths = projective_paths(alg, a_vertex)
    pb, pb_paths = projective_paths(alg, b_vertex)
    pos_a = {}
    for c in range(q.n_vertices):
        for k, pth in enumerate(pa_paths[c]):
            pos_a[alg.basis_index[pth.key()]] = (c, k)
    mats = []
    for c in range(q.n_vertices):
        cols = []
        for qpath in pb_paths[c]:
            acc = [fld.zero] * pa.dims[c]
            for (s, ppath) in combo:
                if s == fld.zero:
                    continue
                from .algebra import Path

                prod = Path(ppath.start, ppath.arrows + qpath.arrows)
                coords = alg.reduce_path(prod)
                for gidx, cval in enumerate(coords):
                    if cval != fld.zero:
                        cv, ck = pos_a[gidx]
                        if cv != c:
                            raise VerificationFailed("product landed at the wrong vertex")
                        acc[ck] = fld.add(acc[ck], fld.mul(s, cval))
            cols.append(acc)
        ent = tuple(cols[j][i] for i in range(pa.dims[c]) for j in range(len(cols)))
        mats.append(Mat(fld, pa.dims[c], pb.dims[c], ent))
    return ModuleMorphism(pb, pa, tuple(mats)).check()


def _assemble_blocks(alg, src_parts, dst_parts, blocks):
    """Morphism between direct sums from a dict (i_dst, j_src) -> morphism."""
    fld = alg.field
    q = alg.quiver
    src = direct_sum(alg, src_parts)
    dst = direct_sum(alg, dst_parts)
    mats = []
    for v in range(q.n_vertices):
        rows_total = dst.dims[v]
        cols_total = src.dims[v]
        z = fld.zero
        grid = [[z] * cols_total for _ in range(rows_total)]
        r0 = 0
        for i, dp in enumerate(dst_parts):
            c0 = 0
            for j, sp in enumerate(src_parts):
                blk = blocks.get((i, j))
                if blk is not None:
                    bm = blk.mats[v]
                    for r in range(bm.rows):
                        for c in range(bm.cols):
                            grid[r0 + r][c0 + c] = bm.at(r, c)
                c0 += sp.dims[v]
            r0 += dp.dims[v]
        ent = tuple(grid[i][j] for i in range(rows_total) for j in range(cols_total))
        mats.append(Mat(fld, rows_total, cols_total, ent))
    return ModuleMorphism(src, dst, tuple(mats)).check(), src, dst


def transpose(m: Representation) -> Representation:
    """Tr m over the opposite algebra, from a minimal projective presentation."""
    from .algebra import Path

    alg = m.algebra
    op = alg.opposite
    if m.is_zero():
        return zero_rep(op)
    cover0, verts0, paths0 = _cover_data(m)
    k0, incl = kernel_of(cover0)
    if k0.is_zero():
        return zero_rep(op)
    cover1, verts1, paths1 = _cover_data(k0)
    g = compose(incl, cover1)  # P1 -> P0
    p0, p1 = cover0.source, cover1.source

    # row offsets of each P0 summand and column offsets of each P1 summand
    def offsets(verts, paths):
        offs = []
        for v in range(alg.quiver.n_vertices):
            acc = []
            run = 0
            for idx in range(len(verts)):
                acc.append(run)
                run += len(paths[idx][v])
            offs.append(acc)
        return offs

    off0 = offsets(verts0, paths0)
    off1 = offsets(verts1, paths1)
    blocks = {}
    for l, a_l in enumerate(verts1):
        # column of the stationary path e_{a_l} inside summand l at vertex a_l
        stat = Path(a_l, ())
        col_local = None
        for k, pth in enumerate(paths1[l][a_l]):
            if pth.key() == stat.key():
                col_local = k
                break
        if col_local is None:
            raise VerificationFailed("stationary path missing from projective basis")
        col = off1[a_l][l] + col_local
        for mdx, b_m in enumerate(verts0):
            combo = []
            for k, pth in enumerate(paths0[mdx][a_l]):
                coeff = g.mats[a_l].at(off0[a_l][mdx] + k, col)
                if coeff != alg.field.zero:
                    combo.append((coeff, pth))
            if not combo:
                continue
            rev = [(c, Path(p.end(alg.quiver), tuple(reversed(p.arrows)))) for (c, p) in combo]
            blocks[(l, mdx)] = left_mult_hom(op, a_l, b_m, rev)
    src_parts = [projective_at(op, v) for v in verts0]
    dst_parts = [projective_at(op, v) for v in verts1]
    gstar, _, _ = _assemble_blocks(op, src_parts, dst_parts, blocks)
    return cokernel_of(gstar)[0]


def ar_translate(m: Representation) -> Representation:
    """tau = D Tr; projectives go to zero."""
    return dual_module(transpose(m))


def ar_translate_inv(m: Representation) -> Representation:
    """tau^{-1} = Tr D; injectives go to zero."""
    return transpose(dual_module(m))


# -- extensions -----------------------------------------------------------------


def ext1_dim(m: Representation, n: Representation) -> int:
    """dim Ext^1(m, n) = Hom(Omega m, n) modulo maps factoring through P0(m)."""
    cover = projective_cover(m)
    k0, incl = kernel_of(cover)
    if k0.is_zero():
        return 0
    hk = hom_basis(k0, n)
    if not hk:
        return 0
    fld = m.algebra.field
    width = len(morphism_flat(hk[0]))
    factor = SpanTracker(fld, width)
    for gmor in hom_basis(cover.source, n):
        factor.add(morphism_flat(compose(gmor, incl)))
    count = 0
    quot = SpanTracker(fld, width)
    for h in hk:
        res = factor.reduce(morphism_flat(h))
        if quot.add(res):
            count += 1
    return count


def _lift_endo_through_cover(cover: ModuleMorphism, phi: ModuleMorphism) -> ModuleMorphism:
    """phi0: P0 -> P0 with cover . phi0 = phi . cover."""
    p0 = cover.source
    fld = p0.algebra.field
    basis = hom_basis(p0, p0)
    target = morphism_flat(compose(phi, cover))
    cols = [morphism_flat(compose(cover, b)) for b in basis]
    a = Mat(fld, len(target), len(basis), tuple(cols[j][i] for i in range(len(target)) for j in range(len(basis))))
    x = solve(a, Mat.column(fld, target))
    if x is None:
        raise VerificationFailed("endomorphism does not lift through the cover")
    return morphism_combo(fld, basis, x.col(0), p0, p0)


def _restrict_to_kernel(incl: ModuleMorphism, phi0: ModuleMorphism) -> ModuleMorphism:
    """psi: K -> K with incl . psi = phi0 . incl."""
    k0 = incl.source
    fld = k0.algebra.field
    mats = []
    for v in range(len(k0.dims)):
        rhs = phi0.mats[v].mul(incl.mats[v])
        x = solve(incl.mats[v], rhs)
        if x is None:
            raise VerificationFailed("kernel is not preserved by the lift")
        mats.append(x)
    return ModuleMorphism(k0, k0, tuple(mats)).check()


def almost_split_sequence(z: Representation, catalog=None) -> ShortExactSequence:
    """The sequence 0 -> tau z -> E -> z -> 0 for indecomposable non-projective z.

    When a catalog is supplied, the almost-split property is verified by
    lifting every radical morphism into z through the right-hand map.
    """
    from .endo import algebra_radical, endomorphism_algebra

    alg = z.algebra
    fld = alg.field
    nv = alg.quiver.n_vertices
    for v in range(nv):
        if indec_isomorphic(z, projective_at(alg, v)):
            raise ZProjective("almost split sequence requested for a projective module")
    tz = ar_translate(z)
    if tz.is_zero():
        raise VerificationFailed("translate of a non-projective module vanished")
    cover = projective_cover(z)
    k0, incl = kernel_of(cover)
    hk = hom_basis(k0, tz)
    if not hk:
        raise VerificationFailed("no extension cocycles available")
    width = len(morphism_flat(hk[0]))
    factor = SpanTracker(fld, width)
    for gmor in hom_basis(cover.source, tz):
        factor.add(morphism_flat(compose(gmor, incl)))
    reps = []
    quot = SpanTracker(fld, width, track=True)
    for h in hk:
        res = factor.reduce(morphism_flat(h))
        if quot.coords(res) is None:
            quot.add(res)
            reps.append(h)
    if not reps:
        raise VerificationFailed("Ext^1(z, tau z) vanished")

    endo = endomorphism_algebra(z)
    rad = algebra_radical(endo)
    if rad:
        action_rows = []
        for rvec in rad:
            phi = morphism_combo(fld, endo.labels, rvec, z, z)
            phi0 = _lift_endo_through_cover(cover, phi)
            psi = _restrict_to_kernel(incl, phi0)
            cols = []
            for h in reps:
                res = factor.reduce(morphism_flat(compose(h, psi)))
                coords = quot.coords(res)
                if coords is None:
                    raise VerificationFailed("radical action left the extension space")
                cols.append(coords)
            k = len(reps)
            ent = tuple(cols[j][i] for i in range(k) for j in range(k))
            action_rows.append(Mat(fld, k, k, ent))
        from .linalg import kernel_basis as _kb

        stacked = vstack(fld, action_rows, cols=len(reps))
        soc = _kb(stacked)
        if soc.cols == 0:
            raise VerificationFailed("socle of the extension space is empty")
        coeffs = soc.col(0)
    else:
        coeffs = tuple(fld.one if i == 0 else fld.zero for i in range(len(reps)))
    hstar = zero_morphism(k0, tz)
    for c, h in zip(coeffs, reps):
        if c != fld.zero:
            hstar = morphism_add(hstar, morphism_scale(c, h))

    # pushout: E = (tz + P0) / (hstar, -incl)(K)
    p0 = cover.source
    umats = []
    for v in range(nv):
        umats.append(vstack(fld, [hstar.mats[v], incl.mats[v].neg()], cols=k0.dims[v]))
    big = direct_sum(alg, [tz, p0])
    u = ModuleMorphism(k0, big, tuple(umats)).check()
    e_rep, proj, sections = cokernel_with_section(u)
    amats = []
    bmats = []
    for v in range(nv):
        amats.append(proj.mats[v].mul(_inclusion_block(fld, tz.dims[v], p0.dims[v], True)))
        zero_pi = _zero_pi_block(fld, cover.mats[v], tz.dims[v])
        bmats.append(zero_pi.mul(sections[v]))
    a = ModuleMorphism(tz, e_rep, tuple(amats)).check()
    b = ModuleMorphism(e_rep, z, tuple(bmats)).check()
    for v in range(nv):
        zero_pi = _zero_pi_block(fld, cover.mats[v], tz.dims[v])
        if not b.mats[v].mul(proj.mats[v]).eq(zero_pi):
            raise VerificationFailed("right map does not factor the quotient")
    seq = ShortExactSequence(a, b).verify()

    if catalog is not None:
        _verify_almost_split(seq, z, endo, rad, catalog)
    return seq


def _inclusion_block(fld, top, bottom, into_top):
    rows = top + bottom
    cols = top if into_top else bottom
    z, o = fld.zero, fld.one
    ent = [z] * (rows * cols)
    off = 0 if into_top else top
    for j in range(cols):
        ent[(off + j) * cols + j] = o
    return Mat(fld, rows, cols, tuple(ent))


def _zero_pi_block(fld, pim, tzdim):
    """The map (0 | pi) : tz + P0 -> z at one vertex."""
    rows = pim.rows
    cols = tzdim + pim.cols
    z = fld.zero
    ent = [z] * (rows * cols)
    for i in range(rows):
        for j in range(pim.cols):
            ent[i * cols + tzdim + j] = pim.at(i, j)
    return Mat(fld, rows, cols, tuple(ent))


def _verify_almost_split(seq: ShortExactSequence, z, endo, rad, catalog):
    fld = z.algebra.field
    e_rep = seq.middle
    for node in catalog.nodes:
        x = node.rep
        if x is z or indec_isomorphic(x, z):
            radmors = [morphism_combo(fld, endo.labels, rvec, z, z) for rvec in rad]
            if x is not z:
                iso = _find_iso(x, z)
                radmors = [compose(r, iso) for r in radmors]
            tests = radmors
        else:
            tests = hom_basis(x, z)
        for h in tests:
            if solve_factor_right(seq.right, h) is None:
                raise VerificationFailed("a radical morphism does not lift through the sequence")


def _find_iso(x, y):
    fwd = hom_basis(x, y)
    bwd = hom_basis(y, x)
    from .modules import morphism_is_invertible

    for f in fwd:
        for g in bwd:
            # g.f invertible forces f itself invertible between indecomposables
            if morphism_is_invertible(compose(g, f)):
                if not morphism_is_invertible(f):
                    raise VerificationFailed("split mono between equal dimension vectors is not invertible")
                return f
    raise VerificationFailed("expected isomorphic modules")


def solve_factor_right(f: ModuleMorphism, h: ModuleMorphism):
    """g with f . g = h, where h : X -> target(f); None if impossible."""
    x = h.source
    fld = x.algebra.field
    basis = hom_basis(x, f.source)
    target = morphism_flat(h)
    if not basis:
        return None if any(t != fld.zero for t in target) else zero_morphism(x, f.source)
    cols = [morphism_flat(compose(f, b)) for b in basis]
    a = Mat(fld, len(target), len(basis), tuple(cols[j][i] for i in range(len(target)) for j in range(len(basis))))
    sol = solve(a, Mat.column(fld, target))
    if sol is None:
        return None
    return morphism_combo(fld, basis, sol.col(0), x, f.source)


def solve_factor_left(f: ModuleMorphism, h: ModuleMorphism):
    """g with g . f = h, where h : source(f) -> Y; None if impossible."""
    y = h.target
    fld = y.algebra.field
    basis = hom_basis(f.target, y)
    target = morphism_flat(h)
    if not basis:
        return None if any(t != fld.zero for t in target) else zero_morphism(f.target, y)
    cols = [morphism_flat(compose(b, f)) for b in basis]
    a = Mat(fld, len(target), len(basis), tuple(cols[j][i] for i in range(len(target)) for j in range(len(basis))))
    sol = solve(a, Mat.column(fld, target))
    if sol is None:
        return None
    return morphism_combo(fld, basis, sol.col(0), f.target, y)


# -- trace, reject, approximations ----------------------------------------------


def trace_of(xs, m: Representation):
    """Image of the evaluation sum_j X_j^{hom} -> m, as a subrepresentation."""
    if not xs:
        raise ValueError("trace needs a nonempty module list")
    alg = m.algebra
    comps = []
    for x in xs:
        comps.extend((x, h) for h in hom_basis(x, m))
    if not comps:
        sub = zero_rep(alg)
        return sub, zero_morphism(sub, m)
    ev = _assemble_columns(alg, m, comps)
    return image_of(ev)


def in_gen(xs, m: Representation) -> bool:
    sub, _ = trace_of(xs, m)
    return sub.dims == m.dims


def reject_of(xs, m: Representation):
    """Kernel of m -> sum_j X_j^{hom}, as a subrepresentation."""
    if not xs:
        raise ValueError("reject needs a nonempty module list")
    alg = m.algebra
    comps = []
    for x in xs:
        comps.extend((x, h) for h in hom_basis(m, x))
    if not comps:
        return m, identity_morphism(m)
    co = _assemble_rows(alg, m, comps)
    return kernel_of(co)


def in_cogen(xs, m: Representation) -> bool:
    sub, _ = reject_of(xs, m)
    return sub.total_dim == 0


def _assemble_columns(alg, m, comps):
    """Morphism sum of sources -> m given component morphisms into m."""
    from .linalg import hstack as _h

    fld = alg.field
    parts = [x for (x, _) in comps]
    src = direct_sum(alg, parts)
    mats = []
    for v in range(len(m.dims)):
        mats.append(_h(fld, [h.mats[v] for (_, h) in comps], rows=m.dims[v]))
    return ModuleMorphism(src, m, tuple(mats)).check()


def _assemble_rows(alg, m, comps):
    """Morphism m -> sum of targets given component morphisms from m."""
    fld = alg.field
    parts = [x for (x, _) in comps]
    dst = direct_sum(alg, parts)
    mats = []
    for v in range(len(m.dims)):
        mats.append(vstack(fld, [h.mats[v] for (_, h) in comps], cols=m.dims[v]))
    return ModuleMorphism(m, dst, tuple(mats)).check()


def _right_approx_property(comps, xs, m, hom_cache):
    """Every basis morphism X_j -> m factors through the assembled map."""
    fld = m.algebra.field
    for x in xs:
        for h in hom_cache[id(x), "to_m"]:
            target = morphism_flat(h)
            cols = []
            for (u, comp) in comps:
                for b in hom_cache[id(x), id(u)]:
                    cols.append(morphism_flat(compose(comp, b)))
            if not cols:
                if any(t != fld.zero for t in target):
                    return False
                continue
            a = Mat(
                fld,
                len(target),
                len(cols),
                tuple(cols[j][i] for i in range(len(target)) for j in range(len(cols))),
            )
            if solve(a, Mat.column(fld, target)) is None:
                return False
    return True


def minimal_right_approx(m: Representation, xs) -> ModuleMorphism:
    """Minimal right approximation of m by add of the given module list."""
    alg = m.algebra
    hom_cache = {}
    for x in xs:
        hom_cache[id(x), "to_m"] = hom_basis(x, m)
        for u in xs:
            hom_cache[id(x), id(u)] = hom_basis(x, u)
    comps = []
    for x in xs:
        for h in hom_cache[id(x), "to_m"]:
            comps.append((x, h))
    if not _right_approx_property(comps, xs, m, hom_cache):
        raise VerificationFailed("universal map is not an approximation")
    changed = True
    while changed:
        changed = False
        for k in range(len(comps)):
            trial = comps[:k] + comps[k + 1 :]
            if _right_approx_property(trial, xs, m, hom_cache):
                comps = trial
                changed = True
                break
    if not comps:
        src = zero_rep(alg)
        return zero_morphism(src, m)
    return _assemble_columns(alg, m, comps)


def _left_approx_property(comps, xs, m, hom_cache):
    fld = m.algebra.field
    for x in xs:
        for h in hom_cache["from_m", id(x)]:
            target = morphism_flat(h)
            cols = []
            for (u, comp) in comps:
                for b in hom_cache[id(u), id(x)]:
                    cols.append(morphism_flat(compose(b, comp)))
            if not cols:
                if any(t != fld.zero for t in target):
                    return False
                continue
            a = Mat(
                fld,
                len(target),
                len(cols),
                tuple(cols[j][i] for i in range(len(target)) for j in range(len(cols))),
            )
            if solve(a, Mat.column(fld, target)) is None:
                return False
    return True


def minimal_left_approx(m: Representation, xs) -> ModuleMorphism:
    alg = m.algebra
    hom_cache = {}
    for x in xs:
        hom_cache["from_m", id(x)] = hom_basis(m, x)
        for u in xs:
            hom_cache[id(u), id(x)] = hom_basis(u, x)
    comps = []
    for x in xs:
        for h in hom_cache["from_m", id(x)]:
            comps.append((x, h))
    if not _left_approx_property(comps, xs, m, hom_cache):
        raise VerificationFailed("universal map is not an approximation")
    changed = True
    while changed:
        changed = False
        for k in range(len(comps)):
            trial = comps[:k] + comps[k + 1 :]
            if _left_approx_property(trial, xs, m, hom_cache):
                comps = trial
                changed = True
                break
    if not comps:
        dst = zero_rep(alg)
        return zero_morphism(m, dst)
    return _assemble_rows(alg, m, comps)
