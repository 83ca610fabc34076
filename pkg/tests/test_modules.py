import random

import pytest

from repherd.errors import InvalidRepresentation
from repherd.fields import QQ
from repherd.linalg import Mat
from repherd.modules import (
    Representation,
    cokernel_of,
    compose,
    decompose,
    direct_sum,
    dual_module,
    hom_basis,
    hom_dim,
    identity_morphism,
    indec_isomorphic,
    indecomposable_summands,
    injective_at,
    is_isomorphic,
    kernel_of,
    projective_at,
    radical_of,
    simple_at,
    socle_of,
    zero_morphism,
    zero_rep,
)


def dims_of(rep):
    return tuple(rep.dims)


def test_canonical_modules_a2(a2):
    assert dims_of(projective_at(a2, "1")) == (1, 1)
    assert dims_of(projective_at(a2, "2")) == (0, 1)
    assert dims_of(injective_at(a2, "1")) == (1, 0)
    assert dims_of(injective_at(a2, "2")) == (1, 1)
    assert indec_isomorphic(injective_at(a2, "2"), projective_at(a2, "1"))


def test_canonical_modules_loop2(loop2):
    assert dims_of(projective_at(loop2, "1")) == (2, 1)
    assert dims_of(projective_at(loop2, "2")) == (0, 1)
    assert dims_of(injective_at(loop2, "1")) == (2, 0)
    assert dims_of(injective_at(loop2, "2")) == (1, 1)


def test_canonical_modules_tilted4(tilted4):
    assert dims_of(projective_at(tilted4, "4")) == (0, 1, 1, 1)
    assert dims_of(injective_at(tilted4, "1")) == (1, 1, 1, 0)


def test_algebra_dim_equals_sum_of_projective_dims(a2, a3, loop2, tilted4, tilted5, sq, d4):
    for alg in (a2, a3, loop2, tilted4, tilted5, sq, d4):
        total = sum(projective_at(alg, v).total_dim for v in range(alg.quiver.n_vertices))
        assert total == alg.dim


def test_yoneda_hom_dims(loop2, tilted4):
    for alg in (loop2, tilted4):
        nv = alg.quiver.n_vertices
        mods = [projective_at(alg, v) for v in range(nv)] + [injective_at(alg, v) for v in range(nv)]
        for v in range(nv):
            p = projective_at(alg, v)
            iv = injective_at(alg, v)
            for m in mods:
                assert hom_dim(p, m) == m.dims[v]
                assert hom_dim(m, iv) == m.dims[v]


def test_hom_example_tilted4(tilted4):
    s2 = simple_at(tilted4, "2")
    assert hom_dim(injective_at(tilted4, "1"), s2) == 1
    assert hom_dim(injective_at(tilted4, "2"), s2) == 0


def test_hom_dims_field_independent(loop2, gf101):
    from tests.conftest import load_fixture_algebra

    loop2p = load_fixture_algebra("loop2", field=gf101)
    mods_q = [projective_at(loop2, v) for v in range(2)] + [injective_at(loop2, v) for v in range(2)]
    mods_p = [projective_at(loop2p, v) for v in range(2)] + [injective_at(loop2p, v) for v in range(2)]
    for i in range(4):
        for j in range(4):
            assert hom_dim(mods_q[i], mods_q[j]) == hom_dim(mods_p[i], mods_p[j])


def test_kernel_of_identity_and_cokernel_of_zero(loop2):
    p1 = projective_at(loop2, "1")
    k, _ = kernel_of(identity_morphism(p1))
    assert k.total_dim == 0
    c, _ = cokernel_of(zero_morphism(zero_rep(loop2), p1))
    assert dims_of(c) == dims_of(p1)


def test_loop2_evaluation_kernel_dims(loop2):
    from repherd.homological import trace_of

    s1 = simple_at(loop2, "1")
    i1, i2 = injective_at(loop2, "1"), injective_at(loop2, "2")
    from repherd.homological import _assemble_columns

    comps = []
    for x in (i1, i2):
        comps.extend((x, h) for h in hom_basis(x, s1))
    ev = _assemble_columns(loop2, s1, comps)
    k, _ = kernel_of(ev)
    assert dims_of(k) == (2, 1)
    assert is_isomorphic(k, projective_at(loop2, "1"))


def test_direct_sum(a2, loop2):
    assert direct_sum(a2, []).total_dim == 0
    s = direct_sum(a2, [projective_at(a2, "1"), projective_at(a2, "2")])
    assert dims_of(s) == (1, 2)
    parts = [
        projective_at(loop2, "1"),
        projective_at(loop2, "2"),
        injective_at(loop2, "1"),
        injective_at(loop2, "2"),
    ]
    assert dims_of(direct_sum(loop2, parts)) == (5, 3)


def test_radical_socle_loop2(loop2):
    s1 = simple_at(loop2, "1")
    r, _ = radical_of(s1)
    assert r.total_dim == 0
    rp1, _ = radical_of(projective_at(loop2, "1"))
    assert dims_of(rp1) == (1, 1)
    d = decompose(rp1)
    assert sorted(dims_of(p) for p, _ in d.pieces) == [(0, 1), (1, 0)]
    soc, _ = socle_of(injective_at(loop2, "1"))
    assert dims_of(soc) == (1, 0)


def test_decompose_basics(a2, loop2):
    s1 = simple_at(a2, "1")
    d = decompose(s1)
    assert len(d.pieces) == 1 and d.pieces[0][1] == 1
    m = direct_sum(a2, [s1, s1, projective_at(a2, "2")])
    d = decompose(m)
    got = sorted((dims_of(p), mult) for p, mult in d.pieces)
    assert got == [((0, 1), 1), ((1, 0), 2)]
    # re-decomposing a piece returns itself
    for p, _ in d.pieces:
        again = decompose(p)
        assert len(again.pieces) == 1 and again.pieces[0][1] == 1
        assert dims_of(again.pieces[0][0]) == dims_of(p)


def test_decompose_dim_accounting(loop2):
    m = direct_sum(loop2, [projective_at(loop2, "1"), injective_at(loop2, "2"), simple_at(loop2, "1")])
    d = decompose(m)
    per_vertex = [0, 0]
    for p, mult in d.pieces:
        for v in range(2):
            per_vertex[v] += p.dims[v] * mult
    assert tuple(per_vertex) == m.dims


def test_krull_schmidt_multiset_union_on_random_sums(loop2, a3):
    rng = random.Random("ks-sums")
    pools = {}
    for alg in (loop2, a3):
        nv = alg.quiver.n_vertices
        pool = [projective_at(alg, v) for v in range(nv)]
        pool += [injective_at(alg, v) for v in range(nv)]
        pool += [simple_at(alg, v) for v in range(nv)]
        pools[alg] = pool

    def multiset(rep):
        out = []
        for piece in indecomposable_summands(rep):
            out.append(tuple(piece.dims))
        return sorted(out)

    for trial in range(50):
        alg = loop2 if trial % 2 == 0 else a3
        pool = pools[alg]
        m = pool[rng.randrange(len(pool))]
        n = pool[rng.randrange(len(pool))]
        assert multiset(direct_sum(alg, [m, n])) == sorted(multiset(m) + multiset(n))


def test_is_isomorphic(loop2):
    s1 = simple_at(loop2, "1")
    s2 = simple_at(loop2, "2")
    assert is_isomorphic(s1, s1)
    assert not is_isomorphic(s1, s2)
    assert not is_isomorphic(s1, projective_at(loop2, "1"))


def test_relation_violation_rejected(loop2):
    # alpha^2 = 0 fails for this matrix choice
    bad = [
        Mat.from_rows(QQ, [[0, 0], [1, 0]]),  # alpha on a 2-dim space, alpha^2 = 0 ok
        Mat.from_rows(QQ, [[1, 0]]),
    ]
    Representation(loop2, (2, 1), bad)  # fine
    worse = [
        Mat.from_rows(QQ, [[1, 0], [0, 1]]),  # identity: alpha^2 != 0
        Mat.from_rows(QQ, [[1, 0]]),
    ]
    with pytest.raises(InvalidRepresentation):
        Representation(loop2, (2, 1), worse)


def test_hom_basis_elements_commute(loop2, tilted4):
    import random

    from repherd.modules import ModuleMorphism

    rng = random.Random("hom-commute")
    for alg in (loop2, tilted4):
        nv = alg.quiver.n_vertices
        pool = [projective_at(alg, v) for v in range(nv)] + [injective_at(alg, v) for v in range(nv)]
        for _ in range(12):
            m = pool[rng.randrange(len(pool))]
            n = pool[rng.randrange(len(pool))]
            for h in hom_basis(m, n):
                ModuleMorphism(h.source, h.target, h.mats).check()


def test_dual_module_roundtrip(loop2):
    p1 = projective_at(loop2, "1")
    dd = dual_module(dual_module(p1))
    assert dd.algebra is p1.algebra
    assert dims_of(dd) == dims_of(p1)
    for a, b in zip(dd.mats, p1.mats):
        assert a.eq(b)
