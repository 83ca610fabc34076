"""Enumeration of indecomposables, the AR quiver, and coarse partitions."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, IncompleteCatalog
from .homological import (
    almost_split_sequence,
    ar_translate,
    ar_translate_inv,
    in_cogen,
    in_gen,
    inj_dim,
    proj_dim,
)
from .linalg import SpanTracker
from .modules import (
    cokernel_of,
    compose,
    hom_basis,
    indec_isomorphic,
    indecomposable_summands,
    injective_at,
    morphism_flat,
    projective_at,
    radical_of,
    simple_at,
    socle_of,
)

_SUPERSCRIPT = {"-": "⁻", "0": "⁰", "1": "¹", "2": "²", "3": "³",
                "4": "⁴", "5": "⁵", "6": "⁶", "7": "⁷", "8": "⁸", "9": "⁹"}


def _sup(n: int) -> str:
    return "".join(_SUPERSCRIPT[c] for c in str(n))


@dataclass
class Budget:
    max_modules: int = 64
    max_total_dim: int = 128


@dataclass
class CatalogNode:
    rep: object
    name: str = ""
    proj_vertex: int | None = None
    inj_vertex: int | None = None
    simple_vertex: int | None = None
    tau: int | None = None       # index of tau(this) when non-projective
    tau_inv: int | None = None   # index of tau^{-1}(this) when non-injective

    @property
    def in_add_gen_cogen(self):
        return self.proj_vertex is not None or self.inj_vertex is not None


class IndecomposableCatalog:
    def __init__(self, algebra, nodes, complete):
        self.algebra = algebra
        self.nodes = nodes
        self.complete = complete
        self._hom_cache = {}
        self._facts = None

    def __len__(self):
        return len(self.nodes)

    def find(self, rep):
        for i, node in enumerate(self.nodes):
            if node.rep.dims == rep.dims and indec_isomorphic(node.rep, rep):
                return i
        return None

    def hom_basis(self, i, j):
        key = (i, j)
        if key not in self._hom_cache:
            self._hom_cache[key] = hom_basis(self.nodes[i].rep, self.nodes[j].rep)
        return self._hom_cache[key]

    def hom_dim(self, i, j):
        return len(self.hom_basis(i, j))

    def node_named(self, name):
        for node in self.nodes:
            if node.name == name:
                return node
        raise KeyError(name)


def enumerate_indecomposables(alg, budget: Budget | None = None, strict: bool = False) -> IndecomposableCatalog:
    """Closure of the projectives and injectives under AR-neighbor moves.

    Stops and marks the catalog incomplete when the budget would be
    exceeded; with strict=True that raises BudgetExceeded instead.
    """
    if budget is None:
        budget = Budget()
    nv = alg.quiver.n_vertices
    nodes = []
    total_dim = 0
    complete = True

    def find(rep):
        for i, node in enumerate(nodes):
            if node.rep.dims == rep.dims and indec_isomorphic(node.rep, rep):
                return i
        return None

    def try_add(rep):
        nonlocal total_dim, complete
        idx = find(rep)
        if idx is not None:
            return idx
        if len(nodes) + 1 > budget.max_modules or total_dim + rep.total_dim > budget.max_total_dim:
            complete = False
            return None
        nodes.append(CatalogNode(rep))
        total_dim += rep.total_dim
        return len(nodes) - 1

    projs = [projective_at(alg, v) for v in range(nv)]
    injs = [injective_at(alg, v) for v in range(nv)]
    queue = []
    for v, p in enumerate(projs):
        if p.is_zero():
            continue
        idx = try_add(p)
        if idx is not None and nodes[idx].proj_vertex is None:
            nodes[idx].proj_vertex = v
            queue.append(idx)
    for v, iv in enumerate(injs):
        if iv.is_zero():
            continue
        idx = try_add(iv)
        if idx is not None:
            if nodes[idx].inj_vertex is None:
                nodes[idx].inj_vertex = v
            if idx not in queue:
                queue.append(idx)
    # identify flags for seeds that were reached both ways
    for i, node in enumerate(nodes):
        for v, p in enumerate(projs):
            if node.proj_vertex is None and node.rep.dims == p.dims and indec_isomorphic(node.rep, p):
                node.proj_vertex = v
        for v, iv in enumerate(injs):
            if node.inj_vertex is None and node.rep.dims == iv.dims and indec_isomorphic(node.rep, iv):
                node.inj_vertex = v
        for v in range(nv):
            if node.rep.dims == simple_at(alg, v).dims:
                node.simple_vertex = v

    pos = 0
    while pos < len(queue) and complete:
        idx = queue[pos]
        pos += 1
        node = nodes[idx]
        neighbors = []
        if node.proj_vertex is not None:
            rad, _ = radical_of(node.rep)
            neighbors.append(rad)
        if node.inj_vertex is not None:
            soc, incl = socle_of(node.rep)
            quot, _ = cokernel_of(incl)
            neighbors.append(quot)
        if node.proj_vertex is None:
            tz = ar_translate(node.rep)
            seq = almost_split_sequence(node.rep)
            neighbors.append(tz)
            neighbors.append(seq.middle)
            tgt = find(tz)
            if tgt is not None:
                node.tau = tgt
        if node.inj_vertex is None:
            ti = ar_translate_inv(node.rep)
            neighbors.append(ti)
            tgt = None
            if not ti.is_zero():
                pieces_ti = indecomposable_summands(ti)
                if len(pieces_ti) == 1:
                    seq = almost_split_sequence(pieces_ti[0])
                    neighbors.append(seq.middle)
        for nb in neighbors:
            if not complete:
                break
            if nb.is_zero():
                continue
            for piece in indecomposable_summands(nb):
                new_idx = try_add(piece)
                if new_idx is None:
                    break
                fresh = nodes[new_idx]
                if fresh.name == "" and new_idx not in queue:
                    _flag_node(alg, fresh, projs, injs)
                    queue.append(new_idx)

    if not complete and strict:
        partial = IndecomposableCatalog(alg, nodes, False)
        raise BudgetExceeded("enumeration exceeded the budget", partial=partial)

    cat = IndecomposableCatalog(alg, nodes, complete)
    _fill_tau_tables(cat)
    _assign_names(cat)
    return cat


def _flag_node(alg, node, projs, injs):
    for v, p in enumerate(projs):
        if node.rep.dims == p.dims and indec_isomorphic(node.rep, p):
            node.proj_vertex = v
            break
    for v, iv in enumerate(injs):
        if node.rep.dims == iv.dims and indec_isomorphic(node.rep, iv):
            node.inj_vertex = v
            break
    for v in range(alg.quiver.n_vertices):
        if node.rep.dims == simple_at(alg, v).dims:
            node.simple_vertex = v
            break


def _fill_tau_tables(cat: IndecomposableCatalog):
    for i, node in enumerate(cat.nodes):
        if node.proj_vertex is None and node.tau is None:
            tz = ar_translate(node.rep)
            idx = cat.find(tz)
            if idx is None and cat.complete:
                raise IncompleteCatalog("translate missing from a complete catalog")
            node.tau = idx
    for i, node in enumerate(cat.nodes):
        if node.tau is not None:
            cat.nodes[node.tau].tau_inv = i
    if cat.complete:
        for i, node in enumerate(cat.nodes):
            if node.inj_vertex is None and node.tau_inv is None:
                ti = ar_translate_inv(node.rep)
                idx = cat.find(ti)
                if idx is None:
                    raise IncompleteCatalog("inverse translate missing from a complete catalog")
                node.tau_inv = idx
                if cat.nodes[idx].tau is None:
                    cat.nodes[idx].tau = i


def _assign_names(cat: IndecomposableCatalog):
    verts = cat.algebra.quiver.vertices
    for i, node in enumerate(cat.nodes):
        if node.proj_vertex is not None:
            node.name = "P(%s)" % verts[node.proj_vertex]
        elif node.inj_vertex is not None:
            node.name = "I(%s)" % verts[node.inj_vertex]
        elif node.simple_vertex is not None:
            node.name = "S(%s)" % verts[node.simple_vertex]
    for i, node in enumerate(cat.nodes):
        if node.name:
            continue
        # walk tau repeatedly; reaching a projective P after k steps names tau^{-k} P
        k = 0
        cur = i
        seen = set()
        while cur is not None and cur not in seen:
            seen.add(cur)
            if cat.nodes[cur].proj_vertex is not None:
                node.name = "τ%sP(%s)" % (_sup(-k), verts[cat.nodes[cur].proj_vertex])
                break
            nxt = cat.nodes[cur].tau
            cur = nxt
            k += 1
        if node.name:
            continue
        k = 0
        cur = i
        seen = set()
        while cur is not None and cur not in seen:
            seen.add(cur)
            if cat.nodes[cur].inj_vertex is not None:
                node.name = "τ%sI(%s)" % (_sup(k), verts[cat.nodes[cur].inj_vertex])
                break
            cur = cat.nodes[cur].tau_inv
            k += 1
        if not node.name:
            node.name = "M%d%s" % (i, node.rep.dims)


def ar_quiver(cat: IndecomposableCatalog):
    """Arrows with multiplicities dim rad(X,Y)/rad^2(X,Y), plus the tau table."""
    if not cat.complete:
        raise IncompleteCatalog("AR quiver needs a complete catalog")
    from .endo import algebra_radical, endomorphism_algebra
    from .modules import morphism_combo

    n = len(cat.nodes)
    fld = cat.algebra.field
    rad_bases = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                endo = endomorphism_algebra(cat.nodes[i].rep)
                radv = algebra_radical(endo)
                rad_bases[(i, i)] = [
                    morphism_combo(fld, endo.labels, rv, cat.nodes[i].rep, cat.nodes[i].rep) for rv in radv
                ]
            else:
                rad_bases[(i, j)] = cat.hom_basis(i, j)
    arrows = []
    for i in range(n):
        for j in range(n):
            base = rad_bases[(i, j)]
            if not base:
                continue
            width = len(morphism_flat(base[0]))
            sq = SpanTracker(fld, width)
            for w in range(n):
                for f1 in rad_bases[(i, w)]:
                    for f2 in rad_bases[(w, j)]:
                        sq.add(morphism_flat(compose(f2, f1)))
            total = SpanTracker(fld, width)
            for b in base:
                total.add(morphism_flat(b))
            mult = total.dim - sq.dim
            if mult > 0:
                arrows.append((i, j, mult))
    tau_table = {i: node.tau for i, node in enumerate(cat.nodes) if node.tau is not None}
    return arrows, tau_table


@dataclass
class PartitionReport:
    left_part: list
    right_part: list
    pd_le_1: list
    id_le_1: list
    gen_cogen: list          # nodes in add(A + DA)
    in_gen_da: list
    in_cogen_a: list
    supp_hom_da: list        # Hom(DA, X) != 0
    supp_hom_a: list         # Hom(X, A) != 0
    pd_table: dict
    id_table: dict


def node_facts(cat: IndecomposableCatalog):
    """Per-node facts reused by the checks: pd, id, memberships."""
    if cat._facts is not None:
        return cat._facts
    alg = cat.algebra
    nv = alg.quiver.n_vertices
    projs = [projective_at(alg, v) for v in range(nv)]
    injs = [injective_at(alg, v) for v in range(nv)]
    inj_list = [x for x in injs if not x.is_zero()]
    proj_list = [x for x in projs if not x.is_zero()]
    facts = []
    for node in cat.nodes:
        x = node.rep
        pd = proj_dim(x)
        idim = inj_dim(x)
        facts.append(
            {
                "pd": pd,
                "id": idim,
                "gen_da": in_gen(inj_list, x),
                "cogen_a": in_cogen(proj_list, x),
                "supp_da": any(len(hom_basis(iv, x)) > 0 for iv in inj_list),
                "supp_a": any(len(hom_basis(x, pv)) > 0 for pv in proj_list),
            }
        )
    cat._facts = facts
    return facts


def left_right_parts(cat: IndecomposableCatalog) -> PartitionReport:
    if not cat.complete:
        raise IncompleteCatalog("partitions need a complete catalog")
    n = len(cat.nodes)
    facts = node_facts(cat)
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and cat.hom_dim(i, j) > 0:
                adj[i][j] = True
    reach = [row[:] for row in adj]
    for i in range(n):
        reach[i][i] = True
    for w in range(n):
        for i in range(n):
            if reach[i][w]:
                ri, rw = reach[i], reach[w]
                for j in range(n):
                    if rw[j]:
                        ri[j] = True
    pd1 = [facts[i]["pd"].le(1) is True for i in range(n)]
    id1 = [facts[i]["id"].le(1) is True for i in range(n)]
    left = []
    right = []
    for i in range(n):
        preds = [j for j in range(n) if reach[j][i]]
        if all(pd1[j] for j in preds):
            left.append(i)
        succs = [j for j in range(n) if reach[i][j]]
        if all(id1[j] for j in succs):
            right.append(i)
    return PartitionReport(
        left_part=left,
        right_part=right,
        pd_le_1=[i for i in range(n) if pd1[i]],
        id_le_1=[i for i in range(n) if id1[i]],
        gen_cogen=[i for i in range(n) if cat.nodes[i].in_add_gen_cogen],
        in_gen_da=[i for i in range(n) if facts[i]["gen_da"]],
        in_cogen_a=[i for i in range(n) if facts[i]["cogen_a"]],
        supp_hom_da=[i for i in range(n) if facts[i]["supp_da"]],
        supp_hom_a=[i for i in range(n) if facts[i]["supp_a"]],
        pd_table={cat.nodes[i].name: facts[i]["pd"] for i in range(n)},
        id_table={cat.nodes[i].name: facts[i]["id"] for i in range(n)},
    )
