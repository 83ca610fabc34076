"""Bound quiver algebras kQ/I with a canonical path basis.

The basis is computed degree by degree: at each path length the span of
paths is cut down by the degree component of the two-sided ideal generated
by the relations, and surviving basis paths are picked greedily in
lexicographic order on (length, arrow-name sequence).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedRelation, NotAdmissible, ParseError, PathTooLong
from .linalg import SpanTracker


class Quiver:
    def __init__(self, vertices, arrows):
        """vertices: list of vertex names; arrows: list of (name, source, target)."""
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("duplicate vertex names")
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        names = []
        src = []
        tgt = []
        for (name, s, t) in arrows:
            if s not in self.vindex or t not in self.vindex:
                raise ParseError("arrow %r has undeclared endpoint" % (name,))
            names.append(str(name))
            src.append(self.vindex[s])
            tgt.append(self.vindex[t])
        if len(set(names)) != len(names):
            raise ParseError("duplicate arrow names")
        self.arrow_names = tuple(names)
        self.arrow_src = tuple(src)
        self.arrow_tgt = tuple(tgt)
        self.aindex = {n: i for i, n in enumerate(names)}
        # arrows listed per source vertex, in name order (basis determinism)
        order = sorted(range(len(names)), key=lambda a: names[a])
        self.arrows_by_name = tuple(order)
        self.out_arrows = tuple(
            tuple(a for a in order if self.arrow_src[a] == v) for v in range(len(self.vertices))
        )
        self.in_arrows = tuple(
            tuple(a for a in order if self.arrow_tgt[a] == v) for v in range(len(self.vertices))
        )

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_arrows(self):
        return len(self.arrow_names)

    def opposite(self) -> "Quiver":
        arrows = [
            (self.arrow_names[a], self.vertices[self.arrow_tgt[a]], self.vertices[self.arrow_src[a]])
            for a in range(self.n_arrows)
        ]
        return Quiver(self.vertices, arrows)


@dataclass(frozen=True)
class Path:
    start: int
    arrows: tuple

    @property
    def length(self):
        return len(self.arrows)

    def end(self, quiver: Quiver) -> int:
        return quiver.arrow_tgt[self.arrows[-1]] if self.arrows else self.start

    def key(self):
        return (self.start, self.arrows)


def make_path(quiver: Quiver, arrow_names, start=None) -> Path:
    """Build a path from arrow names; stationary paths need an explicit start."""
    idxs = []
    for n in arrow_names:
        if n not in quiver.aindex:
            raise ParseError("unknown arrow %r" % (n,))
        idxs.append(quiver.aindex[n])
    if not idxs:
        if start is None:
            raise ParseError("stationary path needs a start vertex")
        return Path(quiver.vindex[str(start)], ())
    for a, b in zip(idxs, idxs[1:]):
        if quiver.arrow_tgt[a] != quiver.arrow_src[b]:
            raise MalformedRelation("arrows %r do not compose" % (list(arrow_names),))
    return Path(quiver.arrow_src[idxs[0]], tuple(idxs))


def _concat(quiver, p: Path, q: Path) -> Path:
    if p.end(quiver) != q.start:
        raise MalformedRelation("paths do not compose")
    return Path(p.start, p.arrows + q.arrows)


class BoundQuiverAlgebra:
    """kQ/I with the canonical normal-form basis and reduction table.

    Immutable after construction; all operations are pure.
    """

    def __init__(self, quiver, field, relations, length_bound, _basis, _table):
        self.quiver = quiver
        self.field = field
        self.relations = relations          # tuple of tuples (scalar, Path)
        self.length_bound = length_bound
        self.basis = _basis                 # tuple of Path, lex order
        self.table = _table                 # path key -> coord tuple over basis
        self.dim = len(_basis)
        self.basis_index = {p.key(): i for i, p in enumerate(_basis)}
        n = quiver.n_vertices
        self.basis_from = tuple(
            tuple(i for i, p in enumerate(_basis) if p.start == v) for v in range(n)
        )
        self.basis_between = {}
        for i, p in enumerate(_basis):
            k = (p.start, p.end(quiver))
            self.basis_between.setdefault(k, []).append(i)
        self._opposite = None

    # -- reduction ---------------------------------------------------------

    def stationary(self, v: int) -> Path:
        return Path(v, ())

    def reduce_path(self, p: Path):
        """Coordinates of a path over the basis; paths beyond the bound are 0."""
        if p.length > self.length_bound:
            return (self.field.zero,) * self.dim
        return self.table[p.key()]

    def normal_form(self, combo):
        """Coordinates of a linear combination of paths (each within the bound)."""
        f = self.field
        acc = [f.zero] * self.dim
        for scalar, p in combo:
            if p.length > self.length_bound:
                raise PathTooLong("path of length %d exceeds bound %d" % (p.length, self.length_bound))
            s = f.coerce(scalar)
            if s == f.zero:
                continue
            for i, c in enumerate(self.table[p.key()]):
                if c != f.zero:
                    acc[i] = f.add(acc[i], f.mul(s, c))
        return tuple(acc)

    def mult_paths(self, p: Path, q: Path):
        """Coordinates of the product p*q (p first, then q)."""
        return self.reduce_path(_concat(self.quiver, p, q))

    def path_times_arrow(self, basis_idx: int, arrow: int):
        p = self.basis[basis_idx]
        if p.end(self.quiver) != self.quiver.arrow_src[arrow]:
            raise MalformedRelation("arrow does not extend path")
        return self.reduce_path(Path(p.start, p.arrows + (arrow,)))

    # -- opposite ----------------------------------------------------------

    @property
    def opposite(self) -> "BoundQuiverAlgebra":
        if self._opposite is None:
            op = build_algebra(
                self.quiver.opposite(),
                [
                    [(c, Path(p.end(self.quiver), tuple(reversed(p.arrows)))) for (c, p) in rel]
                    for rel in self.relations
                ],
                self.field,
                self.length_bound,
            )
            self._opposite = op
            op._opposite = self
        return self._opposite


def _validate_relations(quiver, field, relations, length_bound):
    rels = []
    for rel in relations:
        terms = []
        for (scalar, p) in rel:
            s = field.coerce(scalar)
            if s == field.zero:
                continue
            if not isinstance(p, Path):
                raise MalformedRelation("relation term is not a path")
            # recheck composability against this quiver
            for a, b in zip(p.arrows, p.arrows[1:]):
                if quiver.arrow_tgt[a] != quiver.arrow_src[b]:
                    raise MalformedRelation("relation path does not compose")
            terms.append((s, p))
        if not terms:
            raise MalformedRelation("relation has no nonzero terms")
        lengths = {p.length for (_, p) in terms}
        if len(lengths) != 1:
            raise MalformedRelation("relation mixes path lengths %s" % sorted(lengths))
        (length,) = lengths
        if length < 2:
            raise MalformedRelation("relation paths must have length >= 2")
        starts = {p.start for (_, p) in terms}
        ends = {p.end(quiver) for (_, p) in terms}
        if len(starts) != 1 or len(ends) != 1:
            raise MalformedRelation("relation paths are not parallel")
        rels.append(tuple(terms))
    return tuple(rels)


def build_algebra(quiver: Quiver, relations, field, length_bound: int) -> BoundQuiverAlgebra:
    """Construct kQ/I, checking admissibility at the length bound."""
    if length_bound < 2:
        raise MalformedRelation("length_bound must be >= 2")
    rels = _validate_relations(quiver, field, relations, length_bound)

    # all paths per length, in lex order on (length, arrow-name sequence)
    paths_by_len = [[Path(v, ()) for v in range(quiver.n_vertices)]]
    for ell in range(1, length_bound + 1):
        nxt = []
        for p in paths_by_len[ell - 1]:
            for a in quiver.out_arrows[p.end(quiver)]:
                nxt.append(Path(p.start, p.arrows + (a,)))
        paths_by_len.append(nxt)

    paths_ending_at = []  # per length: vertex -> list of paths
    for ell, plist in enumerate(paths_by_len):
        m = {}
        for p in plist:
            m.setdefault(p.end(quiver), []).append(p)
        paths_ending_at.append(m)

    basis = []
    table = {}
    f = field
    for ell in range(0, length_bound + 1):
        plist = paths_by_len[ell]
        index_of = {p.key(): i for i, p in enumerate(plist)}
        width = len(plist)
        ideal = SpanTracker(f, width)
        for rel in rels:
            d = rel[0][1].length
            if d > ell:
                continue
            rstart = rel[0][1].start
            rend = rel[0][1].end(quiver)
            for la in range(0, ell - d + 1):
                lb = ell - d - la
                lefts = paths_ending_at[la].get(rstart, [])
                for a in lefts:
                    for b in paths_by_len[lb]:
                        if b.start != rend:
                            continue
                        vec = [f.zero] * width
                        for (s, rp) in rel:
                            w = Path(a.start, a.arrows + rp.arrows + b.arrows)
                            j = index_of[w.key()]
                            vec[j] = f.add(vec[j], s)
                        ideal.add(vec)
        rep = SpanTracker(f, width, track=True)
        new_basis = []
        z = f.zero
        for i, p in enumerate(plist):
            unit = [z] * width
            unit[i] = f.one
            residue = ideal.reduce(unit)
            if all(x == z for x in residue):
                table[p.key()] = None  # fill with zeros later
                continue
            coords = rep.coords(residue)
            if coords is None:
                rep.add(residue)
                new_basis.append(p)
                table[p.key()] = ("unit", len(basis) + len(new_basis) - 1)
            else:
                table[p.key()] = ("combo", ell, coords)
        if ell == length_bound and new_basis:
            raise NotAdmissible(
                "path of length %d does not reduce to zero (e.g. %s)"
                % (length_bound, "".join(quiver.arrow_names[a] for a in new_basis[0].arrows))
            )
        # remember which global indices this degree's basis paths occupy
        base_offset = len(basis)
        basis.extend(new_basis)
        gpos = {p.key(): base_offset + i for i, p in enumerate(new_basis)}
        for p in plist:
            entry = table[p.key()]
            if entry is None:
                table[p.key()] = ("zero",)
            elif entry[0] == "combo":
                _, _, coords = entry
                # coords are over the degree's basis paths in creation order
                table[p.key()] = ("sparse", tuple(
                    (base_offset + j, c) for j, c in enumerate(coords) if c != z
                ))

    dim = len(basis)

    def densify(entry):
        vec = [f.zero] * dim
        if entry[0] == "unit":
            vec[entry[1]] = f.one
        elif entry[0] == "sparse":
            for j, c in entry[1]:
                vec[j] = c
        return tuple(vec)

    dense = {k: densify(v) for k, v in table.items()}
    return BoundQuiverAlgebra(quiver, field, rels, length_bound, tuple(basis), dense)


def opposite_algebra(alg: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    return alg.opposite
