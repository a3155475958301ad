"""Exact linear algebra on the quotient algebra.

An AlgebraTable is an ordered basis of normal-form paths graded by
(source, target), together with all pairwise products.  Tables are
immutable once built; idempotent corner algebras reuse the parent's
basis labels.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from . import linalg
from .presentation import Path
from .rewriting import complete_rewriting


class AlgebraError(ValueError):
    pass


def _basis_key(path):
    return (path.length, path.source, path.arrows)


@dataclass
class AlgebraTable:
    field: object
    vertices: tuple
    basis: tuple  # tuple of Path
    products: list  # products[i][j] = dict basis index -> coefficient
    e_index: dict  # vertex -> basis index of the trivial path
    presentation: object = None
    rewrite: object = None
    arrow_elements: dict = dc_field(default_factory=dict)

    @property
    def dimension(self):
        return len(self.basis)

    def index_of(self, path):
        return self._index[(path.source, path.arrows)]

    def __post_init__(self):
        self._index = {(p.source, p.arrows): i for i, p in enumerate(self.basis)}

    def blocks_by_pair(self):
        out = {}
        for i, p in enumerate(self.basis):
            out.setdefault((p.source, p.target), []).append(i)
        return out

    def mult(self, combo1, combo2):
        out = {}
        for i, c1 in combo1.items():
            if not c1:
                continue
            row = self.products[i]
            for j, c2 in combo2.items():
                if not c2:
                    continue
                for k, c3 in row[j].items():
                    acc = out.get(k, self.field.zero) + c1 * c2 * c3
                    if acc:
                        out[k] = acc
                    elif k in out:
                        del out[k]
        return out

    def unit_combo(self):
        return {i: self.field.one for i in self.e_index.values()}

    def path_combo(self, path):
        """Image of an arbitrary path of the presentation quiver in the basis."""
        if self.rewrite is None:
            raise AlgebraError("table carries no rewriting system")
        if path.is_trivial:
            return {self.e_index[path.source]: self.field.one}
        reduced = self.rewrite.normal_form_word(path.arrows)
        quiver = self.rewrite.quiver
        out = {}
        for word, coeff in reduced.items():
            src = quiver.source(word[0])
            out[self._index[(src, word)]] = coeff
        return out


def basis_and_table(rs):
    """Normal-form basis, dimension and structure constants from a system."""
    quiver = rs.quiver
    field = rs.field
    paths = [Path(v, (), v) for v in sorted(quiver.vertices)]
    for word in rs.basis_words:
        paths.append(Path(quiver.source(word[0]), word, quiver.target(word[-1])))
    paths.sort(key=_basis_key)
    index = {(p.source, p.arrows): i for i, p in enumerate(paths)}
    e_index = {v: index[(v, ())] for v in quiver.vertices}
    n = len(paths)
    products = [[{} for _ in range(n)] for _ in range(n)]
    for i, u in enumerate(paths):
        for j, v in enumerate(paths):
            if u.target != v.source:
                continue
            if u.is_trivial:
                products[i][j] = {j: field.one}
                continue
            if v.is_trivial:
                products[i][j] = {i: field.one}
                continue
            reduced = rs.normal_form_word(u.arrows + v.arrows)
            combo = {}
            for word, coeff in reduced.items():
                src = quiver.source(word[0])
                combo[index[(src, word)]] = coeff
            products[i][j] = combo
    table = AlgebraTable(
        field=field,
        vertices=tuple(sorted(quiver.vertices)),
        basis=tuple(paths),
        products=products,
        e_index=e_index,
        presentation=rs.presentation,
        rewrite=rs,
    )
    arrow_elements = {}
    for a in quiver.arrow_map:
        word_nf = rs.normal_form_word((a,))
        combo = {}
        for word, coeff in word_nf.items():
            src = quiver.source(word[0])
            combo[index[(src, word)]] = coeff
        arrow_elements[a] = combo
    table.arrow_elements = arrow_elements
    return table


def build_table(presentation, cap):
    return basis_and_table(complete_rewriting(presentation, cap))


def cartan_matrix(table):
    """C[i][j] = number of basis paths from vertex i to vertex j."""
    verts = table.vertices
    pos = {v: k for k, v in enumerate(verts)}
    c = [[0] * len(verts) for _ in verts]
    for p in table.basis:
        c[pos[p.source]][pos[p.target]] += 1
    return c


def radical_indices(table):
    return [i for i, p in enumerate(table.basis) if not p.is_trivial]


@dataclass
class SocleInfo:
    block_dims: dict  # (source, target) -> dimension
    vectors: list  # list of dicts basis index -> coefficient

    def vertex_dims(self, vertices):
        return {v: self.block_dims.get((v, v), 0) for v in vertices}

    @property
    def dimension(self):
        return sum(self.block_dims.values())


def socle(table):
    """Two-sided socle: everything annihilated by the radical on both sides."""
    field = table.field
    rad = radical_indices(table)
    n = table.dimension
    block_dims = {}
    vectors = []
    for (src, tgt), idxs in sorted(table.blocks_by_pair().items()):
        rows = []
        for u in idxs:
            row = []
            for b in rad:
                right = table.products[u][b]
                left = table.products[b][u]
                vec_r = [field.zero] * n
                for k, c in right.items():
                    vec_r[k] = c
                vec_l = [field.zero] * n
                for k, c in left.items():
                    vec_l[k] = c
                row.extend(vec_r)
                row.extend(vec_l)
            rows.append(row)
        if not rows:
            continue
        kernel = linalg.left_kernel(field, rows)
        if kernel:
            block_dims[(src, tgt)] = len(kernel)
            for coeffs in kernel:
                vectors.append({idxs[t]: c for t, c in enumerate(coeffs) if c})
    return SocleInfo(block_dims=block_dims, vectors=vectors)


@dataclass
class SymmetryResult:
    symmetric: bool
    functional: list | None
    kind: str  # "witness", "common-kernel" or "search-exhausted"
    detail: dict

    def __bool__(self):
        return self.symmetric


def symmetric_functional_space(table):
    """Basis of the linear functionals with phi(uv) = phi(vu) everywhere."""
    field = table.field
    n = table.dimension
    rows = set()
    for i in range(n):
        for j in range(i, n):
            row = [field.zero] * n
            for k, c in table.products[i][j].items():
                row[k] = row[k] + c
            for k, c in table.products[j][i].items():
                row[k] = row[k] - c
            if any(row):
                rows.add(tuple(row))
    if not rows:
        return linalg.identity(field, n)
    return linalg.nullspace(field, [list(r) for r in sorted(rows, key=str)])


def gram_matrix(table, functional):
    field = table.field
    n = table.dimension
    g = [[field.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            total = field.zero
            for k, c in table.products[i][j].items():
                total = total + c * functional[k]
            g[i][j] = total
    return g


def is_symmetric(table, seed=20240601, tries=40, lattice_radius=2, lattice_limit=4000):
    """Search for a symmetrizing functional with nonsingular Gram matrix.

    True comes with the functional (re-checkable).  False comes either
    with a verified obstruction (a vector killed by every Gram matrix of
    the functional space) or as a recorded search-bound exhaustion.
    """
    field = table.field
    n = table.dimension
    space = symmetric_functional_space(table)
    detail = {"space_dimension": len(space), "seed": seed, "tries": tries,
              "lattice_radius": lattice_radius, "lattice_limit": lattice_limit}
    if not space:
        return SymmetryResult(False, None, "common-kernel", dict(detail, obstruction="no symmetric functional"))
    grams = [gram_matrix(table, phi) for phi in space]
    stacked = []
    for g in grams:
        stacked.extend(g)
    common = linalg.nullspace(field, stacked)
    if common:
        detail["obstruction_vector"] = common[0]
        return SymmetryResult(False, None, "common-kernel", detail)

    def combine(coeffs):
        return [
            sum((c * phi[k] for c, phi in zip(coeffs, space)), field.zero)
            for k in range(n)
        ]

    def gram_of(coeffs):
        g = [[field.zero] * n for _ in range(n)]
        for c, base in zip(coeffs, grams):
            if not c:
                continue
            for i in range(n):
                row = base[i]
                grow = g[i]
                for j in range(n):
                    if row[j]:
                        grow[j] = grow[j] + c * row[j]
        return g

    rng = random.Random(seed)
    k = len(space)
    for _ in range(tries):
        coeffs = [field.scalar(rng.randint(-5, 5)) for _ in range(k)]
        if not any(coeffs):
            continue
        if linalg.rank(field, gram_of(coeffs)) == n:
            return SymmetryResult(True, combine(coeffs), "witness", dict(detail, coefficients=coeffs))
    count = 0
    for raw in itertools.product(range(-lattice_radius, lattice_radius + 1), repeat=k):
        count += 1
        if count > lattice_limit:
            break
        if not any(raw):
            continue
        coeffs = [field.scalar(x) for x in raw]
        if linalg.rank(field, gram_of(coeffs)) == n:
            return SymmetryResult(True, combine(coeffs), "witness", dict(detail, coefficients=coeffs))
    detail["lattice_points_checked"] = min(count, lattice_limit)
    return SymmetryResult(False, None, "search-exhausted", detail)


def verify_symmetric_functional(table, functional):
    """Independent check: functional is symmetric and its Gram is invertible."""
    field = table.field
    n = table.dimension
    for i in range(n):
        for j in range(n):
            ab = sum((c * functional[k] for k, c in table.products[i][j].items()), field.zero)
            ba = sum((c * functional[k] for k, c in table.products[j][i].items()), field.zero)
            if ab != ba:
                return False
    g = gram_matrix(table, functional)
    for i in range(n):
        for j in range(i + 1, n):
            if g[i][j] != g[j][i]:
                return False
    return bool(linalg.det(field, g))


def idempotent_algebra(table, keep):
    """The corner algebra on the kept vertices, with its block decomposition."""
    keep = set(keep)
    if not keep or not keep <= set(table.vertices):
        raise AlgebraError("keep must be a nonempty subset of the vertices")
    kept_idx = [
        i for i, p in enumerate(table.basis)
        if p.source in keep and p.target in keep
    ]
    renumber = {old: new for new, old in enumerate(kept_idx)}
    basis = tuple(table.basis[i] for i in kept_idx)
    products = [
        [
            {renumber[k]: c for k, c in table.products[i][j].items()}
            for j in kept_idx
        ]
        for i in kept_idx
    ]
    e_index = {v: renumber[table.e_index[v]] for v in sorted(keep)}
    sub = AlgebraTable(
        field=table.field,
        vertices=tuple(sorted(keep)),
        basis=basis,
        products=products,
        e_index=e_index,
        presentation=None,
        rewrite=None,
    )
    c = cartan_matrix(sub)
    verts = sub.vertices
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, va in enumerate(verts):
        for b, vb in enumerate(verts):
            if c[a][b] or c[b][a]:
                parent[find(va)] = find(vb)
    blocks = {}
    for v in verts:
        blocks.setdefault(find(v), set()).add(v)
    return sub, sorted(blocks.values(), key=sorted)


def check_associativity(table, exhaustive_limit=60, samples=100_000, seed=20240601):
    """(ab)c = a(bc) on all basis triples, or on random triples above the limit."""
    n = table.dimension
    field = table.field

    def triple_ok(i, j, k):
        left = table.mult(table.products[i][j], {k: field.one})
        right = table.mult({i: field.one}, table.products[j][k])
        return left == right

    if n <= exhaustive_limit:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
    for i, j, k in triples:
        if not triple_ok(i, j, k):
            return False, (i, j, k)
    return True, None


def dimension_checks(table):
    """Dimension == sum of Cartan entries == sum of projective dimensions."""
    c = cartan_matrix(table)
    total = sum(sum(row) for row in c)
    proj = sum(
        sum(1 for p in table.basis if p.source == v) for v in table.vertices
    )
    return table.dimension == total == proj
