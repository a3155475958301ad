"""Finite cyclic actions on presentations and their orbit algebras.

verify_action checks that a claimed automorphism is structurally
compatible, acts freely on vertices, has the stated order, and maps the
relation ideal into itself (each rotated generator must rewrite to zero).
Orbit quivers and presentations name every orbit by its least member.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .algebra import cartan_matrix, socle
from .presentation import Path, Relation, Presentation


class CoveringError(ValueError):
    pass


def _cycles_to_map(cycles):
    out = {}
    for cycle in cycles:
        for i, x in enumerate(cycle):
            out[x] = cycle[(i + 1) % len(cycle)]
    return out


@dataclass(frozen=True)
class QuiverAutomorphism:
    vertex_map: dict
    arrow_map: dict
    order: int

    @staticmethod
    def from_cycles(vertex_cycles, arrow_cycles, order):
        return QuiverAutomorphism(
            vertex_map=_cycles_to_map(vertex_cycles),
            arrow_map=_cycles_to_map(arrow_cycles),
            order=order,
        )

    def completed(self, quiver):
        """Extend partial maps: fixed points and endpoint-forced arrows.

        Unlisted vertices are fixed; an unlisted arrow maps to the unique
        arrow between the images of its endpoints when that arrow is
        unique, otherwise the action is rejected as ambiguous.
        """
        vmap = dict(self.vertex_map)
        for v in quiver.vertices:
            vmap.setdefault(v, v)
        amap = dict(self.arrow_map)
        for a in quiver.arrows:
            if a.name in amap:
                continue
            src, tgt = vmap[a.source], vmap[a.target]
            candidates = [
                b.name for b in quiver.arrows if b.source == src and b.target == tgt
            ]
            if len(candidates) != 1:
                raise CoveringError(
                    f"cannot infer the image of arrow {a.name}: "
                    f"{len(candidates)} arrows from {src} to {tgt}"
                )
            amap[a.name] = candidates[0]
        return QuiverAutomorphism(vertex_map=vmap, arrow_map=amap, order=self.order)

    def power(self, k, x, on="vertex"):
        m = self.vertex_map if on == "vertex" else self.arrow_map
        for _ in range(k % self.order):
            x = m[x]
        return x


def _perm_order(perm):
    seen = set()
    order = 1
    for start in perm:
        if start in seen:
            continue
        length = 1
        seen.add(start)
        x = perm[start]
        while x != start:
            seen.add(x)
            length += 1
            x = perm[x]
        lcm = order * length // _gcd(order, length)
        order = lcm
    return order


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@dataclass
class ActionReport:
    ok: bool
    issues: list

    def __str__(self):
        return "ok" if self.ok else "; ".join(self.issues)


def verify_action(presentation, auto, rewrite=None):
    """Structural, freeness, order and ideal-preservation checks."""
    issues = []
    quiver = presentation.quiver
    try:
        auto = auto.completed(quiver)
    except CoveringError as exc:
        return False, ActionReport(False, [str(exc)])
    vmap, amap = auto.vertex_map, auto.arrow_map
    vset, aset = set(quiver.vertices), set(quiver.arrow_map)
    if set(vmap) != vset or set(vmap.values()) != vset:
        issues.append("vertex map is not a permutation of the vertices")
    if set(amap) != aset or set(amap.values()) != aset:
        issues.append("arrow map is not a permutation of the arrows")
    if not issues:
        for a in quiver.arrows:
            img = amap[a.name]
            if quiver.source(img) != vmap[a.source] or quiver.target(img) != vmap[a.target]:
                issues.append(f"arrow {a.name} maps to {img} with incompatible endpoints")
        actual = _perm_order({**{('v', k): ('v', v) for k, v in vmap.items()},
                              **{('a', k): ('a', v) for k, v in amap.items()}})
        if actual != auto.order:
            issues.append(f"stated order {auto.order} but actual order {actual}")
        for v in quiver.vertices:
            x, length = vmap[v], 1
            while x != v:
                x = vmap[x]
                length += 1
            if length != auto.order:
                issues.append(f"action is not free on vertices: orbit of {v} has size {length}")
                break
    if not issues and rewrite is not None:
        for rel in presentation.relations:
            moved = Relation(
                tuple(
                    (coeff, Path(vmap[p.source], tuple(amap[x] for x in p.arrows), vmap[p.target]))
                    for coeff, p in rel.terms
                ),
                rel.tag,
            )
            if not rewrite.is_zero(moved):
                issues.append(f"ideal not preserved: image of {rel} does not reduce to zero")
                break
    return (not issues), ActionReport(not issues, issues)


def orbit_quiver(quiver, auto):
    """Quotient quiver; orbits are named by their least member."""
    auto = auto.completed(quiver)
    vmap, amap = auto.vertex_map, auto.arrow_map

    def orbit_rep(x, m):
        best, y = x, m[x]
        while y != x:
            if y < best:
                best = y
            y = m[y]
        return best

    vproj = {v: orbit_rep(v, vmap) for v in quiver.vertices}
    for v in quiver.vertices:
        x, length = vmap[v], 1
        while x != v:
            x = vmap[x]
            length += 1
        if length != auto.order:
            raise CoveringError("action is not free on vertices")
    aproj = {a: orbit_rep(a, amap) for a in quiver.arrow_map}
    vertices = tuple(sorted(set(vproj.values())))
    arrows = []
    for name in sorted(set(aproj.values())):
        arrow = quiver.arrow_map[name]
        arrows.append((name, vproj[arrow.source], vproj[arrow.target]))
    return type(quiver).make(vertices, arrows), vproj, aproj


def orbit_presentation(presentation, auto, rewrite=None):
    """Push the presentation down to the orbit quiver, deduplicating copies."""
    ok, report = verify_action(presentation, auto, rewrite)
    if not ok:
        raise CoveringError(f"action fails verification: {report}")
    q2, vproj, aproj = orbit_quiver(presentation.quiver, auto)
    seen = set()
    rels = []
    for rel in presentation.relations:
        terms = tuple(
            (coeff, Path(vproj[p.source], tuple(aproj[x] for x in p.arrows), vproj[p.target]))
            for coeff, p in rel.terms
        )
        key = frozenset((c, p.source, p.arrows) for c, p in terms)
        if key in seen:
            continue
        seen.add(key)
        rels.append(Relation(terms, rel.tag))
    return Presentation(q2, tuple(rels), presentation.field)


def check_galois_axioms(cover_table, base_table, auto, vertex_projection):
    """The four finite-covering axioms, at the level of hom-space dimensions.

    (i) summed hom dimensions over the group match downstairs, on both
    sides; (ii) the projection is onto the base vertices; (iii) it is
    constant on orbits; (iv) fibres are single orbits.
    """
    issues = []
    if cover_table.presentation is not None:
        auto = auto.completed(cover_table.presentation.quiver)
    cov_c = cartan_matrix(cover_table)
    base_c = cartan_matrix(base_table)
    cov_pos = {v: i for i, v in enumerate(cover_table.vertices)}
    base_pos = {v: i for i, v in enumerate(base_table.vertices)}
    proj = vertex_projection
    if set(proj.values()) != set(base_table.vertices):
        issues.append("projection is not onto the base vertices")
    order = auto.order
    vmap = auto.vertex_map
    for v in cover_table.vertices:
        if proj[vmap[v]] != proj[v]:
            issues.append(f"projection not constant on the orbit of {v}")
            break
    fibres = {}
    for v in cover_table.vertices:
        fibres.setdefault(proj[v], set()).add(v)
    for base_v, fibre in fibres.items():
        x = min(fibre)
        orbit = {x}
        y = vmap[x]
        while y != x:
            orbit.add(y)
            y = vmap[y]
        if orbit != fibre:
            issues.append(f"fibre over {base_v} is not a single orbit")
    for x in cover_table.vertices:
        for y in cover_table.vertices:
            lhs = 0
            z = x
            for _ in range(order):
                lhs += cov_c[cov_pos[z]][cov_pos[y]]
                z = vmap[z]
            rhs = base_c[base_pos[proj[x]]][base_pos[proj[y]]]
            if lhs != rhs:
                issues.append(
                    f"hom dimension mismatch at ({x}, {y}): sum over orbit {lhs} vs {rhs}"
                )
            lhs2 = 0
            z = y
            for _ in range(order):
                lhs2 += cov_c[cov_pos[x]][cov_pos[z]]
                z = vmap[z]
            if lhs2 != rhs:
                issues.append(
                    f"hom dimension mismatch at ({x}, {y}) on the right: {lhs2} vs {rhs}"
                )
    return (not issues), issues


@dataclass
class Isomorphism:
    vertex_map: dict
    arrow_images: dict  # source arrow -> combo (index -> coefficient) in target table
    matrix: list

    def summary(self):
        return {
            "vertices": self.vertex_map,
            "arrows": {a: dict(c) for a, c in self.arrow_images.items()},
        }


def _candidate_scalars(field, *presentations):
    values = {field.one, -field.one}
    for pres in presentations:
        if pres is None:
            continue
        for rel in pres.relations:
            for coeff, _ in rel.terms:
                if coeff:
                    values.add(coeff)
                    values.add(-coeff)
                    values.add(field.one / coeff)
                    values.add(-(field.one / coeff))
    return sorted(values, key=str)


def _vertex_invariant(table):
    c = cartan_matrix(table)
    soc = socle(table)
    out = {}
    for i, v in enumerate(table.vertices):
        out[v] = (
            sorted(c[i]),
            sorted(row[i] for row in c),
            c[i][i],
            soc.block_dims.get((v, v), 0),
        )
    return out, c


def find_isomorphism(src_presentation, src_table, tgt_table, max_degree=2):
    """Backtracking search for an algebra isomorphism onto the target table.

    Arrow images range over scalar multiples of single basis paths of
    length at most max_degree; candidate scalars are harvested from the
    relation coefficients.  A found map is returned only after its
    induced linear map is verified to be bijective.
    """
    if src_table.dimension != tgt_table.dimension:
        return None
    field = src_table.field
    scalars = _candidate_scalars(field, src_presentation, tgt_table.presentation)
    src_inv, src_c = _vertex_invariant(src_table)
    tgt_inv, tgt_c = _vertex_invariant(tgt_table)
    src_verts = list(src_table.vertices)
    tgt_verts = list(tgt_table.vertices)
    if len(src_verts) != len(tgt_verts):
        return None
    quiver = src_presentation.quiver
    arrows = sorted(quiver.arrow_map)
    tgt_blocks = tgt_table.blocks_by_pair()

    def relation_holds(images, rel):
        total = {}
        for coeff, path in rel.terms:
            if any(a not in images for a in path.arrows):
                return True  # not decidable yet
            combo = {tgt_table.e_index[images["@v"][path.source]]: field.one}
            for a in path.arrows:
                combo = tgt_table.mult(combo, images[a])
                if not combo:
                    break
            for k, c in combo.items():
                acc = total.get(k, field.zero) + coeff * c
                if acc:
                    total[k] = acc
                elif k in total:
                    del total[k]
        return not total

    def try_vertex_map(vmap):
        images = {"@v": vmap}

        def backtrack(pos):
            if pos == len(arrows):
                return verify(images, vmap)
            a = arrows[pos]
            arrow = quiver.arrow_map[a]
            src_v, tgt_v = vmap[arrow.source], vmap[arrow.target]
            for idx in tgt_blocks.get((src_v, tgt_v), ()):
                p = tgt_table.basis[idx]
                if not 1 <= p.length <= max_degree:
                    continue
                for s in scalars:
                    images[a] = {idx: s}
                    ok = all(
                        relation_holds(images, rel)
                        for rel in src_presentation.relations
                        if a in {x for _, pt in rel.terms for x in pt.arrows}
                    )
                    if ok:
                        result = backtrack(pos + 1)
                        if result is not None:
                            return result
            images.pop(a, None)
            return None

        return backtrack(0)

    def verify(images, vmap):
        n = src_table.dimension
        matrix = []
        for p in src_table.basis:
            if p.is_trivial:
                combo = {tgt_table.e_index[vmap[p.source]]: field.one}
            else:
                combo = {tgt_table.e_index[vmap[p.source]]: field.one}
                for a in p.arrows:
                    combo = tgt_table.mult(combo, images[a])
                    if not combo:
                        break
            row = [field.zero] * n
            for k, c in combo.items():
                row[k] = c
            matrix.append(row)
        if not linalg.is_invertible(field, matrix):
            return None
        return Isomorphism(
            vertex_map=dict(vmap),
            arrow_images={a: dict(images[a]) for a in arrows},
            matrix=matrix,
        )

    for perm in itertools.permutations(tgt_verts):
        vmap = dict(zip(src_verts, perm))
        if any(src_inv[v] != tgt_inv[vmap[v]] for v in src_verts):
            continue
        if any(
            src_c[i][j] != tgt_c[tgt_verts.index(vmap[src_verts[i]])][tgt_verts.index(vmap[src_verts[j]])]
            for i in range(len(src_verts))
            for j in range(len(src_verts))
        ):
            continue
        found = try_vertex_map(vmap)
        if found is not None:
            return found
    return None


def verify_isomorphism(src_presentation, src_table, tgt_table, iso):
    """Independent re-check of a found isomorphism."""
    field = src_table.field
    vmap = iso.vertex_map
    for rel in src_presentation.relations:
        total = {}
        for coeff, path in rel.terms:
            combo = {tgt_table.e_index[vmap[path.source]]: field.one}
            for a in path.arrows:
                combo = tgt_table.mult(combo, iso.arrow_images[a])
            for k, c in combo.items():
                acc = total.get(k, field.zero) + coeff * c
                if acc:
                    total[k] = acc
                elif k in total:
                    del total[k]
        if total:
            return False
    return linalg.is_invertible(field, iso.matrix)
