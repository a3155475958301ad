"""Relation ideals for the algebras built from a biserial quiver spec.

Paths compose left to right: in the product a*f(a) the arrow a is
traversed first.  Each generated relation keeps a tag naming the schema
that produced it ("i", "i'", "ii", "iii", "iv", "v", "L"), so failures
downstream can name their origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple
import warnings

from .quiver import (
    classify_quiver,
    derive_orbits,
    triangle_arrows,
    validate_spec,
    border as border_of,
    virtual_arrows,
)


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Path:
    source: str
    arrows: tuple
    target: str

    @property
    def length(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    def __str__(self):
        if self.is_trivial:
            return f"e_{self.source}"
        return "*".join(self.arrows)


def make_path(quiver, arrows, vertex=None):
    """Build a path from consecutive arrows; vertex names a trivial path."""
    arrows = tuple(arrows)
    if not arrows:
        if vertex is None:
            raise PresentationError("trivial path needs a vertex")
        return Path(vertex, (), vertex)
    src = quiver.source(arrows[0])
    at = src
    for a in arrows:
        if quiver.source(a) != at:
            raise PresentationError(f"arrows do not compose at {a}")
        at = quiver.target(a)
    return Path(src, arrows, at)


@dataclass(frozen=True)
class Relation:
    """Formal combination of parallel paths with nonzero coefficients."""

    terms: tuple  # tuple of (coefficient, Path)
    tag: str

    def __post_init__(self):
        if not self.terms:
            raise PresentationError("relation with no terms")
        src = self.terms[0][1].source
        tgt = self.terms[0][1].target
        for coeff, path in self.terms:
            if not coeff:
                raise PresentationError("zero coefficient in relation")
            if path.source != src or path.target != tgt:
                raise PresentationError("relation terms are not parallel")

    def __str__(self):
        parts = [f"{coeff}*{path}" for coeff, path in self.terms]
        return f"({self.tag}) " + " + ".join(parts)


@dataclass(frozen=True)
class Presentation:
    quiver: object
    relations: tuple
    field: object

    @property
    def admissible(self):
        """Whether every generator lies in the square of the arrow ideal."""
        return all(
            path.length >= 2 for rel in self.relations for _, path in rel.terms
        )

    def monomial(self):
        return all(len(rel.terms) == 1 for rel in self.relations)


class StringQuotient(NamedTuple):
    full: Presentation
    gabriel: Presentation
    virtual: frozenset


def _g_walk(orbits, arrow, length):
    walk = []
    x = arrow
    for _ in range(length):
        walk.append(x)
        x = orbits.g[x]
    return walk


def a_path(orbits, quiver, arrow):
    """The g-orbit path from `arrow` of length m*n - 1."""
    mn = orbits.mn(arrow)
    if mn < 2:
        raise PresentationError(f"m*n = 1 at {arrow}: no path of length 0 with a leading arrow")
    return make_path(quiver, _g_walk(orbits, arrow, mn - 1))


def b_path(orbits, quiver, arrow):
    """The full g-orbit cycle from `arrow`, of length m*n."""
    mn = orbits.mn(arrow)
    return make_path(quiver, _g_walk(orbits, arrow, mn))


def _require_valid(spec):
    report = validate_spec(spec)
    if not report.ok:
        raise PresentationError(f"invalid spec:\n{report}")


def _zero_relation_ii(spec, orbits, a):
    """Path a f(a) g(f(a)) as a monomial relation."""
    fa = spec.f[a]
    return make_path(spec.quiver, (a, fa, orbits.g[fa]))


def _zero_relation_iii(spec, orbits, a):
    ga = orbits.g[a]
    return make_path(spec.quiver, (a, ga, spec.f[ga]))


def _ii_exception_wsa(spec, orbits, virt, a):
    ab = orbits.bar[a]
    if ab in virt:
        return True
    return spec.f[ab] in virt and orbits.m[ab] == 1 and orbits.n[ab] == 3


def _iii_exception_wsa(spec, orbits, virt, a):
    fa = spec.f[a]
    if fa in virt:
        return True
    return spec.f[fa] in virt and orbits.m[fa] == 1 and orbits.n[fa] == 3


def _commutation_relation(spec, orbits, a, border_loops, use_border):
    """Schema (i) for arrow a, or (i') when a is a border loop."""
    field = spec.field
    quiver = spec.quiver
    ab = orbits.bar[a]
    product = make_path(quiver, (a, spec.f[a]))
    terms = [(field.one, product), (-orbits.c[ab], a_path(orbits, quiver, ab))]
    tag = "i"
    if use_border and a in border_loops:
        b_val = spec.border_values.get(quiver.source(a), field.zero)
        if b_val:
            terms.append((-b_val, b_path(orbits, quiver, ab)))
            tag = "i'"
    return Relation(tuple(terms), tag)


def _wsa_relations(spec, use_border):
    orbits = derive_orbits(spec)
    quiver = spec.quiver
    arrows = sorted(quiver.arrow_map)
    virt = virtual_arrows(spec, orbits)
    border_loops, _ = border_of(spec)
    rels = []
    for a in arrows:
        rels.append(_commutation_relation(spec, orbits, a, border_loops, use_border))
    for a in arrows:
        if not _ii_exception_wsa(spec, orbits, virt, a):
            rels.append(Relation(((spec.field.one, _zero_relation_ii(spec, orbits, a)),), "ii"))
    for a in arrows:
        if not _iii_exception_wsa(spec, orbits, virt, a):
            rels.append(Relation(((spec.field.one, _zero_relation_iii(spec, orbits, a)),), "iii"))
    return Presentation(quiver, tuple(rels), spec.field)


def _check_wsa_preconditions(spec, allow_border):
    _require_valid(spec)
    if not classify_quiver(spec).is_triangulation:
        raise PresentationError("not a triangulation quiver")
    if len(spec.quiver.vertices) < 2:
        raise PresentationError("local algebras (one vertex) are rejected")
    orbits = derive_orbits(spec)
    for a in spec.quiver.arrow_map:
        if orbits.mn(a) < 2:
            raise PresentationError(f"m*n = 1 at arrow {a}")
    if triangle_arrows(spec) != frozenset(spec.quiver.arrow_map):
        raise PresentationError("triangle set must be the full arrow set")
    if not allow_border and any(spec.border_values.values()):
        raise PresentationError("border function must vanish; use the socle-deformed builder")


def build_wsa(spec):
    """Relations (i), (ii), (iii) of the weighted surface algebra."""
    _check_wsa_preconditions(spec, allow_border=False)
    return _wsa_relations(spec, use_border=False)


def build_socle_deformed(spec):
    """As build_wsa, with (i) replaced by (i') on border loops."""
    _check_wsa_preconditions(spec, allow_border=True)
    border_loops, border_vertices = border_of(spec)
    for v in spec.border_values:
        if v not in border_vertices:
            raise PresentationError(f"border value at non-border vertex {v}")
    if any(spec.border_values.values()) and spec.field.char != 2:
        warnings.warn(
            "nonzero border function outside characteristic 2; the deformation "
            "is isomorphic to the undeformed algebra there",
            stacklevel=2,
        )
    return _wsa_relations(spec, use_border=True)


def build_hybrid(spec):
    """Hybrid relations (i)-(v) for the spec's triangle set."""
    _require_valid(spec)
    if len(spec.quiver.vertices) < 2:
        raise PresentationError("local algebras (one vertex) are rejected")
    orbits = derive_orbits(spec)
    quiver = spec.quiver
    field = spec.field
    arrows = sorted(quiver.arrow_map)
    tri = triangle_arrows(spec)
    virt = virtual_arrows(spec, orbits)
    rels = []
    for a in arrows:
        product = make_path(quiver, (a, spec.f[a]))
        if a in tri:
            ab = orbits.bar[a]
            rels.append(
                Relation(((field.one, product), (-orbits.c[ab], a_path(orbits, quiver, ab))), "i")
            )
        else:
            rels.append(Relation(((field.one, product),), "i"))
    for a in arrows:
        ab = orbits.bar[a]
        exception = (
            a in tri
            and ab in tri
            and (
                ab in virt
                or (spec.f[ab] in virt and orbits.m[ab] == 1 and orbits.n[ab] == 3)
            )
        )
        if not exception:
            rels.append(Relation(((field.one, _zero_relation_ii(spec, orbits, a)),), "ii"))
    for a in arrows:
        ga = orbits.g[a]
        fa = spec.f[a]
        exception = (
            a in tri
            and ga in tri
            and (
                fa in virt
                or (spec.f[fa] in virt and orbits.m[fa] == 1 and orbits.n[fa] == 3)
            )
        )
        if not exception:
            rels.append(Relation(((field.one, _zero_relation_iii(spec, orbits, a)),), "iii"))
    seen_pairs = set()
    for a in arrows:
        ab = orbits.bar[a]
        pair = frozenset((a, ab))
        if pair in seen_pairs:
            continue
        seen_pairs.add(pair)
        # the two cycle paths start with distinct arrows, so no collapsing
        ba, bb = b_path(orbits, quiver, a), b_path(orbits, quiver, ab)
        rels.append(Relation(((orbits.c[a], ba), (-orbits.c[ab], bb)), "iv"))
    if set(arrows) <= virt:
        for a in arrows:
            ba = b_path(orbits, quiver, a)
            rels.append(Relation(((field.one, make_path(quiver, ba.arrows + (a,))),), "v"))
            bg = b_path(orbits, quiver, orbits.g[a])
            rels.append(Relation(((field.one, make_path(quiver, (a,) + bg.arrows)),), "v"))
    return Presentation(quiver, tuple(rels), field)


def build_string_quotient(spec):
    """The monomial ideal generated by the products a f(a) and the paths A_a.

    Returns the presentation on the full quiver together with the
    presentation on the quiver with virtual arrows removed, whose
    generators are the same monomials not meeting a virtual arrow.
    """
    _require_valid(spec)
    orbits = derive_orbits(spec)
    quiver = spec.quiver
    field = spec.field
    arrows = sorted(quiver.arrow_map)
    for a in arrows:
        if orbits.mn(a) < 2:
            raise PresentationError(f"string quotient needs m*n >= 2 (violated at {a})")
    rels = []
    for a in arrows:
        rels.append(Relation(((field.one, make_path(quiver, (a, spec.f[a]))),), "L"))
    for a in arrows:
        rels.append(Relation(((field.one, a_path(orbits, quiver, a)),), "L"))
    full = Presentation(quiver, tuple(rels), field)

    virt = virtual_arrows(spec, orbits)
    kept_arrows = tuple(a for a in quiver.arrows if a.name not in virt)
    gq = type(quiver)(quiver.vertices, kept_arrows)
    grels = []
    for a in arrows:
        if a in virt or spec.f[a] in virt:
            continue
        grels.append(Relation(((field.one, make_path(gq, (a, spec.f[a]))),), "L"))
    for a in arrows:
        if a in virt:
            continue
        path = a_path(orbits, quiver, a)
        if any(x in virt for x in path.arrows):
            continue
        grels.append(Relation(((field.one, make_path(gq, path.arrows)),), "L"))
    gabriel = Presentation(gq, tuple(grels), field)
    return StringQuotient(full=full, gabriel=gabriel, virtual=virt)


def _expand_term(quiver, field, coeff, path, arrow, replacement_terms):
    """Distribute a substitution for one arrow through a single term."""
    if arrow not in path.arrows:
        return [(coeff, path)]
    pieces = [(coeff, ())]
    for x in path.arrows:
        if x != arrow:
            pieces = [(c, w + (x,)) for c, w in pieces]
        else:
            pieces = [
                (c * rc, w + rw)
                for c, w in pieces
                for rc, rw in replacement_terms
            ]
    return [(c, make_path(quiver, w, vertex=path.source)) for c, w in pieces]


def gabriel_presentation(pres, virtuals):
    """Eliminate each virtual arrow via a relation expressing it as longer paths.

    Arrows are processed in canonical order; after every substitution the
    relation list is renormalized (parallel terms combined, zero
    relations and exact duplicates dropped).
    """
    field = pres.field
    quiver = pres.quiver
    relations = list(pres.relations)
    remaining = sorted(virtuals)
    for v in remaining:
        defining = None
        for rel in relations:
            arrow_terms = [(c, p) for c, p in rel.terms if p.arrows == (v,)]
            other_terms = [(c, p) for c, p in rel.terms if p.arrows != (v,)]
            if len(arrow_terms) == 1 and other_terms and all(
                v not in p.arrows and p.length >= 2 for _, p in other_terms
            ):
                defining = (rel, arrow_terms[0], other_terms)
                break
        if defining is None:
            raise PresentationError(f"virtual arrow {v} admits no eliminating relation")
        rel0, (cv, _), others = defining
        # v = sum of (-c/cv) p over the other terms
        replacement = [(-c / cv, p.arrows) for c, p in others]
        new_relations = []
        for rel in relations:
            if rel is rel0:
                continue
            expanded = {}
            for coeff, path in rel.terms:
                for c2, p2 in _expand_term(quiver, field, coeff, path, v, replacement):
                    key = (p2.source, p2.arrows, p2.target)
                    expanded[key] = expanded.get(key, field.zero) + c2
            terms = tuple(
                (c, Path(*key)) for key, c in sorted(expanded.items()) if c
            )
            if terms:
                new_relations.append(Relation(terms, rel.tag))
        relations = new_relations
    kept = tuple(a for a in quiver.arrows if a.name not in virtuals)
    new_quiver = type(quiver)(quiver.vertices, kept)
    seen = set()
    final = []
    for rel in relations:
        key = frozenset((c, p.arrows, p.source) for c, p in rel.terms)
        if key in seen:
            continue
        seen.add(key)
        final.append(rel)
    out = Presentation(new_quiver, tuple(final), field)
    if not out.admissible:
        raise PresentationError("elimination left a generator outside the arrow-ideal square")
    return out
