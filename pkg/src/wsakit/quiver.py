"""Biserial quiver data and the combinatorics derived from it.

A biserial quiver is a finite connected 2-regular quiver together with a
permutation f of the arrows such that f(a) starts where a ends.  The
involution a -> bar(a) swaps the two arrows leaving a common vertex, and
g = bar o f is the induced cycle permutation whose orbits carry the
weight and parameter data.  Everything here is a pure function on
immutable values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import NamedTuple

from .fields import QQ

ALL = "ALL"
NONE = "NONE"

_ID = re.compile(r"[A-Za-z0-9][A-Za-z0-9_]*\Z")


class QuiverStructureError(ValueError):
    """Raised when an operation needs structure the input does not have."""


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    @staticmethod
    def make(vertices, arrows):
        return Quiver(
            tuple(vertices),
            tuple(Arrow(*a) if not isinstance(a, Arrow) else a for a in arrows),
        )

    @cached_property
    def arrow_map(self):
        return {a.name: a for a in self.arrows}

    @cached_property
    def outgoing(self):
        out = {v: [] for v in self.vertices}
        for a in self.arrows:
            if a.source in out:
                out[a.source].append(a.name)
        return {v: tuple(sorted(names)) for v, names in out.items()}

    @cached_property
    def incoming(self):
        inc = {v: [] for v in self.vertices}
        for a in self.arrows:
            if a.target in inc:
                inc[a.target].append(a.name)
        return {v: tuple(sorted(names)) for v, names in inc.items()}

    def source(self, name):
        return self.arrow_map[name].source

    def target(self, name):
        return self.arrow_map[name].target

    def is_connected(self):
        """Connectivity of the underlying undirected graph."""
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            if a.source in adj and a.target in adj:
                adj[a.source].add(a.target)
                adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_two_regular(self):
        return all(len(self.outgoing[v]) == 2 for v in self.vertices) and all(
            len(self.incoming[v]) == 2 for v in self.vertices
        )


@dataclass(frozen=True)
class BiserialQuiverSpec:
    """A quiver with successor permutation, weights, parameters and triangles.

    weights and params may be keyed by any member of a g-orbit; border
    maps border vertices to scalars; triangles is ALL, NONE or a
    frozenset of arrow names closed under the f-orbits it meets;
    bindings hold named scalars (e.g. lambda) already resolved to field
    elements.
    """

    quiver: Quiver
    f: dict
    weights: dict
    params: dict
    triangles: object = ALL
    border_values: dict = dc_field(default_factory=dict)
    field: object = dc_field(default_factory=lambda: QQ)
    bindings: dict = dc_field(default_factory=dict)


@dataclass(frozen=True)
class OrbitData:
    """bar involution, cycle permutation g and per-arrow orbit data."""

    bar: dict
    g: dict
    orbits: tuple  # tuple of g-cycles, each rotated to start at its least arrow
    rep: dict  # arrow -> canonical orbit representative
    n: dict  # arrow -> g-orbit length
    m: dict  # arrow -> weight (constant on orbits)
    c: dict  # arrow -> parameter (constant on orbits)

    def mn(self, arrow):
        return self.m[arrow] * self.n[arrow]

    def g_inverse(self, arrow):
        cycle = self.orbits[self._orbit_index[arrow]]
        i = cycle.index(arrow)
        return cycle[i - 1]

    @cached_property
    def _orbit_index(self):
        return {a: i for i, cycle in enumerate(self.orbits) for a in cycle}


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # "structural" or "data"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple

    @property
    def ok(self):
        return not self.issues

    def structural(self):
        return [i for i in self.issues if i.kind == "structural"]

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(f"[{i.kind}] {i.message}" for i in self.issues)


@dataclass(frozen=True)
class QuiverClass:
    kind: str  # "Triangulation" or "BiserialNonTriangulation"
    f_orbits: tuple

    @property
    def is_triangulation(self):
        return self.kind == "Triangulation"


def _cycles_of(perm, domain):
    seen = set()
    cycles = []
    for start in sorted(domain):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def _bar_map(quiver):
    """Pair the two arrows leaving each vertex; None if some vertex fails."""
    bar = {}
    for v in quiver.vertices:
        out = quiver.outgoing.get(v, ())
        if len(out) != 2:
            return None
        a, b = out
        bar[a] = b
        bar[b] = a
    return bar


def triangle_arrows(spec):
    """Resolve the triangle marker into the set of arrows it covers."""
    if spec.triangles == ALL:
        return frozenset(a.name for a in spec.quiver.arrows)
    if spec.triangles == NONE:
        return frozenset()
    return frozenset(spec.triangles)


def f_orbits(spec):
    return _cycles_of(spec.f, set(spec.quiver.arrow_map))


def validate_spec(spec):
    """Check every invariant of the spec; violations become report entries."""
    issues = []
    q = spec.quiver

    def structural(msg):
        issues.append(ValidationIssue("structural", msg))

    def data(msg):
        issues.append(ValidationIssue("data", msg))

    names = [a.name for a in q.arrows]
    for ident in list(q.vertices) + names:
        if not _ID.match(str(ident)):
            structural(f"identifier {ident!r} violates the id grammar")
    if len(set(q.vertices)) != len(q.vertices):
        structural("duplicate vertex ids")
    if len(set(names)) != len(names):
        structural("duplicate arrow ids")
    vset = set(q.vertices)
    for a in q.arrows:
        if a.source not in vset or a.target not in vset:
            structural(f"arrow {a.name} has undeclared endpoint")

    if issues:
        return ValidationReport(tuple(issues))

    for v in q.vertices:
        if len(q.outgoing[v]) != 2:
            structural(f"not 2-regular: vertex {v} has {len(q.outgoing[v])} outgoing arrows")
        if len(q.incoming[v]) != 2:
            structural(f"not 2-regular: vertex {v} has {len(q.incoming[v])} incoming arrows")
    if not q.is_connected():
        structural("quiver is not connected")

    arrow_set = set(names)
    if set(spec.f.keys()) != arrow_set or set(spec.f.values()) != arrow_set:
        structural("f is not a permutation of the arrows")
    else:
        for a in names:
            if q.source(spec.f[a]) != q.target(a):
                structural(f"f({a}) = {spec.f[a]} does not start where {a} ends")

    if issues:
        return ValidationReport(tuple(issues))

    forbs = f_orbits(spec)
    orbit_of = {a: orb for orb in forbs for a in orb}
    tri = spec.triangles
    if tri not in (ALL, NONE):
        tri_set = set(tri)
        if not tri_set <= arrow_set:
            data("triangle set mentions unknown arrows")
        else:
            for a in tri_set:
                if not set(orbit_of[a]) <= tri_set:
                    data(f"triangle set is not a union of f-orbits (cut at {a})")
    for a in sorted(triangle_arrows(spec)):
        if a in orbit_of and len(orbit_of[a]) not in (1, 3):
            data(f"arrow {a} marked as triangle but its f-orbit has length {len(orbit_of[a])}")

    bar = _bar_map(q)
    g = {a: bar[spec.f[a]] for a in names}
    gorbs = _cycles_of(g, arrow_set)

    def orbit_value(mapping, orb, what, check):
        vals = {a: mapping[a] for a in orb if a in mapping}
        if not vals:
            data(f"no {what} assigned to the g-orbit of {orb[0]}")
            return None
        distinct = set(vals.values())
        if len(distinct) > 1:
            data(f"conflicting {what} values on the g-orbit of {orb[0]}: {sorted(vals)}")
            return None
        value = next(iter(distinct))
        check(value, orb)
        return value

    for key in spec.weights:
        if key not in arrow_set:
            data(f"weight keyed by unknown arrow {key!r}")
    for key in spec.params:
        if key not in arrow_set:
            data(f"parameter keyed by unknown arrow {key!r}")

    mn = {}
    for orb in gorbs:
        def check_weight(value, orb=orb):
            if not isinstance(value, int) or value < 1:
                data(f"weight on the orbit of {orb[0]} must be a positive integer")

        def check_param(value, orb=orb):
            if not value:
                data(f"parameter on the orbit of {orb[0]} must be nonzero")

        m = orbit_value(spec.weights, orb, "weight", check_weight)
        orbit_value(spec.params, orb, "parameter", check_param)
        if isinstance(m, int) and m >= 1:
            for a in orb:
                mn[a] = m * len(orb)

    tri_arrows = triangle_arrows(spec)
    for a in sorted(mn):
        if mn[a] == 1 and (a in tri_arrows or bar[a] in tri_arrows):
            data(f"m*n = 1 at {a} is only allowed when neither {a} nor {bar[a]} is a triangle arrow")

    border_vertices = {q.source(a) for a in names if spec.f.get(a) == a and q.source(a) == q.target(a)}
    for v in spec.border_values:
        if v not in border_vertices:
            data(f"border value at non-border vertex {v!r}")

    return ValidationReport(tuple(issues))


def derive_orbits(spec):
    """Compute bar, g, the g-orbits and resolved per-arrow weight data."""
    q = spec.quiver
    bar = _bar_map(q)
    if bar is None:
        raise QuiverStructureError("some vertex lacks exactly two outgoing arrows")
    names = set(q.arrow_map)
    if set(spec.f) != names:
        raise QuiverStructureError("f is not defined on every arrow")
    g = {a: bar[spec.f[a]] for a in names}
    orbits = _cycles_of(g, names)
    rep, n, m, c = {}, {}, {}, {}
    for orb in orbits:
        weight = next((spec.weights[a] for a in orb if a in spec.weights), None)
        param = next((spec.params[a] for a in orb if a in spec.params), None)
        if weight is None or param is None:
            raise QuiverStructureError(f"missing weight or parameter on the orbit of {orb[0]}")
        for a in orb:
            rep[a] = orb[0]
            n[a] = len(orb)
            m[a] = weight
            c[a] = param
    return OrbitData(bar=bar, g=g, orbits=orbits, rep=rep, n=n, m=m, c=c)


def classify_quiver(spec):
    orbs = f_orbits(spec)
    kind = "Triangulation" if all(len(o) in (1, 3) for o in orbs) else "BiserialNonTriangulation"
    return QuiverClass(kind=kind, f_orbits=orbs)


def virtual_arrows(spec, orbits):
    """Arrows removed when passing to the Gabriel quiver.

    An arrow a is virtual when m*n = 1 with a and bar(a) both outside
    the triangle set, or when m*n = 2 with bar(a) inside it.  With the
    full triangle set this is exactly the m*n = 2 rule.
    """
    tri = triangle_arrows(spec)
    out = set()
    for a in spec.quiver.arrow_map:
        mn = orbits.mn(a)
        ab = orbits.bar[a]
        if mn == 1 and a not in tri and ab not in tri:
            out.add(a)
        elif mn == 2 and ab in tri:
            out.add(a)
    return frozenset(out)


def border(spec):
    """Loops fixed by f and the vertices carrying them."""
    q = spec.quiver
    loops = frozenset(
        a for a in q.arrow_map
        if spec.f.get(a) == a and q.source(a) == q.target(a)
    )
    return loops, frozenset(q.source(a) for a in loops)
