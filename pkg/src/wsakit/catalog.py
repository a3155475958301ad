"""Built-in specs: the six exceptional families and two fixture hybrids.

Family names: D (disc), Lambda (tetrahedral), T (triangle), S (spherical),
D1 and D2 (the two other disc triangulations).  Fixtures: NPG, a
non-triangulation hybrid on four vertices whose string quotient carries a
band pair certifying non-polynomial growth, and H, the five-vertex hybrid
arising as the corner algebra of Lambda at the complement of one vertex.

Weight and parameter keys may be any member of a g-orbit; the entries
below use one key per orbit.
"""

from __future__ import annotations

from .fields import QQ
from .quiver import ALL, BiserialQuiverSpec, Quiver
from .covering import QuiverAutomorphism

FAMILIES = ("D", "Lambda", "T", "S", "D1", "D2")
FIXTURES = ("NPG", "H")


class CatalogError(ValueError):
    pass


def catalog_names():
    return FAMILIES + FIXTURES


def _perm_from_cycles(cycles, domain):
    perm = {}
    for cycle in cycles:
        for i, x in enumerate(cycle):
            perm[x] = cycle[(i + 1) % len(cycle)]
    for x in domain:
        perm.setdefault(x, x)
    return perm


def _spec(vertices, arrows, f_cycles, weights, params, triangles, field, bindings):
    quiver = Quiver.make(vertices, arrows)
    f = _perm_from_cycles(f_cycles, [a[0] for a in arrows])
    return BiserialQuiverSpec(
        quiver=quiver,
        f=f,
        weights=dict(weights),
        params=dict(params),
        triangles=triangles,
        border_values={},
        field=field,
        bindings=dict(bindings),
    )


def catalog(name, lam, field=None):
    """The spec of a named family or fixture, with lambda bound to `lam`."""
    field = field if field is not None else QQ
    lam = field.scalar(lam)
    if name in FAMILIES or name == "H":
        if not lam:
            raise CatalogError("lambda must be a nonzero scalar")
    one = field.one
    if name == "D":
        return _spec(
            vertices=["1", "2"],
            arrows=[
                ("alpha", "1", "1"),
                ("beta", "1", "2"),
                ("gamma", "2", "1"),
                ("sigma", "2", "2"),
            ],
            f_cycles=[("alpha", "beta", "gamma"), ("sigma",)],
            weights={"alpha": 3, "beta": 1},
            params={"alpha": lam, "beta": one},
            triangles=ALL,
            field=field,
            bindings={"lambda": lam},
        )
    if name == "Lambda":
        return _spec(
            vertices=["1", "2", "3", "4", "5", "6"],
            arrows=[
                ("nu", "1", "6"),
                ("delta", "1", "5"),
                ("epsilon", "2", "5"),
                ("rho", "2", "6"),
                ("beta", "3", "2"),
                ("sigma", "3", "1"),
                ("gamma", "4", "1"),
                ("alpha", "4", "2"),
                ("xi", "5", "3"),
                ("eta", "5", "4"),
                ("omega", "6", "4"),
                ("mu", "6", "3"),
            ],
            f_cycles=[
                ("delta", "eta", "gamma"),
                ("alpha", "rho", "omega"),
                ("xi", "beta", "epsilon"),
                ("nu", "mu", "sigma"),
            ],
            # g-orbits: (delta xi sigma), (alpha epsilon eta), (gamma nu omega), (beta rho mu)
            weights={"delta": 1, "alpha": 1, "gamma": 1, "beta": 1},
            params={"delta": one, "alpha": lam, "gamma": one, "beta": one},
            triangles=ALL,
            field=field,
            bindings={"lambda": lam},
        )
    if name == "T":
        return _spec(
            vertices=["1", "2", "3"],
            arrows=[
                ("alpha1", "1", "2"),
                ("alpha2", "2", "3"),
                ("alpha3", "3", "1"),
                ("beta1", "2", "1"),
                ("beta2", "3", "2"),
                ("beta3", "1", "3"),
            ],
            f_cycles=[("alpha1", "alpha2", "alpha3"), ("beta1", "beta3", "beta2")],
            # g-orbits: (alpha1 beta1), (alpha2 beta2), (alpha3 beta3)
            weights={"alpha1": 2, "alpha2": 2, "alpha3": 1},
            params={"alpha1": lam, "alpha2": one, "alpha3": one},
            triangles=ALL,
            field=field,
            bindings={"lambda": lam},
        )
    if name == "S":
        return _spec(
            vertices=["1", "2", "3", "4", "5", "6"],
            arrows=[
                ("alpha", "1", "2"),
                ("rho", "1", "6"),
                ("xi", "2", "5"),
                ("beta", "2", "3"),
                ("nu", "3", "5"),
                ("gamma", "3", "4"),
                ("sigma", "4", "1"),
                ("mu", "4", "6"),
                ("delta", "5", "1"),
                ("eta", "5", "2"),
                ("epsilon", "6", "4"),
                ("omega", "6", "3"),
            ],
            f_cycles=[
                ("alpha", "xi", "delta"),
                ("rho", "epsilon", "sigma"),
                ("omega", "gamma", "mu"),
                ("beta", "nu", "eta"),
            ],
            # g-orbits: (alpha beta gamma sigma), (xi eta), (epsilon mu), (delta rho omega nu)
            weights={"alpha": 1, "xi": 1, "epsilon": 1, "delta": 1},
            params={"alpha": lam, "xi": one, "epsilon": one, "delta": one},
            triangles=ALL,
            field=field,
            bindings={"lambda": lam},
        )
    if name == "D1":
        return _spec(
            vertices=["1", "3"],
            arrows=[
                ("xi", "1", "1"),
                ("beta", "1", "3"),
                ("alpha", "3", "1"),
                ("gamma", "3", "3"),
            ],
            f_cycles=[("xi", "beta", "alpha"), ("gamma",)],
            # g-orbits: (xi), (alpha beta gamma)
            weights={"xi": 2, "alpha": 2},
            params={"xi": one, "alpha": lam},
            triangles=ALL,
            field=field,
            bindings={"lambda": lam},
        )
    if name == "D2":
        return _spec(
            vertices=["1", "2", "3", "4"],
            arrows=[
                ("beta", "1", "4"),
                ("xi", "1", "2"),
                ("delta", "2", "3"),
                ("eta", "2", "1"),
                ("rho", "3", "3"),
                ("alpha", "3", "1"),
                ("gamma", "4", "4"),
                ("nu", "4", "2"),
            ],
            f_cycles=[("alpha", "xi", "delta"), ("beta", "nu", "eta"), ("rho",), ("gamma",)],
            # g-orbits: (alpha beta gamma nu delta rho), (xi eta)
            weights={"alpha": 1, "xi": 1},
            params={"alpha": lam, "xi": one},
            triangles=ALL,
            field=field,
            bindings={"lambda": lam},
        )
    if name == "NPG":
        return _spec(
            vertices=["1", "2", "3", "4"],
            arrows=[
                ("beta", "1", "4"),
                ("xi", "1", "2"),
                ("delta", "2", "3"),
                ("eta", "2", "1"),
                ("rho", "3", "3"),
                ("alpha", "3", "1"),
                ("gamma", "4", "4"),
                ("nu", "4", "2"),
            ],
            f_cycles=[("alpha", "beta", "nu", "delta"), ("xi", "eta"), ("rho",), ("gamma",)],
            # g-orbits: (alpha xi delta rho), (beta gamma nu eta)
            weights={"alpha": 1, "beta": 1},
            params={"alpha": one, "beta": one},
            triangles=frozenset({"rho", "gamma"}),
            field=field,
            bindings={},
        )
    if name == "H":
        return _spec(
            vertices=["2", "3", "4", "5", "6"],
            arrows=[
                ("epsilon", "2", "5"),
                ("rho", "2", "6"),
                ("beta", "3", "2"),
                ("sigma_t", "3", "5"),
                ("alpha", "4", "2"),
                ("nu_t", "4", "6"),
                ("xi", "5", "3"),
                ("eta", "5", "4"),
                ("omega", "6", "4"),
                ("mu", "6", "3"),
            ],
            f_cycles=[
                ("alpha", "rho", "omega"),
                ("xi", "beta", "epsilon"),
                ("eta", "nu_t", "mu", "sigma_t"),
            ],
            # g-orbits: (alpha epsilon eta), (rho mu beta), (xi sigma_t), (omega nu_t)
            weights={"alpha": 1, "rho": 1, "xi": 1, "omega": 1},
            params={"alpha": lam, "rho": one, "xi": one, "omega": one},
            triangles=frozenset({"alpha", "rho", "omega", "xi", "beta", "epsilon"}),
            field=field,
            bindings={"lambda": lam},
        )
    raise CatalogError(f"unknown catalog name {name!r} (known: {', '.join(catalog_names())})")


def catalog_action(name):
    """The finite cyclic symmetry of a catalog quiver, where one exists.

    Lambda carries a rotation of order 3 whose orbit algebra is D; S
    carries an order-2 rotation with orbit algebra T; D2 carries an
    order-2 rotation whose orbit quiver is the quiver of D1.
    """
    if name == "Lambda":
        return QuiverAutomorphism.from_cycles(
            vertex_cycles=[("1", "6", "3"), ("4", "2", "5")],
            arrow_cycles=[
                ("alpha", "epsilon", "eta"),
                ("beta", "delta", "omega"),
                ("gamma", "rho", "xi"),
                ("sigma", "nu", "mu"),
            ],
            order=3,
        )
    if name == "S":
        return QuiverAutomorphism.from_cycles(
            vertex_cycles=[("1", "3"), ("2", "4"), ("5", "6")],
            arrow_cycles=[
                ("alpha", "gamma"),
                ("beta", "sigma"),
                ("rho", "nu"),
                ("omega", "delta"),
                ("xi", "mu"),
                ("eta", "epsilon"),
            ],
            order=2,
        )
    if name == "D2":
        return QuiverAutomorphism.from_cycles(
            vertex_cycles=[("1", "2"), ("3", "4")],
            arrow_cycles=[
                ("alpha", "nu"),
                ("beta", "delta"),
                ("gamma", "rho"),
                ("xi", "eta"),
            ],
            order=2,
        )
    raise CatalogError(f"no catalog action for {name!r}")
