"""wsakit: exact computations with weighted surface algebras and their relatives.

The toolkit builds bound quiver algebras from biserial quiver data,
computes exact linear-algebra invariants (bases, Cartan matrices, socles,
symmetrizing forms, syzygies), analyses string quotients (strings, bands,
non-polynomial-growth certificates) and verifies finite Galois coverings.
All arithmetic is exact, over the rationals or a prime field.
"""

__version__ = "0.1.0"

from .fields import Rationals, PrimeField, field_from_name
from .quiver import (
    Arrow,
    Quiver,
    BiserialQuiverSpec,
    OrbitData,
    ValidationReport,
    validate_spec,
    derive_orbits,
    classify_quiver,
    virtual_arrows,
    border,
    triangle_arrows,
    ALL,
    NONE,
)
from .presentation import (
    Path,
    Relation,
    Presentation,
    a_path,
    b_path,
    build_wsa,
    build_socle_deformed,
    build_hybrid,
    build_string_quotient,
    gabriel_presentation,
)
from .catalog import catalog, catalog_names, catalog_action
from .rewriting import RewriteSystem, complete_rewriting, spec_cap
from .algebra import (
    AlgebraTable,
    basis_and_table,
    build_table,
    cartan_matrix,
    socle,
    is_symmetric,
    idempotent_algebra,
)

__all__ = [name for name in dir() if not name.startswith("_")]
