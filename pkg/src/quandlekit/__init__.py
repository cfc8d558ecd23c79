"""quandlekit: exact knot invariants through quandles.

Diagrams present quandles; linearizing the presentations yields the
(extended) Alexander module over Z[A^{\\pm 1}]; finite quandles receive
colorings; modules over finite quandles yield derivation groups, a
refinement aggregated per coloring into the derivation spectrum.
"""

from ._kernel import backend as kernel_backend
from .rings import (
    KeiRingElem,
    LaurentPoly,
    RackRingElem,
    format_poly,
    keiring_mul,
    laurent_eval,
    laurent_gcd,
    laurent_mul,
    laurent_normalize,
    parse_poly,
    rackring_mul,
)
from .linalg import (
    AbEquation,
    FiniteAbGroup,
    LaurentMatrix,
    elementary_ideal_gcd,
    invariant_factors_rational,
    minor,
    snf_int,
    solve_abelian,
    solve_abelian_with_witnesses,
)
from .diagram import (
    BraidWord,
    Crossing,
    Diagram,
    PDCode,
    PDError,
    WirtingerPresentation,
    braid_closure,
    braid_components,
    braid_to_pd,
    catalog_entry,
    catalog_get,
    catalog_names,
    parse_braid,
    parse_pd,
    resolve_crossings,
    wirtinger,
)
from .quandle import (
    AxiomReport,
    Coloring,
    FiniteQuandle,
    alexander_quandle,
    canonical_automorphism,
    check_axioms,
    colorings,
    dihedral,
    is_valid_coloring,
    orbits,
    trivial_quandle,
)
from .alexander import (
    ExtendedModule,
    alexander_polynomial,
    burau,
    burau_det,
    extended_module,
    knot_determinant,
    mirror_diagram,
    presentation_matrix,
)
from .beck import (
    ABPresentation,
    DerivationGroup,
    ModuleReport,
    QuandleModule,
    ab_presentation,
    check_module,
    constant_module,
    derivation_spectrum,
    derivations,
    extension,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
