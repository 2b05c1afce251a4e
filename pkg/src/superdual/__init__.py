"""superdual: exact unitarity classification for su(p,q|m) highest-weight
representations, duality transformations on weight lattices, non-compact
Young diagrams, shortening structure, and an oscillator-module oracle.

All values are immutable and all operations pure functions; concurrent use
on independent inputs is safe.
"""

from .gradings import (
    Grading,
    RealFormSignature,
    admits_nontrivial_unitary,
    canonical_form,
    extended_diagram,
    parse_grading,
    render_grading,
    signature,
)
from .labels import (
    RepLabel,
    Verdict,
    classify_contravariant,
    classify_covariant,
    classify_supq,
    classify_supqm,
    grading_distinguished,
    grading_pmq,
    label_from_weight,
    mack_classify,
    psu_central_charge,
    weight_from_label,
)
from .lattice import (
    PlaquetteReport,
    WeightLattice,
    build_weight_lattice,
    duality_step,
    plaquette_check,
    weight_in_grading,
)
from .diagrams import (
    ExtendedYoungDiagram,
    NonCompactYoungDiagram,
    Realization,
    THookDiagram,
    carve,
    extend,
    fat_hook,
    from_thook,
    iso_move_lower,
    iso_move_upper,
    read_weight,
    realize,
    render,
    to_thook,
)
from .partitions import Partition
from .shortening import (
    ShorteningProfile,
    bps_type_22_4,
    can_recombine,
    dolan_osborn,
    shortening_profile,
)
from .weights import FundamentalWeight, dynkin_from_fundamental, outer_dual

__version__ = "0.1.0"
