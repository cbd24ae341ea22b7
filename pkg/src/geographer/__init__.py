"""Constructive geography of minimal symplectic 4-manifolds with kappa = 1.

Everything is exact integer arithmetic: twist words acting on the first
cohomology of a surface, Wang and Gysin rank bookkeeping for circle
bundles over mapping tori, fiber sums with elliptic surfaces, and a
realization map from admissible (signature, b1, degeneracy) triples to
certified constructions. All values are immutable and all operations are
pure functions, so everything is safe to share across threads.
"""

from .bundle_manifold import (
    KODAIRA_NEG_INF,
    BundleManifoldSpec,
    InvariantCertificate,
    canonical_class,
    construct,
    kodaira_classify,
)
from .circle_bundle import (
    BundleCohomology,
    EulerClassSpec,
    bundle_b1,
    bundle_cohomology,
    default_euler_class,
    degeneracy_closed_form,
    degeneracy_oracle,
    lefschetz_pairing,
    nullity_closed_form,
    nullity_necessary_check,
    validate_euler_class,
)
from .errors import ConsistencyError, InadmissibleError
from .fiber_sum import (
    DolgachevSurface,
    EllipticSurface,
    FiberSumSpec,
    TorusWitness,
    elliptic_invariants,
    fiber_sum_invariants,
    torus_witness,
)
from .geography import (
    OpenProblem,
    Recipe,
    default_genus,
    enumerate_region,
    is_admissible,
    is_null_admissible,
    realize,
    realize_null,
    simply_connected_geography,
)
from .mapping_torus import (
    MappingTorus,
    WangData,
    bundle_wang_data,
    fiber_restrictions,
    mu_image,
    restriction_to_fiber,
    wang_cohomology,
)
from .surfaces import (
    Twist,
    TwistWord,
    a_curve,
    b_curve,
    bundle_monodromy_word,
    compose_word,
    cup_form,
    homology_action,
    intersection_form,
    invariant_subspace,
    is_symplectic,
    twist_transvection,
)
from .verify import VerificationReport, verify_bundle_grid

__version__ = "0.1.0"
