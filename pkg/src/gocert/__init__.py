"""Exact combinatorics and replayable finiteness certificates for quaternionic Shimura data.

The pieces: the archimedean place cycle of a totally real field inert at p
(places), Goren-Oort stratum chains and the induced smaller data (strata),
degree bounds forced by partial Hasse invariants (hasse), rank-two Hodge
rigidity on (g, n) curves (rigidity), the isomonodromy degree ledger (ledger),
and the certificate builder, verifier and self checks (certificate, selfcheck,
cli).
"""

from ._version import __version__
from .certificate import (
    TOOL_VERSION,
    FinitenessCertificate,
    NodeRecord,
    VerifyResult,
    build_certificate,
    certificate_to_doc,
    serialize_certificate,
    verify_certificate,
    verify_document,
)
from .hasse import (
    DegreeProfile,
    HasseConstraint,
    degree_bound,
    hasse_constraints,
    max_degree_sum,
    polarization_degree_bound,
)
from .ledger import (
    AtiyahClasses,
    BundleClass,
    ContradictionVerdict,
    ExactTriple,
    atiyah_classes,
    contradiction_check,
    hom_degree,
    rr_chi,
    tangent_degree,
)
from .places import (
    PlaceCycle,
    RamificationData,
    make_ramification,
    n_tau,
    shimura_dimension,
    sigma_pow,
    split_places,
)
from .rigidity import (
    CurveType,
    HodgeSolution,
    RigidityVerdict,
    classify_filtration,
    euler_bound,
    finiteness_verdict,
    is_special,
    square_root_count,
)
from .selfcheck import SelfcheckReport, SuiteResult, selfcheck
from .strata import (
    Chain,
    Stratum,
    chain_augment,
    decompose_chains,
    fiber_dimension,
    induced_ramification,
    strata_children,
)

__all__ = [
    "__version__",
    "TOOL_VERSION",
    "PlaceCycle",
    "RamificationData",
    "make_ramification",
    "sigma_pow",
    "split_places",
    "n_tau",
    "shimura_dimension",
    "Stratum",
    "Chain",
    "decompose_chains",
    "chain_augment",
    "induced_ramification",
    "fiber_dimension",
    "strata_children",
    "HasseConstraint",
    "DegreeProfile",
    "hasse_constraints",
    "max_degree_sum",
    "degree_bound",
    "polarization_degree_bound",
    "CurveType",
    "HodgeSolution",
    "RigidityVerdict",
    "euler_bound",
    "classify_filtration",
    "square_root_count",
    "is_special",
    "finiteness_verdict",
    "BundleClass",
    "ExactTriple",
    "AtiyahClasses",
    "ContradictionVerdict",
    "hom_degree",
    "tangent_degree",
    "atiyah_classes",
    "rr_chi",
    "contradiction_check",
    "FinitenessCertificate",
    "NodeRecord",
    "VerifyResult",
    "build_certificate",
    "certificate_to_doc",
    "serialize_certificate",
    "verify_certificate",
    "verify_document",
    "SelfcheckReport",
    "SuiteResult",
    "selfcheck",
]
