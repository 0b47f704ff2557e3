from .maximality import (
    CertificateEntry,
    MaximalityCertificate,
    certificate,
    find_counterexample_edge,
    is_radially_maximal,
    radial_saturation,
    radius_keeping_pair,
    validate_certificate,
)
from .witnesses import WitnessFact, WitnessReport, verify_H_witnesses
