"""Gauss diagrams of long virtual knots: invariants, moves and cobordism certificates."""

from .diagram import (
    UNKNOT,
    ClosedGaussDiagram,
    DiagramError,
    Endpoint,
    GaussCodeError,
    LinkGaussDiagram,
    LongGaussDiagram,
    Role,
    closure,
    concatenate,
    inverse,
    link_to_code,
    parse_gauss_code,
    parse_link_code,
    random_diagram,
    renumber,
    serialize,
    validate,
)
from .equivalence import (
    CertificateError,
    CobordismCertificate,
    ConfigCase,
    Verdict,
    bounded_equivalence,
    dumps_certificate,
    generate_band_pass_pair,
    loads_certificate,
    ribbon_certificate,
    trivialize_inverse_pair,
    verify_certificate,
)
from .invariants import (
    ArrowPattern,
    InvariantReport,
    LaurentPoly,
    beta,
    pairing,
    report,
    v21,
    v22,
    w_polynomial,
)
from .moves import (
    BandPassSite,
    MoveError,
    MoveEvent,
    MoveKind,
    apply,
    apply_band_pass,
    band_pass_sites,
    birth,
    death,
    enumerate_moves,
    saddle,
)
from .skein import NotRealizableError, conway_c2, conway_polynomial, is_classical

__version__ = "0.1.0"
