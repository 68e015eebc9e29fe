"""H- and A-designs on the hypercube Q_q^n.

Codewords are passed around in their text form: one character per position
('0'-'9' or '*') when q <= 10, comma-separated tokens otherwise.
"""

from ._hcd import (
    Design,
    DesignParams,
    GuardExceeded,
    HcdError,
    HypergraphError,
    Kind,
    MalformedDesign,
    ParseError,
    Partition,
    VerificationFailed,
    construct_i,
    construct_ii,
    construct_iii,
    corollary2,
    count_a_designs_via_permanent,
    count_designs,
    count_h_designs_via_permanent,
    covers,
    enumerate_faces,
    from_steiner,
    hamming_distance,
    mds_distance2,
    partition_into_designs,
    permanent,
    search_design,
    subfaces,
    superfaces,
    weight,
)

__version__ = "0.1.0"


def H(n, q, w, t):
    """Parameters of an H(n,q,w,t) design."""
    return DesignParams(Kind.H, n, q, w, t)


def A(n, q, w, t):
    """Parameters of an A(n,q,w,t) design."""
    return DesignParams(Kind.A, n, q, w, t)


__all__ = [name for name in dir() if not name.startswith("_")]
