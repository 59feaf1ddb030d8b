"""Exact lattice-path toolkit for even-index Catalan convolutions.

Paths are UD-strings ("UUDD"); signed sequences are lists of (sign, path)
tuples such as [("-", "UD")]; counts are Python ints.
"""

from ._core import (  # noqa: F401
    CapExceeded,
    DomainError,
    Error,
    OverflowError,
    ParseError,
    UnsupportedMode,
    alternating_lhs,
    binom,
    catalan,
    central_binom,
    chi,
    chi_inv,
    corollary10_sides,
    dyck_from_even_zeroed,
    enumerate_balanced,
    enumerate_dyck,
    enumerate_paths,
    even_zeroed_from_dyck,
    identities,
    is_dyck,
    is_even_zeroed,
    mixed_lhs,
    parameter,
    psi,
    psi_inv,
    reflect,
    render_decomposition,
    render_triangle,
    shapiro_lhs,
    theorem9_backward,
    theorem9_forward,
    triangle,
    triple_conv,
    verify,
    verify_range,
    x_intercepts,
    z_recursion,
)

__version__ = "0.1.0"
