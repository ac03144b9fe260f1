"""Cyclic-quiver invariant theory toolkit."""

from ._core import (  # noqa: F401
    DoubleRepPoint,
    GaugeElement,
    InputError,
    NotGenericError,
    QuiverError,
    QuiverShape,
    RepPoint,
    __version__,
    act_gauge,
    act_gauge_double,
    canonical_form,
    canonicalize_double,
    charpoly_invariant,
    cycle_product,
    e_zm,
    embed_l,
    embed_ll,
    generation_check,
    is_generic,
    jacobian_check,
    matrix,
    molien_L,
    molien_LL,
    molien_closed_form_L,
    moment_residual_norm,
    orbit_equal,
    p_rs,
    phi_identity_residual,
    random_gauge,
    random_rep,
    random_z_point,
    rho_identity_residual,
    trace_word,
    z1_normal_form,
)
