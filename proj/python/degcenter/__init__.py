"""Second-order averaging analysis of cubic perturbations of a degenerate center."""

from ._core import (
    AccuracyError,
    AveragedPolynomial,
    Coefficients,
    ConsistencyError,
    FirstOrderAverage,
    ParseError,
    RootReport,
    SectionLostError,
    StiffnessError,
    StructureError,
    __version__,
    bilinear_table,
    builtin_system,
    center_integrals,
    compute_G20,
    eval_perturbed,
    first_integral,
    first_order_structure,
    fit_v_polynomial,
    fixed_points,
    limit_cycle_report,
    orbit_trace,
    polar_rhs_series,
    positive_roots,
    return_map,
    solve_first_order,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
