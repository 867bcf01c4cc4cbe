"""Exact spectra of isolated hypersurface singularities and the bounds they
imply on how many such singularities a projective hypersurface can carry."""

from .bounds import (
    BoundReport,
    LinearConstraint,
    compare_methods,
    conical_constraints,
    conical_max_r,
    conical_reduced_spectrum,
    conjecture_sweep,
    mixed_feasible,
    naive_bound,
    varchenko_constraint,
    varchenko_max_r,
    yomdin_spectrum,
)
from .catalog import GermConfiguration, GermSpec, InvalidGerm, named, parse_configuration, parse_germ
from .errors import BoundError, InsufficientData, NoBound, NotApplicable
from .monodromy import CycloPoly, eigenvalue_max_r, m_reg
from .spectrum import Spectrum, beta, gamma, star, star_power

__version__ = "0.1.0"
