"""Exact frieze and Y-frieze pattern computation over pluggable semirings,
with the cluster-mutation machinery that underpins them."""

__version__ = "0.1.0"

from .cartan import (CartanMatrix, CoxeterCompanion, GlideData, NotCartan,
                     NotFiniteType, NotSymmetrizable, UnrecognizedLabelling,
                     cartan_type, classify, coxeter_companion,
                     coxeter_identity_holds, exchange_matrix, glide_data,
                     is_finite_type, is_indecomposable, parse_cartan,
                     symmetrizer, validate_cartan)
from .enumeration import (EnumerationReport, enumerate_patterns, orbit_sum,
                          theorem_bound, tropical_y_friezes)
from .frieze import (KnitFailure, PatternWindow, WindowTooNarrow, check_glide,
                     default_cols, ensemble_image, grid_le, knit, verify)
from .gca2 import (GcaParams, GcaVariableTable, RegionResult, gca_period,
                   gca_variables, phi_check, region_grid,
                   superunitary_contains)
from .mutation import (BeltTable, InvariantViolation, Seed, belt,
                       check_relations, ensemble_pullback, initial_seed,
                       is_skew_symmetrizable, matrix_mutation_class,
                       mutate_matrix, mutate_seed, pullback_to_root,
                       unitary_pattern)
from .render import (grid_text, region_csv, window_csv, window_from_json,
                     window_to_dict, window_to_json)
from .semiring import (MixedSemirings, PositiveIntegers, PositiveRationals,
                       Semiring, TropicalNonneg, TropicalSemifield, Universal,
                       ensure_same, get_semiring)
from .symbolic import (LaurentPoly, PoleAtPoint, RationalFn, divide_exact,
                       parse_rational, render_poly, render_rational)

__all__ = [name for name in dir() if not name.startswith("_")]
