from .series_core import (CenterMismatchError, DerivativeBudgetError, MulCounter, NonFiniteError,
                          SeriesError, TruncatedSeries)
from .fde_model import Problem, ProblemError, ProblemKind, exact_u
from .rdtm_engine import SpectrumSequence, build_spectra, partial_sum_at, solve_grid
from .decomposition_engines import TPolyComponent, LaplaceImage, build_components, assemble_partial_sum
from .bench_harness import METHODS, ErrorRow, FrontError, TimingRecord, error_table, figure_series, timing_run
