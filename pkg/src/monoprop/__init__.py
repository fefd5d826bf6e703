"""Analogical proportions in monounary algebras."""

from .algebra import (
    AlgebraError,
    MonounaryAlgebra,
    OrbitInfo,
    canonical_form,
    enumerate_algebras,
    exponents,
    iterate,
    orbit_info,
    parse_algebra,
    to_dot,
    worked_example,
)
from .indexset import AP, EMPTY, Empty, IndexSet, Singleton, intersect_index
from .justsets import (
    JustSet,
    Rect,
    equal,
    format_justset,
    intersect,
    is_empty,
    just_set,
    member,
    subset,
    window_bound,
)
from .proportion import (
    ArrowQuery,
    Reason,
    Verdict,
    arrow_holds,
    brute_force_arrow,
    proportion_holds,
    solve_arrow,
    solve_proportion,
)

__version__ = "0.1.0"
