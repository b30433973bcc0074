"""Exact invariants of contact surgery diagrams and the fillability
obstruction for Honda's structures on circle bundles."""

from ._backend import BACKEND
from .errors import (ContactD3Error, DiagramFormatError, DomainError, NonTorsion,
                     PreconditionError, ReductionIncomplete, UnsupportedCoefficient)
from .exact_arith import (Inertia, QSymMatrix, Rat, cf_evaluate, determinant, inertia,
                          negative_cf_expand, solve_linear, to_rat)
from .surgery import (ContactDiagram, FourManifoldData, LegendrianComponent, ReducedDiagram,
                      build_four_manifold, reduce_component, reduce_diagram, smooth_framing)
from .invariants import (InvariantReport, c1_squared, compute_invariants, d3, is_torsion,
                         verify_plus_one_family)

__version__ = "0.1.0"
