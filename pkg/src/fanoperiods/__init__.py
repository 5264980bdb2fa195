"""Exact-arithmetic workbench for mirror periods of Fano varieties.

Three capabilities share one rational-arithmetic kernel:

* classical periods of Laurent-polynomial mirrors (`laurent`),
* superpotential charts and their lattice polytopes for Grassmannians
  built from a rectangles-indexed network (`young`, `grassmannian`,
  `polytope`),
* reconstruction of two-point invariants and theta structure constants
  from a quantum period sequence (`frobenius`).

The `cli` module exposes the same capabilities as the `fanoperiods`
command; `selfcheck.run_all` runs the whole invariant battery.
"""

from fanoperiods.frobenius import (
    PeriodSequence,
    StructureTable,
    ThetaSeries,
    associativity_check,
    extend_series,
    reconstruct_N1,
    structure_table,
)
from fanoperiods.grassmannian import (
    build_rectangles_network,
    flow_polynomial,
    grass_periods,
    nobody_polytope,
    superpotential_chart,
    verify_valuations,
)
from fanoperiods.laurent import LaurentPolynomial, QPolynomial, classical_periods
from fanoperiods.polytope import geometry_flags, lattice_point_count
from fanoperiods.young import BoxContext, YoungDiagram, schur_dimension

__version__ = "0.1.0"

__all__ = [
    "BoxContext",
    "LaurentPolynomial",
    "PeriodSequence",
    "QPolynomial",
    "StructureTable",
    "ThetaSeries",
    "YoungDiagram",
    "associativity_check",
    "build_rectangles_network",
    "classical_periods",
    "extend_series",
    "flow_polynomial",
    "geometry_flags",
    "grass_periods",
    "lattice_point_count",
    "nobody_polytope",
    "reconstruct_N1",
    "schur_dimension",
    "structure_table",
    "superpotential_chart",
    "verify_valuations",
    "__version__",
]
