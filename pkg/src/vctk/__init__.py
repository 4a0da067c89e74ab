"""vctk: exact-arithmetic toolkit for Milnor lattices and vanishing cycles.

Everything is integer or rational arithmetic; no floating point anywhere.
The public surface groups into:

- lattice / moves: bilinear lattices, distinguished bases, braid and sign
  moves, isometries, Coxeter elements in both coordinate frames;
- seifert: exact conversions among intersection, Seifert, and monodromy
  matrices, plus the triangular-splitting product;
- catalog: named diagrams (A/D/E, Pham, Gabrielov E8, T/S star graphs),
  suspension, tensor products, chain-singularity builders, reference
  constants;
- analysis: characteristic polynomials, quasi-unipotence, trace reports,
  vanishing-lattice axioms, root enumeration, reflection-group closures;
- orbits: brute-force base enumeration against a Coxeter element, braid
  orbit closure, diagram statistics, quasi-Coxeter surveys;
- cli / service: the `vctk` command and the JSON-over-HTTP session service.
"""

from .analysis import (
    GroupClosureReport,
    TraceReport,
    VanishingLatticeReport,
    certified_root_bound,
    complete_roots,
    group_closure,
    is_quasi_unipotent,
    root_candidates,
    trace_checks,
    vanishing_lattice_check,
)
from .catalog import (
    CatalogEntry,
    MatrixTriple,
    ToeplitzSeifert,
    brieskorn_pham,
    catalog_entry,
    catalog_names,
    ll_degree,
    orlik_randell,
    pham_seifert,
    stabilize,
    stored_constant,
    tensor_seifert,
)
from .diagram import DiagramGraph
from .errors import CapExceeded, InputError, VctkError
from .lattice import BilinearLattice, Cycle, as_cycle
from .moves import (
    Alpha,
    Beta,
    BraidWord,
    DistinguishedBasis,
    Kappa,
    WeakAlpha,
    WeakBeta,
    format_word,
    parse_word,
    reflect,
    reflection_matrix,
    standard_moves,
)
from .orbits import (
    DiagramStats,
    OrbitReport,
    QuasiCoxeterReport,
    braid_orbit,
    diagram_stats,
    enumerate_bases,
    quasi_coxeter_survey,
)
from .polynomials import IntPoly, char_poly, cyclotomic
from .seifert import (
    SeifertMatrix,
    bourbaki_coxeter,
    intersection_from_seifert,
    monodromy_from_seifert,
    seifert_from_intersection,
    seifert_from_monodromy,
)
from .suites import run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
