"""Block diagonal matching field ideals and their cellular resolutions."""

from .complexes import (CellComplex, ResolutionReport, build_complex,
                        skeleton_graph, verify_d_squared, verify_resolution)
from .decomposition import (DecompositionFunction, b_ell, b_generic,
                            verify_exchange, verify_set_containment)
from .matching import (Column, ColumnType, column_for_subset, generators,
                       is_valid_column, type_of)
from .monomials import Monomial, Partition, Variable
from .oracle import (HilbertSeries, LcmLattice, closed_form_Q, hilbert_series,
                     koszul_betti, lcm_lattice, multiplicity,
                     projdim_from_betti, total_betti)
from .quotients import (LQCertificate, LQFailure, NotLinear, OrderedGenerators,
                        betti_from_sets, colon_set, in_power_ideal,
                        is_power_generator, power_generators,
                        verify_linear_quotients)
from .runner import (DiagonalReport, InstanceReport, SweepReport, compositions,
                     diagonal_invariants, sweep, verify_instance)
from .tableaux import (Tableau, canonical_rep, compare_generators,
                       compare_tableaux, representations, simplify,
                       simplify_pairwise)

__version__ = "0.1.0"
