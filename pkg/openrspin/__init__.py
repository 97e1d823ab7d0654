# open-rspin
#
# Exact symbolic checks of the open r-spin mirror theorem for x^r: the
# closed-form primary open invariants, the deformed potential W_t they
# generate, the oscillatory integrals over the dual cycles Xi_d, and the
# partition identities Lambda_I = 0 behind flatness.
#
# A numeric module (cycles) checks the explicit cycle basis by quadrature.

from .base import (
    ExpansionError, InadmissibleTwistsError, OpenRSpinError, PartitionError, QuadratureError, RegistryMismatchError,
    SeriesInversionError, __version__, __version_info__)
from .combinatorics import MultisetPartition, SetPartition, TwistMultiset, multiset_partitions, set_partitions
from .flatness import lambda_value, oracle_difference, verify_theorem_A, versal_flat_map
from .invariants import InvariantKey, admissible_multisets, enumerate_nonzero, open_invariant
from .oscillatory import FermatSignature, expand_all, expand_integral, reduce_monomial
from .poly import HbarSeries, Poly, VarRegistry, series_invert, substitute, truncate_degree
from .potential import build_deformed_potential, build_versal


try:
    from .cycles import CycleBasis, dual_basis_check
except ImportError:
    # The exact engine does not need numpy.
    pass
