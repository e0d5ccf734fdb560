# flake8: noqa
from .groups import FiniteGroup, symmetric_group, small_groups
from .rees import ReesSemigroup, ReesTriple, rees_normalize
from .transforms import FiniteMap, MapKind, monoid_cayley
from . import words
from .graph_inverse import DirectedGraph, GraphInverseSemigroup
from .nat_maps import EventuallyShiftMap
from .ring_trace import CommutatorLattice, matrix_unit_semigroup
