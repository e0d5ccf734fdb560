# flake8: noqa
from .config import constants, Constants
from .logging import setup_file_logger, ErrorFlagHandler
from . import exceptions
from .semigroup import FiniteSemigroup, validate, adjoin_identity
from .partition import ElementPartition, PairRelation
from . import utils
from . import models
from .congruence import Congruence, congruence_generated
from . import relations
from .lattice import IntegerLattice
from . import report
