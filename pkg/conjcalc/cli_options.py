from enum import Enum
from conjcalc.verify import suites


class RelationChoices(str, Enum):
    SIM_P1 = "sim_p1"
    SIM_P = "sim_p"
    SIM_N = "sim_n"
    SIM_O = "sim_o"
    SIM_W = "sim_w"
    SIM_C = "sim_c"
    SIM_STAR1 = "sim_star1"
    SIM_S1 = "sim_s1"
    SIM_S = "sim_s"
    ALL = "all"


class ReesRelationChoices(str, Enum):
    SIM_P1 = "sim_p1"
    SIM_P = "sim_p"
    SIM_S = "sim_s"


class GraphRelationChoices(str, Enum):
    SIM_P = "sim_p"
    SIM_S = "sim_s"


class FormatChoices(str, Enum):
    JSON = "json"
    TEXT = "text"
    DOT = "dot"


class SuiteChoices(str, Enum):
    """Suite names as typed on the command line

    Member names match the `Suites` registry below.
    """

    LEAST_COMM = "least-comm"
    QUOTIENT = "quotient"
    CLOSURE = "closure"
    REES = "rees"
    GROUPS = "groups"
    TRANSFORMS = "transforms"
    WORDS = "words"
    GRAPH = "graph"
    NATMAPS = "natmaps"
    TRACE = "trace"
    CONTAINMENT = "containment"
    ALL = "all"


class Suites(Enum):
    LEAST_COMM = suites.least_comm
    QUOTIENT = suites.quotients
    CLOSURE = suites.closures
    REES = suites.rees
    GROUPS = suites.groups
    TRANSFORMS = suites.transforms
    WORDS = suites.word_relations
    GRAPH = suites.graphs
    NATMAPS = suites.natmaps
    TRACE = suites.trace
    CONTAINMENT = suites.containment
