from pydantic import BaseSettings
import logging
import datetime


class Constants(BaseSettings):
    COMMON_TIMESTAMP: str = (
        # Windows doesn't like colons in filenames
        f"{datetime.datetime.utcnow().isoformat().replace(':', '-')}"
    )

    # Size limits for brute-force oracles
    MAX_ORDER: int = 512
    COUPLED_WITNESS_LIMIT: int = 64  # ~n, ~w, ~c searches
    S1_BOUND_L: int = 6
    VERIFY_BOUND_L: int = 4  # ~s1 bound used by the acceptance suites
    S1_STATE_CAP: int = 2**24

    # Randomised checks
    DEFAULT_SEED: int = 7
    PROPERTY_TEST_COUNT: int = 1000
    SAMPLED_CONGRUENCES: int = 10
    RATIONAL_ORACLE_MAX_DIM: int = 64  # sympy membership cross-check

    # Words
    WORD_ORACLE_MAX_LENGTH: int = 8
    GENERATION_TEST_MAX_LENGTH: int = 8

    # Graph inverse semigroups
    GIS_BALL_RADIUS: int = 4
    GIS_ORACLE_RADIUS: int = 6
    GIS_SAMPLE_TRIPLES: int = 10000

    # Maps of the naturals
    NATMAP_MAX_TABLE: int = 12
    NATMAP_MAX_SHIFT: int = 4

    # Ground set caps for Cayley exports of transformation monoids
    CAYLEY_MAX_T: int = 4
    CAYLEY_MAX_PT: int = 3
    CAYLEY_MAX_I: int = 4
    CAYLEY_MAX_S: int = 6

    # Verification corpus
    CORPUS_RANDOM_TABLES: int = 50
    CORPUS_REES_INSTANCES: int = 25
    VERIFY_THREADS: int = 4
    VERIFY_INTERNAL: bool = False

    # Logging
    LOGLEVEL_MODULE_DEFAULT: int = logging.DEBUG
    LOGFILE_NAME: str = f"conjcalc-{COMMON_TIMESTAMP}.log"
    LOGLEVEL_FILE: int = logging.DEBUG
    LOGLEVEL_CONSOLE: int = logging.INFO
    LOGFORMAT_CONSOLE: logging.Formatter = logging.Formatter(
        "%(asctime)s [%(levelname)-7.7s] %(message)s"
    )
    LOGFORMAT_FILE: logging.Formatter = logging.Formatter(
        "%(asctime)s [%(levelname)-7.7s] (%(name)25.25s) %(message)s"
    )

    class Config:
        env_prefix = "CONJCALC_"
        env_file = ".env"


constants = Constants()
