# flake8: noqa
from .corpus import CorpusInstance, build_corpus
from .suites import CheckResult, Suite, SUITES, run_suites
