"""Relations on the free semigroup over a finite alphabet

Words are plain strings, one character per letter.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from conjcalc import core
from conjcalc.core.exceptions import BudgetExceeded, ShapeMismatch
from conjcalc.core.partition import ElementPartition

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)

ParikhVector = Counter


def check_word(w: str) -> str:
    if not w:
        raise ShapeMismatch("Words are nonempty")
    return w


def parikh(w: str) -> ParikhVector:
    """Letter multiplicities of w"""

    return Counter(check_word(w))


def sim_s_words(u: str, v: str) -> bool:
    return parikh(u) == parikh(v)


def sim_p1_words(u: str, v: str) -> bool:
    """v is a cyclic rotation of u"""

    check_word(u), check_word(v)
    return len(u) == len(v) and v in u + u


def sim_p1_search(u: str, v: str) -> Optional[Tuple[str, str]]:
    """Search every factorisation u = p r (p or r possibly empty) for one
    with r p = v; returns (p, r) or None"""

    check_word(u), check_word(v)
    for cut in range(len(u) + 1):
        p, r = u[:cut], u[cut:]
        if r + p == v:
            return p, r
    return None


@dataclass(frozen=True)
class FactorWitness:
    """u = f_1 ... f_k and v = f_order[0] ... f_order[k-1]"""

    factors: Tuple[str, ...]
    order: Tuple[int, ...]

    @property
    def rearranged(self) -> Tuple[str, ...]:
        return tuple(self.factors[k] for k in self.order)


def _compositions(u: str, parts: int) -> Iterable[Tuple[str, ...]]:
    for cuts in itertools.combinations(range(1, len(u)), parts - 1):
        bounds = (0, *cuts, len(u))
        yield tuple(u[a:b] for a, b in zip(bounds, bounds[1:]))


def _arrange(
    factors: Sequence[str], target: str, used: List[bool]
) -> Optional[List[int]]:
    """Order the unused factors so that they spell `target`"""

    if not target:
        return [] if all(used) else None
    tried = set()
    for k, factor in enumerate(factors):
        if used[k] or factor in tried or not target.startswith(factor):
            continue
        tried.add(factor)
        used[k] = True
        rest = _arrange(factors, target[len(factor):], used)
        used[k] = False
        if rest is not None:
            return [k, *rest]
    return None


def sim_s1_words_oracle(
    u: str, v: str, exhaustive: bool = False
) -> Tuple[bool, Optional[FactorWitness], int]:
    """Brute-force search for a factorisation of u whose factors can be
    rearranged into v

    Factorisations are tried by increasing number of factors. The search
    stops at the first witness unless `exhaustive` is set, in which case
    every factorisation is tried and the number of those admitting a
    rearrangement is returned as well.

    Returns
    -------
    Tuple[bool, Optional[FactorWitness], int]
        Whether a witness exists, the first witness, and the number of
        factorisations with a rearrangement (1 at most when not exhaustive)

    Raises
    ------
    BudgetExceeded
        If u is longer than constants.WORD_ORACLE_MAX_LENGTH
    """

    check_word(u), check_word(v)
    bound = core.config.constants.WORD_ORACLE_MAX_LENGTH
    if max(len(u), len(v)) > bound:
        raise BudgetExceeded(
            f"Factorisation search is limited to words of length {bound}"
        )
    if len(u) != len(v):
        return False, None, 0

    first: Optional[FactorWitness] = None
    found = 0
    for parts in range(1, len(u) + 1):
        for factors in _compositions(u, parts):
            order = _arrange(factors, v, [False] * len(factors))
            if order is None:
                continue
            found += 1
            if first is None:
                first = FactorWitness(factors, tuple(order))
                if not exhaustive:
                    return True, first, found

    return first is not None, first, found


def commuting_pairs(alphabet: str) -> List[Tuple[str, str]]:
    """(ab, ba) for every two distinct letters"""

    return [
        (a + b, b + a) for a, b in itertools.combinations(sorted(alphabet), 2)
    ]


def words_of_length(alphabet: str, n: int) -> List[str]:
    return ["".join(w) for w in itertools.product(sorted(alphabet), repeat=n)]


def generated_partition(
    alphabet: str, relation_pairs: Sequence[Tuple[str, str]], n: int
) -> Tuple[List[str], ElementPartition]:
    """Classes of the congruence generated by `relation_pairs` on the
    words of length exactly n

    A factor s of a word may be replaced by s' whenever (s, s') or (s', s)
    is a generating pair.
    """

    for s, t in relation_pairs:
        if len(s) != len(t):
            raise ShapeMismatch(f"Pair ({s}, {t}) does not preserve length")

    words = words_of_length(alphabet, n)
    index = {w: k for k, w in enumerate(words)}
    partition = ElementPartition(len(words))
    rules = [*relation_pairs, *((t, s) for s, t in relation_pairs)]
    for w in words:
        for s, t in rules:
            start = w.find(s)
            while start >= 0:
                rewritten = w[:start] + t + w[start + len(s):]
                partition.union(index[w], index[rewritten])
                start = w.find(s, start + 1)

    return words, partition


def commuting_generation_test(
    alphabet: str, relation_pairs: Sequence[Tuple[str, str]], n: int
) -> bool:
    """Whether the pairs generate Parikh equality on words of length n"""

    bound = core.config.constants.GENERATION_TEST_MAX_LENGTH
    if n > bound:
        raise BudgetExceeded(f"Generation test is limited to length {bound}")
    for s, t in relation_pairs:
        if not sim_s_words(s, t):
            raise ShapeMismatch(f"Pair ({s}, {t}) changes the Parikh vector")

    words, generated = generated_partition(alphabet, relation_pairs, n)
    keys = [tuple(sorted(parikh(w).items())) for w in words]
    codes = {key: number for number, key in enumerate(dict.fromkeys(keys))}
    by_parikh = ElementPartition.from_labels([codes[key] for key in keys])
    logger.debug(
        f"Length {n}: {generated.num_classes} generated classes, "
        f"{by_parikh.num_classes} Parikh classes"
    )

    return generated == by_parikh
