"""Acceptance suites: closed-form results cross-checked against the
generic engines over the corpus"""

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from conjcalc import core
from conjcalc.core.congruence import (
    check_image_collapse,
    closure_of_subset,
    congruence_generated,
    is_subsemigroup,
    is_two_sided_ideal,
    least_commutative_congruence,
    left_ideal_generated,
    quotient,
    right_ideal_generated,
    sample_commutative_congruences,
)
from conjcalc.core.exceptions import BudgetExceeded, TooLarge
from conjcalc.core.partition import ElementPartition, PairRelation
from conjcalc.core.relations import (
    ContainmentReport,
    as_relation,
    check_bounded_products,
    check_compatibility,
    check_powers,
    containment_matrix,
    compute,
    sim_n,
    sim_p,
    sim_p1,
    sim_s,
    sim_s1_bounded,
    sim_star1,
)
from conjcalc.core.semigroup import FiniteSemigroup, subsemigroup_generated
from conjcalc.core.utils import run_parallel, spawn_rngs
from conjcalc.families import graph_inverse, nat_maps, ring_trace, words
from conjcalc.families.groups import (
    group_sim_s,
    small_groups,
    symmetric_group,
)
from conjcalc.families.rees import (
    classifier_pairs,
    classifier_partition,
    linked_triple_congruence,
    rees_normalize,
    rees_sim_p,
    rees_sim_s,
    sim_s_triple,
)
from conjcalc.families.transforms import (
    MapKind,
    compose,
    conjugate_in_sym,
    cycle_type,
    functional_graph,
    inverse,
    monoid_cayley,
    restriction_leq,
    sim_s_class,
)
from conjcalc.verify.corpus import (
    CorpusInstance,
    antidiagonal_example,
    build_corpus,
)

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)

# passed is None when the check did not run
Outcome = Tuple[Optional[bool], str]
Check = Tuple[str, Callable[[], Outcome]]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False

    @classmethod
    def from_outcome(
        cls, suite: str, name: str, outcome: Optional[Outcome]
    ) -> "CheckResult":
        """Build a row from a check's return value; None means it raised"""

        if outcome is None:
            logger.error(f"[{suite}] {name} raised an exception")
            return cls(suite, name, False, "raised an exception")
        passed, detail = outcome
        if passed is None:
            logger.warning(f"[{suite}] {name} skipped: {detail}")
            return cls(suite, name, False, detail, skipped=True)
        if not passed:
            logger.error(f"[{suite}] {name} failed: {detail}")
        return cls(suite, name, passed, detail)

    @property
    def failed(self) -> bool:
        return not self.passed and not self.skipped

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "status": self.status,
            "passed": self.passed,
            "detail": self.detail,
        }


def within_budget(check: Callable[[], Outcome]) -> Callable[[], Outcome]:
    """Report a size or budget guard as a skipped check"""

    @functools.wraps(check)
    def guarded() -> Outcome:
        try:
            return check()
        except (BudgetExceeded, TooLarge) as e:
            return None, f"skipped: {e}"

    return guarded


def run_checks(
    suite: str,
    checks: Sequence[Check],
    threads: Optional[int] = None,
    show_progress: bool = True,
) -> List[CheckResult]:
    outcomes = run_parallel(
        lambda check: check[1](),
        checks,
        description=f"Suite {suite}",
        threads=threads,
        show_progress=show_progress,
    )

    return [
        CheckResult.from_outcome(suite, name, outcome)
        for (name, _), outcome in zip(checks, outcomes)
    ]


class Suite:
    def __init__(
        self,
        name: str,
        description: str,
        build: Callable[[Optional[int]], List[Check]],
        summarize: Optional[
            Callable[[Optional[int], Optional[int], bool], List[CheckResult]]
        ] = None,
    ) -> None:
        """A named group of acceptance checks

        Parameters
        ----------
        name : str
            Name used on the command line
        description : str
            One line shown in reports
        build : Callable[[Optional[int]], List[Check]]
            Returns the (name, check) pairs for a seed; each check returns
            (passed, detail) and runs independently in the thread pool
        summarize : Optional[Callable], optional
            Replaces the plain run for suites whose verdict needs every
            instance at once, by default None
        """

        self.name = name
        self.description = description
        self._build = build
        self._summarize = summarize

    def run(
        self,
        seed: Optional[int] = None,
        threads: Optional[int] = None,
        show_progress: bool = True,
    ) -> List[CheckResult]:
        logger.info(f"Running suite '{self.name}': {self.description}")
        if self._summarize is not None:
            return self._summarize(seed, threads, show_progress)
        return run_checks(
            self.name, self._build(seed), threads, show_progress
        )

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Suite({self.name})"


def _mismatch(
    what: str, expected: ElementPartition, found: ElementPartition
) -> Outcome:
    return False, (
        f"{what}: expected {expected.num_classes} classes, found "
        f"{found.num_classes}"
    )


# least-comm -----------------------------------------------------------------


def bounded_s1(S: FiniteSemigroup) -> Tuple[PairRelation, int]:
    """sim_s1 at VERIFY_BOUND_L, or at L=2 when that is over the state cap

    sim_s1 grows with L and stays inside sim_s, so the L=2 relation bounds
    the configured one from below.
    """

    L = core.config.constants.VERIFY_BOUND_L
    try:
        return sim_s1_bounded(S, L), L
    except BudgetExceeded as e:
        logger.info(f"{e}; using sim_s1 at L=2")
        return sim_s1_bounded(S, 2), 2


def _least_comm(instance: CorpusInstance) -> Outcome:
    S = instance.semigroup
    least = least_commutative_congruence(S).partition
    from_p1 = congruence_generated(S, sim_p1(S)).partition
    if from_p1 != least:
        return _mismatch("congruence of sim_p1", least, from_p1)
    star = sim_star1(S).equivalence_closure()
    if star != least:
        return _mismatch("closure of sim_star1", least, star)

    bounded, L = bounded_s1(S)
    from_s1 = congruence_generated(S, bounded).partition
    if from_s1 != least:
        return _mismatch(f"congruence of sim_s1 at L={L}", least, from_s1)
    if L < core.config.constants.VERIFY_BOUND_L:
        return True, (
            f"{least.num_classes} classes; sim_s1 congruence reached at "
            f"L={L}"
        )
    return True, f"{least.num_classes} classes"


def least_comm_checks(seed: Optional[int]) -> List[Check]:
    return [
        (
            instance.name,
            within_budget(functools.partial(_least_comm, instance)),
        )
        for instance in build_corpus(seed)
    ]


# quotient -------------------------------------------------------------------


def _quotient(instance: CorpusInstance, rng: np.random.Generator) -> Outcome:
    S = instance.semigroup
    partition = sim_s(S)
    if not quotient(S, partition).is_commutative():
        return False, "S / sim_s is not commutative"
    violation = check_compatibility(S, partition)
    if violation is not None:
        return False, f"sim_s is not compatible: {violation}"
    broken = check_powers(S, partition)
    if broken is not None:
        return False, f"powers split: {broken}"
    split = check_image_collapse(S)
    if split is not None:
        return False, f"canonical map separates ~p pair {split}"

    count = core.config.constants.SAMPLED_CONGRUENCES
    sampled = sample_commutative_congruences(
        S, rng, count, max_draws=4 * count
    )
    for rho in sampled:
        if not partition.refines(rho.partition):
            return False, (
                f"sim_s is not inside a congruence with "
                f"{rho.num_classes} classes"
            )

    if S.order <= 12:
        failing = check_bounded_products(S, 2, 2, rng)
        if failing is not None:
            return False, f"bounded product rule fails on {failing}"
    return True, f"minimal below {len(sampled)} commutative congruences"


def quotient_checks(seed: Optional[int]) -> List[Check]:
    corpus = build_corpus(seed)
    return [
        (
            instance.name,
            within_budget(functools.partial(_quotient, instance, rng)),
        )
        for instance, rng in zip(corpus, spawn_rngs(seed, len(corpus)))
    ]


# closure --------------------------------------------------------------------


def _closure(instance: CorpusInstance, rng: np.random.Generator) -> Outcome:
    S = instance.semigroup
    partition = sim_s(S)
    for _ in range(core.config.constants.SAMPLED_CONGRUENCES):
        seed_set = rng.choice(S.order, int(rng.integers(1, 4))).tolist()
        sub = subsemigroup_generated(S, seed_set)
        closed = closure_of_subset(S, sub, partition)
        if closure_of_subset(S, closed, partition) != closed:
            return False, "closure is not idempotent"
        if not is_subsemigroup(S, closed):
            return False, f"closure of the subsemigroup on {seed_set} fails"

        a = int(rng.integers(S.order))
        for ideal in (left_ideal_generated(S, a), right_ideal_generated(S, a)):
            closed = closure_of_subset(S, ideal, partition)
            if not is_two_sided_ideal(S, closed):
                return False, f"closure of a one-sided ideal of {a} fails"
    return True, "subsemigroups and ideals"


def _inverse_closure(n: int, rng: np.random.Generator) -> Outcome:
    """In I(n) the closure of an inverse subsemigroup is inverse"""

    monoid = monoid_cayley(MapKind.I, n)
    S = monoid.semigroup
    partition = sim_s(S)
    for _ in range(core.config.constants.SAMPLED_CONGRUENCES):
        picks = rng.choice(S.order, int(rng.integers(1, 3))).tolist()
        generators = set(picks)
        generators |= {
            monoid.index_of(inverse(monoid.maps[a])) for a in picks
        }
        closed = closure_of_subset(
            S, subsemigroup_generated(S, generators), partition
        )
        for a in closed:
            if monoid.index_of(inverse(monoid.maps[a])) not in closed:
                return False, f"closure misses the inverse of {S.label(a)}"
    return True, f"I({n})"


def _group_closure(name: str) -> Outcome:
    """In a group the closure of a subgroup T is generated by T and [G,G]"""

    G = small_groups()[name]
    partition = sim_s(G.semigroup)
    for a in range(G.order):
        T = G.subgroup_generated([a])
        expected = G.subgroup_generated(T | G.derived_subgroup)
        if closure_of_subset(G.semigroup, T, partition) != expected:
            return False, f"closure of <{G.label(a)}> is not <T, [G,G]>"
    return True, f"|[G,G]| = {len(G.derived_subgroup)}"


def closure_checks(seed: Optional[int]) -> List[Check]:
    corpus = build_corpus(seed)
    rngs = spawn_rngs(seed, len(corpus) + 2)
    checks: List[Check] = [
        (instance.name, functools.partial(_closure, instance, rng))
        for instance, rng in zip(corpus, rngs)
    ]
    checks += [
        (f"inverse I({n})", functools.partial(_inverse_closure, n, rng))
        for n, rng in zip((3, 4), rngs[len(corpus):])
    ]
    checks += [
        (f"subgroup {name}", functools.partial(_group_closure, name))
        for name in small_groups()
    ]
    return checks


# rees -----------------------------------------------------------------------


def _rees(instance: CorpusInstance) -> Outcome:
    sem = instance.rees
    S = instance.semigroup
    if not np.array_equal(classifier_pairs(sem), sim_p1(S).matrix):
        return False, "rees_sim_p1 differs from sim_p1"
    primary = classifier_partition(sem, "sim_p")
    if primary != sim_p(S):
        return _mismatch("rees_sim_p", sim_p(S), primary)

    expected = sim_s(S)
    if sem.has_zero_entries or sem.is_normalized:
        found = classifier_partition(sem, "sim_s")
        if found != expected:
            return _mismatch("rees_sim_s", expected, found)
    else:
        iso = rees_normalize(sem)
        if not iso.is_isomorphism():
            return False, "normalization does not preserve products"
        elements = sem.elements
        found = ElementPartition(len(elements))
        for x, y in itertools.combinations(range(len(elements)), 2):
            if rees_sim_s(
                iso.normalized, iso.phi(elements[x]), iso.phi(elements[y])
            ):
                found.union(x, y)
        if found != expected:
            return _mismatch("rees_sim_s after normalizing", expected, found)
        sem = iso.normalized

    if not sem.has_zero_entries:
        triple = linked_triple_congruence(sem, sim_s_triple(sem))
        if triple.partition != sim_s(sem.cayley()):
            return False, "linked triple congruence differs from sim_s"
    return True, f"{S.order} elements"


def _antidiagonal() -> Outcome:
    sem, s, t = antidiagonal_example()
    S = sem.cayley()
    a, b = sem.index_of(s), sem.index_of(t)
    if not rees_sim_p(sem, s, t) or not sim_p(S).same(a, b):
        return False, "(1,s,1) and (1,t,1) are not ~p related"
    L = core.config.constants.S1_BOUND_L
    if (a, b) in sim_s1_bounded(S, L):
        return False, f"pair present in sim_s1 at L={L}"
    if not sim_s(S).is_universal():
        return False, "sim_s is not universal"
    zero = sem.index_of(None)
    if (a, zero) not in sim_p1(S) or (a, zero) in sim_n(S):
        return False, "(1,s,1) and 0: expected ~p1 related, not ~n related"
    return True, f"~p but not ~s1 at L={L}"


def rees_checks(seed: Optional[int]) -> List[Check]:
    checks: List[Check] = [
        (instance.name, functools.partial(_rees, instance))
        for instance in build_corpus(seed)
        if instance.rees is not None
    ]
    checks.append(("antidiagonal example", _antidiagonal))
    return checks


# groups ---------------------------------------------------------------------


def _group(name: str) -> Outcome:
    G = small_groups()[name] if name != "S4" else symmetric_group(4)
    expected = sim_s(G.semigroup)
    found = ElementPartition(G.order)
    for s, t in itertools.combinations(range(G.order), 2):
        if group_sim_s(G, s, t):
            found.union(s, t)
    if found != expected:
        return _mismatch("group_sim_s", expected, found)
    return True, f"{expected.num_classes} classes"


def _s3_abelianization() -> Outcome:
    G = symmetric_group(3)
    if len(G.derived_subgroup) != 3:
        return False, f"[S3, S3] has order {len(G.derived_subgroup)}"
    image = least_commutative_congruence(G.semigroup).quotient()
    if image.order != 2 or not image.is_commutative():
        return False, f"S3 / sim_s has order {image.order}"
    return True, "S3 / sim_s = Z2"


def groups_checks(seed: Optional[int]) -> List[Check]:
    checks: List[Check] = [
        (name, functools.partial(_group, name))
        for name in [*small_groups(), "S4"]
    ]
    checks.append(("S3 abelianization", _s3_abelianization))
    return checks


# transforms -----------------------------------------------------------------


def _three_classes(kind: MapKind, n: int) -> Outcome:
    monoid = monoid_cayley(kind, n)
    expected = sim_s(monoid.semigroup)
    labels = [sim_s_class(kind, m) for m in monoid.maps]
    codes = {c: k for k, c in enumerate(dict.fromkeys(labels))}
    found = ElementPartition.from_labels([codes[c] for c in labels])
    if expected.num_classes != 3 or found != expected:
        return _mismatch("parity and singular classes", expected, found)
    return True, "3 classes"


def _symmetric(n: int) -> Outcome:
    monoid = monoid_cayley(MapKind.S, n)
    S = monoid.semigroup
    maps = monoid.maps
    primary = sim_p(S)
    types = [cycle_type(m) for m in maps]
    codes = {c: k for k, c in enumerate(dict.fromkeys(types))}
    by_type = ElementPartition.from_labels([codes[c] for c in types])
    if primary != by_type:
        return _mismatch("cycle types", primary, by_type)
    if not (sim_n(S, force=True) == sim_p1(S) == primary.to_relation()):
        return False, "sim_n, sim_p1 and sim_p differ"

    graphs = [functional_graph(m) for m in maps]
    for a, b in itertools.combinations(range(len(maps)), 2):
        conjugate, w = conjugate_in_sym(maps[a], maps[b])
        if conjugate != (types[a] == types[b]):
            return False, f"conjugacy of {maps[a]} and {maps[b]}"
        if conjugate and compose(compose(w, maps[b]), inverse(w)) != maps[a]:
            return False, f"bad witness for {maps[a]} and {maps[b]}"
        if n <= 4 and conjugate != nx.is_isomorphic(graphs[a], graphs[b]):
            return False, f"functional graphs of {maps[a]}, {maps[b]}"
    return True, f"{primary.num_classes} cycle types"


def _restriction_lifts(rng: np.random.Generator) -> Outcome:
    """s <= t and t ~s t' give some s' <= t' with s ~s s' in I(3)"""

    monoid = monoid_cayley(MapKind.I, 3)
    maps = monoid.maps
    partition = sim_s(monoid.semigroup)
    below = {
        t: [s for s in range(len(maps)) if restriction_leq(maps[s], maps[t])]
        for t in range(len(maps))
    }
    for _ in range(core.config.constants.PROPERTY_TEST_COUNT):
        t = int(rng.integers(len(maps)))
        s = int(rng.choice(below[t]))
        for t_prime in partition.class_of(t):
            if not any(partition.same(s, x) for x in below[t_prime]):
                return False, f"{maps[s]} <= {maps[t]} does not lift"
    return True, "sampled"


def transforms_checks(seed: Optional[int]) -> List[Check]:
    checks: List[Check] = [
        (
            f"{kind.value}({n}) classes",
            within_budget(functools.partial(_three_classes, kind, n)),
        )
        for kind, n in (
            (MapKind.T, 3),
            (MapKind.T, 4),
            (MapKind.PT, 3),
            (MapKind.I, 3),
            (MapKind.I, 4),
        )
    ]
    checks += [
        (f"S({n}) conjugacy", functools.partial(_symmetric, n))
        for n in range(1, 6)
    ]
    (rng,) = spawn_rngs(seed, 1)
    checks.append(
        ("I(3) restriction", functools.partial(_restriction_lifts, rng))
    )
    return checks


# words ----------------------------------------------------------------------


def canonical_words(alphabet: str, n: int) -> List[str]:
    """Words of length n whose letters first appear in alphabetical order

    Both word relations are invariant under renaming letters, so pairs with
    a canonical first word cover every pair.
    """

    letters = sorted(alphabet)
    found = []
    for w in words.words_of_length(alphabet, n):
        order = list(dict.fromkeys(w))
        if order == letters[: len(order)]:
            found.append(w)
    return found


def _factor_oracle(alphabet: str, n: int) -> Outcome:
    pairs = 0
    for u in canonical_words(alphabet, n):
        for v in words.words_of_length(alphabet, n):
            related, _, _ = words.sim_s1_words_oracle(u, v)
            if related != words.sim_s_words(u, v):
                return False, f"({u}, {v})"
            pairs += 1
    return True, f"{pairs} pairs"


def _rotation_search(alphabet: str, n: int) -> Outcome:
    pairs = 0
    for u in canonical_words(alphabet, n):
        for v in words.words_of_length(alphabet, n):
            found = words.sim_p1_search(u, v) is not None
            if found != words.sim_p1_words(u, v):
                return False, f"({u}, {v})"
            pairs += 1
    return True, f"{pairs} pairs"


def _generation(alphabet: str) -> Outcome:
    full = words.commuting_pairs(alphabet)
    for n in range(1, 6):
        if not words.commuting_generation_test(alphabet, full, n):
            return False, f"commuting pairs miss Parikh classes at n={n}"
        if n > 1 and words.commuting_generation_test(alphabet, [], n):
            return False, f"the empty set generates Parikh classes at n={n}"
    return True, "lengths 1 to 5"


def words_checks(seed: Optional[int]) -> List[Check]:
    checks: List[Check] = [
        (
            f"factor oracle |A|={len(alphabet)} n={n}",
            functools.partial(_factor_oracle, alphabet, n),
        )
        for alphabet in ("ab", "abc")
        for n in range(1, 7)
    ]
    checks += [
        (
            f"rotation search |A|={len(alphabet)} n={n}",
            functools.partial(_rotation_search, alphabet, n),
        )
        for alphabet, top in (("ab", 8), ("abc", 5))
        for n in range(1, top + 1)
    ]
    checks.append(
        ("commuting generation", functools.partial(_generation, "abc"))
    )
    return checks


# graph ----------------------------------------------------------------------


TEST_GRAPHS: Dict[str, Callable[[], graph_inverse.DirectedGraph]] = {
    "isolated vertex": graph_inverse.isolated_vertex,
    "bicyclic": functools.partial(graph_inverse.polycyclic, 1),
    "polycyclic(2)": functools.partial(graph_inverse.polycyclic, 2),
    "2-cycle": functools.partial(graph_inverse.cycle, 2),
    "loop with tail": graph_inverse.loop_with_tail,
    "line": graph_inverse.line,
}


def _graph_oracle(name: str) -> Outcome:
    E = graph_inverse.GraphInverseSemigroup(TEST_GRAPHS[name]())
    elements, partition = E.witness_partition()
    index = {a: k for k, a in enumerate(elements)}
    ball = E.ball(core.config.constants.GIS_BALL_RADIUS)
    for a, b in itertools.combinations(ball, 2):
        if E.sim_p(a, b) != partition.same(index[a], index[b]):
            return False, f"({E.label(a)}, {E.label(b)})"
    return True, f"{len(ball)} ball elements"


def _graph_laws(name: str, rng: np.random.Generator) -> Outcome:
    E = graph_inverse.GraphInverseSemigroup(TEST_GRAPHS[name]())
    ball = E.ball(core.config.constants.GIS_BALL_RADIUS)
    for a in ball:
        inv = E.inverse(a)
        if E.product([a, inv, a]) != a or E.product([inv, a, inv]) != inv:
            return False, f"inverse laws fail at {E.label(a)}"

    for _ in range(core.config.constants.GIS_SAMPLE_TRIPLES):
        a, b, c = (ball[int(k)] for k in rng.integers(len(ball), size=3))
        if E.multiply(E.multiply(a, b), c) != E.multiply(a, E.multiply(b, c)):
            return False, "associativity fails"
        if not E.sim_s(a, b):
            continue
        if not E.sim_s(E.inverse(a), E.inverse(b)):
            return False, f"inverse splits {E.label(a)}, {E.label(b)}"
        if not E.sim_s(E.multiply(c, a), E.multiply(c, b)) or not E.sim_s(
            E.multiply(a, c), E.multiply(b, c)
        ):
            return False, f"multiples by {E.label(c)} split"
    return True, "sampled"


def _bicyclic_invariant() -> Outcome:
    E = graph_inverse.GraphInverseSemigroup(graph_inverse.polycyclic(1))
    ball = [a for a in E.ball(core.config.constants.GIS_BALL_RADIUS) if a]
    for a, b in itertools.combinations(ball, 2):
        same = len(a.x) - len(a.y) == len(b.x) - len(b.y)
        if E.sim_s(a, b) != same:
            return False, f"({E.label(a)}, {E.label(b)})"
    return True, "n - m"


def _polycyclic_collapse() -> Outcome:
    E = graph_inverse.GraphInverseSemigroup(graph_inverse.polycyclic(2))
    for a in E.ball(core.config.constants.GIS_BALL_RADIUS):
        if not E.sim_s(a, None):
            return False, f"{E.label(a)} is not ~s related to 0"
    return True, "single class"


def _vertex_classes() -> Outcome:
    expected = [
        (graph_inverse.isolated_vertex(), "v", "Singleton"),
        (graph_inverse.polycyclic(1), "v", "LoopPowers(e1)"),
        (graph_inverse.loop_with_tail(), "v", "CollapsesToZero"),
        (graph_inverse.loop_with_tail(), "u", "Singleton"),
        (graph_inverse.line(), "w", "CollapsesToZero"),
    ]
    for graph, v, wanted in expected:
        found = str(graph_inverse.GraphInverseSemigroup(graph).vertex_class(v))
        if found != wanted:
            return False, f"{v}: {found} instead of {wanted}"
    return True, f"{len(expected)} vertices"


def graph_checks(seed: Optional[int]) -> List[Check]:
    rngs = spawn_rngs(seed, len(TEST_GRAPHS))
    checks: List[Check] = []
    for (name, _), rng in zip(TEST_GRAPHS.items(), rngs):
        checks.append(
            (f"{name} ~p oracle", functools.partial(_graph_oracle, name))
        )
        checks.append(
            (f"{name} laws", functools.partial(_graph_laws, name, rng))
        )
    checks += [
        ("bicyclic ~s invariant", _bicyclic_invariant),
        ("polycyclic(2) collapse", _polycyclic_collapse),
        ("vertex classes", _vertex_classes),
    ]
    return checks


# natmaps --------------------------------------------------------------------


def _injection_pairs(
    rng: np.random.Generator, count: int
) -> List[Tuple[nat_maps.EventuallyShiftMap, nat_maps.EventuallyShiftMap]]:
    return [
        (nat_maps.random_injection(rng), nat_maps.random_injection(rng))
        for _ in range(count)
    ]


def _surjection_pairs(
    rng: np.random.Generator, count: int
) -> List[Tuple[nat_maps.EventuallyShiftMap, nat_maps.EventuallyShiftMap]]:
    return [
        (nat_maps.random_surjection(rng), nat_maps.random_surjection(rng))
        for _ in range(count)
    ]


def _injections(rng: np.random.Generator, count: int) -> Outcome:
    for s, t in _injection_pairs(rng, count):
        st = nat_maps.compose(s, t)
        if nat_maps.defect(st) != nat_maps.defect(s) + nat_maps.defect(t):
            return False, f"defect is not additive on {s}, {t}"
        if not nat_maps.check_cycle_correspondence(s, t):
            return False, f"cycles of st and ts differ for {s}, {t}"
        if not nat_maps.inj_sim_s(st, nat_maps.compose(t, s)):
            return False, f"st and ts have different defects for {s}, {t}"
    return True, f"{count} pairs"


def _injection_congruence(rng: np.random.Generator, count: int) -> Outcome:
    for _ in range(count):
        s, t, u = (nat_maps.random_injection(rng) for _ in range(3))
        if not nat_maps.inj_sim_s(s, t):
            continue
        if not nat_maps.inj_sim_s(
            nat_maps.compose(s, u), nat_maps.compose(t, u)
        ) or not nat_maps.inj_sim_s(
            nat_maps.compose(u, s), nat_maps.compose(u, t)
        ):
            return False, f"multiples by {u} split {s}, {t}"
    return True, f"{count} triples"


def _surjections(rng: np.random.Generator, count: int) -> Outcome:
    for s, t in _surjection_pairs(rng, count):
        st = nat_maps.compose(s, t)
        fs, ft, fst = (nat_maps.ncm_invariants(f) for f in (s, t, st))
        if len(fst.N) != len(ft.N) + len(fs.N - ft.C):
            return False, f"|N(st)| for {s}, {t}"
        if len(fst.C) != len(fs.C) + len(ft.C - fs.N):
            return False, f"|C(st)| for {s}, {t}"
        if not max(fs.m, ft.m) <= fst.m <= fs.m * ft.m:
            return False, f"m(st) = {fst.m} out of bounds for {s}, {t}"
        if (
            nat_maps.has_preimage_of_size(s, fst.m)
            or nat_maps.has_preimage_of_size(t, fst.m)
        ) and not nat_maps.has_preimage_of_size(st, fst.m):
            return False, f"no preimage of size m(st) for {s}, {t}"
        total = nat_maps.surj_invariant(s) + nat_maps.surj_invariant(t)
        if nat_maps.surj_invariant(st) != total:
            return False, f"invariant is not additive on {s}, {t}"
    return True, f"{count} pairs"


def natmaps_checks(
    seed: Optional[int], count: Optional[int] = None
) -> List[Check]:
    if count is None:
        count = core.config.constants.PROPERTY_TEST_COUNT
    first, second, third = spawn_rngs(seed, 3)
    return [
        ("injections", functools.partial(_injections, first, count)),
        (
            "injection congruence",
            functools.partial(_injection_congruence, second, count),
        ),
        ("surjections", functools.partial(_surjections, third, count)),
    ]


# trace ----------------------------------------------------------------------


def _trace(instance: CorpusInstance, rng: np.random.Generator) -> Outcome:
    S = instance.semigroup
    lattice = ring_trace.commutator_lattice(S)
    index: Dict[Tuple[int, ...], int] = {}
    codes = np.array(
        [
            index.setdefault(lattice.trace_key(a), len(index))
            for a in range(S.order)
        ]
    )
    if not np.array_equal(codes[S.table], codes[S.table.T]):
        return False, "the quotient map is not a trace"

    lemma = ring_trace.check_trace_lemma(S, lattice)
    if not lemma.passed:
        return False, f"~p pair {lemma.counterexample} has distinct traces"

    dimension = len(ring_trace.ring_basis(S))
    if dimension <= core.config.constants.RATIONAL_ORACLE_MAX_DIM:
        for _ in range(20):
            vector = rng.integers(-2, 3, size=dimension).tolist()
            exact = lattice.lattice.contains(vector)
            if exact != ring_trace.rational_membership(
                lattice.lattice, vector
            ):
                return False, f"membership oracles disagree on {vector}"

    if not instance.has_zero or S.order > 30:
        return True, f"trace lemma; {len(index)} trace values"
    full = ring_trace.check_tr_prim(S)
    if not full.passed:
        return False, f"~p and traces differ on {full.counterexample}"
    L = core.config.constants.VERIFY_BOUND_L
    if not ring_trace.commutator_ideal_check(S, L):
        return False, f"commutator ideal differs from the ~s1 span at L={L}"
    torsion, free = lattice.torsion()
    return True, f"trace quotient: free rank {free}, torsion {torsion}"


def trace_checks(seed: Optional[int]) -> List[Check]:
    corpus = build_corpus(seed)
    return [
        (
            instance.name,
            within_budget(functools.partial(_trace, instance, rng)),
        )
        for instance, rng in zip(corpus, spawn_rngs(seed, len(corpus)))
    ]


# containment ----------------------------------------------------------------

# Each needs at least one corpus instance where the report passes the test
STRICTNESS: Tuple[Tuple[str, Callable[[ContainmentReport], bool]], ...] = (
    ("sim_p != sim_s", lambda r: not r.is_equal("sim_p", "sim_s")),
    ("sim_p1 != sim_p", lambda r: not r.is_equal("sim_p1", "sim_p")),
    ("sim_s1 < sim_s", lambda r: r.is_strict("sim_s1", "sim_s")),
    ("sim_n != sim_p1", lambda r: not r.is_equal("sim_n", "sim_p1")),
    ("sim_w != sim_o", lambda r: not r.is_equal("sim_w", "sim_o")),
    ("sim_c != sim_o", lambda r: not r.is_equal("sim_c", "sim_o")),
    ("sim_s not in sim_o", lambda r: not r.is_subset("sim_s", "sim_o")),
    ("sim_o not in sim_s", lambda r: not r.is_subset("sim_o", "sim_s")),
)


# Sound inclusions that stay cheap above the coupled-witness limit
TRACTABLE_INCLUSIONS: Tuple[Tuple[str, str], ...] = (
    ("sim_p1", "sim_p"),
    ("sim_p1", "sim_star1"),
    ("sim_star1", "sim_s"),
    ("sim_p", "sim_o"),
    ("sim_p", "sim_s"),
    ("sim_p1", "sim_s1"),
    ("sim_s1", "sim_s"),
)

Row = Tuple[str, Outcome]


def _tractable_inclusions(instance: CorpusInstance) -> Outcome:
    S = instance.semigroup
    relations = {
        name: as_relation(compute(S, name))
        for name in ("sim_p1", "sim_p", "sim_star1", "sim_o", "sim_s")
    }
    relations["sim_s1"], L = bounded_s1(S)
    broken = [
        (a, b)
        for a, b in TRACTABLE_INCLUSIONS
        if relations[a].difference(relations[b])
    ]
    if broken:
        return False, f"violated: {broken}"
    return True, f"sim_p1, sim_p, sim_star1, sim_o, sim_s1 (L={L}), sim_s"


def _inclusions(
    instance: CorpusInstance,
) -> Tuple[Optional[ContainmentReport], List[Row]]:
    """The full report up to the coupled-witness limit; above it the
    tractable chain plus a skipped row for sim_n, sim_w and sim_c"""

    limit = core.config.constants.COUPLED_WITNESS_LIMIT
    if instance.order > limit:
        coupled = (
            f"{instance.name} coupled",
            (None, f"skipped: sim_n, sim_w and sim_c above order {limit}"),
        )
        try:
            outcome = _tractable_inclusions(instance)
        except (BudgetExceeded, TooLarge) as e:
            outcome = (None, f"skipped: {e}")
        return None, [(instance.name, outcome), coupled]

    try:
        report = containment_matrix(
            instance.semigroup, L=core.config.constants.VERIFY_BOUND_L
        )
    except (BudgetExceeded, TooLarge) as e:
        return None, [(instance.name, (None, f"skipped: {e}"))]
    broken = report.violations()
    outcome = (
        not broken,
        f"violated: {broken}" if broken else "sound inclusions hold",
    )
    return report, [(instance.name, outcome)]


def containment_summary(
    seed: Optional[int], threads: Optional[int], show_progress: bool
) -> List[CheckResult]:
    corpus = build_corpus(seed)
    outcomes = run_parallel(
        _inclusions,
        corpus,
        description="Suite containment",
        threads=threads,
        show_progress=show_progress,
    )

    results = []
    reports: List[Tuple[str, ContainmentReport]] = []
    for instance, outcome in zip(corpus, outcomes):
        if outcome is None:
            results.append(
                CheckResult.from_outcome("containment", instance.name, None)
            )
            continue
        report, rows = outcome
        if report is not None:
            reports.append((instance.name, report))
        results += [
            CheckResult.from_outcome("containment", name, row)
            for name, row in rows
        ]

    for label, test in STRICTNESS:
        witnesses = [name for name, report in reports if test(report)]
        if not witnesses:
            logger.error(f"[containment] no instance shows {label}")
        results.append(
            CheckResult(
                "containment",
                f"witness {label}",
                bool(witnesses),
                witnesses[0] if witnesses else "no witness",
            )
        )
    return results


# Registry -------------------------------------------------------------------

least_comm = Suite(
    "least-comm",
    "sim_p1, sim_star1 and bounded sim_s1 generate the least commutative "
    "congruence",
    least_comm_checks,
)
quotients = Suite(
    "quotient",
    "S / sim_s is commutative and below every commutative congruence",
    quotient_checks,
)
closures = Suite(
    "closure",
    "sim_s closures of subsemigroups, ideals and subgroups",
    closure_checks,
)
rees = Suite(
    "rees",
    "Rees matrix classifiers against the generic engines",
    rees_checks,
)
groups = Suite(
    "groups", "sim_s in groups is the commutator coset", groups_checks
)
transforms = Suite(
    "transforms",
    "three sim_s classes of T, PT, I and conjugacy in S(n)",
    transforms_checks,
)
word_relations = Suite(
    "words", "free semigroup relations against brute force", words_checks
)
graphs = Suite(
    "graph",
    "graph inverse semigroup classifiers against witness search",
    graph_checks,
)
natmaps = Suite(
    "natmaps", "injections and surjections of the naturals", natmaps_checks
)
trace = Suite(
    "trace", "universal trace of the integer semigroup ring", trace_checks
)
containment = Suite(
    "containment",
    "inclusions between the eight relations",
    lambda seed: [],
    summarize=containment_summary,
)

SUITES: Tuple[Suite, ...] = (
    least_comm,
    quotients,
    closures,
    rees,
    groups,
    transforms,
    word_relations,
    graphs,
    natmaps,
    trace,
    containment,
)


def run_suites(
    suites: Sequence[Suite],
    seed: Optional[int] = None,
    threads: Optional[int] = None,
    show_progress: bool = True,
) -> List[CheckResult]:
    """Run the suites in turn; results are sorted by (suite, name)"""

    results: List[CheckResult] = []
    for suite in suites:
        results += suite.run(seed, threads, show_progress)
    failed = sum(r.failed for r in results)
    skipped = sum(r.skipped for r in results)
    logger.info(
        f"{len(results)} checks, {failed} failed, {skipped} skipped"
    )
    return sorted(results, key=lambda r: (r.suite, r.name))
