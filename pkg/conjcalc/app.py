#!/usr/bin/env python3
import atexit
import contextlib
import logging
import sys
from typing import Annotated, Iterator, List, Optional, Tuple

import typer
from pydantic import BaseModel, Field

from conjcalc import core, cli_options, __version__
from conjcalc.families import (
    graph_inverse,
    nat_maps,
    rees,
    ring_trace,
    transforms,
    words,
)
from conjcalc.verify import suites

# Define a console handler
console_handler = logging.StreamHandler()
console_handler.setLevel(core.config.constants.LOGLEVEL_CONSOLE)
console_handler.setFormatter(core.config.constants.LOGFORMAT_CONSOLE)
logging.getLogger().addHandler(console_handler)

# Counts ERRORs, the failed checks among them
error_handler = core.logging.ErrorFlagHandler()
logging.getLogger().addHandler(error_handler)
atexit.register(error_handler.print_status)  # Print error status on exit

# Define logger for this module
logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


# Initialise the Typer class
app = typer.Typer(
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_show_locals=False,
)
family_app = typer.Typer(
    no_args_is_help=True,
    help="Closed-form classifiers of the semigroup families",
)
app.add_typer(family_app, name="family")

FORMAT_HELP = "Output format: json (default), text, or dot where supported."
SEED_HELP = "Seed for every random choice; equal seeds give equal output."


class RunConfig(BaseModel):
    """Options of one command run, validated before any work starts"""

    in_path: Optional[str] = None
    spec_path: Optional[str] = None
    rel: cli_options.RelationChoices = cli_options.RelationChoices.ALL
    bound_L: int = Field(core.config.constants.S1_BOUND_L, gt=0)
    seed: int = Field(core.config.constants.DEFAULT_SEED, ge=0)
    count: int = Field(core.config.constants.PROPERTY_TEST_COUNT, gt=0)
    threads: int = Field(core.config.constants.VERIFY_THREADS, gt=0)
    output_format: cli_options.FormatChoices = cli_options.FormatChoices.JSON
    force: bool = False

    @property
    def is_text(self) -> bool:
        return self.output_format == cli_options.FormatChoices.TEXT


@contextlib.contextmanager
def exit_on_bad_input() -> Iterator[None]:
    """Turn input errors into a message and exit code 1

    Domain errors and pydantic validation errors are ValueErrors.
    """

    try:
        yield
    except (FileNotFoundError, ValueError) as e:
        logger.debug("Input rejected", exc_info=True)
        sys.exit(f"Error: {e}")


def load_semigroup(path: str) -> core.FiniteSemigroup:
    return core.models.SemigroupModel.from_file(path).to_semigroup()


def no_dot(config: RunConfig) -> None:
    if config.output_format == cli_options.FormatChoices.DOT:
        raise ValueError("DOT output is only available for --rel all")


def print_answer(config: RunConfig, payload: dict, answer: str) -> None:
    """JSON payload, or a single line of text"""

    if config.is_text:
        typer.echo(answer)
    else:
        core.report.print_json(payload)


@app.command()
def relations(
    in_path: Annotated[
        str,
        typer.Option(
            "--in",
            help="Semigroup JSON file with element labels and a row-major "
            "Cayley table.",
        ),
    ],
    rel: cli_options.RelationChoices = typer.Option(
        cli_options.RelationChoices.ALL.value,
        "--rel",
        help="Relation to compute. 'all' compares the eight relations "
        "pairwise.",
        case_sensitive=False,
    ),
    bound_L: int = typer.Option(
        core.config.constants.S1_BOUND_L,
        "--bound-L",
        help="Factorisation size bound for sim_s1.",
    ),
    output_format: cli_options.FormatChoices = typer.Option(
        cli_options.FormatChoices.JSON.value,
        "--format",
        help=FORMAT_HELP,
        case_sensitive=False,
    ),
    force: bool = typer.Option(
        False,
        "--force",
        help="Run the sim_n, sim_w and sim_c searches above the order "
        "limit.",
    ),
) -> None:
    """Compute a conjugacy relation on a finite semigroup

    Equivalences are printed as classes, the other relations as pairs.
    With --rel all, the containments between the eight relations are
    reported, as a matrix or (with --format dot) as a Hasse diagram.
    """

    with exit_on_bad_input():
        config = RunConfig(
            in_path=in_path,
            rel=rel,
            bound_L=bound_L,
            output_format=output_format,
            force=force,
        )
        S = load_semigroup(config.in_path)

        if config.rel == cli_options.RelationChoices.ALL:
            report = core.relations.containment_matrix(
                S, L=config.bound_L, force=config.force
            )
        else:
            no_dot(config)
            value = core.relations.compute(
                S, config.rel.value, L=config.bound_L, force=config.force
            )

    if config.rel == cli_options.RelationChoices.ALL:
        logger.debug(f"Containment sizes: {report.sizes}")
        if config.output_format == cli_options.FormatChoices.DOT:
            graph = core.report.containment_digraph(report)
            typer.echo(core.report.to_dot(graph))
        elif config.is_text:
            core.report.print_containment_table(report)
        else:
            core.report.print_json({"order": S.order, **report.to_dict()})
        return

    name = config.rel.value
    if config.is_text:
        if isinstance(value, core.ElementPartition):
            core.report.print_partition_table(name, S, value)
        else:
            core.report.print_table(
                name,
                ["s", "t"],
                [(S.label(a), S.label(b)) for a, b in value.pairs],
            )
        return

    payload = {
        "relation": name,
        "order": S.order,
        **core.report.result_payload(S, value),
    }
    if config.rel == cli_options.RelationChoices.SIM_S1:
        payload["bound_L"] = config.bound_L
    core.report.print_json(payload)


@app.command()
def congruence(
    in_path: Annotated[
        str, typer.Option("--in", help="Semigroup JSON file.")
    ],
    pairs: List[str] = typer.Option(
        [],
        "--pair",
        help="Generating pair 'a,b' by element labels. Repeat the option "
        "for more pairs. Without pairs, the least commutative congruence "
        "is computed.",
    ),
    closure: Optional[str] = typer.Option(
        None,
        "--closure",
        help="Comma separated labels; report the union of the classes that "
        "meet this subset.",
    ),
    output_format: cli_options.FormatChoices = typer.Option(
        cli_options.FormatChoices.JSON.value,
        "--format",
        help=FORMAT_HELP,
        case_sensitive=False,
    ),
) -> None:
    """Congruence generated by pairs, with its quotient semigroup"""

    with exit_on_bad_input():
        config = RunConfig(in_path=in_path, output_format=output_format)
        no_dot(config)
        S = load_semigroup(config.in_path)
        generators = []
        for text in pairs:
            labels = [label.strip() for label in text.split(",")]
            if len(labels) != 2:
                raise ValueError(f"A pair needs two labels, got '{text}'")
            generators.append((S.index(labels[0]), S.index(labels[1])))
        subset = (
            [S.index(label.strip()) for label in closure.split(",")]
            if closure
            else None
        )

    if generators:
        rho = core.congruence_generated(S, generators)
    else:
        rho = core.congruence.least_commutative_congruence(S)
    image = rho.quotient()

    payload = {
        "order": S.order,
        "generators": pairs,
        "num_classes": rho.num_classes,
        **core.report.partition_payload(S, rho.partition),
        "quotient": image.to_dict(),
        "quotient_commutative": image.is_commutative(),
    }
    if subset is not None:
        closed = sorted(core.congruence.closure_of_subset(S, subset, rho))
        payload["closure"] = {
            "elements": [S.label(a) for a in closed],
            "subsemigroup": core.congruence.is_subsemigroup(S, closed),
            "ideal": core.congruence.is_two_sided_ideal(S, closed),
        }

    if config.is_text:
        core.report.print_partition_table(
            f"Congruence ({rho.num_classes} classes)", S, rho.partition
        )
        if subset is not None:
            typer.echo(f"Closure: {', '.join(payload['closure']['elements'])}")
    else:
        core.report.print_json(payload)


@app.command()
def trace(
    in_path: Annotated[
        str, typer.Option("--in", help="Semigroup JSON file.")
    ],
    check: bool = typer.Option(
        False,
        "--check",
        help="Also check that traces separate the sim_p classes and that "
        "the commutator ideal is spanned by the sim_s1 differences.",
    ),
    bound_L: int = typer.Option(
        core.config.constants.VERIFY_BOUND_L,
        "--bound-L",
        help="sim_s1 bound used by --check.",
    ),
    output_format: cli_options.FormatChoices = typer.Option(
        cli_options.FormatChoices.JSON.value,
        "--format",
        help=FORMAT_HELP,
        case_sensitive=False,
    ),
) -> None:
    """Universal trace of the integer semigroup ring

    The ring is contracted when the semigroup has a zero. Exits with code 2
    if --check fails.
    """

    with exit_on_bad_input():
        config = RunConfig(
            in_path=in_path, bound_L=bound_L, output_format=output_format
        )
        no_dot(config)
        S = load_semigroup(config.in_path)
        lattice = ring_trace.commutator_lattice(S)
        torsion, free_rank = lattice.torsion()
        payload = {
            "order": S.order,
            "dimension": len(ring_trace.ring_basis(S)),
            "commutator_rank": lattice.rank,
            "free_rank": free_rank,
            "torsion": torsion,
            "trace_keys": {
                S.label(a): list(lattice.trace_key(a))
                for a in range(S.order)
            },
        }
        passed = True
        if check:
            primary = ring_trace.check_tr_prim(S)
            ideal = ring_trace.commutator_ideal_check(S, config.bound_L)
            payload["checks"] = {
                "traces_match_sim_p": primary.passed,
                "commutator_ideal_spanned": ideal,
                "bound_L": config.bound_L,
            }
            if not primary.passed:
                s, t = primary.counterexample
                logger.error(
                    f"Traces and sim_p disagree on ({S.label(s)}, "
                    f"{S.label(t)})"
                )
            if not ideal:
                logger.error(
                    "The commutator ideal is not spanned by the sim_s1 "
                    f"differences at L={config.bound_L}"
                )
            passed = primary.passed and ideal

    if config.is_text:
        typer.echo(
            f"Trace quotient: free rank {free_rank}, torsion {torsion}"
        )
        for label, key in payload["trace_keys"].items():
            typer.echo(f"  {label}: {key}")
    else:
        core.report.print_json(payload)
    if not passed:
        raise typer.Exit(code=2)


@family_app.command("rees")
def family_rees(
    spec: Annotated[
        str,
        typer.Option(
            "--spec",
            help="Rees matrix JSON: group table, I, Lambda, sandwich "
            "matrix P (group labels, '0' for a zero entry) and with_zero.",
        ),
    ],
    check: Tuple[str, str, str] = typer.Option(
        (None, None, None),
        "--check",
        help="Relation (sim_p1, sim_p or sim_s) and two elements written "
        "'(i,g,lam)' with 1-based indices, or '0'.",
    ),
    normalize: bool = typer.Option(
        False,
        "--normalize",
        help="Normalize P first; needed for sim_s when P has no zero "
        "entries and is not normalized.",
    ),
    cayley: bool = typer.Option(
        False, "--cayley", help="Print the Cayley table as semigroup JSON."
    ),
    output_format: cli_options.FormatChoices = typer.Option(
        cli_options.FormatChoices.JSON.value,
        "--format",
        help=FORMAT_HELP,
        case_sensitive=False,
    ),
) -> None:
    """Rees matrix semigroups M(G; I, Lambda; P) and M0(G; I, Lambda; P)"""

    with exit_on_bad_input():
        config = RunConfig(spec_path=spec, output_format=output_format)
        no_dot(config)
        sem = rees.ReesSemigroup.from_model(
            core.models.ReesModel.from_file(config.spec_path)
        )
        if normalize:
            sem = rees.rees_normalize(sem).normalized

        if cayley:
            core.report.print_json(sem.cayley().to_dict())
            return

        relation, a_text, b_text = check
        if relation is not None:
            name = cli_options.ReesRelationChoices(relation)
            classify = {
                cli_options.ReesRelationChoices.SIM_P1: rees.rees_sim_p1,
                cli_options.ReesRelationChoices.SIM_P: rees.rees_sim_p,
                cli_options.ReesRelationChoices.SIM_S: rees.rees_sim_s,
            }[name]
            if normalize:
                # The labels are read in the source semigroup
                source = rees.ReesSemigroup.from_model(
                    core.models.ReesModel.from_file(config.spec_path)
                )
                phi = rees.rees_normalize(source).phi
                a, b = phi(source.parse(a_text)), phi(source.parse(b_text))
            else:
                a, b = sem.parse(a_text), sem.parse(b_text)
            related = classify(sem, a, b)
            print_answer(
                config,
                {
                    "relation": name.value,
                    "a": a_text,
                    "b": b_text,
                    "related": related,
                    "normalized": normalize,
                },
                str(related).lower(),
            )
            return

        subgroup = None
        if sem.has_zero_entries or sem.is_normalized:
            subgroup = sorted(
                sem.group.label(g) for g in rees.sim_s_subgroup(sem)
            )
        payload = {
            "order": sem.order,
            "with_zero": sem.with_zero,
            "zero_entries": sem.has_zero_entries,
            "normalized": sem.is_normalized,
            "sim_s_universal": sem.has_zero_entries,
            "sim_s_subgroup": subgroup,
        }

    if config.is_text:
        for key, value in payload.items():
            typer.echo(f"{key}: {value}")
    else:
        core.report.print_json(payload)


@family_app.command("graph")
def family_graph(
    spec: Annotated[
        str,
        typer.Option(
            "--spec",
            help="Graph JSON: vertex names and edges as [name, source, "
            "range].",
        ),
    ],
    class_of_vertex: Optional[str] = typer.Option(
        None,
        "--class-of-vertex",
        help="Describe the sim_s class of this vertex.",
    ),
    check: Tuple[str, str, str] = typer.Option(
        (None, None, None),
        "--check",
        help="Relation (sim_p or sim_s) and two elements written as JSON "
        '{"x": [...], "y": [...]} for x y^-1, "@v" for the vertex v, or 0.',
    ),
    output_format: cli_options.FormatChoices = typer.Option(
        cli_options.FormatChoices.JSON.value,
        "--format",
        help=FORMAT_HELP,
        case_sensitive=False,
    ),
) -> None:
    """Graph inverse semigroups of finite directed graphs"""

    with exit_on_bad_input():
        config = RunConfig(spec_path=spec, output_format=output_format)
        no_dot(config)
        E = graph_inverse.GraphInverseSemigroup(
            graph_inverse.DirectedGraph.from_model(
                core.models.GraphModel.from_file(config.spec_path)
            )
        )

        if class_of_vertex is not None:
            found = str(E.vertex_class(class_of_vertex))
            print_answer(
                config, {"vertex": class_of_vertex, "class": found}, found
            )
            return

        relation, a_text, b_text = check
        if relation is None:
            raise ValueError("Pass --class-of-vertex or --check")
        name = cli_options.GraphRelationChoices(relation)
        a, b = (
            E.element_from_model(
                core.models.GraphElementModel.from_string(text)
            )
            for text in (a_text, b_text)
        )
        if name == cli_options.GraphRelationChoices.SIM_P:
            related = E.sim_p(a, b)
        else:
            related = E.sim_s(a, b)

    print_answer(
        config,
        {
            "relation": name.value,
            "a": E.label(a),
            "b": E.label(b),
            "related": related,
        },
        str(related).lower(),
    )


@family_app.command("words")
def family_words(
    sims: Tuple[str, str] = typer.Option(
        (None, None),
        "--sims",
        help="Two words; decide u sim_s v (same letter counts).",
    ),
    simp: Tuple[str, str] = typer.Option(
        (None, None),
        "--simp",
        help="Two words; decide u sim_p v (cyclic rotation).",
    ),
    generation: Optional[int] = typer.Option(
        None,
        "--generation",
        help="Length n; test whether the commuting pairs ab = ba generate "
        "sim_s on words of length n.",
    ),
    alphabet: str = typer.Option(
        "ab", "--alphabet", help="Alphabet of --generation."
    ),
    witness: bool = typer.Option(
        False,
        "--witness",
        help="Also search for a factorisation witnessing the relation.",
    ),
    output_format: cli_options.FormatChoices = typer.Option(
        cli_options.FormatChoices.JSON.value,
        "--format",
        help=FORMAT_HELP,
        case_sensitive=False,
    ),
) -> None:
    """Relations in the free semigroup on an alphabet"""

    with exit_on_bad_input():
        config = RunConfig(output_format=output_format)
        no_dot(config)

        if sims[0] is not None:
            u, v = (words.check_word(w) for w in sims)
            related = words.sim_s_words(u, v)
            payload = {"relation": "sim_s", "u": u, "v": v, "related": related}
            if witness:
                _, found, _ = words.sim_s1_words_oracle(u, v)
                payload["witness"] = None
                if found is not None:
                    payload["witness"] = {
                        "factors": list(found.factors),
                        "rearranged": list(found.rearranged),
                    }
        elif simp[0] is not None:
            u, v = simp
            related = words.sim_p1_words(u, v)
            payload = {"relation": "sim_p", "u": u, "v": v, "related": related}
            if witness:
                found = words.sim_p1_search(u, v)
                payload["witness"] = list(found) if found else None
        elif generation is not None:
            pairs = words.commuting_pairs(alphabet)
            related = words.commuting_generation_test(
                alphabet, pairs, generation
            )
            payload = {
                "alphabet": alphabet,
                "length": generation,
                "generators": [list(p) for p in pairs],
                "generates_sim_s": related,
            }
        else:
            raise ValueError("Pass --sims, --simp or --generation")

    print_answer(config, payload, str(related).lower())


@family_app.command("transform")
def family_transform(
    kind: transforms.MapKind = typer.Option(
        transforms.MapKind.T.value,
        "--kind",
        help="T (full), PT (partial), I (partial injections) or S "
        "(permutations).",
        case_sensitive=False,
    ),
    map_: Optional[str] = typer.Option(
        None,
        "--map",
        help="Map as a JSON list of images, null where undefined, e.g. "
        "[1,0,null].",
    ),
    conjugate: Tuple[str, str] = typer.Option(
        (None, None),
        "--conjugate",
        help="Two permutations; decide conjugacy in S(n) and give a "
        "witness w with p = w q w^-1.",
    ),
    cayley: Optional[int] = typer.Option(
        None,
        "--cayley",
        help="Print the Cayley table of the monoid of this kind on n points "
        "as semigroup JSON.",
    ),
    output_format: cli_options.FormatChoices = typer.Option(
        cli_options.FormatChoices.JSON.value,
        "--format",
        help=FORMAT_HELP,
        case_sensitive=False,
    ),
) -> None:
    """Transformation monoids T(n), PT(n), I(n) and S(n)"""

    def parse(text: str) -> transforms.FiniteMap:
        model = core.models.FiniteMapModel.from_string(text)
        return transforms.FiniteMap(tuple(model.images))

    with exit_on_bad_input():
        config = RunConfig(output_format=output_format)
        no_dot(config)

        if cayley is not None:
            monoid = transforms.monoid_cayley(kind, cayley)
            core.report.print_json(monoid.semigroup.to_dict())
            return

        if conjugate[0] is not None:
            p, q = (parse(text) for text in conjugate)
            related, w = transforms.conjugate_in_sym(p, q)
            payload = {
                "p": p.label(),
                "q": q.label(),
                "cycle_types": [
                    str(transforms.cycle_type(p)),
                    str(transforms.cycle_type(q)),
                ],
                "conjugate": related,
                "witness": list(w.images) if w is not None else None,
            }
            print_answer(config, payload, str(related).lower())
            return

        if map_ is None:
            raise ValueError("Pass --map, --conjugate or --cayley")
        s = parse(map_)
        found = transforms.sim_s_class(kind, s)

    payload = {
        "kind": transforms.MapKind(kind).value,
        "map": s.label(),
        "class": found.value,
        "components": [sorted(c) for c in transforms.components(s)],
    }
    print_answer(config, payload, found.value)


@family_app.command("natmap")
def family_natmap(
    map_: Optional[str] = typer.Option(
        None,
        "--map",
        help='Eventually-shift map as JSON {"table": [...], "shift": d}.',
    ),
    other: Optional[str] = typer.Option(
        None,
        "--with",
        help="A second map; compare the two and report both products.",
    ),
    property_test: bool = typer.Option(
        False,
        "--property-test",
        help="Run the seeded random checks on injections and surjections.",
    ),
    seed: int = typer.Option(
        core.config.constants.DEFAULT_SEED, "--seed", help=SEED_HELP
    ),
    count: int = typer.Option(
        core.config.constants.PROPERTY_TEST_COUNT,
        "--count",
        help="Number of random pairs for --property-test.",
    ),
) -> None:
    """Maps of the natural numbers that are eventually n -> n + d

    Exits with code 2 if --property-test finds a counterexample.
    """

    with exit_on_bad_input():
        config = RunConfig(seed=seed, count=count)

        if property_test:
            results = suites.run_checks(
                "natmaps",
                suites.natmaps_checks(config.seed, config.count),
                show_progress=False,
            )
            core.report.print_json(
                {
                    "seed": config.seed,
                    "count": config.count,
                    "results": [r.to_dict() for r in results],
                }
            )
            if any(r.failed for r in results):
                raise typer.Exit(code=2)
            return

        if map_ is None:
            raise ValueError("Pass --map or --property-test")
        maps = [
            nat_maps.EventuallyShiftMap.from_model(
                core.models.NatMapModel.from_string(text)
            )
            for text in (map_, other)
            if text is not None
        ]
        payload = {"maps": [describe_natmap(f) for f in maps]}
        if len(maps) == 2:
            s, t = maps
            payload["st"] = describe_natmap(nat_maps.compose(s, t))
            payload["ts"] = describe_natmap(nat_maps.compose(t, s))
            if s.is_injective and t.is_injective:
                payload["sim_s"] = nat_maps.inj_sim_s(s, t)
            elif s.is_surjective and t.is_surjective:
                payload["surj_approx"] = nat_maps.surj_approx(s, t)

    core.report.print_json(payload)


def describe_natmap(f: nat_maps.EventuallyShiftMap) -> dict:
    found = {
        **f.to_dict(),
        "injective": f.is_injective,
        "surjective": f.is_surjective,
    }
    if f.is_injective:
        found["defect"] = nat_maps.defect(f)
        found["cycles"] = nat_maps.cycle_census(f).to_dict()
    if f.is_surjective:
        found["ncm"] = nat_maps.ncm_invariants(f).to_dict()
        found["invariant"] = str(nat_maps.surj_invariant(f))
    return found


@app.command()
def verify(
    suite_choices: List[cli_options.SuiteChoices] = typer.Option(
        [cli_options.SuiteChoices.ALL.value],
        "--suite",
        help="Suite to run. To run several, use the option multiple "
        "times.",
        case_sensitive=False,
    ),
    seed: int = typer.Option(
        core.config.constants.DEFAULT_SEED, "--seed", help=SEED_HELP
    ),
    threads: int = typer.Option(
        core.config.constants.VERIFY_THREADS,
        "--threads",
        help="Worker threads for independent checks.",
    ),
    output_format: cli_options.FormatChoices = typer.Option(
        cli_options.FormatChoices.TEXT.value,
        "--format",
        help="Output format: text summary table (default) or json.",
        case_sensitive=False,
    ),
    log_dir: Optional[str] = typer.Option(
        None, "--log-dir", help="Directory for a debug log file."
    ),
    progress: bool = typer.Option(
        True, help="Show a progress bar for each suite."
    ),
) -> None:
    """Cross-check the closed forms against the generic engines

    Runs the acceptance suites over the corpus of finite semigroups and the
    infinite families. Exits with code 2 if any check fails.
    """

    with exit_on_bad_input():
        config = RunConfig(
            seed=seed, threads=threads, output_format=output_format
        )
        no_dot(config)

    if log_dir is not None:
        logfile = core.logging.setup_file_logger(log_dir)
        logger.info(f"Logging to {logfile}")

    if cli_options.SuiteChoices.ALL in suite_choices:
        selected = [member.value for member in cli_options.Suites]
    else:
        selected = [
            cli_options.Suites[choice.name].value
            for choice in dict.fromkeys(suite_choices)
        ]

    results = suites.run_suites(
        selected,
        seed=config.seed,
        threads=config.threads,
        show_progress=progress,
    )
    failed = {s.name: 0 for s in selected}
    skipped = {s.name: 0 for s in selected}
    for r in results:
        failed[r.suite] += r.failed
        skipped[r.suite] += r.skipped
    verdicts = {
        name: "FAIL" if count else "PASS" for name, count in failed.items()
    }

    if config.is_text:
        core.report.print_table(
            f"Verification (seed {config.seed})",
            ["Suite", "Check", "Result", "Detail"],
            [(r.suite, r.name, r.status, r.detail) for r in results],
        )
        for name, verdict in verdicts.items():
            note = f" ({skipped[name]} skipped)" if skipped[name] else ""
            typer.echo(f"{name}: {verdict}{note}")
    else:
        core.report.print_json(
            {
                "seed": config.seed,
                "suites": verdicts,
                "skipped": sum(skipped.values()),
                "results": [r.to_dict() for r in results],
            }
        )

    if any(failed.values()):
        raise typer.Exit(code=2)


def version_cb(value: bool) -> None:
    """Prints the version number of conjcalc

    Parameters
    ----------
    value : bool
        The value of the --version option
    """

    if value:  # Only run on when --version is set
        typer.echo(f"conjcalc {__version__}")
        sys.exit()


@app.callback()
def menu(
    version: bool = typer.Option(
        False,
        "--version",
        help="Prints the version number of conjcalc",
        callback=version_cb,
        is_eager=True,
    ),
):
    """conjcalc - Conjugacy relations and congruences of semigroups.

    Computes the eight conjugacy relations on finite semigroups given by
    their Cayley tables, classifies them in closed form on words, Rees
    matrix semigroups, graph inverse semigroups, transformation monoids and
    maps of the naturals, and cross-checks the two against each other.

    Use the --help option on a subcommand to see more information about it.
    """
    pass


def main() -> None:
    """The main function of the application

    Used by the poetry entrypoint.
    """

    app()


if __name__ == "__main__":
    main()
