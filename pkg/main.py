"""
Stochastic And-Or solver - main start

Modes:
    gen      generates a benchmark model file
    solve    solves a model by tree search or by compiling a decision diagram
    compare  runs both and checks they agree
    sweep    compiles a benchmark family over a range of stages
"""

import sys
import time

import constants

from bench import GenSpec, InvalidGenSpecException, generate
from compiler import compile_aodd
from diagram import DiagramBuilder, extract_policy, stats, to_dict, to_dot
from model import load_model, problem_to_json, validate
from model.exceptions import InvalidModelException, ModelFormatException
from search import AndOrSearch, SearchTimeoutException, UnfixedAuxiliaryException, solve_tree

from utils.argument_parser import ArgumentParser, positive_float, positive_int
from utils.file_utils import write_json_to_file, write_text_to_file
from utils.logging_utils import Logger
from utils.stats import RunReport


def load_valid_model(model_path: str):
    """Loads a model file and validates it

    Args:
        model_path (str): Path of the model file

    Raises:
        ModelFormatException: The file is not a well-formed model
        InvalidModelException: The model breaks an invariant

    Returns:
        Problem: The problem
    """
    problem = load_model(model_path)
    report = validate(problem)
    if not report.ok:
        raise InvalidModelException(report)
    return problem


def run_gen_mode(args) -> int:
    """Generates a model and writes it to args.output

    Args:
        args (argparse.Namespace): Parsed arguments

    Returns:
        int: Exit code
    """
    try:
        spec = GenSpec.from_names(args.family, args.variant, args.stages, args.seed, args.capacity_scale)
    except InvalidGenSpecException as error:
        print(f"(!) {error}", file=sys.stderr)
        return constants.EXIT_USAGE
    problem = generate(spec)
    write_text_to_file(problem_to_json(problem), args.output)
    print(f"(G) Wrote {problem.name} to {args.output}")
    return constants.EXIT_OK


def run_tree(problem, timeout: float, keep_tree: bool):
    """Tree search. With keep_tree the tree is built as an uncached diagram so a policy can be read from it

    Returns:
        tuple: (value, stats, diagram or None)
    """
    if not keep_tree:
        value, search_stats = solve_tree(problem, timeout)
        return value, search_stats, None
    outcome = AndOrSearch(problem, DiagramBuilder(problem), timeout=timeout).run()
    if outcome.structure is not None:
        outcome.stats.size = {key: value for key, value in stats(outcome.structure).items() if key != "tree_node_count"}
    return outcome.value, outcome.stats, outcome.structure


def run_solve_mode(args) -> int:
    """Solves a model in tree or dd mode, printing value=<value> or infeasible

    Args:
        args (argparse.Namespace): Parsed arguments

    Returns:
        int: Exit code
    """
    problem = load_valid_model(args.model)
    if args.mode == "tree":
        value, search_stats, dd = run_tree(problem, args.timeout, args.policy is not None)
    else:
        dd, search_stats = compile_aodd(problem, args.timeout)
        value = dd.value if dd is not None else None

    if args.stats:
        RunReport(args.mode, value, search_stats, model=str(args.model), spec=dict(problem.generator)).save(args.stats)
    if value is None:
        print("infeasible")
        return constants.EXIT_INFEASIBLE

    print(f"value={value!r}")
    if args.policy:
        write_json_to_file(to_dict(extract_policy(dd, problem.objective)), args.policy)
    if args.dot:
        write_text_to_file(to_dot(dd), args.dot)
    return constants.EXIT_OK


def run_compare_mode(args) -> int:
    """Runs both modes and prints tree_value, dd_value, tree_nodes, dd_nodes, ratio as one tab-separated line.
       Any disagreement between the two is an internal inconsistency

    Args:
        args (argparse.Namespace): Parsed arguments

    Returns:
        int: Exit code
    """
    problem = load_valid_model(args.model)
    tree_value, tree_stats = solve_tree(problem, args.timeout)
    dd, dd_stats = compile_aodd(problem, args.timeout)
    dd_value = dd.value if dd is not None else None

    if tree_value is None and dd_value is None:
        print("infeasible\tinfeasible")
        return constants.EXIT_INFEASIBLE
    if tree_value is None or dd_value is None or tree_value != dd_value:
        print(f"{tree_value!r}\t{dd_value!r}", file=sys.stderr)
        print("(!) Tree search and diagram disagree on the value", file=sys.stderr)
        return constants.EXIT_INCONSISTENT

    tree_nodes = tree_stats.size["node_count"]
    dd_nodes = dd_stats.size["node_count"]
    if dd_stats.size["tree_node_count"] != tree_nodes:
        print(f"(!) Unfolded diagram has {dd_stats.size['tree_node_count']} nodes, tree search built {tree_nodes}", file=sys.stderr)
        return constants.EXIT_INCONSISTENT
    print(f"{tree_value!r}\t{dd_value!r}\t{tree_nodes}\t{dd_nodes}\t{tree_nodes / dd_nodes:.6f}")
    return constants.EXIT_OK


def run_sweep_mode(args) -> int:
    """Compiles one generated model per stage count and prints a TSV row for each

    Args:
        args (argparse.Namespace): Parsed arguments

    Returns:
        int: Exit code
    """
    logger = Logger().get_solver_logger()
    print("stages\ttree_nodes\tdd_nodes\tratio\tvalue\tseconds")
    for stages in range(args.from_stage, args.to_stage + 1):
        try:
            spec = GenSpec.from_names(args.family, args.variant, stages, args.seed, args.capacity_scale)
        except InvalidGenSpecException as error:
            print(f"(!) {error}", file=sys.stderr)
            return constants.EXIT_USAGE
        start = time.monotonic()
        dd, dd_stats = compile_aodd(generate(spec), args.timeout)
        seconds = time.monotonic() - start
        if dd is None:
            print(f"{stages}\t-\t-\t-\tinfeasible\t{seconds:.3f}")
            continue
        tree_nodes = dd_stats.size["tree_node_count"]
        dd_nodes = dd_stats.size["node_count"]
        logger.info(f"Sweep {spec.to_dict()}: {dd_stats.to_dict()}")
        print(f"{stages}\t{tree_nodes}\t{dd_nodes}\t{tree_nodes / dd_nodes:.6f}\t{dd.value!r}\t{seconds:.3f}", flush=True)
    return constants.EXIT_OK


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(description="And-Or search and decision diagram compilation for factored stochastic constraint programs")
    parser.add_argument("--log-dir", help="directory the logs folder is created in (no log files when omitted)", required=False)
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen_parser = subparsers.add_parser("gen", help="generate a benchmark model file")
    gen_parser.add_argument("family", help="one of knapsack, investment, production")
    gen_parser.add_argument("--variant", help="independent, chain or hidden (knapsack); independent or chain (investment)", required=False)
    gen_parser.add_argument("--stages", help="number of stages", type=positive_int, required=True)
    gen_parser.add_argument("--seed", help="seed for the probability tables", type=int, default=0)
    gen_parser.add_argument("--capacity-scale", help="knapsack capacity as a fraction of the expected total weight", type=positive_float, required=False)
    gen_parser.add_argument("-o", "--output", help="model file to write", required=True)

    solve_parser = subparsers.add_parser("solve", help="solve a model")
    solve_parser.add_argument("model", help="model file")
    solve_parser.add_argument("--mode", help="tree search or decision diagram compilation", choices=["tree", "dd"], default="dd")
    solve_parser.add_argument("--stats", help="write run statistics as JSON to this path", required=False)
    solve_parser.add_argument("--policy", help="write the optimal policy as JSON to this path", required=False)
    solve_parser.add_argument("--dot", help="write the diagram as DOT to this path (dd mode only)", required=False)
    solve_parser.add_argument("--timeout", help="seconds before the search is abandoned", type=positive_float, required=False)

    compare_parser = subparsers.add_parser("compare", help="solve in both modes and compare")
    compare_parser.add_argument("model", help="model file")
    compare_parser.add_argument("--timeout", help="seconds allowed for each mode", type=positive_float, required=False)

    sweep_parser = subparsers.add_parser("sweep", help="compile a benchmark family over a range of stages")
    sweep_parser.add_argument("family", help="one of knapsack, investment, production")
    sweep_parser.add_argument("--variant", help="family variant", required=False)
    sweep_parser.add_argument("--from", dest="from_stage", help="first stage count", type=positive_int, required=True)
    sweep_parser.add_argument("--to", dest="to_stage", help="last stage count", type=positive_int, required=True)
    sweep_parser.add_argument("--seed", help="seed for the probability tables", type=int, default=0)
    sweep_parser.add_argument("--capacity-scale", help="knapsack capacity scaling", type=positive_float, required=False)
    sweep_parser.add_argument("--timeout", help="seconds allowed per stage count", type=positive_float, required=False)
    return parser


MODES = {"gen": run_gen_mode, "solve": run_solve_mode, "compare": run_compare_mode, "sweep": run_sweep_mode}


def main(argv: list[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "solve" and args.dot and args.mode != "dd":
        parser.error("--dot is only available with --mode dd")
    if args.command == "sweep" and args.from_stage > args.to_stage:
        parser.error("--from must not be greater than --to")

    if args.log_dir:
        Logger().initialize_loggers(args.command, args.log_dir)

    try:
        return MODES[args.command](args)
    except (ModelFormatException, InvalidModelException, UnfixedAuxiliaryException) as error:
        print(f"(!) {error}", file=sys.stderr)
        return constants.EXIT_INVALID_MODEL
    except SearchTimeoutException as error:
        print(f"(!) {error}", file=sys.stderr)
        return constants.EXIT_TIMEOUT


if __name__ == "__main__":
    sys.exit(main())
