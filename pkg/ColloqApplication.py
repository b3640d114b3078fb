import sys
import argparse
import os
import logging
import logging.handlers

import interfaces.cmd

FUNCTION_KINDS = ["threshold", "and", "or", "delta", "interval", "parity", "max", "gthreshold"]
VERIFY_SUITES = ["rule", "inequalities", "conjecture", "taylor", "fooling", "counterexample", "parity", "avgcase", "worstcase"]


def output_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser_group_output = parser.add_argument_group("output")
    formats = parser_group_output.add_mutually_exclusive_group()
    formats.add_argument("--json", help="write a schema-validated JSON report, optionally to PATH", nargs="?", const="", metavar="PATH", dest="json_file")
    formats.add_argument("--csv", help="write a CSV table, optionally to PATH", nargs="?", const="", metavar="PATH", dest="csv_file")
    formats.add_argument("--text", help="write human readable tables (default)", action="store_true", default=None, dest="text_output")
    parser_group_output.add_argument("--out", help="output file, relative paths resolve against $COLLOQ_OUTPUT_DIR", dest="out_file")
    return parser


def add_function_arguments(parser, kind=False):
    parser_group_function = parser.add_argument_group("function")
    if kind:
        parser_group_function.add_argument("--kind", help="function family", choices=FUNCTION_KINDS, dest="kind")
    parser_group_function.add_argument("--n", help="number of nodes", type=int, dest="n")
    parser_group_function.add_argument("--theta", help="threshold", type=int, dest="theta")
    return parser_group_function


def add_alphabet_arguments(parser_group):
    parser_group.add_argument("--m", help="largest symbol of every node", type=int, dest="m")
    parser_group.add_argument("--alphabet", help="largest symbol per node, e.g. 2,3,1", dest="alphabet")


def add_simulation_arguments(parser):
    parser_group_simulation = parser.add_argument_group("simulation")
    parser_group_simulation.add_argument("--N", help="block length (default 65536)", type=int, dest="block_length")
    parser_group_simulation.add_argument("--seed", help="random seed, required for stochastic runs", type=int, dest="seed")
    return parser_group_simulation


def build_parser():
    parser = argparse.ArgumentParser(prog="colloq", description="Symmetric function computation in collocated broadcast networks")
    parser.add_argument("--config", help="JSON run configuration, overridden by flags", dest="config_file")
    parser_group_logging = parser.add_argument_group("logging")
    parser_group_logging.add_argument("--no-log", help="disable logging for the application", action="store_false", default=True, dest="log_enabled")
    parser_group_logging.add_argument("-ll", "--log-level", help="set the level of logging", default="DEBUG", dest="log_level")
    parser_group_logging.add_argument("-ld", "--log-destination", help="set the log output directory", default="./logs/", dest="log_destination")

    output = output_parser()
    subparsers = parser.add_subparsers(title="subcommands", dest="subcommand", metavar="SUBCOMMAND")
    subparsers.required = True

    parser_complexity = subparsers.add_parser("complexity", parents=[output], help="worst-case complexity bounds")
    group = add_function_arguments(parser_complexity, kind=True)
    group.add_argument("--a", help="interval lower end", type=int, dest="a")
    group.add_argument("--b", help="interval upper end", type=int, dest="b")
    add_alphabet_arguments(group)

    parser_kraft = subparsers.add_parser("kraft", parents=[output], help="code plan of the first transmitting node")
    add_alphabet_arguments(add_function_arguments(parser_kraft))
    parser_kraft.add_argument("--N", help="block length (default 64)", type=int, dest="block_length")

    parser_order = subparsers.add_parser("order", parents=[output], help="optimal transmission order")
    parser_order.add_argument("--p", help="probabilities p1,p2,.. in node order", dest="p")
    parser_order.add_argument("--theta", help="threshold", type=int, dest="theta")
    parser_order.add_argument("--cost", help="per-broadcast cost", choices=["unit", "entropy", "pulse"], dest="cost")
    parser_order.add_argument("--emit", help="also write the policy JSON to this file", dest="emit")
    parser_order.add_argument("--verify", help="check the rule against the DP argmin", action="store_true", default=None, dest="verify")

    parser_block = subparsers.add_parser("block", parents=[output], help="simulate coherent block computation")
    parser_block.add_argument("--p", help="probabilities p1,p2,.. in node order", dest="p")
    parser_block.add_argument("--theta", help="threshold", type=int, dest="theta")
    add_simulation_arguments(parser_block)

    parser_avgcase = subparsers.add_parser("avgcase", parents=[output], help="simulate the discard strategy")
    add_function_arguments(parser_avgcase)
    parser_avgcase.add_argument("--p", help="probability shared by every node", dest="p")
    add_simulation_arguments(parser_avgcase).add_argument("--mode", help="coding model", choices=["ideal", "huffman"], dest="mode")

    parser_approx = subparsers.add_parser("approx", parents=[output], help="threshold with a broadcast budget")
    parser_approx.add_argument("--p", help="probabilities p1,p2,.. in node order", dest="p")
    parser_approx.add_argument("--theta", help="threshold", type=int, dest="theta")
    parser_approx.add_argument("--budget", help="number of broadcasts", type=int, dest="budget")
    parser_approx.add_argument("--metric", help="error measure", choices=["entropy", "error"], dest="metric")

    parser_parity = subparsers.add_parser("parity", parents=[output], help="parity with a broadcast budget")
    parser_parity.add_argument("--p", help="probabilities p1,p2,.. in node order", dest="p")
    parser_parity.add_argument("--budget", help="number of broadcasts", type=int, dest="budget")

    parser_verify = subparsers.add_parser("verify", parents=[output], help="run a verification suite")
    parser_verify.add_argument("check", help="suite to run", choices=VERIFY_SUITES)
    add_function_arguments(parser_verify)
    parser_verify.add_argument("--trials", help="random profiles per case", type=int, dest="trials")
    parser_verify.add_argument("--grid", help="probability grid for the partition check", choices=["coarse", "fine"], dest="grid")
    add_simulation_arguments(parser_verify)

    parser_simulate = subparsers.add_parser("simulate", parents=[output], help="run one of the simulators")
    parser_simulate.add_argument("check", help="simulator", choices=["block", "discard"])
    add_function_arguments(parser_simulate)
    parser_simulate.add_argument("--p", help="probabilities; a single value for discard", dest="p")
    add_simulation_arguments(parser_simulate).add_argument("--mode", help="coding model for discard", choices=["ideal", "huffman"], dest="mode")

    return parser


def normalize_output(parsed_arguments):
    """Fold --json/--csv/--text/--out into output_format and output_file."""
    parsed_arguments.output_format = None
    parsed_arguments.output_file = None
    for output_format, path in (("json", getattr(parsed_arguments, "json_file", None)), ("csv", getattr(parsed_arguments, "csv_file", None))):
        if path is not None:
            parsed_arguments.output_format = output_format
            parsed_arguments.output_file = path or None
    if getattr(parsed_arguments, "text_output", None):
        parsed_arguments.output_format = "text"
    if getattr(parsed_arguments, "out_file", None):
        parsed_arguments.output_file = parsed_arguments.out_file
    return parsed_arguments


def main(argv=None):
    if argv is None:
        # Use sys.argv since argv was not passed in.
        argv = sys.argv[1:]

    parsed_arguments = normalize_output(build_parser().parse_args(argv))

    parsed_arguments.log_destination = os.path.normpath(os.path.join(os.path.join(os.path.dirname(__file__)), parsed_arguments.log_destination))

    # Setup logging in the application.
    if not parsed_arguments.log_enabled:
        # Disable logging by preventing logging of all levels of errors.
        logging.disable(logging.CRITICAL)
    else:
        # Create the path for logs if it doesn't already exist.
        if not os.path.exists(parsed_arguments.log_destination):
            os.makedirs(parsed_arguments.log_destination)

        logger = logging.getLogger("colloq")
        logger.setLevel(logging.DEBUG)
        formatter = logging.Formatter("%(process)d: %(asctime)s - %(name)s - %(levelname)s - %(message)s")

        file_handler = logging.FileHandler(filename=parsed_arguments.log_destination + "/event.log", encoding="utf-8")
        file_handler.setLevel(parsed_arguments.log_level)
        file_handler.setFormatter(formatter)

        # Use a memory handler to prevent excessive I/O bound events.
        memory_handler = logging.handlers.MemoryHandler(1024 * 100, target=file_handler)

        logger.addHandler(memory_handler)

    return interfaces.cmd.run(parsed_arguments)


if __name__ == "__main__":
    sys.exit(main())
