import logging
import sys

from backend.core.BroadcastError import BroadcastError
from interfaces.cmd.ApproxRunner import ApproxRunner
from interfaces.cmd.ComplexityRunner import ComplexityRunner
from interfaces.cmd.OrderRunner import OrderRunner
from interfaces.cmd.RunConfig import RunConfig
from interfaces.cmd.Runner import EXIT_USAGE
from interfaces.cmd.SimulateRunner import SimulateRunner
from interfaces.cmd.VerifyRunner import VerifyRunner

RUNNERS = {
    "complexity": ComplexityRunner,
    "kraft": ComplexityRunner,
    "order": OrderRunner,
    "block": SimulateRunner,
    "avgcase": SimulateRunner,
    "simulate": SimulateRunner,
    "approx": ApproxRunner,
    "parity": ApproxRunner,
    "verify": VerifyRunner
}


def run(parsed_arguments):
    """Run one subcommand and return its exit code."""
    logger = logging.getLogger("cmd")
    if parsed_arguments.log_enabled:
        # Setup logging in the application.
        logger.setLevel(logging.DEBUG)
        formatter = logging.Formatter("%(process)d: %(asctime)s - %(name)s - %(levelname)s - %(message)s")

        file_handler = logging.FileHandler(filename=parsed_arguments.log_destination + "/cmd.log", encoding="utf-8")
        file_handler.setLevel(parsed_arguments.log_level)
        file_handler.setFormatter(formatter)

        logger.addHandler(file_handler)

    try:
        config = RunConfig.from_arguments(parsed_arguments)
    except (BroadcastError, IOError) as e:
        logger.error("Invalid configuration for `%s`.", parsed_arguments.subcommand, exc_info=sys.exc_info())
        sys.stderr.write("colloq %s: %s\n" % (parsed_arguments.subcommand, e))
        return EXIT_USAGE

    runner = RUNNERS[config.subcommand()](config)
    return runner.run()
