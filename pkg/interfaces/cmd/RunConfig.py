import logging
import os

from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.ProbProfile import ProbProfile
from backend.core.ProbabilityDomainError import ProbabilityDomainError
import backend.core.Serialization as serialization

OUTPUT_DIRECTORY_VARIABLE = "COLLOQ_OUTPUT_DIR"
(TEXT, JSON, CSV) = ("text", "json", "csv")
OUTPUT_FORMATS = (TEXT, JSON, CSV)

# Subcommands, or (subcommand, check) pairs, whose output depends on a random seed.
STOCHASTIC = {"block", "avgcase", ("simulate", "block"), ("simulate", "discard"),
              ("verify", "rule"), ("verify", "inequalities"), ("verify", "parity"), ("verify", "avgcase")}

# Keys a --config file may set, named after the argparse destinations.
CONFIG_KEYS = ("check", "kind", "n", "theta", "a", "b", "m", "alphabet", "p", "cost", "budget", "metric",
               "block_length", "seed", "mode", "trials", "grid", "emit", "verify", "output_format", "output_file")

DEFAULTS = {
    "cost": "entropy",
    "metric": "entropy",
    "mode": "ideal",
    "grid": "coarse",
    "output_format": TEXT
}


def parse_list(value, cast):
    """Accept `0.2,0.5` from the command line or a JSON array from a config file."""
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        items = value
    elif isinstance(value, str):
        items = [item for item in value.split(",") if item.strip()]
    else:
        items = [value]
    try:
        return tuple(cast(item) for item in items)
    except ValueError as e:
        raise FunctionSpecError("Unable to parse `%s` as a list of %s." % (value, cast.__name__)) from e


class RunConfig:
    """Everything one invocation needs, merged from the flags and an optional JSON file."""

    def __init__(self, subcommand, values):
        self._subcommand = subcommand
        self._values = dict(DEFAULTS)
        self._values.update({key: value for key, value in values.items() if value is not None})
        self._logger = logging.getLogger("cmd")
        self._validate()

    @classmethod
    def from_arguments(cls, parsed_arguments):
        values = {}
        config_file = getattr(parsed_arguments, "config_file", None)
        if config_file:
            document = serialization.read_json(config_file, "run_config_schema")
            if document.get("subcommand", parsed_arguments.subcommand) != parsed_arguments.subcommand:
                raise FunctionSpecError("Configuration `%s` is for `%s`, not `%s`." %
                                        (config_file, document["subcommand"], parsed_arguments.subcommand))
            values.update({key: document[key] for key in CONFIG_KEYS if key in document})

        for key in CONFIG_KEYS:
            flag_value = getattr(parsed_arguments, key, None)
            if flag_value is not None:
                values[key] = flag_value
        return cls(parsed_arguments.subcommand, values)

    def _validate(self):
        self._values["p"] = parse_list(self._values.get("p"), float)
        self._values["alphabet"] = parse_list(self._values.get("alphabet"), int)

        if self._values["output_format"] not in OUTPUT_FORMATS:
            raise FunctionSpecError("Unknown output format `%s`." % self._values["output_format"])
        if self.is_stochastic() and self.seed() is None:
            raise FunctionSpecError("`%s` is stochastic and needs --seed." % " ".join(self.command()))
        if self._values.get("block_length") is not None and self._values["block_length"] < 1:
            raise FunctionSpecError("Block length must be at least 1, got %r." % (self._values["block_length"],))
        self._logger.debug("Run configuration for `%s`: %s", " ".join(self.command()), self._values)

    def subcommand(self):
        return self._subcommand

    def check(self):
        return self._values.get("check")

    def command(self):
        return (self._subcommand,) if self.check() is None else (self._subcommand, self.check())

    def is_stochastic(self):
        return self._subcommand in STOCHASTIC or self.command() in STOCHASTIC

    def get(self, key, default=None):
        value = self._values.get(key)
        return default if value is None else value

    def require(self, key, flag=None):
        value = self._values.get(key)
        if value is None:
            raise FunctionSpecError("`%s` needs %s." % (" ".join(self.command()), flag or "--" + key))
        return value

    def profile(self):
        """The probability list as a sorted profile that remembers the input order."""
        probs = self.require("p")
        if not probs:
            raise ProbabilityDomainError("--p needs at least one probability.")
        return ProbProfile.from_unsorted(probs)

    def single_probability(self):
        probs = self.require("p")
        if len(probs) != 1:
            raise ProbabilityDomainError("`%s` takes a single --p, got %d values." % (self._subcommand, len(probs)))
        return probs[0]

    def block_length(self, default):
        return self.get("block_length", default)

    def seed(self):
        return self._values.get("seed")

    def output_format(self):
        return self._values["output_format"]

    def output_file(self):
        """The output path, resolved against $COLLOQ_OUTPUT_DIR when relative; None means stdout."""
        path = self._values.get("output_file")
        return self.resolve(path) if path else None

    def resolve(self, path):
        directory = os.environ.get(OUTPUT_DIRECTORY_VARIABLE)
        if directory and not os.path.isabs(path):
            return os.path.join(directory, path)
        return path

    def __repr__(self):
        return "RunConfig(%s)" % " ".join(self.command())
