from backend.core.Arithmetic import log2
from backend.core.FunctionSpec import FunctionSpec
from backend.core.FunctionSpecError import FunctionSpecError
from backend.worstcase.CodeLengthPlan import kraft_plan
from backend.worstcase.WorstCaseComplexity import complexity
import backend.core.Serialization as serialization
from interfaces.cmd.Runner import RunReport, Runner

DEFAULT_KRAFT_BLOCK_LENGTH = 64


def alphabet_from(config):
    """--alphabet m1,m2,.. or a uniform --m over --n nodes."""
    alphabet = config.get("alphabet")
    if alphabet:
        return alphabet
    if config.get("m") is not None:
        return (config.get("m"),) * config.require("n")
    raise FunctionSpecError("`%s` needs --alphabet or --m with --n." % " ".join(config.command()))


def spec_from(config):
    kind = config.require("kind")
    if kind == "and":
        return FunctionSpec.and_function(config.require("n"))
    if kind == "or":
        return FunctionSpec.or_function(config.require("n"))
    if kind == "threshold":
        return FunctionSpec.threshold(config.require("n"), config.require("theta"))
    if kind == "delta":
        return FunctionSpec.delta(config.require("n"), config.require("theta"))
    if kind == "interval":
        return FunctionSpec.interval(config.require("n"), config.require("a"), config.require("b"))
    if kind == "parity":
        return FunctionSpec.parity(config.require("n"))
    if kind == "max":
        return FunctionSpec.max_function(alphabet_from(config))
    if kind == "gthreshold":
        return FunctionSpec.general_threshold(config.require("theta"), alphabet_from(config))
    raise FunctionSpecError("Unknown function kind `%s`." % kind)


class ComplexityRunner(Runner):
    """Worst-case bounds (`complexity`) and the first transmitter's code plan (`kraft`)."""

    def execute(self):
        if self._config.subcommand() == "kraft":
            return self.kraft()
        return self.complexity()

    def complexity(self):
        spec = spec_from(self._config)
        result = complexity(spec)
        headers = ["kind", "n", "theta", "a", "b", "alphabet", "lower_bits", "upper_bits",
                   "lower_count", "upper_count", "exact", "note"]
        row = [spec.kind_name(), spec.n(), spec.theta(), spec.a(), spec.b(), ",".join(str(m) for m in spec.alphabet()),
               result.lower_bits(), result.upper_bits(), str(result.lower_count()), str(result.upper_count()),
               result.exact(), result.note()]
        self._logger.info("Complexity of %s: %r.", spec, result)
        return RunReport(serialization.versioned(result.to_json()), "complexity_schema", headers, [row],
                         title="Worst-case complexity (bits per instance)")

    def kraft(self):
        if self._config.get("alphabet") or self._config.get("m") is not None:
            spec = FunctionSpec.general_threshold(self._config.require("theta"), alphabet_from(self._config))
        else:
            spec = FunctionSpec.threshold(self._config.require("n"), self._config.require("theta"))
        block_length = self._config.block_length(DEFAULT_KRAFT_BLOCK_LENGTH)
        plan = kraft_plan(spec, block_length)

        document = serialization.versioned(plan.to_json())
        document["function"] = spec.to_json()
        headers = ["symbol", "residual_count", "residual_bits"]
        rows = [[label, str(count), log2(count)] for label, count in zip(plan.symbol_labels(), plan.residual_counts())]
        summary = [
            ("Block length", block_length),
            ("Kraft sum", document["kraft_sum"]),
            ("Worst-case total bits", document["worst_case_total_bits"]),
            ("N log2(total count)", block_length * log2(plan.total_count())),
            ("Integer Kraft sum", document["integer_kraft_sum"]),
            ("Integer worst-case total bits", document["integer_worst_case_total_bits"])
        ]
        return RunReport(document, "code_length_plan_schema", headers, rows,
                         title="Code plan of node %d for %s" % (spec.n(), spec), summary=summary)
