from backend.avgcase.AverageCase import analytic_cost, simulate_discard
from backend.blockcoding.BlockSimulation import simulate_block
from backend.blockcoding.ComputationTree import coherent_cost
from interfaces.cmd.Runner import RunReport, Runner

DEFAULT_BLOCK_LENGTH = 65536


class SimulateRunner(Runner):
    """Seeded block simulations: coherent block coding (`block`) and the discard strategy (`avgcase`)."""

    def execute(self):
        if self._config.subcommand() == "block" or self._config.command() == ("simulate", "block"):
            return self.block()
        return self.discard()

    def block(self):
        profile = self._config.profile()
        theta = self._config.require("theta")
        run = simulate_block(profile, theta, self._config.block_length(DEFAULT_BLOCK_LENGTH), self._config.seed())
        expected, _ = coherent_cost(profile, theta)

        document = run.to_json()
        document["coherent_cost"] = expected
        headers = ["path", "transmitter", "original_id", "subblock_length", "ones", "bits"]
        summary = [
            ("Total bits", run.total_bits()),
            ("Bits per instance", run.bits_per_instance()),
            ("Coherent cost", expected),
            ("Zero error", run.zero_error())
        ]
        return RunReport(document, "block_run_schema", headers, run.table_rows(),
                         title="Coherent block simulation, theta=%d" % theta, summary=summary, passed=run.zero_error())

    def discard(self):
        n = self._config.require("n")
        theta = self._config.require("theta")
        p = self._config.single_probability()
        block_length = self._config.block_length(DEFAULT_BLOCK_LENGTH)
        run = simulate_discard(n, theta, p, block_length, self._config.seed(), self._config.get("mode"))

        document = run.to_json()
        summary = [("Total bits", run.total_bits()), ("Rate", run.rate())]
        if 0.0 < p < 1.0:
            analytic = analytic_cost(n, theta, p, block_length)
            document["analytic_rate"] = analytic.rate()
            document["bound"] = analytic.bound()
            summary += [("Analytic rate", analytic.rate()), ("theta H(p) / p", analytic.bound())]
        summary.append(("Zero error", run.zero_error()))
        return RunReport(document, "discard_run_schema", ["node", "undetermined", "bits"], run.table_rows(),
                         title="Discard simulation, n=%d, theta=%d, p=%g, %s" % (n, theta, p, run.mode()),
                         summary=summary, passed=run.zero_error())
