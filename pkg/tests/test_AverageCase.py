import jsonschema
import pytest

from backend.avgcase.AverageCase import analytic_cost, binomial_tail_rate, parallel_schemes_rate, simulate_discard
from backend.avgcase.DiscardRun import DiscardRun
from backend.core.Arithmetic import binary_entropy
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.ProbabilityDomainError import ProbabilityDomainError
import backend.core.Serialization as serialization


def test_analytic_rate_for_or():
    cost = analytic_cost(4, 1, 0.5, 1000)
    assert cost.rate() == pytest.approx(1.875)
    assert cost.rate() < cost.bound() == pytest.approx(2.0)
    assert cost.total_bits() == pytest.approx(1875.0)


def test_analytic_rate_when_theta_is_n():
    assert analytic_cost(6, 6, 0.3, 1).rate() == pytest.approx(6 * binary_entropy(0.3))


@pytest.mark.parametrize("n, theta, p", [(4, 1, 0.5), (10, 3, 0.2), (30, 7, 0.65), (5, 5, 0.9)])
def test_binomial_tail_matches_analytic_rate(n, theta, p):
    assert binomial_tail_rate(n, theta, p) == pytest.approx(analytic_cost(n, theta, p, 1).rate(), rel=1e-9)


def test_rate_stays_below_the_bound_for_large_n():
    cost = analytic_cost(500, 4, 0.1, 1)
    assert cost.rate() <= cost.bound() + 1e-9
    assert cost.rate() == pytest.approx(cost.bound(), rel=1e-6)


def test_parallel_schemes():
    rate = parallel_schemes_rate(20, 2, 3, 0.3)
    assert rate <= 5 * binary_entropy(0.3) / 0.3


@pytest.mark.parametrize("theta, p", [(1, 0.3), (2, 0.5), (3, 0.3)])
def test_ideal_simulation_matches_analytic_rate(theta, p):
    run = simulate_discard(10, theta, p, 20000, seed=17)
    assert run.zero_error()
    assert run.rate() == pytest.approx(analytic_cost(10, theta, p, 1).rate(), rel=0.03)
    assert run.transmitters() == tuple(range(10, 0, -1))
    assert run.undetermined()[0] == 20000


def test_huffman_simulation_decodes():
    run = simulate_discard(6, 2, 0.4, 4096, seed=2, mode=DiscardRun.HUFFMAN)
    assert run.zero_error()
    assert run.rate() <= analytic_cost(6, 2, 0.4, 1).rate() * 1.1


def test_degenerate_probabilities_simulate():
    run = simulate_discard(3, 2, 1.0, 100, seed=0)
    assert run.zero_error()
    assert run.undetermined() == (100, 100, 0)
    assert run.total_bits() == 0


def test_run_json_validates():
    document = simulate_discard(4, 2, 0.5, 64, seed=9).to_json()
    jsonschema.validate(document, serialization.load_schema("discard_run_schema"))


def test_argument_checks():
    with pytest.raises(ProbabilityDomainError):
        analytic_cost(4, 2, 1.0, 1)
    with pytest.raises(FunctionSpecError):
        simulate_discard(4, 5, 0.5, 10, seed=1)
    with pytest.raises(FunctionSpecError):
        simulate_discard(4, 2, 0.5, 10, seed=1, mode="arithmetic")
    with pytest.raises(ValueError):
        simulate_discard(4, 2, 0.5, 10, seed=None)
