import itertools
import logging

import numpy as np

from backend.core.Arithmetic import DEFAULT_TOLERANCE
from backend.ordering.DPState import DPState
from backend.ordering.DPTable import DPTable

logger = logging.getLogger("colloq.ordering")

(T_BOUND, S1_BOUND, S2_BOUND) = ("T", "S1", "S2")


class InequalityEntry:
    def __init__(self, kind, subset, k, i, value, bound):
        self.kind = kind
        self.subset = tuple(sorted(subset))
        self.k = k
        self.i = i
        self.value = value
        self.bound = bound

    def slack(self):
        return self.bound - self.value

    def to_json(self):
        return {"kind": self.kind, "subset": list(self.subset), "k": self.k, "i": self.i,
                "value": self.value, "bound": self.bound, "slack": self.slack()}

    def __repr__(self):
        return "%s(S=%s, k=%d, i=%d): %.6g <= %.6g" % (self.kind, self.subset, self.k, self.i, self.value, self.bound)


class InequalityReport:
    """The loaded induction bounds evaluated from DP values over many node subsets.

    Within a subset S of size m, ranks are taken among the members of S; nu is
    the (k+1)-th least likely member and mu the i-th, and C(R, t) is the
    optimal cost of Pi_t over R.
        T  = p_nu C(S-nu, m-k-1) + (1-p_nu) C(S-nu, m-k) - p_mu C(S-mu, m-k-1) - (1-p_mu) C(S-mu, m-k)
             <= f(p_mu) - f(p_nu)                                   for every i
        S1 = (p_nu - p_mu) C(S-{nu,mu}, m-k-1) + (1-p_nu) C(S-nu, m-k) - (1-p_mu) C(S-mu, m-k)
             <= (1-p_nu) f(p_mu) - (1-p_mu) f(p_nu)                 for i >= k+2
        S2 = (p_mu - p_nu) C(S-{mu,nu}, m-k-1) + p_nu C(S-nu, m-k-1) - p_mu C(S-mu, m-k-1)
             <= p_nu f(p_mu) - p_mu f(p_nu)                         for i < k+1
    """

    def __init__(self, entries, tolerance=DEFAULT_TOLERANCE):
        self._entries = list(entries)
        self._tolerance = tolerance

    def entries(self, kind=None):
        return [entry for entry in self._entries if kind is None or entry.kind == kind]

    def min_slack(self, kind=None):
        entries = self.entries(kind)
        if not entries:
            return float("inf")
        return min(entry.slack() for entry in entries)

    def worst(self):
        if not self._entries:
            return None
        return min(self._entries, key=lambda entry: entry.slack())

    def max_violation(self):
        return max(0.0, -self.min_slack())

    def holds(self):
        return self.min_slack() >= -self._tolerance

    def to_json(self):
        worst = self.worst()
        return {
            "holds": self.holds(),
            "checks": len(self._entries),
            "min_slack": {kind: self.min_slack(kind) for kind in (T_BOUND, S1_BOUND, S2_BOUND) if self.entries(kind)},
            "max_violation": self.max_violation(),
            "worst": worst.to_json() if worst is not None else None
        }

    def __repr__(self):
        return "InequalityReport(%d checks, min slack %.3g)" % (len(self._entries), self.min_slack())


def _subset_entries(table, subset, ks):
    profile = table.profile()
    cost = table.cost_kind()
    ranked = profile.rank_within(subset)
    m = len(ranked)
    members = frozenset(subset)

    def c(removed, t):
        return table.value(DPState(members - set(removed), t))

    entries = []
    for k in ks:
        if not 0 <= k <= m - 1:
            continue
        nu = ranked[k]
        p_nu = profile.prob(nu)
        f_nu = cost(p_nu)
        for i in range(1, m + 1):
            mu = ranked[i - 1]
            p_mu = profile.prob(mu)
            f_mu = cost(p_mu)

            t_value = p_nu * c([nu], m - k - 1) + (1 - p_nu) * c([nu], m - k) \
                - p_mu * c([mu], m - k - 1) - (1 - p_mu) * c([mu], m - k)
            entries.append(InequalityEntry(T_BOUND, subset, k, i, t_value, f_mu - f_nu))

            if i >= k + 2:
                s1_value = (p_nu - p_mu) * c([nu, mu], m - k - 1) + (1 - p_nu) * c([nu], m - k) \
                    - (1 - p_mu) * c([mu], m - k)
                entries.append(InequalityEntry(S1_BOUND, subset, k, i, s1_value, (1 - p_nu) * f_mu - (1 - p_mu) * f_nu))
            elif i < k + 1:
                s2_value = (p_mu - p_nu) * c([mu, nu], m - k - 1) + p_nu * c([nu], m - k - 1) \
                    - p_mu * c([mu], m - k - 1)
                entries.append(InequalityEntry(S2_BOUND, subset, k, i, s2_value, p_nu * f_mu - p_mu * f_nu))
    return entries


def check_appendix_inequalities(profile, theta, cost, samples=None, seed=0):
    """Evaluate the three bounds on node subsets of the profile.

    With `samples=None` every non-empty subset is checked, otherwise a seeded
    sample of that many subsets. A `theta` restricts each subset of size m to
    k = m - theta; `theta=None` checks every k.
    """
    table = DPTable(profile, max(1, min(theta or 1, profile.n())), cost)
    nodes = profile.nodes()

    if samples is None:
        subsets = [combination for size in range(1, len(nodes) + 1) for combination in itertools.combinations(nodes, size)]
    else:
        rng = np.random.default_rng(seed)
        subsets = []
        for _ in range(samples):
            mask = rng.integers(0, 2, size=len(nodes))
            if not mask.any():
                mask[rng.integers(0, len(nodes))] = 1
            subsets.append(tuple(node for node, bit in zip(nodes, mask) if bit))

    entries = []
    for subset in subsets:
        ks = range(len(subset)) if theta is None else [len(subset) - theta]
        entries.extend(_subset_entries(table, subset, ks))

    report = InequalityReport(entries)
    logger.info("Checked %d inequalities over %d subsets of %r (%s): %r.", len(entries), len(subsets), profile, cost, report)
    return report
