import logging

from backend.core.Arithmetic import binary_entropy
from backend.core.BroadcastCosts import BinaryEntropyCost
from backend.ordering.DPTable import solve_dp
from backend.ordering.OrderingRule import rule_policy

logger = logging.getLogger("colloq.blockcoding")


class ComputationTreeNode:
    """A subblock of the function block and the node that announces it.

    The subblock holds the instances whose transcript so far equals `path`;
    siblings split their parent by the announced bit.
    """

    def __init__(self, path, state, transmitter, reach_probability, p):
        self._path = tuple(path)
        self._state = state
        self._transmitter = transmitter
        self._reach = reach_probability
        self._p = p
        self._children = {}

    def path(self):
        return self._path

    def state(self):
        return self._state

    def transmitter(self):
        return self._transmitter

    def is_leaf(self):
        return self._transmitter is None

    def value(self):
        """Function value shared by every instance of a leaf subblock."""
        return self._state.terminal_value()

    def reach_probability(self):
        return self._reach

    def expected_cost(self):
        """Per-instance bits this node spends: reach probability times H(p)."""
        if self.is_leaf():
            return 0.0
        return self._reach * binary_entropy(self._p)

    def child(self, bit):
        return self._children[bit]

    def children(self):
        return [self._children[bit] for bit in sorted(self._children)]

    def _set_child(self, bit, node):
        self._children[bit] = node

    def __repr__(self):
        label = "".join(str(bit) for bit in self._path) or "root"
        if self.is_leaf():
            return "%s -> %d" % (label, self.value())
        return "%s: node %d" % (label, self._transmitter)


class ComputationTree:
    """Recursive splitting of the block by the bits announced along a policy."""

    def __init__(self, profile, policy):
        self._profile = profile
        self._policy = policy
        self._root = self._expand((), policy.root_state(), 1.0)

    def _expand(self, path, state, reach):
        if state.is_terminal():
            return ComputationTreeNode(path, state, None, reach, None)
        transmitter = self._policy.transmitter(state)
        p = self._profile.prob(transmitter)
        node = ComputationTreeNode(path, state, transmitter, reach, p)
        node._set_child(0, self._expand(path + (0,), state.after(transmitter, 0), reach * (1.0 - p)))
        node._set_child(1, self._expand(path + (1,), state.after(transmitter, 1), reach * p))
        return node

    def root(self):
        return self._root

    def profile(self):
        return self._profile

    def policy(self):
        return self._policy

    def nodes(self):
        """Depth-first, bit-0 child before bit-1 child."""
        ordered = []
        pending = [self._root]
        while pending:
            node = pending.pop()
            ordered.append(node)
            pending.extend(reversed(node.children()))
        return ordered

    def leaves(self):
        return [node for node in self.nodes() if node.is_leaf()]

    def expected_cost(self):
        return sum(node.expected_cost() for node in self.nodes())

    def to_json(self):
        def describe(node):
            entry = {"path": "".join(str(bit) for bit in node.path()), "reach_probability": node.reach_probability()}
            if node.is_leaf():
                entry["value"] = node.value()
            else:
                entry["transmitter"] = node.transmitter()
                entry["expected_cost"] = node.expected_cost()
                entry["children"] = [describe(child) for child in node.children()]
            return entry

        return describe(self._root)


def coherent_cost(profile, theta):
    """Per-instance bits of coherent block computation and the tree that achieves them.

    The cost is the ordering DP with entropy cost; the tree follows the k-th
    least likely rule, whose expected cost equals the DP optimum.
    """
    table = solve_dp(profile, theta, BinaryEntropyCost())
    tree = ComputationTree(profile, rule_policy(profile, theta))
    logger.info("Coherent cost for %r, theta=%d is %f bits per instance.", profile, theta, table.root_value())
    return table.root_value(), tree
