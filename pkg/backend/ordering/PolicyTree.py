from backend.core.PolicyError import PolicyError
from backend.core.Transcript import Transcript
from backend.ordering.DPState import DPState
import backend.core.Serialization as serialization


class PolicyTree:
    """A collision-free ordering strategy: the next transmitter as a function of the state.

    The state (remaining nodes, ones still needed) summarizes the transcript,
    so the tree is stored as the chosen transmitter of every state reachable
    from the root; the children of a state are its bit-0 and bit-1 successors.
    """

    def __init__(self, n, theta, choices, name="custom"):
        self._n = n
        self._theta = theta
        self._choices = dict(choices)
        self._name = name
        self._check()

    @classmethod
    def build(cls, n, theta, chooser, name="custom"):
        """Expand a policy from the root, asking `chooser(state)` for each transmitter."""
        choices = {}
        pending = [DPState.root(n, theta)]
        while pending:
            state = pending.pop()
            if state.is_terminal() or state in choices:
                continue
            node = chooser(state)
            choices[state] = node
            if node in state.remaining():
                pending.append(state.after(node, 0))
                pending.append(state.after(node, 1))
        return cls(n, theta, choices, name)

    def _check(self):
        pending = [self.root_state()]
        visited = set()
        while pending:
            state = pending.pop()
            if state.is_terminal() or state in visited:
                continue
            visited.add(state)
            if state not in self._choices:
                raise PolicyError("Policy `%s` has no transmitter for reachable state %r." % (self._name, state))
            node = self._choices[state]
            if node not in state.remaining():
                raise PolicyError("Policy `%s` picks node %r outside state %r." % (self._name, node, state))
            pending.append(state.after(node, 0))
            pending.append(state.after(node, 1))

    def n(self):
        return self._n

    def theta(self):
        return self._theta

    def name(self):
        return self._name

    def root_state(self):
        return DPState.root(self._n, self._theta)

    def transmitter(self, state):
        if state.is_terminal():
            return None
        if state not in self._choices:
            raise PolicyError("Policy `%s` has no transmitter for state %r." % (self._name, state))
        return self._choices[state]

    def children(self, state):
        node = self.transmitter(state)
        return state.after(node, 0), state.after(node, 1)

    def states(self):
        return sorted(self._choices)

    def transcript(self, values):
        """Run the policy on one Boolean column and return the broadcast transcript."""
        state = self.root_state()
        transcript = Transcript(n=self._n)
        while not state.is_terminal():
            node = self.transmitter(state)
            bit = int(values[node - 1])
            transcript = transcript.append(node, bit)
            state = state.after(node, bit)
        return transcript, state.terminal_value()

    def shape(self):
        """Nested (transmitter, bit-0 subtree, bit-1 subtree) tuple; terminal leaves are their value."""
        def expand(state):
            if state.is_terminal():
                return state.terminal_value()
            zero, one = self.children(state)
            return self._choices[state], expand(zero), expand(one)

        return expand(self.root_state())

    def to_json(self):
        states = []
        for state in self.states():
            zero, one = self.children(state)
            entry = state.to_json()
            entry["transmitter"] = self._choices[state]
            entry["on_zero"] = zero.to_json()
            entry["on_one"] = one.to_json()
            states.append(entry)
        return {"name": self._name, "n": self._n, "theta": self._theta, "states": states}

    @classmethod
    def from_json(cls, document):
        serialization.validate(document, "policy_schema")
        choices = {DPState(entry["remaining"], entry["residual"]): entry["transmitter"] for entry in document["states"]}
        return cls(document["n"], document["theta"], choices, document.get("name", "custom"))

    def __eq__(self, other):
        return isinstance(other, self.__class__) and \
               (self._n, self._theta, self._choices) == (other.n(), other.theta(), other._choices)

    def __hash__(self):
        return hash((self._n, self._theta, frozenset(self._choices.items())))

    def __repr__(self):
        return "PolicyTree(%s, n=%d, theta=%d, %d states)" % (self._name, self._n, self._theta, len(self._choices))
