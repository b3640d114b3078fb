from backend.ordering.DPState import DPState


def test_root_and_transitions():
    root = DPState.root(3, 2)
    assert root.remaining() == frozenset({1, 2, 3})
    assert root.rank_offset() == 1
    assert root.after(2, 1) == DPState({1, 3}, 1)
    assert root.after(2, 0) == DPState({1, 3}, 2)


def test_terminal_states():
    assert DPState({1, 2}, 0).is_terminal()
    assert DPState({1, 2}, 0).terminal_value() == 1
    assert DPState({1}, 2).is_terminal()
    assert DPState({1}, 2).terminal_value() == 0
    assert not DPState({1, 2}, 2).is_terminal()


def test_states_hash_by_contents():
    assert len({DPState([1, 2], 1), DPState((2, 1), 1), DPState([1, 2], 2)}) == 2
    assert DPState([1, 2], 1).to_json() == {"remaining": [1, 2], "residual": 1}
