import pytest

from backend.core.PolicyError import PolicyError
from backend.core.Transcript import Transcript


def test_append_is_persistent():
    empty = Transcript(n=3)
    one = empty.append(2, 1)
    two = one.append(3, 0)
    assert len(empty) == 0
    assert two.nodes() == (2, 3)
    assert two.symbols() == (1, 0)
    assert two.ones() == 1


def test_transcript_rejects_repeated_transmitters():
    with pytest.raises(PolicyError):
        Transcript([(1, 0), (1, 1)])


def test_transcript_length_is_bounded_by_n():
    with pytest.raises(PolicyError):
        Transcript([(1, 0), (2, 1), (3, 1)], n=2)


def test_json_round_trip():
    transcript = Transcript([(2, 1), (1, 0)])
    assert Transcript.from_json(transcript.to_json()) == transcript
