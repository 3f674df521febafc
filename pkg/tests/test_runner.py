"""Tests for seeded random computations and trace replay."""

from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from src.exporters.formatter import TextFormatter
from src.membrane.runner import RunStatus, replay, run_random
from src.membrane.transitions import ChoiceSet
from src.parsers.system_parser import load_system, parse_system
from src.utils.exceptions import IllegalChoiceError
from tests.conftest import CORPUS


PI5 = load_system(CORPUS / "pi5.aps")


def is_anbn(word) -> bool:
    n = len(word) // 2
    return n >= 1 and word == ("a",) * n + ("b",) * n


class TestRunRandom:
    """Test seeded random runs."""

    def test_same_seed_same_trace(self):
        """Test runs are reproducible by seed."""
        first = run_random(PI5, 7, 1000)
        second = run_random(PI5, 7, 1000)
        assert TextFormatter.format_trace(first) == TextFormatter.format_trace(second)
        assert first.final == second.final

    @settings(max_examples=1000, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_runs_accept_and_replay(self, seed):
        """Test every run of the a^n b^n system halts accepted and replays to its end."""
        trace = run_random(PI5, seed, 10_000)
        assert trace.status is RunStatus.HALTED
        assert trace.accepted
        assert is_anbn(trace.word)
        assert replay(PI5, trace) == trace.final

    def test_budget(self):
        """Test a zero budget stops before the first step."""
        trace = run_random(PI5, 0, 0)
        assert trace.status is RunStatus.BUDGET_EXHAUSTED
        assert trace.steps == []
        assert not trace.accepted

    def test_negative_budget(self):
        """Test a negative budget is rejected."""
        with pytest.raises(ValueError):
            run_random(PI5, 0, -1)

    def test_dead_end(self):
        """Test restricted systems stall on empty-labelled rules."""
        s = parse_system(
            "system stall\nmembranes (1)\noutput 1\nterminals x\nlabels a\n"
            "init 1 {\n  A\n}\nrules 1 {\n  rule 1 _ : A -> x @ 0\n}\nfinal 1 : all-terminal\n"
        )
        trace = run_random(s, 1, 100)
        assert trace.status is RunStatus.DEAD_END
        assert not trace.accepted


class TestReplay:
    """Test replaying recorded traces."""

    def test_wrong_label(self):
        """Test a step relabelled after the fact is refused."""
        trace = run_random(PI5, 3, 1000)
        trace.steps[0] = ChoiceSet(trace.steps[0].assignments, "b")
        with pytest.raises(IllegalChoiceError) as info:
            replay(PI5, trace)
        assert info.value.step_index == 0

    def test_missing_array(self):
        """Test a step naming a non-existent array instance is refused."""
        trace = run_random(PI5, 3, 1000)
        bad = replace(trace.steps[1].assignments[0], index=9)
        trace.steps[1] = ChoiceSet((bad,), trace.steps[1].step_label)
        with pytest.raises(IllegalChoiceError) as info:
            replay(PI5, trace)
        assert info.value.step_index == 1

    def test_wrong_rule(self):
        """Test a rule from another region is refused."""
        trace = run_random(PI5, 5, 1000)
        foreign = PI5.region("2").rule("3")
        bad = replace(trace.steps[0].assignments[0], rule=foreign)
        trace.steps[0] = ChoiceSet((bad,), trace.steps[0].step_label)
        with pytest.raises(IllegalChoiceError):
            replay(PI5, trace)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
