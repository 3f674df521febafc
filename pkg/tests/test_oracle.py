"""Tests for the reference languages used to check the translators."""

import logging

import pytest
from hypothesis import given, settings, strategies as st

from src.language.bounds import Bounds
from src.oracle import verification
from src.oracle.closed_forms import example_language
from src.oracle.grammar_oracle import grammar_language, min_yields, naive_language
from src.oracle.tm_oracle import Outcome, simulate_tm, tm_language
from src.parsers.grammar_parser import load_cfg, load_machine, load_reg_grammar, parse_machine
from src.translate.grammars import Cfg, Production
from src.translate.turing import END_MARKER, encode_word
from src.utils.exceptions import UnknownNameError
from tests.conftest import CORPUS, GRAMMARS, MACHINES


def words(*texts):
    return {tuple(t) for t in texts}


class TestGrammarOracle:
    """Test the two grammar enumerators."""

    def test_min_yields(self):
        """Test shortest yields per nonterminal."""
        g = load_cfg(GRAMMARS / "anbn.txt")
        assert min_yields(g) == {"S": 2, "B": 1}

    def test_anbn(self):
        """Test a^n b^n up to length 6."""
        g = load_cfg(GRAMMARS / "anbn.txt")
        assert grammar_language(g, 6) == words("ab", "aabb", "aaabbb")

    def test_regular(self):
        """Test a*b up to length 3."""
        g = load_reg_grammar(GRAMMARS / "astar_b.txt")
        assert grammar_language(g, 3) == words("b", "ab", "aab")

    def test_bad_length(self):
        """Test a non-positive length is refused."""
        with pytest.raises(ValueError):
            grammar_language(load_cfg(GRAMMARS / "anbn.txt"), 0)

    @pytest.mark.parametrize("path", sorted(GRAMMARS.glob("*.txt")), ids=lambda p: p.stem)
    def test_enumerators_agree_on_corpus(self, path):
        """Test leftmost and brute-force enumeration agree."""
        g = load_cfg(path)
        assert grammar_language(g, 7) == naive_language(g, 7)

    @settings(max_examples=1000, deadline=None)
    @given(st.lists(
        st.tuples(
            st.sampled_from(["S", "A", "B"]),
            st.sampled_from(["a", "b"]),
            st.lists(st.sampled_from(["S", "A", "B", "a", "b"]), max_size=3).map(tuple),
        ),
        min_size=1,
        max_size=6,
        unique=True,
    ))
    def test_enumerators_agree(self, triples):
        """Test leftmost and brute-force enumeration agree on random grammars."""
        g = Cfg(
            frozenset({"S", "A", "B"}),
            frozenset({"a", "b"}),
            tuple(Production(h, (t,) + rest) for h, t, rest in triples),
            "S",
        )
        assert grammar_language(g, 5) == naive_language(g, 5)


class TestClosedForms:
    """Test closed-form example languages."""

    def test_forms(self):
        """Test each shipped example."""
        assert example_language("pi1", 47) == {("a",) * 16, ("a",) * 32}
        assert example_language("pi2", 40) == {("a",) * 4 + ("b",) * 20, ("a",) * 12 + ("b",) * 28}
        assert example_language("pi5", 5) == words("ab", "aabb")

    def test_unknown(self):
        """Test unknown names are refused."""
        with pytest.raises(UnknownNameError):
            example_language("pi9", 10)

    def test_example_system_matches(self, pi5):
        """Test a parsed example against its closed form."""
        report = verification.verify_example(pi5, "pi5", 8, Bounds())
        assert report.verdict is verification.Verdict.MATCH
        assert report.missing == [] and report.extra == []

    @pytest.mark.parametrize("k", range(13))
    def test_anbn_closed_form_agrees_with_grammar(self, k):
        """Test the a^n b^n closed form against its Greibach grammar."""
        assert example_language("pi5", k) == grammar_language(load_cfg(GRAMMARS / "anbn.txt"), k)


class TestVerdict:
    """Test how comparisons turn into verdicts."""

    def test_truncated_search_missing_words_is_inconclusive(self):
        """Test a correct translation cut short by the state bound is not reported broken."""
        report = verification.verify_context_free(load_cfg(GRAMMARS / "anbn.txt"), 10, Bounds(max_states=20))
        assert not report.exhaustive
        assert report.missing
        assert report.extra == []
        assert report.verdict is verification.Verdict.INCONCLUSIVE
        assert "max_states" in report.truncated_by

    def test_extra_words_mismatch_even_when_truncated(self, pi5):
        """Test words outside the reference are a mismatch whatever the search bounds."""
        report = verification.verify_example(pi5, "pi1", 6, Bounds(max_steps=2))
        assert not report.exhaustive
        assert report.extra == [("a", "b")]
        assert report.verdict is verification.Verdict.MISMATCH

    def test_missing_words_from_exhaustive_search_mismatch(self, pi5):
        """Test an exhaustive search that misses reference words is a mismatch."""
        report = verification.compare(pi5, example_language("pi5", 6) | {("b", "a")}, "pi5", "closed form", 6, Bounds())
        assert report.exhaustive
        assert report.missing == [("b", "a")]
        assert report.verdict is verification.Verdict.MISMATCH


class TestMachineOracle:
    """Test direct machine simulation."""

    def tape(self, text: str):
        return encode_word(tuple(text), ("a", "b")) + (END_MARKER,)

    def test_parity(self):
        """Test acceptance and rejection on concrete tapes."""
        t = load_machine(MACHINES / "parity.tm")
        assert simulate_tm(t, self.tape("ab")).outcome is Outcome.ACCEPT
        assert simulate_tm(t, self.tape("a")).outcome is Outcome.REJECT
        assert simulate_tm(t, self.tape("")).outcome is Outcome.REJECT

    def test_falling_off_the_tape_rejects(self):
        """Test moving past either end rejects."""
        right = parse_machine("start: s\naccept: f\ns,0 -> s,0,R\ns,x -> s,x,R")
        left = parse_machine("start: s\naccept: f\ns,0 -> s,0,L")
        assert simulate_tm(right, ("0", "x")).outcome is Outcome.REJECT
        assert simulate_tm(left, ("0", "x")).outcome is Outcome.REJECT

    def test_timeout_excluded_and_logged(self, caplog):
        """Test machines that never stop are excluded with a warning."""
        t = parse_machine("start: s\naccept: f\ns,0 -> t,0,R\nt,x -> s,x,L", name="bounce")
        assert simulate_tm(t, ("0", "x"), max_steps=50).outcome is Outcome.TIMEOUT
        with caplog.at_level(logging.WARNING, logger="aps"):
            assert tm_language(t, ("a",), 0, max_steps=50) == set()
        assert "did not stop" in caplog.text

    def test_language(self):
        """Test the scanning machine accepts every non-empty word."""
        t = load_machine(MACHINES / "scan.tm")
        assert tm_language(t, ("a", "b"), 2) == words("a", "b", "aa", "ab", "ba", "bb")

    def test_corpus_is_present(self):
        """Test the example systems ship with the corpus."""
        assert {p.name for p in CORPUS.glob("*.aps")} == {"pi1.aps", "pi2.aps", "pi5.aps"}


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
