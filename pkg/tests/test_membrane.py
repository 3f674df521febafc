"""Tests for membrane structures, validation and the transition relation."""

import pytest
from hypothesis import given, settings, strategies as st

from src.arrays.grid import ArrayObject
from src.arrays.rewrite import is_applicable
from src.membrane.configuration import Configuration
from src.membrane.system import MembraneTree, Mode, transitive_closure, validate_system
from src.membrane.transitions import apply_step, enabled_rules, is_halting, legal_steps
from src.parsers.system_parser import parse_system
from src.utils.exceptions import ValidationError


HEADER = """
system {name}
membranes {membranes}
output {output}
terminals x
labels a b
mode {mode}
"""


def make_system(rules: str, name: str = "t", membranes: str = "(1)", output: str = "1",
                init: str = "A", final: str = "final 1 : all-terminal", mode: str = "restricted") -> str:
    text = HEADER.format(name=name, membranes=membranes, output=output, mode=mode)
    for grid in init.split("|"):
        text += f"init 1 {{\n  {grid}\n}}\n"
    text += f"rules 1 {{\n{rules}\n}}\n{final}\n"
    return text


class TestMembraneTree:
    """Test the membrane tree."""

    def test_skin_and_children(self):
        """Test the root and child lookup."""
        tree = MembraneTree(("1", "2", "3"), {"2": "1", "3": "1"}, "3")
        assert tree.skin == "1"
        assert tree.children("1") == ["2", "3"]
        assert tree.children("2") == []
        assert tree.problems() == []
        assert str(tree) == "(1 (2) (3))"

    def test_problems(self):
        """Test two roots and a missing output are reported."""
        tree = MembraneTree(("1", "2"), {}, "9")
        problems = tree.problems()
        assert any("exactly one skin" in p for p in problems)
        assert any("output membrane 9" in p for p in problems)

    def test_transitive_closure(self):
        """Test chains close transitively."""
        closed = transitive_closure([("1", "2"), ("2", "3")])
        assert closed == {("1", "2"), ("2", "3"), ("1", "3")}


class TestValidation:
    """Test well-formedness checks of whole systems."""

    def test_examples_are_valid(self, pi1, pi2, pi5):
        """Test the shipped systems validate."""
        for s in (pi1, pi2, pi5):
            assert validate_system(s) == []

    def test_bad_target_and_label(self):
        """Test unknown child targets and undeclared labels are reported together."""
        text = make_system("  rule 1 a : A -> x @ 0 tar in.7\n  rule 2 c : A -> x x @ 0")
        with pytest.raises(ValidationError) as info:
            parse_system(text)
        problems = info.value.problems
        assert any("in.7" in p for p in problems)
        assert any("label c is not declared" in p for p in problems)

    def test_in_without_children(self):
        """Test 'in' needs a child membrane."""
        with pytest.raises(ValidationError):
            parse_system(make_system("  rule 1 a : A -> x @ 0 tar in"))

    def test_label_conflict_across_regions(self):
        """Test one rule id may not carry two labels."""
        text = make_system("  rule 1 a : A -> x @ 0 tar in.2", membranes="(1 (2))")
        text += "rules 2 {\n  rule 1 b : B -> x @ 0\n}\n"
        with pytest.raises(ValidationError) as info:
            parse_system(text)
        assert any("label conflict" in p for p in info.value.problems)

    def test_priority_cycle(self):
        """Test a cyclic priority relation is reported."""
        text = make_system("  rule 1 a : A -> x @ 0\n  rule 2 a : A -> x x @ 0")
        text += "priority 1 : 1 > 2\npriority 1 : 2 > 1\n"
        with pytest.raises(ValidationError) as info:
            parse_system(text)
        assert any("priority cycle" in p for p in info.value.problems)


class TestTransitions:
    """Test enabled rules, legal steps and halting."""

    def test_priority_blocks_lower_rules(self, pi1):
        """Test only the top priority group is enabled at the start."""
        c = pi1.initial_configuration()
        assert enabled_rules(c, "1", pi1) == {"1", "2", "3", "4", "5", "6", "7"}
        assert enabled_rules(c, "2", pi1) == set()

    def test_initial_steps(self, pi5):
        """Test the two growth choices of the a^n b^n system."""
        steps = legal_steps(pi5.initial_configuration(), pi5)
        assert len(steps) == 2
        assert {label for _, label in steps} == {"a"}
        assert {ch.assignments[0].rule.id for ch, _ in steps} == {"1", "2"}

    def test_apply_step_moves_array(self, pi5):
        """Test an in.2 rule sends the rewritten array to membrane 2."""
        c = pi5.initial_configuration()
        [choice] = [ch for ch, _ in legal_steps(c, pi5) if ch.assignments[0].rule.id == "2"]
        after = apply_step(c, choice)
        assert after.arrays_in("1") == ()
        assert after.arrays_in("2") == (ArrayObject({(0, 0): "B"}),)

    def test_every_array_is_rewritten(self):
        """Test maximal parallelism with one label per step."""
        s = parse_system(make_system(
            "  rule 1 a : A -> x @ 0\n  rule 2 a : B -> x @ 0\n  rule 3 b : B -> x x @ 0",
            init="A|B",
        ))
        steps = legal_steps(s.initial_configuration(), s)
        assert len(steps) == 1
        choice, label = steps[0]
        assert label == "a"
        assert {asg.rule.id for asg in choice.assignments} == {"1", "2"}

    def test_empty_label_steps(self):
        """Test empty-labelled steps exist only in unrestricted mode."""
        rules = "  rule 1 _ : A -> x @ 0"
        restricted = parse_system(make_system(rules))
        unrestricted = parse_system(make_system(rules, mode="unrestricted"))
        assert legal_steps(restricted.initial_configuration(), restricted) == []
        assert not is_halting(restricted.initial_configuration(), restricted)
        [(_, label)] = legal_steps(unrestricted.initial_configuration(), unrestricted)
        assert label is None

    def test_out_of_skin_discards(self):
        """Test arrays sent out of the skin leave the system."""
        s = parse_system(make_system("  rule 1 a : A -> x @ 0 tar out", final="final 1 : empty"))
        [(choice, _)] = legal_steps(s.initial_configuration(), s)
        after = apply_step(s.initial_configuration(), choice)
        assert after.is_empty()
        assert is_halting(after, s)

    def test_in_branches_per_child(self):
        """Test 'in' offers one step per child membrane."""
        s = parse_system(make_system(
            "  rule 1 a : A -> x @ 0 tar in", membranes="(1 (2) (3))", output="2", final="final 2 : all-terminal",
        ))
        steps = legal_steps(s.initial_configuration(), s)
        assert sorted(ch.assignments[0].destination for ch, _ in steps) == ["2", "3"]

    def test_halting(self, pi1):
        """Test halting of the start and of the empty configuration."""
        assert not is_halting(pi1.initial_configuration(), pi1)
        assert is_halting(Configuration(), pi1)

    def test_leftmost_policy(self):
        """Test the leftmost policy rewrites only the first nonterminal."""
        text = make_system("  rule 1 a : A -> x @ 0", init="A x A") + "policy leftmost\n"
        s = parse_system(text)
        [(choice, _)] = legal_steps(s.initial_configuration(), s)
        assert tuple(choice.assignments[0].match.anchor) == (0, 0)


class TestConfiguration:
    """Test canonical configurations."""

    @settings(max_examples=1000, deadline=None)
    @given(st.permutations(["a", "b", "c", "d"]), st.integers(-9, 9), st.integers(-9, 9))
    def test_order_and_position_independent(self, order, dx, dy):
        """Test equal multisets give equal configurations."""
        arrays = {sym: ArrayObject({(0, 0): sym, (1, 0): "x"}) for sym in "abcd"}
        first = Configuration.of({"1": [arrays[s] for s in "abcd"], "2": []})
        second = Configuration.of({"1": [arrays[s].translate(dx, dy) for s in order]})
        assert first == second
        assert first.key == second.key
        assert first.total_arrays == 4
        assert first.largest_array == 2


RULE_SHAPES = st.tuples(
    st.sampled_from(["_", "a", "b"]),
    st.sampled_from(["A", "B", "x A"]),
    st.lists(st.sampled_from(["A", "B", "x"]), min_size=1, max_size=2),
    st.sampled_from([0, 45, 90, 135, 180, 225, 270, 315]),
)


@st.composite
def random_systems(draw):
    shapes = draw(st.lists(RULE_SHAPES, min_size=1, max_size=5))
    lines = []
    for n, (label, lhs, rhs, degrees) in enumerate(shapes, start=1):
        body = lhs.split()[:-1] + rhs if len(lhs.split()) > 1 else rhs
        lines.append(f"  rule {n} {label} : {lhs} -> {' '.join(body)} @ {degrees}")
    ids = [str(n) for n in range(1, len(shapes) + 1)]
    pairs = draw(st.lists(st.tuples(st.sampled_from(ids), st.sampled_from(ids)), max_size=4))
    priority = "".join(f"priority 1 : {hi} > {lo}\n" for hi, lo in pairs if int(hi) < int(lo))
    arrays = draw(st.lists(
        st.lists(st.sampled_from(["A", "B", "x"]), min_size=1, max_size=4).map(" ".join),
        min_size=1, max_size=3,
    ))
    mode = draw(st.sampled_from(["restricted", "unrestricted"]))
    text = make_system("\n".join(lines), init="|".join(arrays), mode=mode,
                       final=priority + "final 1 : all-terminal")
    if draw(st.booleans()):
        text += "policy leftmost\n"
    return parse_system(text)


class TestStepProperties:
    """Test every legal step of randomly drawn systems."""

    @settings(max_examples=1000, deadline=None)
    @given(random_systems())
    def test_priority_soundness(self, s):
        """Test no chosen rule has a higher-priority rule applicable in its region."""
        c = s.initial_configuration()
        region = s.region("1")
        for choice, _ in legal_steps(c, s):
            for asg in choice.assignments:
                for hi in region.dominators(asg.rule.id):
                    assert not any(is_applicable(a, region.rule(hi)) for a in c.arrays_in(asg.membrane))

    @settings(max_examples=1000, deadline=None)
    @given(random_systems())
    def test_one_rule_per_array(self, s):
        """Test each array instance takes at most one rule and every rewritable one takes one."""
        c = s.initial_configuration()
        enabled = enabled_rules(c, "1", s)
        rewritable = {
            ("1", i) for i, a in enumerate(c.arrays_in("1"))
            if any(is_applicable(a, s.region("1").rule(rid)) for rid in enabled)
        }
        for choice, _ in legal_steps(c, s):
            instances = [(asg.membrane, asg.index) for asg in choice.assignments]
            assert len(instances) == len(set(instances))
            assert set(instances) == rewritable

    @settings(max_examples=1000, deadline=None)
    @given(random_systems())
    def test_label_coherence(self, s):
        """Test all non-empty labels of a step equal the label it emits."""
        for choice, label in legal_steps(s.initial_configuration(), s):
            used = {asg.rule.label for asg in choice.assignments} - {None}
            assert label == choice.step_label
            if label is None:
                assert s.mode is Mode.UNRESTRICTED
                assert used == set()
            else:
                assert used == {label}


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
