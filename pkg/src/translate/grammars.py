"""Regular and Greibach-form grammars compiled to one-membrane array P systems."""

from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, List, NamedTuple, Tuple

from ..arrays.grid import ArrayObject, Direction
from ..arrays.rewrite import OccurrencePolicy, ThetaRule
from ..membrane.system import MembraneTree, Mode, PSystem, Region, ensure_valid
from ..shapes.final import FinalSpec, RegionPredicate
from ..utils.exceptions import NotGnfError, SelfRecursionPresentError
from ..utils.logger import get_logger


logger = get_logger(__name__)

STAR = "*"
SKIN = "1"


class Production(NamedTuple):
    """``head -> body`` with a non-empty body."""

    head: str
    body: Tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.head} -> {' '.join(self.body)}"


@dataclass(frozen=True)
class StringGrammar:
    """A string grammar given by its productions; the base of the two grammar kinds."""

    nonterminals: FrozenSet[str]
    terminals: FrozenSet[str]
    productions: Tuple[Production, ...]
    start: str
    name: str = field(default="grammar", compare=False)

    def productions_of(self, head: str) -> List[Production]:
        return [p for p in self.productions if p.head == head]

    def problems(self) -> List[str]:
        found = []
        if self.nonterminals & self.terminals:
            found.append(f"symbols both terminal and nonterminal: {sorted(self.nonterminals & self.terminals)}")
        if self.start not in self.nonterminals:
            found.append(f"start symbol {self.start} is not a nonterminal")
        for p in self.productions:
            if p.head not in self.nonterminals:
                found.append(f"{p}: head is not a nonterminal")
            if not p.body:
                found.append(f"{p.head} -> : empty right-hand side")
            unknown = set(p.body) - self.nonterminals - self.terminals
            if unknown:
                found.append(f"{p}: unknown symbols {sorted(unknown)}")
        return found


@dataclass(frozen=True)
class RegGrammar(StringGrammar):
    """Right-linear grammar with productions A -> a B and A -> a."""

    def problems(self) -> List[str]:
        found = super().problems()
        for p in self.productions:
            shape_ok = (
                len(p.body) in (1, 2)
                and p.body[0] in self.terminals
                and (len(p.body) == 1 or p.body[1] in self.nonterminals)
            )
            if not shape_ok:
                found.append(f"{p}: not of the form A -> a B or A -> a")
        return found

    def self_recursive(self) -> List[Production]:
        return [p for p in self.productions if len(p.body) == 2 and p.body[1] == p.head]


@dataclass(frozen=True)
class Cfg(StringGrammar):
    """Context-free grammar; the translator expects Greibach normal form."""


def _fresh(name: str, taken: set) -> str:
    candidate = f"{name}'"
    while candidate in taken:
        candidate += "'"
    return candidate


def eliminate_self_recursion(g: RegGrammar) -> RegGrammar:
    """
    Remove every production A -> aA without changing the language.

    Each such production becomes A -> aA' and A' -> aA for a fresh A', and A'
    also receives a copy of every other production of A, terminal ones
    included.
    """
    recursive_heads = sorted({p.head for p in g.self_recursive()})
    if not recursive_heads:
        return g

    taken = set(g.nonterminals) | set(g.terminals)
    primes: Dict[str, str] = {}
    for head in recursive_heads:
        primes[head] = _fresh(head, taken)
        taken.add(primes[head])

    productions: List[Production] = []
    for p in g.productions:
        if p.head in primes and len(p.body) == 2 and p.body[1] == p.head:
            prime = primes[p.head]
            productions.append(Production(p.head, (p.body[0], prime)))
            productions.append(Production(prime, (p.body[0], p.head)))
        else:
            productions.append(p)
    for head, prime in primes.items():
        for p in g.productions_of(head):
            if not (len(p.body) == 2 and p.body[1] == head):
                productions.append(Production(prime, p.body))

    unique = tuple(dict.fromkeys(productions))
    logger.debug(f"Eliminated self-recursion of {recursive_heads} in {g.name}")
    return replace(g, nonterminals=g.nonterminals | frozenset(primes.values()), productions=unique)


def _single_membrane_system(
    name: str,
    g: StringGrammar,
    rules: List[ThetaRule],
    direction: Direction,
    policy: OccurrencePolicy,
) -> PSystem:
    tree = MembraneTree(nodes=(SKIN,), parent={}, output=SKIN)
    return PSystem(
        name=name,
        alphabet=frozenset(g.nonterminals) | {STAR},
        terminals=frozenset({STAR}),
        tree=tree,
        init={SKIN: (ArrayObject.from_word([g.start]),)},
        regions={SKIN: Region.build(SKIN, rules)},
        labels=frozenset(g.terminals),
        mode=Mode.RESTRICTED,
        policy=policy,
        final=FinalSpec({SKIN: RegionPredicate.of_shape("run", STAR, str(direction.value))}),
    )


def reg_to_aps(g: RegGrammar) -> PSystem:
    """
    Compile a regular grammar free of self-recursion.

    Every production A -> a y becomes the rule ``a: A -> (* y)`` at 45 degrees;
    accepted computations leave a diagonal run of ``*`` as long as the word.

    Raises:
        SelfRecursionPresentError: If some production has the form A -> aA
    """
    recursive = g.self_recursive()
    if recursive:
        raise SelfRecursionPresentError(
            f"Grammar {g.name} still has self-recursive productions: {[str(p) for p in recursive]}"
        )
    rules = [
        ThetaRule(f"r{i}", p.body[0], (p.head,), (STAR,) + p.body[1:], Direction.NE)
        for i, p in enumerate(g.productions, start=1)
    ]
    return ensure_valid(_single_membrane_system(f"reg_{g.name}", g, rules, Direction.NE, OccurrencePolicy.ANY))


def is_gnf(g: StringGrammar) -> bool:
    """True iff every production is one terminal followed only by nonterminals."""
    return all(
        p.body and p.body[0] in g.terminals and all(sym in g.nonterminals for sym in p.body[1:])
        for p in g.productions
    )


def cf_to_aps(g: Cfg) -> PSystem:
    """
    Compile a grammar in Greibach normal form.

    Every production A -> a y becomes ``a: A -> (* y)`` at 0 degrees. The
    system rewrites only the leftmost nonterminal, so label strings follow
    leftmost derivations.

    Raises:
        NotGnfError: If a production is not a terminal followed by nonterminals
    """
    if not is_gnf(g):
        bad = [str(p) for p in g.productions
               if not (p.body and p.body[0] in g.terminals and all(s in g.nonterminals for s in p.body[1:]))]
        raise NotGnfError(f"Grammar {g.name} is not in Greibach normal form: {bad}")
    rules = [
        ThetaRule(f"r{i}", p.body[0], (p.head,), (STAR,) + p.body[1:], Direction.E)
        for i, p in enumerate(g.productions, start=1)
    ]
    return ensure_valid(_single_membrane_system(f"cf_{g.name}", g, rules, Direction.E, OccurrencePolicy.LEFTMOST))
