"""Maps between scale-based and table-based frameworks.

Concretisation goes from scales to tables: a table is a concretisation
of a scale assignment when every row picks a label the scales designate
for that row.  The concretisations of a framework therefore factor into
independent per-row choices, which is what the counting and enumeration
here exploit.

Abstraction goes the other way.  Every table induces a tightest scale
per argument, read off the rows:

* acceptance-may  = the smallest out-count at which the table ever picks
  ``in`` (one past the largest possible count if it never does);
* acceptance-must = one past the largest out-count at which the table
  picks something other than ``in`` (0 if it always picks ``in``);
* the rejection pair dually, over in-counts and ``out`` rows.

The valid scale candidates for an argument are the in-bounds scales at
least as wide as the tightest one (lower may, higher must).  Widening
only ever grows designation cells, so every candidate designates each
row's chosen label, and the candidate family is upward closed with the
tightest scale as its unique minimum.  Note this is strictly narrower
than "every row label is designated": a scale can designate every row by
accident of cell overlap (for instance, a vacuous must-threshold putting
rows in an in/undec cell whose rows are all undec) while sitting outside
the family and below no tightest scale; admitting those would leave the
candidate family without a least element.

``f_gamma`` and ``f_alpha`` lift the two maps to sets of frameworks over
one shared graph, and ``transfer_report`` spells out which facts about a
table framework its minimal abstraction certifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from .adf import DEFAULT_MAX_ATTACKERS, AdfFramework, ConditionTable, label_vectors
from .core import Label, Labelling, LabellingSet
from .errors import GraphMismatchError, ResourceCapError
from .mma import (
    ConditionClass,
    DESIGNATION_CELLS,
    MmaFramework,
    NuanceTuple,
    designations_mma,
)
from .semantics import (
    DEFAULT_MAX_ARGS,
    SemanticsKind,
    exact_semantics,
    grounded,
)

T = TypeVar("T")


def allowed_labels(region: tuple[ConditionClass, ConditionClass]) -> frozenset[Label]:
    """Labels a condition table may use in a given class-pair region."""
    return DESIGNATION_CELLS[region]


def nuance_leq(first: NuanceTuple, second: NuanceTuple) -> bool:
    """Tightness order: second is at least as wide (lower may, higher must)."""
    return (
        second.acceptance.may <= first.acceptance.may
        and first.acceptance.must <= second.acceptance.must
        and second.rejection.may <= first.rejection.may
        and first.rejection.must <= second.rejection.must
    )


def framework_leq(first: MmaFramework, second: MmaFramework) -> bool:
    """Pointwise tightness order over a shared graph."""
    if first.graph != second.graph:
        raise GraphMismatchError("frameworks ordered across different graphs")
    return all(nuance_leq(first.scale(a), second.scale(a)) for a in first.graph.arguments)


def set_leq(first: Iterable[MmaFramework], second: Iterable[MmaFramework]) -> bool:
    """Every member of the first set is below some member of the second."""
    first = list(first)
    second = list(second)
    _shared_graph(first + second)
    return all(any(framework_leq(x, y) for y in second) for x in first)


def _shared_graph(frameworks: Sequence[MmaFramework | AdfFramework]):
    graphs = {fw.graph for fw in frameworks}
    if len(graphs) > 1:
        raise GraphMismatchError("frameworks in one set must share one graph")
    return next(iter(graphs)) if graphs else None


def _vector_counts(vector: tuple[Label, ...]) -> tuple[int, int]:
    outs = sum(1 for label in vector if label is Label.OUT)
    ins = sum(1 for label in vector if label is Label.IN)
    return outs, ins


def _row_designations(
    mma: MmaFramework, argument: str, max_attackers: int
) -> list[tuple[tuple[Label, ...], frozenset[Label]]]:
    attackers = mma.graph.attackers(argument)
    if len(attackers) > max_attackers:
        raise ResourceCapError(
            f"{argument} has {len(attackers)} attackers; the cap is {max_attackers}"
        )
    rows = []
    for vector in label_vectors(len(attackers)):
        row = Labelling(dict(zip(attackers, vector)))
        rows.append((vector, designations_mma(mma, row, argument)))
    return rows


def is_concretisation(adf: AdfFramework, mma: MmaFramework) -> bool:
    """Whether every table row picks a label the scales designate."""
    if adf.graph != mma.graph:
        raise GraphMismatchError("concretisation check across different graphs")
    for argument in adf.graph.arguments:
        table = adf.table(argument)
        for vector, designated in _row_designations(mma, argument, DEFAULT_MAX_ATTACKERS):
            if table[vector] not in designated:
                return False
    return True


@dataclass(frozen=True)
class ConcretisationCount:
    """Number of concretisations, with its per-argument factorisation."""

    total: int
    factors: dict[str, int]


def count_concretisations(
    mma: MmaFramework, max_attackers: int = DEFAULT_MAX_ATTACKERS
) -> ConcretisationCount:
    """Concretisations factor per argument into per-row designation sizes."""
    factors = {}
    total = 1
    for argument in mma.graph.arguments:
        factor = 1
        for _, designated in _row_designations(mma, argument, max_attackers):
            factor *= len(designated)
        factors[argument] = factor
        total *= factor
    return ConcretisationCount(total=total, factors=factors)


def enumerate_concretisations(
    mma: MmaFramework, limit: int, max_attackers: int = DEFAULT_MAX_ATTACKERS
) -> Iterator[AdfFramework]:
    """Distinct concretisations in a fixed order, truncated at ``limit``.

    Choices iterate per argument (declaration order), per row
    (lexicographic), per label (in < out < undec), so the first yielded
    framework is the canonical concretisation.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    names = mma.graph.arguments
    row_sets = {a: _row_designations(mma, a, max_attackers) for a in names}
    choice_lists: list[list[Label]] = []
    slots: list[tuple[str, tuple[Label, ...]]] = []
    for argument in names:
        for vector, designated in row_sets[argument]:
            slots.append((argument, vector))
            choice_lists.append(sorted(designated, key=lambda l: l.rank))
    produced = 0
    for combo in product(*choice_lists):
        rows_by_argument: dict[str, dict[tuple[Label, ...], Label]] = {a: {} for a in names}
        for (argument, vector), label in zip(slots, combo):
            rows_by_argument[argument][vector] = label
        tables = {
            a: ConditionTable(a, mma.graph.attackers(a), rows_by_argument[a], max_attackers)
            for a in names
        }
        yield AdfFramework(mma.graph, tables)
        produced += 1
        if produced >= limit:
            return


def canonical_concretisation(
    mma: MmaFramework, max_attackers: int = DEFAULT_MAX_ATTACKERS
) -> AdfFramework:
    """The concretisation picking the first designated label per row."""
    return next(enumerate_concretisations(mma, 1, max_attackers))


def tightest_scale(adf: AdfFramework, argument: str) -> NuanceTuple:
    """The least (tightest) scale abstracting one argument's table."""
    table = adf.table(argument)
    k = len(table.attacker_order)
    in_outs: list[int] = []
    other_outs: list[int] = []
    out_ins: list[int] = []
    other_ins: list[int] = []
    for vector, value in table.rows.items():
        outs, ins = _vector_counts(vector)
        (in_outs if value is Label.IN else other_outs).append(outs)
        (out_ins if value is Label.OUT else other_ins).append(ins)
    n1 = min(in_outs) if in_outs else k + 1
    n2 = max(other_outs) + 1 if other_outs else 0
    m1 = min(out_ins) if out_ins else k + 1
    m2 = max(other_ins) + 1 if other_ins else 0
    return NuanceTuple.of(n1, n2, m1, m2)


@dataclass(frozen=True)
class ScaleCandidateSet:
    """All scales valid as an abstraction of one argument's table."""

    owner: str
    candidates: tuple[NuanceTuple, ...]
    least: NuanceTuple

    def __contains__(self, scale: NuanceTuple) -> bool:
        return scale in self.candidates

    def __len__(self) -> int:
        return len(self.candidates)


def valid_scales(adf: AdfFramework, argument: str) -> ScaleCandidateSet:
    """Every in-bounds scale at least as wide as the tightest one.

    The all-permissive scale ((0, k+1), (0, k+1)) is always a member.
    """
    k = len(adf.graph.attackers(argument))
    least = tightest_scale(adf, argument)
    candidates = []
    for n1 in range(k + 2):
        for n2 in range(n1, k + 2):
            for m1 in range(k + 2):
                for m2 in range(m1, k + 2):
                    scale = NuanceTuple.of(n1, n2, m1, m2)
                    if nuance_leq(least, scale):
                        candidates.append(scale)
    candidates.sort(key=NuanceTuple.as_quad)
    return ScaleCandidateSet(owner=argument, candidates=tuple(candidates), least=least)


def is_abstraction(mma: MmaFramework, adf: AdfFramework) -> bool:
    """Direct membership test, no candidate search needed."""
    if mma.graph != adf.graph:
        raise GraphMismatchError("abstraction check across different graphs")
    for argument in mma.graph.arguments:
        bound = len(mma.graph.attackers(argument)) + 1
        scale = mma.scale(argument)
        if scale.acceptance.must > bound or scale.rejection.must > bound:
            return False
        if not nuance_leq(tightest_scale(adf, argument), scale):
            return False
    return True


def pareto_minimal(items: Iterable[T], leq: Callable[[T, T], bool]) -> list[T]:
    """Non-dominated filter: items with nothing strictly below them."""
    pool = list(items)
    return [x for x in pool if not any(y != x and leq(y, x) for y in pool)]


def minimal_abstractions(adf: AdfFramework) -> list[MmaFramework]:
    """All combinations of per-argument minimal valid scales.

    Each result is an abstraction of the input, and no abstraction is
    strictly tighter than any result.
    """
    per_argument = []
    for argument in adf.graph.arguments:
        candidates = valid_scales(adf, argument).candidates
        minimal = pareto_minimal(candidates, nuance_leq)
        per_argument.append(sorted(minimal, key=NuanceTuple.as_quad))
    names = adf.graph.arguments
    return [
        MmaFramework(adf.graph, dict(zip(names, combo)))
        for combo in product(*per_argument)
    ]


def f_gamma(
    mmas: Iterable[MmaFramework],
    limit: int = 100_000,
    max_attackers: int = DEFAULT_MAX_ATTACKERS,
) -> list[AdfFramework]:
    """Union of the members' concretisation sets, materialised.

    The union can be astronomically large, so the total is counted first
    and anything beyond ``limit`` is a resource error.
    """
    mmas = list(mmas)
    _shared_graph(mmas)
    total = sum(count_concretisations(m, max_attackers).total for m in mmas)
    if total > limit:
        raise ResourceCapError(f"{total} concretisations exceed the cap of {limit}")
    seen: dict[AdfFramework, None] = {}
    for mma in mmas:
        for adf in enumerate_concretisations(mma, limit, max_attackers):
            seen.setdefault(adf, None)
    return list(seen)


def f_alpha(adfs: Iterable[AdfFramework]) -> list[MmaFramework]:
    """Union of the members' minimal abstractions."""
    adfs = list(adfs)
    _shared_graph(adfs)
    seen: dict[MmaFramework, None] = {}
    for adf in adfs:
        for mma in minimal_abstractions(adf):
            seen.setdefault(mma, None)
    return list(seen)


def label_one_exact(mma: MmaFramework, max_args: int = DEFAULT_MAX_ARGS) -> LabellingSet:
    """Exact labellings under which every designation set is a singleton.

    These are the exact labellings the scales pin completely, so each of
    them is an exact labelling of every concretisation.
    """
    picked = []
    for labelling in exact_semantics(mma, max_args=max_args):
        if all(
            len(designations_mma(mma, labelling, a)) == 1
            for a in mma.graph.arguments
        ):
            picked.append(labelling)
    return LabellingSet(picked)


@dataclass(frozen=True)
class TransferFact:
    """One acceptance fact carried over from the abstraction."""

    status: str  # "certified" or "conditional"
    mode: str  # "credulous" or "skeptical"
    label: Label
    argument: str
    semantics: SemanticsKind

    def line(self) -> str:
        return (
            f"{self.status}: {self.mode} {self.label} {self.argument}"
            f" ({self.semantics.value})"
        )


@dataclass(frozen=True)
class TransferReport:
    """What one minimal abstraction certifies about a table framework."""

    abstraction: MmaFramework
    certified_exact: LabellingSet
    grounded_bound: Labelling
    facts: tuple[TransferFact, ...]

    def lines(self) -> list[str]:
        out = [f"certified: exact-labelling {m.render()}" for m in self.certified_exact]
        out.append(f"certified: grounded-lower-bound {self.grounded_bound.render()}")
        out.extend(fact.line() for fact in self.facts)
        return out


def transfer_report(
    adf: AdfFramework,
    max_args: int = DEFAULT_MAX_ARGS,
    max_attackers: int = DEFAULT_MAX_ATTACKERS,
) -> TransferReport:
    """Certified and conditional facts about ``adf`` from its abstraction.

    Certified facts hold in ``adf`` outright: pinned exact labellings are
    exact labellings of ``adf``; the abstraction's grounded labelling is
    a lower bound of ``adf``'s; and grounded in/out verdicts carry over
    both credulously and skeptically.  Exact-semantics credulous facts
    are certified only when witnessed by a pinned labelling (an exact
    labelling of the abstraction that leaves an argument a choice need
    not survive in the table framework).  Skeptical facts under the
    exact semantics are reported as conditional: they transfer only if
    the pinned labellings already exhaust the table framework's exact
    semantics, which this report does not compute.
    """
    names = adf.graph.arguments
    candidates = minimal_abstractions(adf)
    abstraction = min(
        candidates,
        key=lambda fw: tuple(fw.scale(a).as_quad() for a in names),
    )
    pinned = label_one_exact(abstraction, max_args=max_args)
    bound = grounded(abstraction, max_args=max_args)
    exact_members = exact_semantics(abstraction, max_args=max_args)
    facts = []
    for argument in sorted(names):
        for label in (Label.IN, Label.OUT):
            if any(m[argument] is label for m in pinned):
                facts.append(
                    TransferFact("certified", "credulous", label, argument, SemanticsKind.EXACT)
                )
            if bound[argument] is label:
                facts.append(
                    TransferFact("certified", "credulous", label, argument, SemanticsKind.GROUNDED)
                )
                facts.append(
                    TransferFact("certified", "skeptical", label, argument, SemanticsKind.GROUNDED)
                )
            if len(exact_members) > 0 and all(m[argument] is label for m in exact_members):
                facts.append(
                    TransferFact("conditional", "skeptical", label, argument, SemanticsKind.EXACT)
                )
    facts.sort(
        key=lambda f: (
            f.status != "certified",
            f.argument,
            f.semantics.value,
            f.mode,
            f.label.rank,
        )
    )
    return TransferReport(
        abstraction=abstraction,
        certified_exact=pinned,
        grounded_bound=bound,
        facts=tuple(facts),
    )
