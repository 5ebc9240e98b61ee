"""Random instances and the property suite behind the fuzz command.

The brute-force exact checker here is written directly against the
satisfaction conditions, separately from the designation machinery, so
the two can be compared as independent routes to the same answer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .adf import AdfFramework, ConditionTable, is_exact_adf, label_vectors
from .core import LABELS, AttackGraph, Label, Labelling
from .galois import (
    canonical_concretisation,
    count_concretisations,
    designations_mma,
    is_abstraction,
    is_concretisation,
    label_one_exact,
    minimal_abstractions,
)
from .mma import MmaFramework, NuanceTuple
from .semantics import Framework, exact_semantics, grounded, grounded_iteration, theta
from . import fileformat


def random_graph(rng: random.Random, max_args: int, max_attackers: int) -> AttackGraph:
    n = rng.randint(1, max_args)
    names = tuple(f"x{i}" for i in range(n))
    attacks = []
    for target in names:
        cap = min(max_attackers, n)
        sources = rng.sample(names, rng.randint(0, cap))
        attacks.extend((source, target) for source in sources)
    return AttackGraph(names, tuple(attacks))


def random_scale(rng: random.Random, attacker_count: int) -> NuanceTuple:
    bound = attacker_count + 1
    n1 = rng.randint(0, bound)
    n2 = rng.randint(n1, bound)
    m1 = rng.randint(0, bound)
    m2 = rng.randint(m1, bound)
    return NuanceTuple.of(n1, n2, m1, m2)


def random_mma(rng: random.Random, graph: AttackGraph) -> MmaFramework:
    scales = {a: random_scale(rng, len(graph.attackers(a))) for a in graph.arguments}
    return MmaFramework(graph, scales)


def random_adf(rng: random.Random, graph: AttackGraph) -> AdfFramework:
    tables = {}
    for argument in graph.arguments:
        attackers = graph.attackers(argument)
        rows = {vector: rng.choice(LABELS) for vector in label_vectors(len(attackers))}
        tables[argument] = ConditionTable(argument, attackers, rows)
    return AdfFramework(graph, tables)


def widen_mma(rng: random.Random, mma: MmaFramework) -> MmaFramework:
    """A framework at least as wide: may lowered, must raised, per axis."""
    scales = {}
    for argument in mma.graph.arguments:
        bound = len(mma.graph.attackers(argument)) + 1
        n1, n2, m1, m2 = mma.scale(argument).as_quad()
        scales[argument] = NuanceTuple.of(
            rng.randint(0, n1),
            rng.randint(n2, bound) if n2 <= bound else n2,
            rng.randint(0, m1),
            rng.randint(m2, bound) if m2 <= bound else m2,
        )
    return MmaFramework(mma.graph, scales)


def sample_concretisation(rng: random.Random, mma: MmaFramework) -> AdfFramework:
    """One concretisation with independently random row choices."""
    tables = {}
    for argument in mma.graph.arguments:
        attackers = mma.graph.attackers(argument)
        rows = {}
        for vector in label_vectors(len(attackers)):
            row = Labelling(dict(zip(attackers, vector)))
            allowed = sorted(designations_mma(mma, row, argument), key=lambda l: l.rank)
            rows[vector] = rng.choice(allowed)
        tables[argument] = ConditionTable(argument, attackers, rows)
    return AdfFramework(mma.graph, tables)


def brute_force_exact(framework: Framework) -> list[Labelling]:
    """Independent exact-labelling checker, straight from the conditions."""
    names = framework.graph.arguments
    found = []
    for combo in product(LABELS, repeat=len(names)):
        assignment = dict(zip(names, combo))
        if all(_label_allowed(framework, assignment, a) for a in names):
            found.append(Labelling(assignment))
    return found


def _label_allowed(framework: Framework, assignment: dict[str, Label], argument: str) -> bool:
    attackers = framework.graph.attackers(argument)
    label = assignment[argument]
    if isinstance(framework, AdfFramework):
        return framework.table(argument)[tuple(assignment[x] for x in attackers)] is label
    outs = sum(1 for x in attackers if assignment[x] is Label.OUT)
    ins = sum(1 for x in attackers if assignment[x] is Label.IN)
    n1, n2, m1, m2 = framework.scale(argument).as_quad()
    if label is Label.IN:
        return n1 <= outs and not m2 <= ins
    if label is Label.OUT:
        return m1 <= ins and not n2 <= outs
    return (
        (n2 <= outs and m2 <= ins)
        or n1 <= outs < n2
        or m1 <= ins < m2
        or (outs < n1 and ins < m1)
    )


@dataclass
class Violation:
    """A failed property plus the instance documents that witness it."""

    prop: str
    detail: str
    documents: list[str]

    def render(self) -> str:
        out = [f"# violation: {self.prop}", f"# {self.detail}"]
        out.extend(doc.rstrip("\n") for doc in self.documents)
        return "\n".join(out) + "\n"


def _check_instance(rng: random.Random, max_args: int) -> Violation | None:
    graph = random_graph(rng, max_args, max_attackers=min(3, max_args))
    mma = random_mma(rng, graph)
    adf = random_adf(rng, graph)
    mma_doc = fileformat.serialize(mma)
    adf_doc = fileformat.serialize(adf)

    for framework, doc in ((mma, mma_doc), (adf, adf_doc)):
        if fileformat.parse(fileformat.serialize(framework)) != framework:
            return Violation("round-trip", "parse(serialize(f)) != f", [doc])

        expected = brute_force_exact(framework)
        got = list(exact_semantics(framework))
        if sorted(expected, key=Labelling.sort_key) != got:
            return Violation(
                "exact-oracle",
                "enumerated exact semantics disagrees with the brute-force checker",
                [doc],
            )

        trace = grounded_iteration(framework)
        for before, after in zip(trace, trace[1:]):
            if not before.leq(after):
                return Violation("grounded-increasing", "iteration step lost information", [doc])
        fixpoint = trace[-1]
        if theta(framework, fixpoint) != fixpoint:
            return Violation("grounded-fixpoint", "grounded labelling is not a fixpoint", [doc])

    for argument in graph.arguments:
        for vector in label_vectors(len(graph.attackers(argument))):
            row = Labelling(dict(zip(graph.attackers(argument), vector)))
            if not designations_mma(mma, row, argument):
                return Violation("designation-empty", f"empty designation set at {argument}", [mma_doc])

    count = count_concretisations(mma)
    if count.total < 1:
        return Violation("count-positive", "concretisation count below one", [mma_doc])
    canonical = canonical_concretisation(mma)
    if not is_concretisation(canonical, mma):
        return Violation("canonical-concretisation", "canonical pick rejected", [mma_doc])
    sampled = sample_concretisation(rng, mma)
    if not is_concretisation(sampled, mma):
        return Violation("sampled-concretisation", "sampled pick rejected", [mma_doc])

    wider = widen_mma(rng, mma)
    if not is_concretisation(sampled, wider):
        return Violation(
            "concretisation-monotone",
            "a concretisation of a tighter framework was rejected by a wider one",
            [mma_doc, fileformat.serialize(wider), fileformat.serialize(sampled)],
        )

    for abstraction in minimal_abstractions(adf):
        if not is_abstraction(abstraction, adf):
            return Violation("abstraction-membership", "minimal abstraction rejected", [adf_doc])
        for argument in graph.arguments:
            table = adf.table(argument)
            for vector in label_vectors(len(graph.attackers(argument))):
                row = Labelling(dict(zip(graph.attackers(argument), vector)))
                designated = designations_mma(abstraction, row, argument)
                if table[vector] not in designated:
                    return Violation(
                        "abstraction-soundness",
                        f"table row at {argument} not designated by the abstraction",
                        [adf_doc, fileformat.serialize(abstraction)],
                    )
        if not is_concretisation(adf, abstraction):
            return Violation(
                "abstraction-concretisation",
                "framework is not a concretisation of its own abstraction",
                [adf_doc, fileformat.serialize(abstraction)],
            )
        for labelling in label_one_exact(abstraction):
            if not is_exact_adf(adf, labelling):
                return Violation(
                    "transfer-exact",
                    f"pinned exact labelling {labelling.render()} fails in the table framework",
                    [adf_doc, fileformat.serialize(abstraction)],
                )
        if not grounded(abstraction).leq(grounded(adf)):
            return Violation(
                "transfer-grounded",
                "abstraction's grounded labelling is not a lower bound",
                [adf_doc, fileformat.serialize(abstraction)],
            )
        if not is_abstraction(widen_mma(rng, abstraction), adf):
            return Violation(
                "abstraction-upward-closed",
                "widening a minimal abstraction fell out of the candidate set",
                [adf_doc],
            )
    return None


def run_suite(seed: int, count: int, max_args: int) -> tuple[int, Violation | None]:
    """Run the property suite over ``count`` random instances.

    Returns the number of instances checked and the first violation, if
    any.  A fixed seed reproduces the same run exactly.
    """
    rng = random.Random(seed)
    for index in range(count):
        violation = _check_instance(rng, max_args)
        if violation is not None:
            violation.detail += f" (seed {seed}, instance {index})"
            return index + 1, violation
    return count, None
