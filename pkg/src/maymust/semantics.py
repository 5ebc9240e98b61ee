"""Semantics shared by both framework kinds.

The exact semantics is the set of all exact labellings, found by full
enumeration over the three labels per argument.  The grounded semantics
is the least fixpoint of the consensus step: an argument becomes ``in``
(``out``) once every way of resolving the remaining undecided arguments
allows only that label for it.  Both are gated by an argument-count cap
because enumeration and completion counts grow exponentially.
"""

from __future__ import annotations

from enum import Enum
from itertools import product

from .adf import AdfFramework, designation_adf, is_exact_adf
from .core import LABELS, Label, Labelling, LabellingSet, maximal_completions
from .errors import DomainMismatchError, NonMonotoneStepError, ResourceCapError, UnknownArgumentError
from .mma import MmaFramework, designations_mma, is_exact_mma

#: Largest argument count the enumeration-backed operations accept by default.
DEFAULT_MAX_ARGS = 12

Framework = MmaFramework | AdfFramework


class SemanticsKind(Enum):
    EXACT = "exact"
    GROUNDED = "grounded"


class AcceptanceMode(Enum):
    CREDULOUS = "credulous"
    SKEPTICAL = "skeptical"


def designation_set(framework: Framework, labelling: Labelling, argument: str) -> frozenset[Label]:
    """Allowed labels for the argument: a singleton for table frameworks."""
    if isinstance(framework, AdfFramework):
        return frozenset({designation_adf(framework, labelling, argument)})
    return designations_mma(framework, labelling, argument)


def is_exact(framework: Framework, labelling: Labelling) -> bool:
    if isinstance(framework, AdfFramework):
        return is_exact_adf(framework, labelling)
    return is_exact_mma(framework, labelling)


def _check_cap(framework: Framework, max_args: int, what: str) -> None:
    count = len(framework.graph.arguments)
    if count > max_args:
        raise ResourceCapError(f"{what} over {count} arguments exceeds the cap of {max_args}")


def exact_semantics(framework: Framework, max_args: int = DEFAULT_MAX_ARGS) -> LabellingSet:
    """All exact labellings, by enumeration of every total labelling.

    An empty result is a legal outcome, not an error: nothing guarantees
    an exact labelling exists.
    """
    _check_cap(framework, max_args, "exact-semantics enumeration")
    names = framework.graph.arguments
    index = {name: i for i, name in enumerate(names)}
    attacker_idx = []
    allowed = []
    for argument in names:
        attackers = framework.graph.attackers(argument)
        attacker_idx.append(tuple(index[x] for x in attackers))
        per_row = {}
        for vector in product(LABELS, repeat=len(attackers)):
            row = Labelling(dict(zip(attackers, vector)))
            per_row[vector] = designation_set(framework, row, argument)
        allowed.append(per_row)
    positions = range(len(names))
    members = []
    for combo in product(LABELS, repeat=len(names)):
        for i in positions:
            vector = tuple(combo[j] for j in attacker_idx[i])
            if combo[i] not in allowed[i][vector]:
                break
        else:
            members.append(Labelling(dict(zip(names, combo))))
    return LabellingSet(members)


def theta(framework: Framework, labelling: Labelling, max_args: int = DEFAULT_MAX_ARGS) -> Labelling:
    """One consensus step over all maximal completions of ``labelling``.

    An argument is mapped to ``in`` or ``out`` exactly when every
    completion allows only that label for it; otherwise it is ``undec``.
    """
    _check_cap(framework, max_args, "consensus step")
    names = framework.graph.arguments
    if labelling.domain != frozenset(names):
        raise DomainMismatchError("labelling domain must equal the framework's arguments")
    # consensus[a]: missing = no completion seen yet, None = consensus broken
    consensus: dict[str, Label | None] = {}
    for completion in maximal_completions(labelling):
        for argument in names:
            if consensus.get(argument, Label.UNDEC) is None:
                continue
            designated = designation_set(framework, completion, argument)
            vote: Label | None = None
            if len(designated) == 1:
                (only,) = designated
                if only is not Label.UNDEC:
                    vote = only
            if argument not in consensus:
                consensus[argument] = vote
            elif consensus[argument] is not vote:
                consensus[argument] = None
    return Labelling({a: consensus.get(a) or Label.UNDEC for a in names})


def grounded_iteration(framework: Framework, max_args: int = DEFAULT_MAX_ARGS) -> list[Labelling]:
    """The consensus iteration from all-undec up to its fixpoint.

    Raises NonMonotoneStepError if a step ever loses information; with
    the consensus step as defined that cannot happen, but the guard makes
    the assumption checkable rather than silent.
    """
    _check_cap(framework, max_args, "grounded iteration")
    names = framework.graph.arguments
    current = Labelling.all_undec(names)
    trace = [current]
    for _ in range(len(names) + 1):
        nxt = theta(framework, current, max_args=max_args)
        if not current.leq(nxt):
            raise NonMonotoneStepError(
                f"consensus step lost information: {current.render()} -> {nxt.render()}"
            )
        trace.append(nxt)
        if nxt == current:
            return trace
        current = nxt
    raise NonMonotoneStepError("consensus iteration failed to stabilise")


def grounded(framework: Framework, max_args: int = DEFAULT_MAX_ARGS) -> Labelling:
    """The least fixpoint of the consensus step."""
    return grounded_iteration(framework, max_args=max_args)[-1]


def semantics_labellings(
    framework: Framework, kind: SemanticsKind, max_args: int = DEFAULT_MAX_ARGS
) -> LabellingSet:
    if kind is SemanticsKind.EXACT:
        return exact_semantics(framework, max_args=max_args)
    return LabellingSet([grounded(framework, max_args=max_args)])


def accepted(
    framework: Framework,
    argument: str,
    kind: SemanticsKind,
    mode: AcceptanceMode,
    label: Label,
    max_args: int = DEFAULT_MAX_ARGS,
) -> bool:
    """Credulous/skeptical membership of a label in a semantics.

    Skeptical acceptance requires credulous acceptance, so an empty
    semantics answers False for both modes.
    """
    if argument not in framework.graph:
        raise UnknownArgumentError(f"unknown argument: {argument}")
    if label not in (Label.IN, Label.OUT):
        raise ValueError(f"acceptance queries target in or out, got {label}")
    members = semantics_labellings(framework, kind, max_args=max_args)
    credulous = any(member[argument] is label for member in members)
    if mode is AcceptanceMode.CREDULOUS:
        return credulous
    return credulous and all(member[argument] is label for member in members)
