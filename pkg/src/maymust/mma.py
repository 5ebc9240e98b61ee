"""May-must scales and the labelling instructions they induce.

Every argument carries a nuance tuple: two (may, must) threshold pairs.
The acceptance pair is read against the number of attackers currently
labelled ``out``, the rejection pair against the number labelled ``in``.
Relative to a pair, a count falls into exactly one of three classes:

* ``NOT``  -- below ``may``: the condition is not met at all;
* ``MAYS`` -- at least ``may`` but below ``must``: met only possibly;
* ``MUST`` -- at least ``must``: met necessarily.

The two axes combine into the set of labels an argument is allowed to
take under a labelling of its attackers:

* ``in``    is allowed when acceptance is at least possible (``may``
  reached) and rejection is not necessary;
* ``out``   dually, rejection at least possible and acceptance not
  necessary;
* ``undec`` is allowed when both conditions are necessary, when either
  is met only possibly, or when neither is met at all.

``DESIGNATION_CELLS`` tabulates the same sets per class pair and is kept
as a second, table-driven route so the two can be checked against each
other.  A label is proper when it is among the allowed ones, and a total
labelling is exact when every argument's label is proper.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .core import AttackGraph, Label, Labelling
from .errors import DomainMismatchError, UnknownArgumentError


class ConditionClass(Enum):
    NOT = "not"
    MAYS = "mays"
    MUST = "must"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MayMustScale:
    """A (may, must) pair of attacker-count thresholds, may <= must."""

    may: int
    must: int

    def __post_init__(self):
        if not (0 <= self.may <= self.must):
            raise ValueError(f"invalid scale: need 0 <= may <= must, got ({self.may}, {self.must})")

    def classify(self, count: int) -> ConditionClass:
        if count < self.may:
            return ConditionClass.NOT
        if count < self.must:
            return ConditionClass.MAYS
        return ConditionClass.MUST


@dataclass(frozen=True)
class NuanceTuple:
    """Acceptance and rejection scales attached to one argument."""

    acceptance: MayMustScale
    rejection: MayMustScale

    @classmethod
    def of(cls, n1: int, n2: int, m1: int, m2: int) -> "NuanceTuple":
        return cls(MayMustScale(n1, n2), MayMustScale(m1, m2))

    def as_quad(self) -> tuple[int, int, int, int]:
        return (self.acceptance.may, self.acceptance.must, self.rejection.may, self.rejection.must)


#: Allowed labels per (acceptance class, rejection class) pair.
DESIGNATION_CELLS: dict[tuple[ConditionClass, ConditionClass], frozenset[Label]] = {
    (ConditionClass.MUST, ConditionClass.MUST): frozenset({Label.UNDEC}),
    (ConditionClass.MUST, ConditionClass.MAYS): frozenset({Label.IN, Label.UNDEC}),
    (ConditionClass.MUST, ConditionClass.NOT): frozenset({Label.IN}),
    (ConditionClass.MAYS, ConditionClass.MUST): frozenset({Label.OUT, Label.UNDEC}),
    (ConditionClass.MAYS, ConditionClass.MAYS): frozenset({Label.IN, Label.OUT, Label.UNDEC}),
    (ConditionClass.MAYS, ConditionClass.NOT): frozenset({Label.IN, Label.UNDEC}),
    (ConditionClass.NOT, ConditionClass.MUST): frozenset({Label.OUT}),
    (ConditionClass.NOT, ConditionClass.MAYS): frozenset({Label.OUT, Label.UNDEC}),
    (ConditionClass.NOT, ConditionClass.NOT): frozenset({Label.UNDEC}),
}


def designation_cell(acceptance: ConditionClass, rejection: ConditionClass) -> frozenset[Label]:
    """Table lookup of the allowed labels for a class pair."""
    return DESIGNATION_CELLS[(acceptance, rejection)]


def classify_counts(scales: NuanceTuple, out_count: int, in_count: int) -> tuple[ConditionClass, ConditionClass]:
    return (scales.acceptance.classify(out_count), scales.rejection.classify(in_count))


def designation_for_counts(scales: NuanceTuple, out_count: int, in_count: int) -> frozenset[Label]:
    """Rule-based computation of the allowed labels for given counts."""
    may_a = scales.acceptance.may <= out_count
    must_a = scales.acceptance.must <= out_count
    may_r = scales.rejection.may <= in_count
    must_r = scales.rejection.must <= in_count
    allowed = set()
    if may_a and not must_r:
        allowed.add(Label.IN)
    if may_r and not must_a:
        allowed.add(Label.OUT)
    if (
        (must_a and must_r)
        or (may_a and not must_a)
        or (may_r and not must_r)
        or (not may_a and not may_r)
    ):
        allowed.add(Label.UNDEC)
    return frozenset(allowed)


class MmaFramework:
    """An attack graph whose arguments carry nuance tuples."""

    __slots__ = ("graph", "_scales")

    def __init__(self, graph: AttackGraph, scales: Mapping[str, NuanceTuple]):
        missing = [a for a in graph.arguments if a not in scales]
        if missing:
            raise ValueError(f"missing scales for arguments: {missing}")
        extra = sorted(set(scales) - set(graph.arguments))
        if extra:
            raise ValueError(f"scales given for undeclared arguments: {extra}")
        for name, nuance in scales.items():
            if not isinstance(nuance, NuanceTuple):
                raise TypeError(f"scale for {name!r} must be a NuanceTuple")
        self.graph = graph
        self._scales = {a: scales[a] for a in graph.arguments}

    def scale(self, argument: str) -> NuanceTuple:
        try:
            return self._scales[argument]
        except KeyError:
            raise UnknownArgumentError(f"unknown argument: {argument}") from None

    @property
    def scales(self) -> dict[str, NuanceTuple]:
        return dict(self._scales)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MmaFramework):
            return NotImplemented
        return self.graph == other.graph and self._scales == other._scales

    def __hash__(self) -> int:
        return hash((self.graph, tuple(self._scales.items())))

    def __repr__(self) -> str:
        return f"MmaFramework({self.graph!r}, {self._scales!r})"


def scale_warnings(framework: MmaFramework) -> list[str]:
    """Flag thresholds no attacker count can ever reach.

    Scales are legal at any magnitude, but a threshold above
    ``len(attackers) + 1`` can never change a classification, so the
    condition it guards is unreachable.
    """
    notes = []
    for argument in framework.graph.arguments:
        bound = len(framework.graph.attackers(argument)) + 1
        quad = framework.scale(argument).as_quad()
        for component, value in zip(("n1", "n2", "m1", "m2"), quad):
            if value > bound:
                notes.append(
                    f"scale {component}={value} for {argument} exceeds "
                    f"attacker count + 1 ({bound}); the condition is unreachable"
                )
    return notes


def _attacker_counts(framework: MmaFramework, labelling: Labelling, argument: str) -> tuple[int, int]:
    out_count = 0
    in_count = 0
    for attacker in framework.graph.attackers(argument):
        value = labelling.get(attacker)
        if value is None:
            raise DomainMismatchError(
                f"attacker {attacker} of {argument} is not labelled"
            )
        if value is Label.OUT:
            out_count += 1
        elif value is Label.IN:
            in_count += 1
    return out_count, in_count


def count_labelled(framework: MmaFramework, labelling: Labelling, argument: str, target: Label) -> int:
    """Number of attackers of ``argument`` that ``labelling`` maps to ``target``."""
    if target not in (Label.IN, Label.OUT):
        raise ValueError(f"count target must be in or out, got {target}")
    out_count, in_count = _attacker_counts(framework, labelling, argument)
    return out_count if target is Label.OUT else in_count


def classify(framework: MmaFramework, labelling: Labelling, argument: str) -> tuple[ConditionClass, ConditionClass]:
    """Where the attacker counts fall on the argument's two scales."""
    out_count, in_count = _attacker_counts(framework, labelling, argument)
    return classify_counts(framework.scale(argument), out_count, in_count)


def designations_mma(framework: MmaFramework, labelling: Labelling, argument: str) -> frozenset[Label]:
    """The labels ``labelling`` allows for ``argument``; never empty."""
    out_count, in_count = _attacker_counts(framework, labelling, argument)
    return designation_for_counts(framework.scale(argument), out_count, in_count)


def is_proper_mma(framework: MmaFramework, labelling: Labelling, argument: str) -> bool:
    """Whether the argument's own label is among its allowed labels.

    False (not an error) when the labelling leaves the argument or any
    of its attackers undefined.
    """
    if argument not in labelling:
        return False
    if any(x not in labelling for x in framework.graph.attackers(argument)):
        return False
    return labelling[argument] in designations_mma(framework, labelling, argument)


def is_exact_mma(framework: MmaFramework, labelling: Labelling) -> bool:
    """Whether every argument's label is proper under ``labelling``."""
    if labelling.domain != frozenset(framework.graph.arguments):
        raise DomainMismatchError("labelling domain must equal the framework's arguments")
    return all(is_proper_mma(framework, labelling, a) for a in framework.graph.arguments)
