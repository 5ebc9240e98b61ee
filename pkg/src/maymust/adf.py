"""Condition-table frameworks: one explicit row per attacker labelling.

Tables are stored densely: an argument with k attackers has exactly 3**k
rows, keyed by label vectors over the attackers in declaration order.
This makes the exponential cost visible and keeps row indexing
deterministic.  Construction is capped at a configurable attacker count.
"""

from __future__ import annotations

from itertools import product
from types import MappingProxyType
from typing import Iterator, Mapping

from .core import LABELS, AttackGraph, Label, Labelling
from .errors import DomainMismatchError, ResourceCapError, UnknownArgumentError

#: Largest attacker count a condition table accepts by default (3**10 rows).
DEFAULT_MAX_ATTACKERS = 10


def label_vectors(size: int) -> Iterator[tuple[Label, ...]]:
    """All label vectors of the given length, lexicographic in in < out < undec."""
    return product(LABELS, repeat=size)


class ConditionTable:
    """Total map from attacker label vectors to a single label."""

    __slots__ = ("owner", "attacker_order", "_rows")

    def __init__(
        self,
        owner: str,
        attacker_order: tuple[str, ...],
        rows: Mapping[tuple[Label, ...], Label],
        max_attackers: int = DEFAULT_MAX_ATTACKERS,
    ):
        attacker_order = tuple(attacker_order)
        k = len(attacker_order)
        if k > max_attackers:
            raise ResourceCapError(
                f"condition table for {owner} needs 3**{k} rows; "
                f"the cap is {max_attackers} attackers"
            )
        canonical: dict[tuple[Label, ...], Label] = {}
        for vector in label_vectors(k):
            try:
                value = rows[vector]
            except KeyError:
                pretty = ",".join(str(l) for l in vector) if vector else "-"
                raise ValueError(f"missing condition row for {owner}: {pretty}") from None
            if not isinstance(value, Label):
                raise TypeError(f"condition row value must be a Label, got {value!r}")
            canonical[vector] = value
        extra = set(rows) - set(canonical)
        if extra:
            raise ValueError(f"unexpected condition rows for {owner}: {sorted(extra)[:3]}")
        self.owner = owner
        self.attacker_order = attacker_order
        self._rows = canonical

    @property
    def rows(self) -> Mapping[tuple[Label, ...], Label]:
        return MappingProxyType(self._rows)

    def __getitem__(self, vector: tuple[Label, ...]) -> Label:
        return self._rows[vector]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConditionTable):
            return NotImplemented
        return (
            self.owner == other.owner
            and self.attacker_order == other.attacker_order
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.owner, self.attacker_order, tuple(self._rows.items())))

    def __repr__(self) -> str:
        return f"ConditionTable({self.owner!r}, attackers={self.attacker_order!r}, rows={len(self._rows)})"


class AdfFramework:
    """An attack graph with one condition table per argument."""

    __slots__ = ("graph", "_tables")

    def __init__(self, graph: AttackGraph, tables: Mapping[str, ConditionTable]):
        missing = [a for a in graph.arguments if a not in tables]
        if missing:
            raise ValueError(f"missing condition tables for arguments: {missing}")
        extra = sorted(set(tables) - set(graph.arguments))
        if extra:
            raise ValueError(f"tables given for undeclared arguments: {extra}")
        for argument in graph.arguments:
            table = tables[argument]
            if table.owner != argument:
                raise ValueError(f"table for {argument} is owned by {table.owner}")
            if table.attacker_order != graph.attackers(argument):
                raise ValueError(
                    f"table for {argument} indexes {table.attacker_order}, "
                    f"expected attackers {graph.attackers(argument)}"
                )
        self.graph = graph
        self._tables = {a: tables[a] for a in graph.arguments}

    def table(self, argument: str) -> ConditionTable:
        try:
            return self._tables[argument]
        except KeyError:
            raise UnknownArgumentError(f"unknown argument: {argument}") from None

    @property
    def tables(self) -> dict[str, ConditionTable]:
        return dict(self._tables)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdfFramework):
            return NotImplemented
        return self.graph == other.graph and self._tables == other._tables

    def __hash__(self) -> int:
        return hash((self.graph, tuple(self._tables.items())))

    def __repr__(self) -> str:
        return f"AdfFramework({self.graph!r}, tables for {list(self._tables)})"


def designation_adf(framework: AdfFramework, labelling: Labelling, argument: str) -> Label:
    """The single label the argument's table picks under ``labelling``.

    Only the restriction of the labelling to the argument's attackers
    matters; extending it elsewhere never changes the result.
    """
    order = framework.graph.attackers(argument)
    vector = []
    for attacker in order:
        value = labelling.get(attacker)
        if value is None:
            raise DomainMismatchError(f"attacker {attacker} of {argument} is not labelled")
        vector.append(value)
    return framework.table(argument)[tuple(vector)]


def is_proper_adf(framework: AdfFramework, labelling: Labelling, argument: str) -> bool:
    if argument not in labelling:
        return False
    if any(x not in labelling for x in framework.graph.attackers(argument)):
        return False
    return labelling[argument] is designation_adf(framework, labelling, argument)


def is_exact_adf(framework: AdfFramework, labelling: Labelling) -> bool:
    if labelling.domain != frozenset(framework.graph.arguments):
        raise DomainMismatchError("labelling domain must equal the framework's arguments")
    return all(is_proper_adf(framework, labelling, a) for a in framework.graph.arguments)
