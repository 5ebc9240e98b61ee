"""Attack graphs and three-valued labellings.

Arguments are plain name strings matching ``[A-Za-z0-9_]+``.  A labelling
assigns ``in`` / ``out`` / ``undec`` to every argument of an explicit,
fixed domain; operations refuse to relate labellings across different
domains rather than silently extending them.  The information order
treats ``undec`` as the least committed value: ``l1 <= l2`` holds when
``l2`` keeps every ``in`` and every ``out`` of ``l1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Iterator, Mapping

from .errors import DomainMismatchError, UnknownArgumentError

ARGUMENT_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


class Label(Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"

    @property
    def rank(self) -> int:
        """Canonical sort position: in < out < undec."""
        return _LABEL_RANK[self]

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_token(cls, token: str) -> "Label":
        try:
            return cls(token)
        except ValueError:
            raise ValueError(f"not a label: {token!r} (expected in, out or undec)") from None


_LABEL_RANK = {Label.IN: 0, Label.OUT: 1, Label.UNDEC: 2}

#: All labels in canonical order.
LABELS = (Label.IN, Label.OUT, Label.UNDEC)


@dataclass(frozen=True)
class AttackGraph:
    """Finite argument set plus attack relation, in declaration order.

    Declaration order matters: attackers of an argument are reported in
    the order their attacks were declared, which downstream code uses to
    index condition-table rows deterministically.
    """

    arguments: tuple[str, ...]
    attacks: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arguments", tuple(self.arguments))
        object.__setattr__(self, "attacks", tuple((s, t) for s, t in self.attacks))
        declared: set[str] = set()
        for name in self.arguments:
            if not ARGUMENT_NAME.match(name):
                raise ValueError(f"invalid argument name: {name!r}")
            if name in declared:
                raise ValueError(f"duplicate argument: {name}")
            declared.add(name)
        seen: set[tuple[str, str]] = set()
        pre: dict[str, list[str]] = {a: [] for a in self.arguments}
        for src, dst in self.attacks:
            if src not in declared:
                raise UnknownArgumentError(f"attack source {src!r} is not a declared argument")
            if dst not in declared:
                raise UnknownArgumentError(f"attack target {dst!r} is not a declared argument")
            if (src, dst) in seen:
                raise ValueError(f"duplicate attack: {src} -> {dst}")
            seen.add((src, dst))
            pre[dst].append(src)
        object.__setattr__(self, "_pre", {a: tuple(xs) for a, xs in pre.items()})

    def attackers(self, argument: str) -> tuple[str, ...]:
        """Sources of attacks on ``argument``, in attack declaration order."""
        try:
            return self._pre[argument]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownArgumentError(f"unknown argument: {argument}") from None

    def __contains__(self, argument: str) -> bool:
        return argument in self._pre  # type: ignore[attr-defined]


class Labelling:
    """Total map from a fixed argument domain to labels.

    Immutable and hashable; two labellings are equal exactly when they
    have the same domain and the same assignment.
    """

    __slots__ = ("_items", "_map")

    def __init__(self, assignment: Mapping[str, Label] | Iterable[tuple[str, Label]]):
        mapping = dict(assignment)
        for name, label in mapping.items():
            if not isinstance(label, Label):
                raise TypeError(f"label for {name!r} must be a Label, got {label!r}")
        self._map = mapping
        self._items = tuple(sorted(mapping.items()))

    @classmethod
    def all_undec(cls, domain: Iterable[str]) -> "Labelling":
        return cls({name: Label.UNDEC for name in domain})

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._map)

    def items(self) -> tuple[tuple[str, Label], ...]:
        """Pairs sorted by argument name."""
        return self._items

    def __getitem__(self, name: str) -> Label:
        return self._map[name]

    def get(self, name: str) -> Label | None:
        return self._map.get(name)

    def __contains__(self, name: str) -> bool:
        return name in self._map

    def __len__(self) -> int:
        return len(self._map)

    def __iter__(self) -> Iterator[str]:
        return iter(self._map)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labelling):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}:{v}" for n, v in self._items)
        return f"Labelling[{inner}]"

    def render(self) -> str:
        """``name=label`` pairs sorted by name, space separated."""
        return " ".join(f"{n}={v}" for n, v in self._items)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(label.rank for _, label in self._items)

    def leq(self, other: "Labelling") -> bool:
        """Information order: every in/out of self is kept by other."""
        if self.domain != other.domain:
            raise DomainMismatchError("labellings compared across different domains")
        return all(
            value is Label.UNDEC or other._map[name] is value
            for name, value in self._items
        )

    def restrict(self, names: Iterable[str]) -> "Labelling":
        """The same labelling cut down to a subset of its domain."""
        wanted = set(names)
        missing = wanted - set(self._map)
        if missing:
            raise DomainMismatchError(
                f"cannot restrict to undefined arguments: {sorted(missing)}"
            )
        return Labelling({n: self._map[n] for n in wanted})


def labelling_leq(first: Labelling, second: Labelling) -> bool:
    return first.leq(second)


class LabellingSet:
    """A duplicate-free set of labellings over one common domain.

    Iteration order is canonical: members are sorted by their label
    vector in argument-name order, with in < out < undec per position.
    """

    __slots__ = ("_members",)

    def __init__(self, members: Iterable[Labelling] = ()):
        unique = list(dict.fromkeys(members))
        domains = {m.domain for m in unique}
        if len(domains) > 1:
            raise DomainMismatchError("labelling set members must share one domain")
        self._members = tuple(sorted(unique, key=Labelling.sort_key))

    @property
    def members(self) -> tuple[Labelling, ...]:
        return self._members

    def __iter__(self) -> Iterator[Labelling]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, labelling: Labelling) -> bool:
        return labelling in self._members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabellingSet):
            return NotImplemented
        return self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"LabellingSet({list(self._members)!r})"


def maximal_completions(labelling: Labelling) -> LabellingSet:
    """All refinements of a labelling that leave nothing undecided.

    Every ``undec`` position is replaced by ``in`` or ``out`` in all
    combinations, so the result has ``2**u`` members for ``u`` undecided
    positions; in/out positions are kept as they are.
    """
    undecided = [name for name, value in labelling.items() if value is Label.UNDEC]
    fixed = {name: value for name, value in labelling.items() if value is not Label.UNDEC}
    members = []
    for combo in product((Label.IN, Label.OUT), repeat=len(undecided)):
        assignment = dict(fixed)
        assignment.update(zip(undecided, combo))
        members.append(Labelling(assignment))
    return LabellingSet(members)
