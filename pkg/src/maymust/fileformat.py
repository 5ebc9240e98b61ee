"""Plain-text instance documents.

One statement per line; ``#`` starts a comment; blank lines are ignored;
tokens are whitespace separated.  The first statement is the header,
``mma`` or ``adf``, and fixes which body statements are legal:

    mma | adf
    arg <name>
    att <source> <target>
    scale <arg> <n1> <n2> <m1> <m2>        (mma only)
    cond <arg> <labels> <result>           (adf only)

``<labels>`` is a comma-separated label vector over the argument's
attackers in attack declaration order, or the literal ``-`` when the
argument has no attackers; labels and results are ``in``, ``out`` or
``undec``.  A scale framework needs exactly one scale line per argument;
a table framework needs exactly one cond line per attacker labelling.

Serialisation is canonical: header, args in declaration order, atts in
declaration order, then one scale line per argument or the cond lines in
lexicographic label-vector order (in < out < undec).  Parsing a
serialised framework yields an equal framework.
"""

from __future__ import annotations

from .adf import DEFAULT_MAX_ATTACKERS, AdfFramework, ConditionTable, label_vectors
from .core import ARGUMENT_NAME, AttackGraph, Label
from .errors import ParseError
from .mma import MmaFramework, NuanceTuple
from .semantics import Framework

_HEADERS = ("mma", "adf")


def _parse_label(token: str, line: int) -> Label:
    try:
        return Label(token)
    except ValueError:
        raise ParseError(f"not a label: {token!r}", line) from None


def _parse_nat(token: str, line: int) -> int:
    if not token.isdigit():
        raise ParseError(f"not a natural number: {token!r}", line)
    return int(token)


def parse(text: str | bytes, max_attackers: int = DEFAULT_MAX_ATTACKERS) -> Framework:
    """Parse an instance document into a framework.

    Raises ParseError with the offending line for malformed input;
    attacker counts beyond the cap raise ResourceCapError.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None

    header: str | None = None
    args: list[tuple[str, int]] = []
    atts: list[tuple[str, str, int]] = []
    scales: list[tuple[str, tuple[int, int, int, int], int]] = []
    conds: list[tuple[str, str, str, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        keyword = tokens[0]
        if header is None:
            if keyword not in _HEADERS:
                raise ParseError(f"expected header 'mma' or 'adf', found {keyword!r}", lineno)
            if len(tokens) != 1:
                raise ParseError("header takes no further tokens", lineno)
            header = keyword
            continue
        if keyword in _HEADERS:
            raise ParseError("duplicate header", lineno)
        if keyword == "arg":
            if len(tokens) != 2:
                raise ParseError("usage: arg <name>", lineno)
            if not ARGUMENT_NAME.match(tokens[1]):
                raise ParseError(f"invalid argument name: {tokens[1]!r}", lineno)
            args.append((tokens[1], lineno))
        elif keyword == "att":
            if len(tokens) != 3:
                raise ParseError("usage: att <source> <target>", lineno)
            atts.append((tokens[1], tokens[2], lineno))
        elif keyword == "scale":
            if header != "mma":
                raise ParseError("scale statements belong to mma documents", lineno)
            if len(tokens) != 6:
                raise ParseError("usage: scale <arg> <n1> <n2> <m1> <m2>", lineno)
            quad = tuple(_parse_nat(t, lineno) for t in tokens[2:6])
            scales.append((tokens[1], quad, lineno))  # type: ignore[arg-type]
        elif keyword == "cond":
            if header != "adf":
                raise ParseError("cond statements belong to adf documents", lineno)
            if len(tokens) != 4:
                raise ParseError("usage: cond <arg> <labels> <result>", lineno)
            conds.append((tokens[1], tokens[2], tokens[3], lineno))
        else:
            raise ParseError(f"unknown statement: {keyword!r}", lineno)

    if header is None:
        raise ParseError("empty document: expected header 'mma' or 'adf'")

    declared: dict[str, int] = {}
    for name, lineno in args:
        if name in declared:
            raise ParseError(f"duplicate argument: {name}", lineno)
        declared[name] = lineno
    attack_pairs: list[tuple[str, str]] = []
    seen_attacks: set[tuple[str, str]] = set()
    for src, dst, lineno in atts:
        for endpoint in (src, dst):
            if endpoint not in declared:
                raise ParseError(f"undeclared argument: {endpoint}", lineno)
        if (src, dst) in seen_attacks:
            raise ParseError(f"duplicate attack: {src} {dst}", lineno)
        seen_attacks.add((src, dst))
        attack_pairs.append((src, dst))
    graph = AttackGraph(tuple(declared), tuple(attack_pairs))

    if header == "mma":
        nuances: dict[str, NuanceTuple] = {}
        for name, (n1, n2, m1, m2), lineno in scales:
            if name not in declared:
                raise ParseError(f"undeclared argument: {name}", lineno)
            if name in nuances:
                raise ParseError(f"duplicate scale for {name}", lineno)
            if n1 > n2 or m1 > m2:
                raise ParseError(
                    f"scale violation for {name}: may must not exceed must "
                    f"({n1},{n2},{m1},{m2})",
                    lineno,
                )
            nuances[name] = NuanceTuple.of(n1, n2, m1, m2)
        missing = [a for a in graph.arguments if a not in nuances]
        if missing:
            raise ParseError(f"missing scale for {missing[0]}")
        return MmaFramework(graph, nuances)

    rows: dict[str, dict[tuple[Label, ...], Label]] = {a: {} for a in graph.arguments}
    for name, labels_token, result_token, lineno in conds:
        if name not in declared:
            raise ParseError(f"undeclared argument: {name}", lineno)
        attackers = graph.attackers(name)
        if labels_token == "-":
            vector: tuple[Label, ...] = ()
        else:
            vector = tuple(_parse_label(t, lineno) for t in labels_token.split(","))
        if len(vector) != len(attackers):
            raise ParseError(
                f"wrong label-vector arity for {name}: expected {len(attackers)}, "
                f"got {len(vector)}",
                lineno,
            )
        if vector in rows[name]:
            raise ParseError(f"duplicate cond row for {name}: {labels_token}", lineno)
        rows[name][vector] = _parse_label(result_token, lineno)
    tables: dict[str, ConditionTable] = {}
    for argument in graph.arguments:
        attackers = graph.attackers(argument)
        for vector in label_vectors(len(attackers)):
            if vector not in rows[argument]:
                pretty = ",".join(str(l) for l in vector) if vector else "-"
                raise ParseError(f"missing cond row for {argument}: {pretty}")
        tables[argument] = ConditionTable(argument, attackers, rows[argument], max_attackers)
    return AdfFramework(graph, tables)


def serialize(framework: Framework) -> str:
    """Canonical text form; parsing it yields an equal framework."""
    graph = framework.graph
    lines = ["mma" if isinstance(framework, MmaFramework) else "adf"]
    lines.extend(f"arg {name}" for name in graph.arguments)
    lines.extend(f"att {src} {dst}" for src, dst in graph.attacks)
    if isinstance(framework, MmaFramework):
        for argument in graph.arguments:
            n1, n2, m1, m2 = framework.scale(argument).as_quad()
            lines.append(f"scale {argument} {n1} {n2} {m1} {m2}")
    else:
        for argument in graph.arguments:
            table = framework.table(argument)
            for vector in label_vectors(len(table.attacker_order)):
                labels = ",".join(str(l) for l in vector) if vector else "-"
                lines.append(f"cond {argument} {labels} {table[vector]}")
    return "\n".join(lines) + "\n"
