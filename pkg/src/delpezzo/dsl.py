"""Line-oriented surface-description language.

    base P2 | F<n> | P1xP1
    track <name> = <integer class expression over H, D, f and exceptionals>
    blowup <k> on <name>[,<name>] [near <label>] as <label>
    contract negative | contract <name>[,<name>]
    assert-generating
    report
    # comments run to end of line

Parsing and validation are separate passes: parse() reports positioned
syntax errors with the expected-token set, validate() catches semantic
problems (unknown names, duplicate labels, statements after contract).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class DslSyntaxError(Exception):
    def __init__(self, line, column, expected, found):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        self.found = found
        wanted = " or ".join(expected)
        super().__init__(f"line {line}, column {column}: expected {wanted}, found {found}")


class DslValidationError(Exception):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class Base:
    kind: str
    line: int = field(compare=False)


@dataclass(frozen=True)
class Track:
    name: str
    # class expression as ordered (coefficient, symbol) pairs
    combination: tuple[tuple[int, str], ...]
    line: int = field(compare=False)


@dataclass(frozen=True)
class BlowupOrbit:
    count: int
    on: tuple[str, ...]
    near: str | None
    label: str
    line: int = field(compare=False)


@dataclass(frozen=True)
class Contract:
    names: tuple[str, ...] | None  # None means "negative"
    line: int = field(compare=False)


@dataclass(frozen=True)
class AssertGenerating:
    line: int = field(compare=False)


@dataclass(frozen=True)
class Report:
    line: int = field(compare=False)


@dataclass(frozen=True)
class Program:
    statements: tuple


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<sym>[=+,*-]))")


def _tokenize(text, line_no):
    tokens = []
    pos = 0
    body = text.split("#", 1)[0]
    while pos < len(body):
        match = _TOKEN.match(body, pos)
        if match is None:
            stripped = body[pos:].strip()
            if not stripped:
                break
            raise DslSyntaxError(line_no, pos + 1, ("token",), repr(stripped[0]))
        column = match.start(match.lastgroup) + 1
        tokens.append((match.lastgroup, match.group(match.lastgroup), column))
        pos = match.end()
    return tokens


class _Cursor:
    def __init__(self, tokens, line_no, line_len):
        self.tokens = tokens
        self.line = line_no
        self.end_column = line_len + 1
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind, expected):
        token = self.peek()
        if token is None:
            raise DslSyntaxError(self.line, self.end_column, (expected,), "end of line")
        if token[0] != kind:
            raise DslSyntaxError(self.line, token[2], (expected,), repr(token[1]))
        self.pos += 1
        return token

    def take_keyword(self, word):
        token = self.peek()
        if token is None:
            raise DslSyntaxError(self.line, self.end_column, (repr(word),), "end of line")
        if token[0] != "name" or token[1] != word:
            raise DslSyntaxError(self.line, token[2], (repr(word),), repr(token[1]))
        self.pos += 1
        return token

    def at_keyword(self, word):
        token = self.peek()
        return token is not None and token[0] == "name" and token[1] == word

    def done(self):
        token = self.peek()
        if token is not None:
            raise DslSyntaxError(self.line, token[2], ("end of line",), repr(token[1]))


def _parse_namelist(cursor):
    names = [cursor.take("name", "curve name")[1]]
    while True:
        token = cursor.peek()
        if token is None or token[0] != "sym" or token[1] != ",":
            break
        cursor.pos += 1
        names.append(cursor.take("name", "curve name")[1])
    return tuple(names)


def _parse_combination(cursor):
    """Signed integer combination: [-] [k[*]] SYM (+|- [k[*]] SYM)*"""
    pairs = []
    sign = 1
    token = cursor.peek()
    if token is not None and token[0] == "sym" and token[1] == "-":
        sign = -1
        cursor.pos += 1
    while True:
        token = cursor.peek()
        coefficient = 1
        if token is not None and token[0] == "num":
            coefficient = int(token[1])
            cursor.pos += 1
            token = cursor.peek()
            if token is not None and token[0] == "sym" and token[1] == "*":
                cursor.pos += 1
        symbol = cursor.take("name", "class symbol")[1]
        pairs.append((sign * coefficient, symbol))
        token = cursor.peek()
        if token is None:
            break
        if token[0] == "sym" and token[1] in "+-":
            sign = 1 if token[1] == "+" else -1
            cursor.pos += 1
            continue
        break
    return tuple(pairs)


def parse(source):
    """Parse DSL text into a Program; syntax errors carry line and column."""
    statements = []
    for line_no, raw in enumerate(source.splitlines(), start=1):
        tokens = _tokenize(raw, line_no)
        if not tokens:
            continue
        cursor = _Cursor(tokens, line_no, len(raw))
        head = cursor.take("name", "statement keyword")
        keyword = head[1]
        if keyword == "base":
            kind = cursor.take("name", "base kind (P2, F<n>, P1xP1)")[1]
            cursor.done()
            statements.append(Base(kind, line_no))
        elif keyword == "track":
            name = cursor.take("name", "curve name")[1]
            token = cursor.peek()
            if token is None or token[0] != "sym" or token[1] != "=":
                column = token[2] if token else cursor.end_column
                raise DslSyntaxError(line_no, column, ("'='",), repr(token[1]) if token else "end of line")
            cursor.pos += 1
            combination = _parse_combination(cursor)
            cursor.done()
            statements.append(Track(name, combination, line_no))
        elif keyword == "blowup":
            count = int(cursor.take("num", "orbit size")[1])
            cursor.take_keyword("on")
            on = _parse_namelist(cursor)
            near = None
            if cursor.at_keyword("near"):
                cursor.pos += 1
                near = cursor.take("name", "orbit label")[1]
            cursor.take_keyword("as")
            label = cursor.take("name", "orbit label")[1]
            cursor.done()
            statements.append(BlowupOrbit(count, on, near, label, line_no))
        elif keyword == "contract":
            if cursor.at_keyword("negative"):
                cursor.pos += 1
                cursor.done()
                statements.append(Contract(None, line_no))
            else:
                names = _parse_namelist(cursor)
                cursor.done()
                statements.append(Contract(names, line_no))
        elif keyword == "assert":
            token = cursor.peek()
            if token is None or token[0] != "sym" or token[1] != "-":
                column = token[2] if token else cursor.end_column
                raise DslSyntaxError(line_no, column, ("'-generating'",), repr(token[1]) if token else "end of line")
            cursor.pos += 1
            cursor.take_keyword("generating")
            cursor.done()
            statements.append(AssertGenerating(line_no))
        elif keyword == "report":
            cursor.done()
            statements.append(Report(line_no))
        else:
            raise DslSyntaxError(
                line_no,
                head[2],
                ("base", "track", "blowup", "contract", "assert-generating", "report"),
                repr(keyword),
            )
    return Program(tuple(statements))


_BASE_KIND = re.compile(r"P2|P1xP1|F\d+")


def validate(program):
    """Semantic checks: one leading base, known names, contract placement."""
    statements = program.statements
    if not statements:
        raise DslValidationError(0, "empty program")
    if not isinstance(statements[0], Base):
        raise DslValidationError(
            getattr(statements[0], "line", 1), "the first statement must be 'base'"
        )
    if not _BASE_KIND.fullmatch(statements[0].kind):
        raise DslValidationError(statements[0].line, f"unknown base {statements[0].kind!r}")
    kind = statements[0].kind
    if kind == "P2":
        known = {"H"}
        curve_names = set()
    else:
        # Hirzebruch surfaces and the quadric both use the (D, f) symbols;
        # only F<n> tracks the negative section D as an actual curve
        known = {"D", "f"}
        curve_names = {"D"} if kind.startswith("F") else set()
    labels = {}
    contracted = False
    for statement in statements[1:]:
        if isinstance(statement, Base):
            raise DslValidationError(statement.line, "duplicate 'base' statement")
        if contracted and not isinstance(statement, Report):
            raise DslValidationError(
                statement.line, "only 'report' may follow 'contract'"
            )
        if isinstance(statement, Track):
            if statement.name in curve_names or statement.name in known:
                raise DslValidationError(
                    statement.line, f"name {statement.name!r} already in use"
                )
            for _, symbol in statement.combination:
                if symbol not in known:
                    raise DslValidationError(
                        statement.line, f"unknown class symbol {symbol!r}"
                    )
            curve_names.add(statement.name)
            known.add(statement.name)
        elif isinstance(statement, BlowupOrbit):
            if statement.count < 1:
                raise DslValidationError(statement.line, "orbit size must be >= 1")
            for name in statement.on:
                if name not in curve_names:
                    raise DslValidationError(statement.line, f"unknown curve {name!r}")
            if statement.near is not None and statement.near not in labels:
                raise DslValidationError(
                    statement.line, f"unknown orbit label {statement.near!r}"
                )
            if statement.label in labels or statement.label in known:
                raise DslValidationError(
                    statement.line, f"label {statement.label!r} already in use"
                )
            labels[statement.label] = statement.count
            for i in range(statement.count):
                name = f"{statement.label}{i + 1}"
                curve_names.add(name)
                known.add(name)
        elif isinstance(statement, Contract):
            if statement.names is not None:
                for name in statement.names:
                    if name not in curve_names and name not in labels:
                        raise DslValidationError(
                            statement.line, f"unknown curve or label {name!r}"
                        )
            contracted = True
    return program


def pretty_print(program):
    """Canonical text form; parse(pretty_print(parse(s))) == parse(s)."""
    lines = []
    for statement in program.statements:
        if isinstance(statement, Base):
            lines.append(f"base {statement.kind}")
        elif isinstance(statement, Track):
            bits = []
            for i, (coefficient, symbol) in enumerate(statement.combination):
                mag = abs(coefficient)
                term = symbol if mag == 1 else f"{mag}{symbol}"
                if i == 0:
                    bits.append(term if coefficient >= 0 else f"-{term}")
                else:
                    bits.append(("+ " if coefficient >= 0 else "- ") + term)
            lines.append(f"track {statement.name} = " + " ".join(bits))
        elif isinstance(statement, BlowupOrbit):
            text = f"blowup {statement.count} on " + ",".join(statement.on)
            if statement.near is not None:
                text += f" near {statement.near}"
            text += f" as {statement.label}"
            lines.append(text)
        elif isinstance(statement, Contract):
            if statement.names is None:
                lines.append("contract negative")
            else:
                lines.append("contract " + ",".join(statement.names))
        elif isinstance(statement, AssertGenerating):
            lines.append("assert-generating")
        elif isinstance(statement, Report):
            lines.append("report")
    return "\n".join(lines) + "\n"
