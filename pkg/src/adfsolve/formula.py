"""Acceptance conditions and the two text formats that carry them.

The AST covers the propositional connectives plus xor, which several
benchmark families use even though network-style formats cannot spell it.
Two formats are supported:

* the ``s(name).`` / ``ac(name, expr).`` statement format where
  expressions are written functionally (``and(a, neg(b))``, constants
  ``c(v)`` and ``c(f)``), and
* the ``.bnet`` table format (``targets, factors`` header, ``&``, ``|``,
  ``!``, parentheses, constants ``0``/``1``), where a name that only ever
  appears on right-hand sides becomes a free input.

Writing ``.bnet`` rewrites xor/iff/imp into and/or/not first; that
rewrite can explode, so it is guarded by a node budget.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_NODE_BUDGET = 1_000_000

_NAME_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
_NAME_CHARS = _NAME_START | set("0123456789_")


class ParseError(Exception):
    """Syntax error with its position in the input text."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class FormatError(Exception):
    """Structurally invalid model (duplicate, missing or unknown names)."""


class RewriteBudgetError(Exception):
    """Connective elimination exceeded the allowed formula size."""

    def __init__(self, argument: str, budget: int):
        super().__init__(
            f"rewriting the condition of {argument!r} exceeds the node budget of {budget}"
        )
        self.argument = argument
        self.budget = budget


class Formula:
    """Base class of the condition AST; subclasses are frozen records."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True, slots=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Xor(Formula):
    left: Formula
    right: Formula


_BINARY = (And, Or, Imp, Iff, Xor)


def variables(formula: Formula) -> set[str]:
    """Names referenced anywhere in the formula."""
    out: set[str] = set()
    stack = [formula]
    while stack:
        f = stack.pop()
        if isinstance(f, Var):
            out.add(f.name)
        elif isinstance(f, Not):
            stack.append(f.child)
        elif isinstance(f, _BINARY):
            stack.append(f.left)
            stack.append(f.right)
    return out


def evaluate(formula: Formula, env: dict[str, bool]) -> bool:
    """Evaluate under a total assignment of the referenced names."""
    if isinstance(formula, Var):
        return env[formula.name]
    if isinstance(formula, Const):
        return formula.value
    if isinstance(formula, Not):
        return not evaluate(formula.child, env)
    a = evaluate(formula.left, env)
    b = evaluate(formula.right, env)
    if isinstance(formula, And):
        return a and b
    if isinstance(formula, Or):
        return a or b
    if isinstance(formula, Imp):
        return (not a) or b
    if isinstance(formula, Iff):
        return a == b
    return a != b


@dataclass(frozen=True)
class Adf:
    """Arguments in their fixed input order, one condition per argument."""

    arguments: tuple[str, ...]
    conditions: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.arguments) != len(self.conditions):
            raise FormatError("argument and condition counts differ")
        if len(set(self.arguments)) != len(self.arguments):
            raise FormatError("duplicate argument names")
        declared = set(self.arguments)
        for name, condition in zip(self.arguments, self.conditions):
            unknown = variables(condition) - declared
            if unknown:
                raise FormatError(
                    f"condition of {name!r} references undeclared argument {sorted(unknown)[0]!r}"
                )

    @property
    def n(self) -> int:
        return len(self.arguments)

    def index(self, name: str) -> int:
        return self.arguments.index(name)

    def condition(self, name: str) -> Formula:
        return self.conditions[self.index(name)]

    def free_inputs(self) -> tuple[str, ...]:
        """Arguments whose condition is literally themselves."""
        return tuple(
            name
            for name, condition in zip(self.arguments, self.conditions)
            if condition == Var(name)
        )


# -- statement format ------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.column)

    def _advance(self, ch: str) -> None:
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self._advance(self.text[self.pos])

    def at_end(self) -> bool:
        self.skip_space()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self._advance(ch)

    def name(self) -> str:
        self.skip_space()
        if self.pos >= len(self.text) or self.text[self.pos] not in _NAME_START:
            found = self.peek() or "end of input"
            raise self.error(f"expected a name, found {found!r}")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _NAME_CHARS:
            self._advance(self.text[self.pos])
        return self.text[start : self.pos]


def _parse_functional(scanner: _Scanner) -> Formula:
    token = scanner.name()
    if scanner.peek() != "(":
        return Var(token)
    scanner.expect("(")
    if token == "c":
        flag = scanner.name()
        if flag not in ("v", "f"):
            raise scanner.error(f"constant must be c(v) or c(f), found c({flag})")
        scanner.expect(")")
        return Const(flag == "v")
    if token == "neg":
        child = _parse_functional(scanner)
        scanner.expect(")")
        return Not(child)
    binary = {"and": And, "or": Or, "imp": Imp, "iff": Iff, "xor": Xor}.get(token)
    if binary is None:
        raise scanner.error(f"unknown connective {token!r}")
    left = _parse_functional(scanner)
    scanner.expect(",")
    right = _parse_functional(scanner)
    scanner.expect(")")
    return binary(left, right)


def parse_adf(text: str) -> Adf:
    """Parse the statement format into a model.

    Argument order is the order of the ``s(...)`` declarations.  Every
    declared argument needs exactly one ``ac(...)`` statement, and
    conditions may reference declared arguments only.
    """
    scanner = _Scanner(text)
    order: list[str] = []
    conditions: dict[str, Formula] = {}
    while not scanner.at_end():
        keyword = scanner.name()
        if keyword == "s":
            scanner.expect("(")
            name = scanner.name()
            scanner.expect(")")
            scanner.expect(".")
            if name in order:
                raise FormatError(f"argument {name!r} declared twice")
            order.append(name)
        elif keyword == "ac":
            scanner.expect("(")
            name = scanner.name()
            scanner.expect(",")
            condition = _parse_functional(scanner)
            scanner.expect(")")
            scanner.expect(".")
            if name in conditions:
                raise FormatError(f"duplicate condition for argument {name!r}")
            conditions[name] = condition
        else:
            raise scanner.error(f"expected 's' or 'ac' statement, found {keyword!r}")
    declared = set(order)
    for name in conditions:
        if name not in declared:
            raise FormatError(f"condition given for undeclared argument {name!r}")
    missing = [name for name in order if name not in conditions]
    if missing:
        raise FormatError(f"missing condition for argument {missing[0]!r}")
    return Adf(tuple(order), tuple(conditions[name] for name in order))


def _write_functional(formula: Formula) -> str:
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Const):
        return "c(v)" if formula.value else "c(f)"
    if isinstance(formula, Not):
        return f"neg({_write_functional(formula.child)})"
    tag = {And: "and", Or: "or", Imp: "imp", Iff: "iff", Xor: "xor"}[type(formula)]
    return f"{tag}({_write_functional(formula.left)},{_write_functional(formula.right)})"


def write_adf(adf: Adf) -> str:
    lines = [f"s({name})." for name in adf.arguments]
    lines += [
        f"ac({name},{_write_functional(condition)})."
        for name, condition in zip(adf.arguments, adf.conditions)
    ]
    return "\n".join(lines) + "\n"


# -- network table format ----------------------------------------------------


class _LineScanner(_Scanner):
    def __init__(self, text: str, line: int, column_offset: int):
        super().__init__(text)
        self.line = line
        self._offset = column_offset

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.column + self._offset)


def _parse_bnet_or(scanner: _LineScanner) -> Formula:
    left = _parse_bnet_and(scanner)
    while scanner.peek() == "|":
        scanner.expect("|")
        left = Or(left, _parse_bnet_and(scanner))
    return left


def _parse_bnet_and(scanner: _LineScanner) -> Formula:
    left = _parse_bnet_atom(scanner)
    while scanner.peek() == "&":
        scanner.expect("&")
        left = And(left, _parse_bnet_atom(scanner))
    return left


def _parse_bnet_atom(scanner: _LineScanner) -> Formula:
    ch = scanner.peek()
    if ch == "!":
        scanner.expect("!")
        return Not(_parse_bnet_atom(scanner))
    if ch == "(":
        scanner.expect("(")
        inner = _parse_bnet_or(scanner)
        scanner.expect(")")
        return inner
    if ch == "0" or ch == "1":
        scanner.expect(ch)
        return Const(ch == "1")
    return Var(scanner.name())


def parse_bnet(text: str) -> Adf:
    """Parse the network table format into a model.

    Names that only occur on right-hand sides become free inputs, in
    order of first appearance after the declared targets.
    """
    targets: list[str] = []
    conditions: dict[str, Formula] = {}
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            fields = [part.strip().lower() for part in line.split(",")]
            if fields != ["targets", "factors"]:
                raise ParseError("expected header 'targets, factors'", lineno, 1)
            header_seen = True
            continue
        if "," not in line:
            raise ParseError("expected 'name, expression'", lineno, len(raw) + 1)
        name_part, expr_part = line.split(",", 1)
        name = name_part.strip()
        if not name or name[0] not in _NAME_START or any(c not in _NAME_CHARS for c in name):
            raise ParseError(f"invalid target name {name_part.strip()!r}", lineno, 1)
        if name in conditions:
            raise FormatError(f"duplicate line for target {name!r}")
        scanner = _LineScanner(expr_part, lineno, raw.index(",") + 1)
        condition = _parse_bnet_or(scanner)
        if not scanner.at_end():
            raise scanner.error(f"unexpected trailing input {scanner.peek()!r}")
        targets.append(name)
        conditions[name] = condition
    if not header_seen:
        raise ParseError("expected header 'targets, factors'", 1, 1)
    order = list(targets)
    declared = set(order)
    for name in targets:
        for used in sorted(variables(conditions[name])):
            if used not in declared:
                declared.add(used)
                order.append(used)
                conditions[used] = Var(used)
    return Adf(tuple(order), tuple(conditions[name] for name in order))


def _eliminate(formula: Formula, argument: str, budget: int) -> Formula:
    """Rewrite xor/iff/imp into and/or/not under a tree-size budget.

    Duplicating operands shares sub-ASTs, so memory stays linear; the
    budget caps the equivalent tree size, which is what emission costs.
    """

    def rec(f: Formula) -> tuple[Formula, int]:
        if isinstance(f, (Var, Const)):
            return f, 1
        if isinstance(f, Not):
            child, size = rec(f.child)
            if size + 1 > budget:
                raise RewriteBudgetError(argument, budget)
            return Not(child), size + 1
        left, ls = rec(f.left)
        right, rs = rec(f.right)
        if isinstance(f, And):
            size = ls + rs + 1
            out: Formula = And(left, right)
        elif isinstance(f, Or):
            size = ls + rs + 1
            out = Or(left, right)
        elif isinstance(f, Imp):
            size = ls + rs + 2
            out = Or(Not(left), right)
        elif isinstance(f, Iff):
            size = 2 * (ls + rs) + 5
            out = Or(And(left, right), And(Not(left), Not(right)))
        else:
            size = 2 * (ls + rs) + 5
            out = Or(And(left, Not(right)), And(Not(left), right))
        if size > budget:
            raise RewriteBudgetError(argument, budget)
        return out, size

    return rec(formula)[0]


def _write_infix(formula: Formula) -> str:
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Const):
        return "1" if formula.value else "0"
    if isinstance(formula, Not):
        inner = _write_infix(formula.child)
        if isinstance(formula.child, (And, Or)):
            return f"!({inner})"
        return f"!{inner}"
    if not isinstance(formula, (And, Or)):
        raise ValueError(f"connective {type(formula).__name__} must be eliminated first")
    op = " & " if isinstance(formula, And) else " | "
    parts = []
    for side in (formula.left, formula.right):
        text = _write_infix(side)
        if isinstance(side, (And, Or)):
            text = f"({text})"
        parts.append(text)
    return op.join(parts)


def write_bnet(adf: Adf, budget: int = DEFAULT_NODE_BUDGET) -> str:
    """Emit the network table format, eliminating xor/iff/imp first.

    Raises :class:`RewriteBudgetError` naming the offending argument when
    the eliminated condition would exceed ``budget`` AST nodes.
    """
    lines = ["targets, factors"]
    for name, condition in zip(adf.arguments, adf.conditions):
        rewritten = _eliminate(condition, name, budget)
        lines.append(f"{name}, {_write_infix(rewritten)}")
    return "\n".join(lines) + "\n"
