"""Expression parser, ring specifications, and the matrix document format.

Grammar (explicit ``*`` required, juxtaposition is not multiplication):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := INTEGER | IDENT | '(' expr ')' | factor '^' INTEGER

``^`` is repeated multiplication with a nonnegative exponent, and
multiplication is left-associative and order preserving.  A matrix
document is a JSON object with a ring header, the dimension, and a grid
of expression strings:

    {"ring": {"kind": "free", "generators": ["a", "b", "c", "d"]},
     "n": 2,
     "entries": [["a", "b"], ["c", "d"]]}

An optional "t" field records a supermatrix block split.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .freealg import FreeAlgebra
from .grassmann import MAX_RANK, GrassmannAlgebra
from .matrices import Matrix, SupermatrixProfile, is_supermatrix
from .rings import IntegerRing, Ring


class ParseError(ValueError):
    """Syntax or lookup failure while parsing an expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DocumentError(ValueError):
    """Malformed matrix document."""


RING_KINDS = ("integer", "free", "grassmann")


@dataclass(frozen=True)
class RingSpec:
    """Declares which concrete ring a document or expression lives in."""

    kind: str
    generators: tuple[str, ...] = ()
    rank: int = 0

    def __post_init__(self):
        if self.kind not in RING_KINDS:
            raise ValueError(f"ring kind must be one of {RING_KINDS}, got {self.kind!r}")
        if self.kind == "free":
            if not self.generators:
                raise ValueError("free ring needs at least one generator name")
            if len(set(self.generators)) != len(self.generators):
                raise ValueError("generator names must be unique")
            for name in self.generators:
                if not name.isidentifier():
                    raise ValueError(f"invalid generator name {name!r}")
        if self.kind == "grassmann" and not 0 <= self.rank <= MAX_RANK:
            raise ValueError(f"grassmann rank must be between 0 and {MAX_RANK}")

    @classmethod
    def free(cls, *names: str) -> RingSpec:
        return cls(kind="free", generators=tuple(names))

    @classmethod
    def grassmann(cls, rank: int) -> RingSpec:
        return cls(kind="grassmann", rank=rank)

    @classmethod
    def integer(cls) -> RingSpec:
        return cls(kind="integer")

    def build_ring(self) -> Ring:
        if self.kind == "integer":
            return IntegerRing()
        if self.kind == "free":
            return FreeAlgebra(self.generators)
        return GrassmannAlgebra(self.rank)

    @classmethod
    def from_json_obj(cls, obj) -> RingSpec:
        if not isinstance(obj, dict) or "kind" not in obj:
            raise DocumentError("ring header must be an object with a 'kind' field")
        kind = obj["kind"]
        try:
            if kind == "free":
                return cls(kind="free", generators=tuple(obj.get("generators", ())))
            if kind == "grassmann":
                return cls(kind="grassmann", rank=int(obj.get("rank", 0)))
            return cls(kind=kind)
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc

    def to_json_obj(self) -> dict:
        if self.kind == "free":
            return {"kind": "free", "generators": list(self.generators)}
        if self.kind == "grassmann":
            return {"kind": "grassmann", "rank": self.rank}
        return {"kind": "integer"}


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[-+*^()]))"
)


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            stripped = src[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(src) - len(stripped)
            raise ParseError(f"unexpected character {src[bad_at]!r}", bad_at)
        if match.lastgroup == "int":
            tokens.append(("int", match.group("int"), match.start("int")))
        elif match.lastgroup == "ident":
            tokens.append(("ident", match.group("ident"), match.start("ident")))
        else:
            tokens.append(("sym", match.group("sym"), match.start("sym")))
        pos = match.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: Ring):
        self.tokens = _tokenize(src)
        self.ring = ring
        self.i = 0
        self._names = self._name_table(ring)

    @staticmethod
    def _name_table(ring: Ring):
        if isinstance(ring, FreeAlgebra):
            return {name: ring.gen(name) for name in ring.names}
        if isinstance(ring, GrassmannAlgebra):
            return {f"v{i}": ring.gen(i) for i in range(1, ring.rank + 1)}
        return {}

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        token = self.tokens[self.i]
        self.i += 1
        return token

    def expect_sym(self, symbol: str):
        kind, value, pos = self.peek()
        if kind != "sym" or value != symbol:
            raise ParseError(f"expected {symbol!r}", pos)
        return self.advance()

    def parse(self):
        value = self.expr()
        kind, value_text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {value_text!r}", pos)
        return value

    def expr(self):
        negate = False
        kind, value, _ = self.peek()
        if kind == "sym" and value == "-":
            self.advance()
            negate = True
        total = self.term()
        if negate:
            total = -total
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value in "+-":
                self.advance()
                rhs = self.term()
                total = total + rhs if value == "+" else total - rhs
            else:
                return total

    def term(self):
        total = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value == "*":
                self.advance()
                total = total * self.factor()
            else:
                return total

    def factor(self):
        base = self.primary()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value == "^":
                self.advance()
                base = base ** self.exponent()
            else:
                return base

    def exponent(self) -> int:
        kind, value, pos = self.peek()
        if kind == "sym" and value == "-":
            raise ParseError("exponent must be nonnegative", pos)
        if kind != "int":
            raise ParseError("expected an integer exponent", pos)
        self.advance()
        return int(value)

    def primary(self):
        kind, value, pos = self.advance()
        if kind == "int":
            return self.ring.from_int(int(value))
        if kind == "ident":
            if value not in self._names:
                raise ParseError(f"unknown identifier {value!r}", pos)
            return self._names[value]
        if kind == "sym" and value == "(":
            inner = self.expr()
            self.expect_sym(")")
            return inner
        raise ParseError(f"expected a value, found {value!r}" if value else "unexpected end of input", pos)


def parse_expression(src: str, ring: Ring | RingSpec):
    """Parse src into an element of the given ring (or of spec.build_ring())."""
    if isinstance(ring, RingSpec):
        ring = ring.build_ring()
    return _Parser(src, ring).parse()


@dataclass(frozen=True)
class MatrixDocument:
    """A matrix file: ring declaration, dimension, grid of expression strings."""

    ring: RingSpec
    n: int
    entries: tuple[tuple[str, ...], ...]
    t: int | None = None

    def build_ring(self) -> Ring:
        return self.ring.build_ring()

    def to_matrix(self, ring: Ring | None = None) -> Matrix:
        if ring is None:
            ring = self.build_ring()
        rows = []
        for i, row in enumerate(self.entries):
            out = []
            for j, src in enumerate(row):
                try:
                    out.append(parse_expression(src, ring))
                except ParseError as exc:
                    raise DocumentError(
                        f"entry at row {i + 1}, column {j + 1}: {exc}"
                    ) from exc
            rows.append(out)
        return Matrix(ring, rows)

    def to_json_obj(self) -> dict:
        obj = {
            "ring": self.ring.to_json_obj(),
            "n": self.n,
            "entries": [list(row) for row in self.entries],
        }
        if self.t is not None:
            obj["t"] = self.t
        return obj

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def loads_matrix(text: str, validate_super: bool = False) -> tuple[MatrixDocument, Matrix]:
    """Parse a matrix document from its JSON text."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("ring", "n", "entries"):
        if key not in obj:
            raise DocumentError(f"document is missing the {key!r} field")
    spec = RingSpec.from_json_obj(obj["ring"])
    n = obj["n"]
    entries = obj["entries"]
    if not isinstance(n, int):
        raise DocumentError("'n' must be an integer")
    if not isinstance(entries, list) or len(entries) != n:
        raise DocumentError(f"expected {n} entry rows, found {len(entries) if isinstance(entries, list) else 'none'}")
    grid = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"row {i + 1} must hold {n} entries")
        for j, cell in enumerate(row):
            if not isinstance(cell, str):
                raise DocumentError(f"entry at row {i + 1}, column {j + 1} must be a string")
        grid.append(tuple(row))
    t = obj.get("t")
    if t is not None and not isinstance(t, int):
        raise DocumentError("'t' must be an integer block split")
    document = MatrixDocument(ring=spec, n=n, entries=tuple(grid), t=t)
    try:
        matrix = document.to_matrix()
    except ValueError as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(str(exc)) from exc
    if validate_super:
        if t is None:
            raise DocumentError("supermatrix validation requested but no 't' declared")
        profile = SupermatrixProfile(n=n, t=t)
        try:
            good = is_supermatrix(matrix, profile)
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
        if not good:
            raise DocumentError(f"matrix is not an (n={n}, t={t}) supermatrix")
    return document, matrix


def load_matrix(path, validate_super: bool = False) -> tuple[MatrixDocument, Matrix]:
    """Load a matrix document from a file path."""
    text = Path(path).read_text(encoding="utf-8")
    return loads_matrix(text, validate_super=validate_super)


def save_matrix(path, document: MatrixDocument):
    Path(path).write_text(document.dumps() + "\n", encoding="utf-8")
