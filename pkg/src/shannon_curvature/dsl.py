"""A small expression language for Shannon-ring elements.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | '(' expr ')' | generator
    generator := 'K' '(' int ')' | 'C' '(' int ')' | 'P' '(' int ')'
               | 'Star' '(' int ')' | 'random' '(' int ',' int ',' int ')'
               | 'load' '(' string ')'

``*`` is the strong product, ``+`` formal addition and ``-`` negation /
subtraction.  Binary operators are left-associative.  Example::

    >>> to_source(parse("K(4)*Star(4) - -C(5)"))
    'K(4) * Star(4) - -C(5)'
"""

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ShannonError
from .graph import complete_graph, cycle_graph, path_graph, random_graph, star_graph
from .io import load_graph
from .ring import RingElement


class DslError(ShannonError, ValueError):
    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = " (expected %s)" % ", ".join(sorted(self.expected)) if self.expected else ""
        super().__init__("%s at offset %d%s" % (message, offset, detail))


class DslSyntaxError(DslError):
    pass


class DslRangeError(DslError):
    pass


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    name: str
    args: tuple
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: object
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    offset: int = field(default=0, compare=False)


# argument kinds per generator
SIGNATURES = {
    "K": ("integer",),
    "C": ("integer",),
    "P": ("integer",),
    "Star": ("integer",),
    "random": ("integer", "integer", "integer"),
    "load": ("string",),
}


# -- tokens ------------------------------------------------------------------

@dataclass
class Token:
    kind: str  # 'integer', 'name', 'string', 'op', 'end'
    value: object
    offset: int


def tokenize(src):
    out = []
    i, n = 0, len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            out.append(Token("integer", int(src[i:j]), i))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(Token("name", src[i:j], i))
            i = j
        elif c == '"':
            j = i + 1
            while j < n and src[j] != '"':
                j += 2 if src[j] == "\\" else 1
            if j >= n:
                raise DslSyntaxError("unterminated string", i)
            out.append(Token("string", json.loads(src[i:j + 1]), i))
            i = j + 1
        elif c in "+-*(),":
            out.append(Token("op", c, i))
            i += 1
        else:
            raise DslSyntaxError("unexpected character %r" % c, i)
    out.append(Token("end", None, n))
    return out


class _Parser:
    def __init__(self, src):
        self.tokens = tokenize(src)
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def fail(self, expected):
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.value)
        raise DslSyntaxError("unexpected %s" % what, t.offset, expected)

    def accept(self, value):
        if self.tok.kind == "op" and self.tok.value == value:
            self.pos += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            self.fail({repr(value)})

    def expr(self):
        left = self.term()
        while self.tok.kind == "op" and self.tok.value in "+-":
            t = self.tok
            self.pos += 1
            left = BinOp(t.value, left, self.term(), t.offset)
        return left

    def term(self):
        left = self.factor()
        while self.tok.kind == "op" and self.tok.value == "*":
            t = self.tok
            self.pos += 1
            left = BinOp("*", left, self.factor(), t.offset)
        return left

    def factor(self):
        t = self.tok
        if self.accept("-"):
            return Neg(self.factor(), t.offset)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        if t.kind == "name" and t.value in SIGNATURES:
            self.pos += 1
            return self.generator(t)
        self.fail({"'-'", "'('", "generator"})

    def generator(self, name_tok):
        self.expect("(")
        args = []
        for k, kind in enumerate(SIGNATURES[name_tok.value]):
            if k:
                self.expect(",")
            if self.tok.kind != kind:
                self.fail({kind})
            args.append(self.tok.value)
            self.pos += 1
        self.expect(")")
        node = Generator(name_tok.value, tuple(args), name_tok.offset)
        check_ranges(node)
        return node


def check_ranges(node):
    name, args = node.name, node.args
    if name in ("K", "P") and args[0] < 1:
        raise DslRangeError("%s(n) needs n >= 1" % name, node.offset)
    if name == "C" and args[0] < 3:
        raise DslRangeError("C(n) needs n >= 3", node.offset)
    if name == "Star" and args[0] < 1:
        raise DslRangeError("Star(k) needs k >= 1", node.offset)
    if name == "random":
        n, m, _ = args
        if n < 1 or m > n * (n - 1) // 2:
            raise DslRangeError("random(n, m, seed) needs n >= 1 and m <= n(n-1)/2", node.offset)


def parse(src):
    p = _Parser(src)
    tree = p.expr()
    if p.tok.kind != "end":
        p.fail({"'+'", "'-'", "'*'", "end of input"})
    return tree


def to_source(node):
    """Render an AST back to text that parses to an equal AST."""
    if isinstance(node, Generator):
        if node.name == "load":
            return "load(%s)" % json.dumps(node.args[0])
        return "%s(%s)" % (node.name, ", ".join(str(a) for a in node.args))
    if isinstance(node, Neg):
        inner = to_source(node.operand)
        return "-(%s)" % inner if isinstance(node.operand, BinOp) else "-" + inner
    left, right = to_source(node.left), to_source(node.right)
    if node.op == "*":
        if isinstance(node.left, BinOp) and node.left.op in "+-":
            left = "(%s)" % left
        if isinstance(node.right, BinOp):
            right = "(%s)" % right
    elif isinstance(node.right, BinOp) and node.right.op in "+-":
        right = "(%s)" % right
    return "%s %s %s" % (left, node.op, right)


def materialize(node, base_dir=None):
    name, args = node.name, node.args
    if name == "K":
        return complete_graph(args[0])
    if name == "C":
        return cycle_graph(args[0])
    if name == "P":
        return path_graph(args[0])
    if name == "Star":
        return star_graph(args[0])
    if name == "random":
        return random_graph(*args)
    path = Path(args[0])
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    return load_graph(path)


def evaluate(node, base_dir=None):
    """Turn an AST into a :class:`RingElement`."""
    if isinstance(node, str):
        node = parse(node)
    if isinstance(node, Generator):
        return RingElement.of(materialize(node, base_dir))
    if isinstance(node, Neg):
        return -evaluate(node.operand, base_dir)
    a, b = evaluate(node.left, base_dir), evaluate(node.right, base_dir)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    return a * b
