"""Text parser for polynomial input.

Accepts expressions like ``w - i*w^2 - 2i z^2`` or ``1 - z2 + 1/2 z1^2`` with
implicit multiplication, rational or decimal literals, the imaginary unit
``i``, parentheses, and integer powers.  Variables are ``z`` (alias ``z1``),
``z2``, ``z3``, ... and ``w``.  When ``w`` appears the polynomial is read in
Siegel coordinates (z_1, ..., z_{d-1}, w); otherwise it is read as a ball
polynomial in (z_1, ..., z_d).

The exact backend turns every literal, including decimals, into a Gaussian
rational; with backend='float' coefficients become complex.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError
from .multipoly import MultiPoly, _default_names
from .scalars import QI

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?|\.\d+)|(?P<name>[iwzsy]\d*)|(?P<op>[-+*/^()])|(?P<bad>\S))"
)


def _tokenize(text: str):
    tokens = []
    text = text.rstrip()
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.group("bad"):
            raise InputError(f"unexpected character at position {pos}: {text[pos:pos + 8]!r}")
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("name"):
            name = m.group("name")
            if name == "i":
                tokens.append(("imag", name))
            elif name in ("w", "s", "y") or name.startswith("z"):
                tokens.append(("var", name))
            else:
                raise InputError(f"unknown symbol {name!r}")
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, exact: bool):
        self.tokens = tokens
        self.pos = 0
        self.exact = exact
        self.vars_seen: set[str] = set()

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    # expression := term (('+'|'-') term)*
    def parse_expr(self):
        node = self.parse_term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.parse_term()
                node = ("add", node, rhs) if val == "+" else ("sub", node, rhs)
            else:
                return node

    # term := factor (('*'|'/')? factor)*
    def parse_term(self):
        node = self.parse_factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.parse_factor()
                node = ("mul", node, rhs) if val == "*" else ("div", node, rhs)
            elif kind in ("num", "imag", "var") or (kind == "op" and val == "("):
                rhs = self.parse_factor()
                node = ("mul", node, rhs)
            else:
                return node

    # factor := ('+'|'-')* atom ('^' int)?
    def parse_factor(self):
        sign = 1
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                if val == "-":
                    sign = -sign
            else:
                break
        node = self.parse_atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "num" or "." in val:
                raise InputError("exponent must be a nonnegative integer")
            node = ("pow", node, int(val))
        if sign < 0:
            node = ("neg", node)
        return node

    def parse_atom(self):
        kind, val = self.take()
        if kind == "num":
            return ("num", val)
        if kind == "imag":
            return ("imag",)
        if kind == "var":
            name = "z1" if val == "z" else val
            self.vars_seen.add(name)
            return ("var", name)
        if kind == "op" and val == "(":
            node = self.parse_expr()
            kind, val = self.take()
            if kind != "op" or val != ")":
                raise InputError("unbalanced parentheses")
            return node
        raise InputError(f"unexpected token {val!r}")


def _literal(text: str, exact: bool):
    if exact:
        return QI(Fraction(text))
    return complex(float(text))


def _build(node, parser: _Parser, env):
    op = node[0]
    if op == "num":
        return MultiPoly.constant(env["dim"], _literal(node[1], parser.exact), env["names"])
    if op == "imag":
        unit = QI(0, 1) if parser.exact else 1j
        return MultiPoly.constant(env["dim"], unit, env["names"])
    if op == "var":
        return MultiPoly.variable(env["dim"], env["index"][node[1]], env["names"])
    if op == "neg":
        return -_build(node[1], parser, env)
    if op == "add":
        return _build(node[1], parser, env) + _build(node[2], parser, env)
    if op == "sub":
        return _build(node[1], parser, env) - _build(node[2], parser, env)
    if op == "mul":
        return _build(node[1], parser, env) * _build(node[2], parser, env)
    if op == "div":
        denom = _build(node[2], parser, env)
        if denom.total_degree() > 0:
            raise InputError("division is only supported by scalar literals")
        const = denom.coefficient((0,) * env["dim"])
        if not const:
            raise InputError("division by zero")
        return _build(node[1], parser, env) / const
    if op == "pow":
        return _build(node[1], parser, env) ** node[2]
    raise InputError(f"malformed expression node {op}")


def parse_poly(text: str, backend: str = "exact", dim: int | None = None,
               domain: str | None = None) -> MultiPoly:
    """Parse polynomial text; see the module docstring for the grammar.

    The domain is inferred from the variables (any ``w`` means Siegel
    coordinates, otherwise ball) unless ``domain`` forces it; ``dim`` can
    likewise pad the variable count beyond what the text mentions.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise InputError("empty polynomial")
    parser = _Parser(tokens, backend == "exact")
    tree = parser.parse_expr()
    if parser.pos != len(tokens):
        raise InputError(f"trailing input near token {parser.pos}")
    if parser.vars_seen & {"s", "y"}:
        raise InputError("s and y belong to the (s, y) grammar; "
                         "use parse_sy_poly or parse_series")
    has_w = "w" in parser.vars_seen
    if domain == "siegel":
        has_w = True
    elif domain == "ball" and has_w:
        raise InputError("ball polynomials cannot mention w")
    zmax = 0
    for name in parser.vars_seen:
        if name.startswith("z"):
            zmax = max(zmax, int(name[1:]))
    if dim is None:
        dim = (zmax + 1) if has_w else max(zmax, 1)
        if has_w:
            dim = max(dim, 2)
    names = _default_names(dim, "siegel" if has_w else "ball")
    index = {f"z{j + 1}": j for j in range(dim if not has_w else dim - 1)}
    if has_w:
        index["w"] = dim - 1
    for name in parser.vars_seen:
        if name not in index:
            raise InputError(f"variable {name} does not fit dimension {dim}")
    env = {"dim": dim, "names": names, "index": index}
    return _build(tree, parser, env)


def parse_sy_poly(text: str, backend: str = "exact") -> MultiPoly:
    """Parse a polynomial in the auxiliary variables (s, y)."""
    tokens = _tokenize(text)
    if not tokens:
        raise InputError("empty polynomial")
    parser = _Parser(tokens, backend == "exact")
    tree = parser.parse_expr()
    if parser.pos != len(tokens):
        raise InputError(f"trailing input near token {parser.pos}")
    stray = parser.vars_seen - {"s", "y"}
    if stray:
        raise InputError(f"only s and y are allowed here, found {sorted(stray)}")
    env = {"dim": 2, "names": ("s", "y"), "index": {"s": 0, "y": 1}}
    return _build(tree, parser, env)


def parse_series(text: str, backend: str = "exact", order: int | None = None):
    """Parse a truncated series in s, e.g. ``i s^2 + s^4 + s^5``."""
    from .series import TruncSeries

    p = parse_sy_poly(text, backend)
    if p.degree_in(1) > 0:
        raise InputError("a series may only use the variable s")
    top = p.degree_in(0)
    n = top if order is None else max(order, top)
    zero = QI(0) if backend == "exact" else 0j
    coeffs = [zero] * (n + 1)
    for (a, _), coef in p.terms.items():
        coeffs[a] = coef
    return TruncSeries(coeffs, n, var="s")
