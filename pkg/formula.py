"""
Formula Parser Module

Reads rational functions written the way the classification tables write
them, e.g. "2*(1+i)*x/((x+1)*(x+i))" or "(1-u)/(ub*x-u)", and turns them into
exact numerator/denominator polynomials, UnitalFn values or P1Value constants.

Syntax is a Python expression restricted to + - * / **, integer literals,
integer exponents and the names:

    x    the variable
    z    zeta_N
    i    zeta_N^(N/4), needs 4 | N
    u    zeta_N^(N/3), needs 3 | N;  ub is its conjugate
    w    1 - i;  wb is 1 + i
"""

import ast
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from cyclotomic import CycNum, root_of_unity
from polyring import NotUnitalRoots, Poly, peel_roots
from unital import ConstantFunction, P1Value, UnitalFn


class FormulaError(Exception):
    """Custom exception for formula parsing errors."""
    pass


@dataclass(frozen=True)
class RationalExpr:
    """An unreduced quotient of two polynomials over Q(zeta_N)."""
    numerator: Poly
    denominator: Poly

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalExpr":
        return cls(p, Poly.constant(p.order, 1))

    def __add__(self, other: "RationalExpr") -> "RationalExpr":
        return RationalExpr(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __sub__(self, other: "RationalExpr") -> "RationalExpr":
        return self + (-other)

    def __neg__(self) -> "RationalExpr":
        return RationalExpr(-self.numerator, self.denominator)

    def __mul__(self, other: "RationalExpr") -> "RationalExpr":
        return RationalExpr(self.numerator * other.numerator, self.denominator * other.denominator)

    def __truediv__(self, other: "RationalExpr") -> "RationalExpr":
        if other.numerator.is_zero():
            raise FormulaError("Division by zero")
        return RationalExpr(self.numerator * other.denominator, self.denominator * other.numerator)

    def __pow__(self, exponent: int) -> "RationalExpr":
        if exponent < 0:
            if self.numerator.is_zero():
                raise FormulaError("Division by zero")
            return RationalExpr(self.denominator ** -exponent, self.numerator ** -exponent)
        return RationalExpr(self.numerator ** exponent, self.denominator ** exponent)


def _root(n: int, divisor: int, multiple: int, name: str) -> CycNum:
    if n % divisor != 0:
        raise FormulaError(f"Name {name!r} needs {divisor} | N, got N={n}")
    return root_of_unity(n, multiple * n // divisor)


_CONSTANTS: Dict[str, Callable[[int], CycNum]] = {
    "z": lambda n: root_of_unity(n, 1),
    "i": lambda n: _root(n, 4, 1, "i"),
    "u": lambda n: _root(n, 3, 1, "u"),
    "ub": lambda n: _root(n, 3, 2, "ub"),
    "w": lambda n: 1 - _root(n, 4, 1, "w"),
    "wb": lambda n: 1 + _root(n, 4, 1, "wb"),
}

_BINARY = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


class _Evaluator:
    def __init__(self, n: int):
        self.n = n

    def constant(self, value: CycNum) -> RationalExpr:
        return RationalExpr.from_poly(Poly.constant(self.n, value))

    def visit(self, node: ast.AST) -> RationalExpr:
        if isinstance(node, ast.Expression):
            return self.visit(node.body)
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                return self.visit(node.left) ** self._exponent(node.right)
            op = _BINARY.get(type(node.op))
            if op is None:
                raise FormulaError(f"Unsupported operator {type(node.op).__name__}")
            return op(self.visit(node.left), self.visit(node.right))
        if isinstance(node, ast.UnaryOp):
            if isinstance(node.op, ast.USub):
                return -self.visit(node.operand)
            if isinstance(node.op, ast.UAdd):
                return self.visit(node.operand)
            raise FormulaError(f"Unsupported unary operator {type(node.op).__name__}")
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return self.constant(CycNum.from_rational(self.n, node.value))
        if isinstance(node, ast.Name):
            if node.id == "x":
                return RationalExpr.from_poly(Poly.x(self.n))
            if node.id in _CONSTANTS:
                return self.constant(_CONSTANTS[node.id](self.n))
            raise FormulaError(f"Unknown name {node.id!r}")
        raise FormulaError(f"Unsupported syntax: {ast.dump(node)}")

    def _exponent(self, node: ast.AST) -> int:
        sign = 1
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            sign, node = -1, node.operand
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return sign * node.value
        raise FormulaError("Exponents must be integer literals")


def parse_rational(text: str, n: int) -> Tuple[Poly, Poly]:
    """
    Parse a formula into (numerator, denominator) polynomials of order n.

    Args:
        text: Formula text
        n: Cyclotomic order

    Returns:
        Tuple of unreduced numerator and denominator

    Raises:
        FormulaError: On syntax errors, unknown names or division by zero
    """
    if not text or not text.strip():
        raise FormulaError("Formula is empty")
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as e:
        raise FormulaError(f"Invalid formula syntax {text!r}: {e.msg}")
    expr = _Evaluator(n).visit(tree)
    if expr.denominator.is_zero():
        raise FormulaError(f"Formula {text!r} has a zero denominator")
    return expr.numerator, expr.denominator


def parse_function(text: str, n: int) -> UnitalFn:
    """
    Parse a formula into canonical UnitalFn form.

    Raises:
        FormulaError: If a factor lies outside Gamma_N^0 or the formula is constant
    """
    numerator, denominator = parse_rational(text, n)
    if numerator.is_zero():
        raise FormulaError(f"Formula {text!r} is identically zero")
    try:
        top, top_constant = peel_roots(numerator)
        bottom, bottom_constant = peel_roots(denominator)
    except NotUnitalRoots as e:
        raise FormulaError(f"Formula {text!r} does not factor over Gamma_{n}^0: {e}")
    exps = top.as_dict()
    for k, e in bottom.exps:
        exps[k] = exps.get(k, 0) - e
    try:
        return UnitalFn.from_parts(n, top_constant / bottom_constant, exps)
    except ConstantFunction:
        raise FormulaError(f"Formula {text!r} is constant")


def parse_value(text: str, n: int) -> P1Value:
    """Parse a constant formula, or 'inf', into a P1Value of order n."""
    if text.strip() in ("inf", "infinity"):
        return P1Value.infinity(n)
    numerator, denominator = parse_rational(text, n)
    if numerator.degree > 0 or denominator.degree > 0:
        raise FormulaError(f"Value formula {text!r} depends on x")
    if numerator.is_zero():
        return P1Value.finite(CycNum.zero(n))
    return P1Value.finite(numerator.coeffs[0] / denominator.coeffs[0])
