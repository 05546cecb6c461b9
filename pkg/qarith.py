"""
Quantum arithmetic for the iSchur toolkit
Exact Laurent polynomials in Z[v, v^-1] and the quantum integers / binomials
built from them. q always means v^2.
"""

from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

import sympy
from sympy.polys.domains import QQ
from sympy.polys.fields import field

from errors import InexactDivisionError, NotLaurentError, ParameterRangeError

# Rational function field Q(v); coefficients of formal long-element combinations live here
FRACTION_FIELD, FV = field("v", QQ)
V_SYMBOL = sympy.Symbol("v")


class LaurentPoly:
    """
    A Laurent polynomial over the integers, stored sparsely as exponent -> coefficient.
    Zero coefficients are never stored, so equal polynomials have equal term maps.

    >>> (V + V ** -1) * (V - V ** -1)
    LaurentPoly('v^2 - v^-2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[int, int]] = None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    clean[int(exp)] = int(coeff)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def coerce(cls, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        raise TypeError(f"cannot use {type(other).__name__} as a Laurent polynomial")

    # ----- inspection -----

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[Tuple[int, int]]:
        """(exponent, coefficient) pairs in increasing exponent order"""
        for exp in sorted(self._terms):
            yield exp, self._terms[exp]

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial is undefined")
        return min(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # ----- ring operations -----

    def __add__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        result = dict(self._terms)
        for exp, coeff in other._terms.items():
            result[exp] = result.get(exp, 0) + coeff
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly({exp: coeff * other for exp, coeff in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        result: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise InexactDivisionError(f"{self.fmt()} is not a unit of Z[v, v^-1]")
            (exp, coeff), = self._terms.items()
            return LaurentPoly({exp * k: coeff ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k"""
        if k == 0:
            return self
        return LaurentPoly({exp + k: coeff for exp, coeff in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The bar involution v -> v^-1"""
        return LaurentPoly({-exp: coeff for exp, coeff in self._terms.items()})

    def evaluate(self, x):
        """Debugging hook: substitute a number (or any ring element) for v"""
        return sum(coeff * x ** exp for exp, coeff in self.terms())

    # ----- equality / hashing -----

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ----- formatting -----

    def fmt(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in sorted(self._terms.items(), reverse=True):
            sign = " + " if (coeff > 0 and parts) else " - " if (coeff < 0 and parts) else "" if coeff > 0 else "-"
            term = "" if exp == 0 else "v" if exp == 1 else f"v^{exp}"
            mag = str(abs(coeff)) if (term == "" or abs(coeff) != 1) else ""
            parts.append(sign + mag + term)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly('{self.fmt()}')"

    def __str__(self):
        return self.fmt()

    def to_json(self) -> Dict:
        return {"v": {str(exp): coeff for exp, coeff in self.terms()}}

    @classmethod
    def from_json(cls, data: Dict) -> "LaurentPoly":
        return cls({int(exp): int(coeff) for exp, coeff in data["v"].items()})


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1)
Q = LaurentPoly.monomial(2)

Scalar = Union[LaurentPoly, int]


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def laurent_arith(a: LaurentPoly, b: LaurentPoly, kind: str) -> LaurentPoly:
    """
    Exact ring arithmetic on two Laurent polynomials.

    Args:
        a, b: operands
        kind: one of "add", "sub", "mul"

    Returns:
        LaurentPoly in canonical form
    """
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"Invalid arithmetic kind: {kind}")


def divide_exact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """
    Divide p by d in Z[v, v^-1].

    Raises:
        InexactDivisionError: if d does not divide p
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    # Shift both to valuation 0; the quotient is then an honest polynomial.
    d_val, p_val = d.valuation(), p.valuation()
    divisor = {exp - d_val: coeff for exp, coeff in d.terms()}
    remainder = {exp - p_val: coeff for exp, coeff in p.terms()}
    d_deg = max(divisor)
    d_lead = divisor[d_deg]
    quotient: Dict[int, int] = {}
    while remainder:
        r_deg = max(remainder)
        if r_deg < d_deg:
            break
        coeff, rest = divmod(remainder[r_deg], d_lead)
        if rest:
            break
        shift = r_deg - d_deg
        quotient[shift] = coeff
        for exp, c in divisor.items():
            key = exp + shift
            value = remainder.get(key, 0) - coeff * c
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    if remainder:
        raise InexactDivisionError(f"{d.fmt()} does not divide {p.fmt()}")
    return LaurentPoly(quotient).shift(p_val - d_val)


# ----- quantum integers and binomials -----

def bracket(n: int) -> LaurentPoly:
    """Balanced quantum integer [n] = (v^n - v^-n)/(v - v^-1)"""
    if n < 0:
        return -bracket(-n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


def bbracket(n: int) -> LaurentPoly:
    """Quantum integer [[n]] = (q^n - 1)/(q - 1)"""
    if n < 0:
        return -(Q ** n) * bbracket(-n)
    return LaurentPoly({2 * i: 1 for i in range(n)})


def _product(factors: Iterable[LaurentPoly]) -> LaurentPoly:
    result = ONE
    for f in factors:
        result = result * f
    return result


def gauss_binom(n: int, m: int) -> LaurentPoly:
    """[[n over m]] for n >= 0, as a polynomial in q = v^2"""
    if n < 0:
        raise ParameterRangeError(f"gauss_binom needs n >= 0, got n={n}")
    if m < 0:
        raise ParameterRangeError(f"gauss_binom needs m >= 0, got m={m}")
    if m == 0:
        return ONE
    numerator = _product(Q ** (n - i) - 1 for i in range(m))
    denominator = _product(Q ** i - 1 for i in range(1, m + 1))
    return divide_exact(numerator, denominator)


def balanced_binom(n: int, m: int) -> LaurentPoly:
    """[n over m], defined for every integer n and m >= 0"""
    if m < 0:
        raise ParameterRangeError(f"balanced_binom needs m >= 0, got m={m}")
    if m == 0:
        return ONE
    numerator = _product(V ** (n - i + 1) - V ** (-(n - i + 1)) for i in range(1, m + 1))
    denominator = _product(V ** i - V ** (-i) for i in range(1, m + 1))
    return divide_exact(numerator, denominator)


def qfactorial(m: int) -> LaurentPoly:
    """[m]! = [1][2]...[m]"""
    if m < 0:
        raise ParameterRangeError(f"qfactorial needs m >= 0, got m={m}")
    return _product(bracket(i) for i in range(1, m + 1))


def quantum_scalars(n: int, m: int, kind: str) -> LaurentPoly:
    """
    Dispatch for the quantum scalars used throughout the multiplication formulas.

    Args:
        n: the integer argument ([n], [[n]], the top of a binomial)
        m: the bottom of a binomial, or the factorial argument for qfactorial
        kind: bracket | bbracket | gauss_binom | balanced_binom | qfactorial
    """
    if kind == "bracket":
        return bracket(n)
    if kind == "bbracket":
        return bbracket(n)
    if kind == "gauss_binom":
        return gauss_binom(n, m)
    if kind == "balanced_binom":
        return balanced_binom(n, m)
    if kind == "qfactorial":
        return qfactorial(m)
    raise ValueError(f"Invalid quantum scalar kind: {kind}")


def k_binomial_scalar(k_exponent: int, s: int, t: int) -> LaurentPoly:
    """
    Value of the K-binomial [K; s over t] when K acts as the scalar v^k.

    This is prod_{i=1..t} (v^{k+s-i+1} - v^{-(k+s-i+1)}) / (v^i - v^-i) = [k+s over t].
    """
    return balanced_binom(k_exponent + s, t)


# ----- bridges to sympy -----

def to_fraction(p: Scalar):
    """Embed a Laurent polynomial into the fraction field Q(v)"""
    p = LaurentPoly.coerce(p)
    result = FRACTION_FIELD(0)
    for exp, coeff in p.terms():
        result += coeff * (FV ** exp if exp >= 0 else 1 / FV ** (-exp))
    return result


def from_fraction(f) -> LaurentPoly:
    """
    Convert an element of Q(v) back to Z[v, v^-1].

    Raises:
        NotLaurentError: if the denominator is not a monomial or a coefficient is not integral
    """
    if not f:
        return ZERO
    denom_terms = f.denom.terms()
    if len(denom_terms) != 1:
        raise NotLaurentError(f"{f} has a non-monomial denominator")
    (d_exp,), d_coeff = denom_terms[0]
    result = {}
    for (exp,), coeff in f.numer.terms():
        value = QQ.convert(coeff) / QQ.convert(d_coeff)
        if value.denominator != 1:
            raise NotLaurentError(f"{f} has a non-integral coefficient")
        result[exp - d_exp] = int(value.numerator)
    return LaurentPoly(result)


def to_sympy(p: LaurentPoly):
    """sympy expression in the symbol v, used as an independent oracle in tests"""
    return sympy.Add(*[coeff * V_SYMBOL ** exp for exp, coeff in p.terms()])
