"""
Stabilized long elements A(j, r) for the iSchur toolkit
The long multiplication formulas, divided powers, commutation identities,
k-binomials and the checks that the r-free formulas hold in every S^i(n, r).
"""

from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from errors import DecompositionError, InvalidMatrixError, ParameterRangeError
from qarith import (
    FRACTION_FIELD,
    ONE,
    V,
    LaurentPoly,
    bbracket,
    bracket,
    from_fraction,
    qfactorial,
    to_fraction,
)
from schur import (
    Comparison,
    SchurElement,
    coeff_functions,
    diag_idempotent,
    product,
    row_move,
)
from weyl import (
    Composition,
    ThetaMatrix,
    add_vectors,
    compositions,
    theta_e,
    theta_unit,
    unit_vector,
)

Vector = Tuple[int, ...]
GENERATOR_KINDS = ("O", "e", "f", "t_raw", "g", "t")


def _dot(u: Sequence[int], w: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, w))


def normalize_j(j: Sequence[int]) -> Vector:
    """(j*, 0^n) with j*_i = j_i + j_{2n+1-i}"""
    size = len(j)
    n = size // 2
    if size == 0 or size % 2:
        raise ParameterRangeError(f"j must have even positive length, got {size}")
    return tuple(j[i] + j[size - 1 - i] for i in range(n)) + (0,) * n


@lru_cache(maxsize=None)
def _vfrac(exp: int):
    return to_fraction(V ** exp)


def _frac(c):
    if isinstance(c, (LaurentPoly, int)):
        return to_fraction(c)
    return FRACTION_FIELD(c)


def _check_zero_diagonal(A: ThetaMatrix):
    if any(A.diagonal()):
        raise InvalidMatrixError(f"Long elements need a zero diagonal, got {A.rows()}")


# ===== Long elements =====

@dataclass(frozen=True)
class LongElement:
    A: ThetaMatrix
    j: Vector

    def __post_init__(self):
        _check_zero_diagonal(self.A)
        if len(self.j) != self.A.size:
            raise ParameterRangeError(f"j={self.j} should have length {self.A.size}")

    @property
    def n(self) -> int:
        return self.A.n

    def normalized(self) -> "LongElement":
        return LongElement(self.A, normalize_j(self.j))

    def evaluate(self, r: int) -> SchurElement:
        return long_element(self.A, self.j, r)


def long_element(A: ThetaMatrix, j: Sequence[int], r: int) -> SchurElement:
    """
    A(j, r) = sum over lambda in Lambda(n, r - |A|/2) of v^{hat(lambda).j} [A + hat(lambda)].

    Returns:
        zero when |A| > 2r
    """
    _check_zero_diagonal(A)
    n = A.n
    half = A.total() // 2
    if half > r:
        return SchurElement.zero(n, r)
    terms = {}
    for lam in compositions(n, r - half):
        hat = lam.hat()
        terms[A.plus_diag(hat)] = V ** _dot(hat, j)
    return SchurElement(n, r, terms)


def zero_vector(n: int) -> Vector:
    return (0,) * (2 * n)


def o_element(j: Sequence[int], r: int) -> SchurElement:
    """O(j, r)"""
    return long_element(ThetaMatrix.zero(len(j) // 2), j, r)


# ===== Formal combinations =====

class FormalCombination:
    """
    Finite Q(v)-combination of symbols A(j), keyed by (A, (j*, 0^n)).

    Evaluation at r gives the element of S^i(n, r); the Q(v) coefficients
    must cancel into Z[v, v^-1] there, otherwise NotLaurentError is raised.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Optional[Dict[Tuple[ThetaMatrix, Vector], object]] = None):
        self.n = n
        merged: Dict[Tuple[ThetaMatrix, Vector], object] = {}
        for (A, j), c in (terms or {}).items():
            _check_zero_diagonal(A)
            key = (A, normalize_j(j))
            merged[key] = merged.get(key, FRACTION_FIELD(0)) + _frac(c)
        self._terms = {key: c for key, c in merged.items() if c}

    @classmethod
    def symbol(cls, A: ThetaMatrix, j: Sequence[int], coeff=1) -> "FormalCombination":
        return cls(A.n, {(A, tuple(j)): coeff})

    @classmethod
    def unit(cls, n: int) -> "FormalCombination":
        """O(0), the identity of every S^i(n, r)"""
        return cls.symbol(ThetaMatrix.zero(n), zero_vector(n))

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, A: ThetaMatrix, j: Sequence[int]):
        return self._terms.get((A, normalize_j(j)), FRACTION_FIELD(0))

    def terms(self) -> Iterator[Tuple[ThetaMatrix, Vector, object]]:
        for A, j in sorted(self._terms, key=lambda key: (key[0].row_major(), key[1])):
            yield A, j, self._terms[(A, j)]

    def __add__(self, other: "FormalCombination") -> "FormalCombination":
        merged = dict(self._terms)
        for key, c in other._terms.items():
            merged[key] = merged.get(key, FRACTION_FIELD(0)) + c
        return FormalCombination(self.n, merged)

    def __neg__(self) -> "FormalCombination":
        return FormalCombination(self.n, {key: -c for key, c in self._terms.items()})

    def __sub__(self, other: "FormalCombination") -> "FormalCombination":
        return self + (-other)

    def scale(self, c) -> "FormalCombination":
        c = _frac(c)
        return FormalCombination(self.n, {key: c * x for key, x in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FormalCombination):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms)))

    def evaluate(self, r: int) -> SchurElement:
        """Image in S^i(n, r), accumulated per basis matrix in Q(v)"""
        acc: Dict[ThetaMatrix, object] = {}
        for A, j, c in self.terms():
            half = A.total() // 2
            if half > r:
                continue
            for lam in compositions(self.n, r - half):
                hat = lam.hat()
                M = A.plus_diag(hat)
                acc[M] = acc.get(M, FRACTION_FIELD(0)) + c * _vfrac(_dot(hat, j))
        return SchurElement(self.n, r, {M: from_fraction(c) for M, c in acc.items()})

    def __repr__(self):
        body = " + ".join(f"({c}){A.rows()}({list(j[:self.n])})" for A, j, c in self.terms())
        return f"FormalCombination[{body or '0'}]"

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "terms": [
                {"matrix": A.rows(), "j": list(j), "coeff": str(c.as_expr())}
                for A, j, c in self.terms()
            ],
        }


def _expand(X: FormalCombination,
            rule: Callable[[ThetaMatrix, Vector], List[Tuple[object, ThetaMatrix, Vector]]]
            ) -> FormalCombination:
    result: Dict[Tuple[ThetaMatrix, Vector], object] = {}
    for A, j, c in X.terms():
        for k, B, jb in rule(A, j):
            key = (B, normalize_j(jb))
            result[key] = result.get(key, FRACTION_FIELD(0)) + c * _frac(k)
    return FormalCombination(X.n, result)


# ----- the four multiplication rules -----

def _inverse_gap():
    """1 / (v - v^-1)"""
    return 1 / to_fraction(V - V ** -1)


def _rule_o_left(j0: Vector):
    def rule(A: ThetaMatrix, j: Vector):
        return [(V ** _dot(A.ro(), j0), A, add_vectors(j, j0))]
    return rule


def _rule_o_right(j0: Vector):
    def rule(A: ThetaMatrix, j: Vector):
        return [(V ** _dot(A.co(), j0), A, add_vectors(j, j0))]
    return rule


def _rule_e(h: int):
    def rule(A: ThetaMatrix, j: Vector):
        n, size = A.n, A.size
        data = coeff_functions(A, h)
        jstar = normalize_j(j)
        alpha = add_vectors(unit_vector(size, h), unit_vector(size, h + 1, -1))
        alpha_minus = add_vectors(unit_vector(size, h, -1), unit_vector(size, h + 1, -1))
        out = []
        for p in range(1, size + 1):
            if p == h + 1:
                coeff = V ** (data.b(p) + jstar[h]) * bbracket(A(h, p) + 1).bar()
                out.append((coeff, A + theta_unit(n, h, h + 1), j))
            elif A(h + 1, p) < 1:
                continue
            elif p == h:
                B = A - theta_unit(n, h + 1, h)
                k = to_fraction(V ** (data.b(h) - jstar[h - 1])) * _inverse_gap()
                out.append((k, B, add_vectors(j, alpha)))
                out.append((-k, B, add_vectors(j, alpha_minus)))
            else:
                coeff = V ** data.b(p) * bbracket(A(h, p) + 1).bar()
                out.append((coeff, row_move(A, h, h + 1, p), add_vectors(j, alpha) if p < h else j))
        return out
    return rule


def _rule_f(h: int):
    def rule(A: ThetaMatrix, j: Vector):
        n, size = A.n, A.size
        data = coeff_functions(A, h)
        jstar = normalize_j(j)
        minus_alpha = add_vectors(unit_vector(size, h, -1), unit_vector(size, h + 1))
        alpha_minus = add_vectors(unit_vector(size, h, -1), unit_vector(size, h + 1, -1))
        out = []
        for p in range(1, size + 1):
            if p == h:
                coeff = V ** (data.bp(p) + jstar[h - 1]) * bbracket(A(h + 1, p) + 1).bar()
                out.append((coeff, A + theta_unit(n, h + 1, h), j))
            elif A(h, p) < 1:
                continue
            elif p == h + 1:
                B = A - theta_unit(n, h, h + 1)
                k = to_fraction(V ** (data.bp(p) - jstar[h])) * _inverse_gap()
                out.append((k, B, add_vectors(j, minus_alpha)))
                out.append((-k, B, add_vectors(j, alpha_minus)))
            else:
                coeff = V ** data.bp(p) * bbracket(A(h + 1, p) + 1).bar()
                moved = row_move(A, h + 1, h, p)
                out.append((coeff, moved, j if p < h else add_vectors(j, minus_alpha)))
        return out
    return rule


def _rule_t_raw(A: ThetaMatrix, j: Vector):
    n, size = A.n, A.size
    data = coeff_functions(A, n)
    jstar = normalize_j(j)
    out = []
    if not data.c_A.is_zero():
        out.append((data.c_A, A, add_vectors(j, unit_vector(size, n, -1))))
    for i in range(1, size + 1):
        if i == n:
            coeff = V ** (data.bp(n) + jstar[n - 1]) * bbracket(A(n + 1, n) + 1).bar()
            out.append((coeff, A + theta_unit(n, n + 1, n), j))
        elif A(n, i) < 1:
            continue
        elif i == n + 1:
            B = A - theta_unit(n, n, n + 1)
            k = to_fraction(V ** (data.bp(n + 1) - jstar[n - 1])) * _inverse_gap()
            out.append((k, B, j))
            out.append((-k, B, add_vectors(j, theta_e(n, n, -1))))
        else:
            exponent = data.bp(i) - (1 if i >= n + 1 else 0)
            coeff = V ** exponent * bbracket(A(n + 1, i) + 1).bar()
            out.append((coeff, row_move(A, n + 1, n, i), j))
    return out


def _check_h(n: int, h: int):
    if not 1 <= h < n:
        raise ParameterRangeError(f"h={h} out of range [1, {n})")


def formal_o(j0: Sequence[int], X: FormalCombination, side: str = "left") -> FormalCombination:
    """O(j0) X (side "left") or X O(j0) (side "right")"""
    j0 = tuple(j0)
    if len(j0) != 2 * X.n:
        raise ParameterRangeError(f"j0={j0} should have length {2 * X.n}")
    if side == "left":
        return _expand(X, _rule_o_left(j0))
    if side == "right":
        return _expand(X, _rule_o_right(j0))
    raise ParameterRangeError(f"Unknown side: {side}")


def formal_e(h: int, X: FormalCombination) -> FormalCombination:
    """E^theta_{h,h+1}(0) X"""
    _check_h(X.n, h)
    return _expand(X, _rule_e(h))


def formal_f(h: int, X: FormalCombination) -> FormalCombination:
    """E^theta_{h+1,h}(0) X"""
    _check_h(X.n, h)
    return _expand(X, _rule_f(h))


def formal_t_raw(X: FormalCombination) -> FormalCombination:
    """E^theta_{n+1,n}(0) X"""
    return _expand(X, _rule_t_raw)


def formal_g(X: FormalCombination) -> FormalCombination:
    """g = t - d_n^-1 acts as E^theta_{n,n+1}(0), the same matrix as E^theta_{n+1,n}"""
    return formal_t_raw(X)


def formal_t(X: FormalCombination) -> FormalCombination:
    """t acts as E^theta_{n,n+1}(0) + O(-e_n)"""
    n = X.n
    return formal_t_raw(X) + formal_o(unit_vector(2 * n, n, -1), X)


def formal_apply(kind: str, X: FormalCombination, h: int = 0,
                 j0: Optional[Sequence[int]] = None) -> FormalCombination:
    """Dispatch on the generator kind: O, e, f, t_raw, g or t"""
    if kind == "O":
        return formal_o(j0, X)
    if kind == "e":
        return formal_e(h, X)
    if kind == "f":
        return formal_f(h, X)
    if kind in ("t_raw", "g"):
        return formal_t_raw(X)
    if kind == "t":
        return formal_t(X)
    raise ParameterRangeError(f"Unknown generator kind: {kind}")


def generator_value(kind: str, n: int, r: int, h: int = 0,
                    j0: Optional[Sequence[int]] = None) -> SchurElement:
    """The generator kind as an element of S^i(n, r)"""
    zero = zero_vector(n)
    if kind == "O":
        return o_element(j0, r)
    if kind == "e":
        _check_h(n, h)
        return long_element(theta_unit(n, h, h + 1), zero, r)
    if kind == "f":
        _check_h(n, h)
        return long_element(theta_unit(n, h + 1, h), zero, r)
    if kind in ("t_raw", "g"):
        return long_element(theta_unit(n, n + 1, n), zero, r)
    if kind == "t":
        return (long_element(theta_unit(n, n + 1, n), zero, r)
                + o_element(unit_vector(2 * n, n, -1), r))
    raise ParameterRangeError(f"Unknown generator kind: {kind}")


def long_mul(kind: str, operand: LongElement, r: int, h: int = 0,
             j0: Optional[Sequence[int]] = None) -> SchurElement:
    """Generator times A(j, r), multiplied out in S^i(n, r)"""
    return product(generator_value(kind, operand.n, r, h, j0), operand.evaluate(r))


def long_mul_formal(kind: str, operand: LongElement, h: int = 0,
                    j0: Optional[Sequence[int]] = None) -> FormalCombination:
    """Generator times A(j) by the long multiplication formulas"""
    X = FormalCombination.symbol(operand.A, operand.j)
    return formal_apply(kind, X, h, j0)


# ===== Divided powers =====

def divided_power(kind: str, h: int, m: int, n: int, r: int) -> Comparison:
    """
    E(0, r)^m / [m]! against (mE)(0, r) for E = E^theta_{h,h+1} (kind e) or E^theta_{h+1,h} (kind f).

    Raises:
        InexactDivisionError: if [m]! does not divide the power
    """
    _check_h(n, h)
    if m < 1 or m > r:
        raise ParameterRangeError(f"m={m} must lie in [1, r={r}]")
    if kind == "e":
        E = theta_unit(n, h, h + 1)
    elif kind == "f":
        E = theta_unit(n, h + 1, h)
    else:
        raise ParameterRangeError(f"Divided powers are taken of e or f, got {kind}")
    zero = zero_vector(n)
    base = long_element(E, zero, r)
    power = base
    for _ in range(m - 1):
        power = product(power, base)
    lhs = power.divide(qfactorial(m))
    rhs = long_element(theta_unit(n, h, h + 1, m) if kind == "e" else theta_unit(n, h + 1, h, m), zero, r)
    return Comparison(f"{kind}{h}^({m}) r={r}", lhs, rhs)


def middle_unit(n: int, a: int = 1) -> ThetaMatrix:
    """a E^theta_{n,n+1}"""
    return theta_unit(n, n, n + 1, a)


@lru_cache(maxsize=None)
def t_power_expand(m: int, n: int) -> FormalCombination:
    """
    E^theta_{n,n+1}(0)^m / [m]! unwound into long elements.

    The coefficient of (m E^theta_{n,n+1})(0) is 1; the other terms carry the
    lower multiples s E^theta_{n,n+1} with their j-shifts.
    """
    if m < 0:
        raise ParameterRangeError(f"m={m} must be nonnegative")
    X = FormalCombination.unit(n)
    for _ in range(m):
        X = formal_t_raw(X)
    return X.scale(1 / to_fraction(qfactorial(m)))


def eae_rhs(a: int, n: int) -> FormalCombination:
    """Right-hand side of E(0) (aE)(0) for E = E^theta_{n,n+1}, a >= 1"""
    if a < 1:
        raise ParameterRangeError(f"a={a} must be positive")
    zero = zero_vector(n)
    size = 2 * n
    vpow = V ** a
    gap = vpow - V ** -a
    result = FormalCombination.symbol(middle_unit(n, a + 1), zero, to_fraction(bracket(a + 1)))
    result = result + FormalCombination.symbol(middle_unit(n, a), unit_vector(size, n, -1), gap)
    lower = to_fraction(vpow) * _inverse_gap()
    result = result + FormalCombination.symbol(middle_unit(n, a - 1), zero, lower)
    result = result - FormalCombination.symbol(middle_unit(n, a - 1), theta_e(n, n, -1), lower)
    return result


def dp2_check(m: int, n: int, r: int) -> List[Comparison]:
    """
    The unwound power against the power computed in S^i(n, r), and its leading coefficient.

    The unwound coefficients lie in Q(v) and E(0)^m / [m]! need not be integral,
    so the comparison is made after multiplying back by [m]!.
    """
    expansion = t_power_expand(m, n)
    base = long_element(middle_unit(n), zero_vector(n), r)
    power = o_element(zero_vector(n), r)
    for _ in range(m):
        power = product(base, power)
    scaled = expansion.scale(qfactorial(m)).evaluate(r)
    checks = [Comparison(f"[{m}]! t^({m}) r={r}", scaled, power)]
    lead = from_fraction(expansion.coefficient(middle_unit(n, m), zero_vector(n)))
    checks.append(Comparison(f"t^({m}) leading coefficient", lead, ONE))
    return checks


def divided_t_mul(m: int, X: FormalCombination) -> FormalCombination:
    """
    (m E^theta_{n+1,n})(0) X as a formal combination, by inverting the unwound powers.

    Raises:
        DecompositionError: if an unwound power has a term that is not a multiple of E^theta_{n,n+1}
    """
    n = X.n
    memo: Dict[int, FormalCombination] = {0: X}

    def level(s: int) -> FormalCombination:
        if s in memo:
            return memo[s]
        value = X
        for _ in range(s):
            value = formal_t_raw(value)
        value = value.scale(1 / to_fraction(qfactorial(s)))
        for B, j, c in t_power_expand(s, n).terms():
            t = B(n, n + 1)
            if B != middle_unit(n, t):
                raise DecompositionError(f"Unexpected matrix {B.rows()} in the unwound power")
            if t == s and not any(j):
                continue
            shifted = formal_o(j, level(t)).scale(c * _vfrac(-t * j[n - 1]))
            value = value - shifted
        memo[s] = value
        return value

    return level(m)


def dp3_checks(m: int, A: ThetaMatrix, j: Sequence[int], r: int) -> List[Comparison]:
    """(m E^theta_{n+1,n})(0) A(j) from one symbolic expansion, evaluated at r and r + 1"""
    n = A.n
    formal = divided_t_mul(m, FormalCombination.symbol(A, j))
    checks = []
    for rr in (r, r + 1):
        numeric = product(long_element(middle_unit(n, m), zero_vector(n), rr), long_element(A, j, rr))
        checks.append(Comparison(f"({m}E)(0) * {A.rows()}({list(j)}) r={rr}", formal.evaluate(rr), numeric))
    return checks


# ===== Commutation and k-binomials =====

def commutation_checks(n: int, r: int, j: Optional[Sequence[int]] = None) -> List[Comparison]:
    """O(j), E^theta_{h,h+1}(0) and E^theta_{h+1,h}(0) commute with E^theta_{n,n+1}(0) for h < n-1"""
    zero = zero_vector(n)
    middle = long_element(middle_unit(n), zero, r)
    shifts = [tuple(j)] if j is not None else [
        unit_vector(2 * n, i, sign) for i in range(1, n + 1) for sign in (1, -1)
    ]
    checks = []
    for shift in shifts:
        O = o_element(shift, r)
        checks.append(Comparison(f"O{list(shift)} r={r}", product(O, middle), product(middle, O)))
    for h in range(1, n - 1):
        for label, E in (("e", theta_unit(n, h, h + 1)), ("f", theta_unit(n, h + 1, h))):
            X = long_element(E, zero, r)
            checks.append(Comparison(f"{label}{h} r={r}", product(X, middle), product(middle, X)))
    return checks


def k_binomial(lam: Composition, r: int) -> SchurElement:
    """
    prod_i [k_i; 0 over lambda_i] evaluated in S^i(n, r), with k_i = O(e_i, r).

    Raises:
        InexactDivisionError: if the denominators do not divide the product
    """
    n = lam.n
    if lam.weight != r:
        raise ParameterRangeError(f"lambda={lam.parts} should have weight {r}")
    numerator = o_element(zero_vector(n), r)
    denominator = ONE
    for i in range(1, n + 1):
        k = o_element(unit_vector(2 * n, i), r)
        k_inv = o_element(unit_vector(2 * n, i, -1), r)
        for t in range(1, lam.parts[i - 1] + 1):
            factor = k.scale(V ** (1 - t)) - k_inv.scale(V ** (t - 1))
            numerator = product(numerator, factor)
            denominator = denominator * (V ** t - V ** -t)
    return numerator.divide(denominator)


def k_binomial_checks(n: int, r: int) -> List[Comparison]:
    return [Comparison(f"lambda={lam.parts}", k_binomial(lam, r), diag_idempotent(lam))
            for lam in compositions(n, r)]


# ===== r-stability =====

@dataclass
class StabilityCase:
    label: str
    formal: FormalCombination
    numeric: Callable[[int], SchurElement]
    min_r: int = 0


def zero_diagonal_matrices(n: int, max_half: int) -> List[ThetaMatrix]:
    """Zero-diagonal matrices in Xi_{2n} with |A| <= 2 max_half"""
    size = 2 * n
    reps = [(i, j) for i in range(size) for j in range(size)
            if i != j and (i, j) < (size - 1 - i, size - 1 - j)]
    found = []

    def place(index: int, remaining: int, rows: List[List[int]]):
        if index == len(reps):
            found.append(ThetaMatrix.from_rows(rows))
            return
        i, j = reps[index]
        for k in range(remaining + 1):
            rows[i][j] = k
            rows[size - 1 - i][size - 1 - j] = k
            place(index + 1, remaining - k, rows)
        rows[i][j] = 0
        rows[size - 1 - i][size - 1 - j] = 0

    place(0, max_half, [[0] * size for _ in range(size)])
    return sorted(found, key=lambda A: (A.total(), A.row_major()))


def j_box(n: int, jbox: int) -> List[Vector]:
    """Distinct normalized j with entries in [-jbox, jbox]"""
    seen = set()

    def build(prefix: Tuple[int, ...]):
        if len(prefix) == 2 * n:
            seen.add(normalize_j(prefix))
            return
        for x in range(-jbox, jbox + 1):
            build(prefix + (x,))

    build(())
    return sorted(seen)


STABILITY_IDENTITIES = ("longMF1_left", "longMF1_right", "longMF2", "longMF3", "longMF4", "EaE")


def _numeric_product(left: Callable[[int], SchurElement], right: Callable[[int], SchurElement]):
    return lambda r: product(left(r), right(r))


def r_stability_identities(identity_id: str, n: int, jbox: int = 1,
                           max_half: int = 2) -> List[StabilityCase]:
    """The cases of one named identity over the (A, j) grid"""
    if identity_id not in STABILITY_IDENTITIES:
        raise ParameterRangeError(f"Unknown identity: {identity_id}")
    cases: List[StabilityCase] = []
    if identity_id == "EaE":
        zero = zero_vector(n)
        for a in range(1, max_half + 1):
            cases.append(StabilityCase(
                f"EaE a={a}", eae_rhs(a, n),
                _numeric_product(lambda r: long_element(middle_unit(n), zero, r),
                                 lambda r, a=a: long_element(middle_unit(n, a), zero, r)),
                a))
        return cases
    shifts = [unit_vector(2 * n, i, sign) for i in range(1, n + 1) for sign in (1, -1)]
    for A in zero_diagonal_matrices(n, max_half):
        for j in j_box(n, jbox):
            operand = LongElement(A, j)
            X = FormalCombination.symbol(A, j)
            min_r = A.total() // 2
            if identity_id == "longMF1_left":
                for j0 in shifts:
                    cases.append(StabilityCase(
                        f"O{list(j0)} * {A.rows()}({list(j)})", formal_o(j0, X),
                        _numeric_product(lambda r, j0=j0: o_element(j0, r), operand.evaluate), min_r))
            elif identity_id == "longMF1_right":
                for j0 in shifts:
                    cases.append(StabilityCase(
                        f"{A.rows()}({list(j)}) * O{list(j0)}", formal_o(j0, X, side="right"),
                        _numeric_product(operand.evaluate, lambda r, j0=j0: o_element(j0, r)), min_r))
            elif identity_id in ("longMF2", "longMF3"):
                kind = "e" if identity_id == "longMF2" else "f"
                for h in range(1, n):
                    cases.append(StabilityCase(
                        f"{kind}{h} * {A.rows()}({list(j)})", formal_apply(kind, X, h),
                        lambda r, kind=kind, h=h, operand=operand: long_mul(kind, operand, r, h),
                        min_r))
            else:
                cases.append(StabilityCase(
                    f"t_raw * {A.rows()}({list(j)})", formal_t_raw(X),
                    lambda r, operand=operand: long_mul("t_raw", operand, r), min_r))
    return cases


@dataclass
class StabilityReport:
    identity: str
    r_set: Tuple[int, ...]
    cases: int = 0
    failures: List[Comparison] = dataclass_field(default_factory=list)


def verify_r_stability(identity_id: str, r_set: Sequence[int], n: int, jbox: int = 1,
                       max_half: int = 2, perturb: bool = False) -> StabilityReport:
    """
    Evaluate each formal identity at every r in r_set (r >= |A|/2) against the product in S^i(n, r).

    With perturb on, every formal side gets one extra term so that each case must fail.
    """
    report = StabilityReport(identity_id, tuple(r_set))
    for case in r_stability_identities(identity_id, n, jbox, max_half):
        formal = case.formal
        if perturb:
            formal = formal + FormalCombination.unit(n)
        for r in r_set:
            if r < case.min_r:
                continue
            report.cases += 1
            comparison = Comparison(f"{case.label} r={r}", formal.evaluate(r), case.numeric(r))
            if not comparison.ok:
                report.failures.append(comparison)
    return report
