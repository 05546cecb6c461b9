"""
q-Schur algebra S^i(n, r) of type C for the iSchur toolkit
Basis [A] for A in Xi_{2n,2r}, the oracle product computed by composing
Hecke module homomorphisms, the closed-form multiplication formulas, the
preorder on matrices and the triangular monomial basis m(A).
"""

import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from errors import (
    AmbientMismatchError,
    CapExceededError,
    DecompositionError,
    InadmissibleFormulaError,
    InvalidMatrixError,
    ParameterRangeError,
)
from hecke import HeckeElement, ModuleElement, double_coset_sum, phi_apply
from qarith import ONE, ZERO, LaurentPoly, Scalar, V, bbracket, divide_exact, gauss_binom
from weyl import (
    Composition,
    ThetaMatrix,
    WeylElement,
    add_vectors,
    compositions,
    double_coset,
    double_coset_table,
    length,
    longest_parabolic_length,
    profile,
    theta_e,
    theta_unit,
    triple_of_matrix,
)

DEFAULT_BASIS_CAP = 10_000


# ===== Elements =====

class SchurElement:
    """Finite Z[v, v^-1]-combination of basis elements [A] of S^i(n, r)"""

    __slots__ = ("n", "r", "_terms")

    def __init__(self, n: int, r: int, terms: Optional[Dict[ThetaMatrix, LaurentPoly]] = None):
        self.n = n
        self.r = r
        clean = {}
        for A, c in (terms or {}).items():
            if c.is_zero():
                continue
            if A.n != n or A.total() != 2 * r:
                raise InvalidMatrixError(f"{A} is not in Xi_(2n={2 * n}, 2r={2 * r})")
            clean[A] = c
        self._terms = clean

    @classmethod
    def zero(cls, n: int, r: int) -> "SchurElement":
        return cls(n, r)

    @classmethod
    def basis_element(cls, A: ThetaMatrix) -> "SchurElement":
        return cls(A.n, A.total() // 2, {A: ONE})

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, A: ThetaMatrix) -> LaurentPoly:
        return self._terms.get(A, ZERO)

    def support(self) -> List[ThetaMatrix]:
        return sorted(self._terms, key=lambda A: A.row_major())

    def terms(self) -> Iterator[Tuple[ThetaMatrix, LaurentPoly]]:
        for A in self.support():
            yield A, self._terms[A]

    def _check(self, other: "SchurElement"):
        if (self.n, self.r) != (other.n, other.r):
            raise AmbientMismatchError(
                f"Schur algebras differ: ({self.n}, {self.r}) vs ({other.n}, {other.r})"
            )

    def __add__(self, other: "SchurElement") -> "SchurElement":
        self._check(other)
        result = dict(self._terms)
        for A, c in other._terms.items():
            result[A] = result.get(A, ZERO) + c
        return SchurElement(self.n, self.r, result)

    def __neg__(self) -> "SchurElement":
        return SchurElement(self.n, self.r, {A: -c for A, c in self._terms.items()})

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "SchurElement":
        c = LaurentPoly.coerce(c)
        return SchurElement(self.n, self.r, {A: c * x for A, x in self._terms.items()})

    def divide(self, d: LaurentPoly) -> "SchurElement":
        """Exact coefficientwise division; raises InexactDivisionError otherwise"""
        return SchurElement(self.n, self.r, {A: divide_exact(c, d) for A, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, SchurElement):
            return product(self, other)
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SchurElement):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, self.r, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"({c.fmt()}){A.rows()}" for A, c in self.terms())
        return f"SchurElement(n={self.n}, r={self.r})[{body or '0'}]"

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "r": self.r,
            "terms": [{"matrix": A.rows(), "coeff": c.to_json()} for A, c in self.terms()],
        }


@dataclass(frozen=True)
class Comparison:
    """Two computed sides of one identity"""

    label: str
    lhs: object
    rhs: object

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> Dict:
        return {"case": self.label, "lhs": _side_json(self.lhs), "rhs": _side_json(self.rhs)}


def _side_json(side):
    if hasattr(side, "to_json"):
        return side.to_json()
    if isinstance(side, ThetaMatrix):
        return side.rows()
    if isinstance(side, (set, frozenset, list, tuple)):
        items = sorted(side, key=lambda x: x.row_major()) if isinstance(side, (set, frozenset)) else side
        return [_side_json(x) for x in items]
    return side


# ===== Basis and normalization =====

def _orbit_representatives(n: int) -> List[Tuple[int, int]]:
    size = 2 * n
    reps = []
    for i in range(size):
        for j in range(size):
            if (i, j) < (size - 1 - i, size - 1 - j):
                reps.append((i, j))
    return reps


def basis_size(n: int, r: int) -> int:
    """|Xi_{2n,2r}|: weak compositions of r over the 2n^2 position orbits"""
    orbits = 2 * n * n
    return math.comb(r + orbits - 1, orbits - 1)


@lru_cache(maxsize=None)
def _basis(n: int, r: int) -> Tuple[ThetaMatrix, ...]:
    size = 2 * n
    reps = _orbit_representatives(n)
    found = []

    def place(index: int, remaining: int, rows: List[List[int]]):
        if index == len(reps):
            if remaining == 0:
                found.append(ThetaMatrix.from_rows(rows))
            return
        i, j = reps[index]
        for k in range(remaining + 1):
            rows[i][j] = k
            rows[size - 1 - i][size - 1 - j] = k
            place(index + 1, remaining - k, rows)
        rows[i][j] = 0
        rows[size - 1 - i][size - 1 - j] = 0

    place(0, r, [[0] * size for _ in range(size)])
    return tuple(sorted(found, key=lambda A: A.row_major()))


def basis(n: int, r: int, cap: int = DEFAULT_BASIS_CAP) -> List[ThetaMatrix]:
    """
    All of Xi_{2n,2r}, lexicographic on row-major entries.

    Raises:
        CapExceededError: if the basis would have more than cap elements
    """
    if n < 1 or r < 0:
        raise ParameterRangeError(f"Invalid (n, r) = ({n}, {r})")
    size = basis_size(n, r)
    if size > cap:
        raise CapExceededError(f"Basis of S^i({n},{r}) has {size} elements (cap {cap})")
    return list(_basis(n, r))


@dataclass(frozen=True)
class NormalizationData:
    lam: Composition
    mu: Composition
    d: WeylElement
    exponent: int


@lru_cache(maxsize=None)
def normalization(A: ThetaMatrix) -> NormalizationData:
    """[A] = v^exponent phi^d_{lambda mu}, exponent = -l(d+) + l(w_{mu,0})"""
    lam, d, mu = triple_of_matrix(A)
    coset = double_coset(lam, mu, d)
    exponent = -length(coset.d_plus) + longest_parabolic_length(mu)
    return NormalizationData(lam, mu, d, exponent)


def diag_idempotent(lam: Composition) -> SchurElement:
    return SchurElement.basis_element(ThetaMatrix.diag(lam.hat()))


def unit(n: int, r: int) -> SchurElement:
    """Sum of [diag(hat(lambda))] over Lambda(n, r)"""
    return SchurElement(n, r, {ThetaMatrix.diag(lam.hat()): ONE for lam in compositions(n, r)})


# ===== Oracle product =====

class StructureTable:
    """Lazily built structure constants [A][B], keyed by (A, B)"""

    def __init__(self):
        self._table: Dict[Tuple[ThetaMatrix, ThetaMatrix], SchurElement] = {}
        self._lock = threading.Lock()

    def get(self, A: ThetaMatrix, B: ThetaMatrix) -> SchurElement:
        key = (A, B)
        cached = self._table.get(key)
        if cached is not None:
            return cached
        value = _compose(A, B)
        with self._lock:
            self._table.setdefault(key, value)
        return value

    def __len__(self):
        return len(self._table)

    def records(self) -> List[Tuple[ThetaMatrix, ThetaMatrix, SchurElement]]:
        with self._lock:
            items = list(self._table.items())
        items.sort(key=lambda item: (item[0][0].row_major(), item[0][1].row_major()))
        return [(A, B, value) for (A, B), value in items]


STRUCTURE_TABLE = StructureTable()


def _compose(A: ThetaMatrix, B: ThetaMatrix) -> SchurElement:
    n, r = A.n, A.total() // 2
    lam, d, mu = triple_of_matrix(A)
    _, d2, nu = triple_of_matrix(B)
    # phi_B(x_nu) lies in x_mu H; push it through phi_A
    image_b = ModuleElement(mu, double_coset_sum(mu, d2, nu))
    image = phi_apply(A, image_b).value
    shift = normalization(A).exponent + normalization(B).exponent
    residual = image
    result = {}
    for C, dC in double_coset_table(lam, nu).items():
        c = image.coefficient(dC)
        if c.is_zero():
            continue
        residual = residual - double_coset_sum(lam, dC, nu).scale(c)
        result[C] = c.shift(shift - normalization(C).exponent)
    if not residual.is_zero():
        raise DecompositionError(f"Product of {A} and {B} does not split over double cosets")
    return SchurElement(n, r, result)


def oracle_product(A: ThetaMatrix, B: ThetaMatrix) -> SchurElement:
    """
    [A][B] computed by composing phi_A and phi_B on the q-permutation module.

    Returns:
        zero when co(A) != ro(B)
    """
    if A.n != B.n or A.total() != B.total():
        raise AmbientMismatchError("Basis labels come from different Schur algebras")
    if A.co() != B.ro():
        return SchurElement.zero(A.n, A.total() // 2)
    return STRUCTURE_TABLE.get(A, B)


def product(X: SchurElement, Y: SchurElement) -> SchurElement:
    """Bilinear extension of oracle_product"""
    X._check(Y)
    by_row: Dict[Tuple[int, ...], List[Tuple[ThetaMatrix, LaurentPoly]]] = {}
    for B, cb in Y._terms.items():
        by_row.setdefault(B.ro(), []).append((B, cb))
    result: Dict[ThetaMatrix, LaurentPoly] = {}
    for A, ca in X._terms.items():
        for B, cb in by_row.get(A.co(), ()):
            coeff = ca * cb
            for C, cc in oracle_product(A, B)._terms.items():
                result[C] = result.get(C, ZERO) + coeff * cc
    return SchurElement(X.n, X.r, result)


# ===== Coefficient functions and short formulas =====

@dataclass(frozen=True)
class CoefficientData:
    beta: Tuple[int, ...]
    beta_prime: Tuple[int, ...]
    c_A: Optional[LaurentPoly]

    def b(self, p: int) -> int:
        return self.beta[p - 1]

    def bp(self, p: int) -> int:
        return self.beta_prime[p - 1]


def coeff_functions(A: ThetaMatrix, h: int) -> CoefficientData:
    """
    beta_p(A, h) and beta'_p(A, h) for p in [1, 2n], and c_A when h = n.

    Args:
        A: matrix in Xi_{2n}
        h: row index in [1, n]
    """
    n, size = A.n, A.size
    if not 1 <= h <= n:
        raise ParameterRangeError(f"h={h} out of range [1, {n}]")
    beta = tuple(
        sum(A(h, j) for j in range(p, size + 1)) - sum(A(h + 1, j) for j in range(p + 1, size + 1))
        for p in range(1, size + 1)
    )
    beta_prime = tuple(
        sum(A(h + 1, j) for j in range(1, p + 1)) - sum(A(h, j) for j in range(1, p))
        for p in range(1, size + 1)
    )
    c_A = None
    if h == n:
        top = sum(A(n, j) for j in range(1, n + 1))
        bottom = sum(A(n + 1, j) for j in range(1, n + 1))
        c_A = V ** (-top) * (V ** bottom - V ** (-bottom))
    return CoefficientData(beta, beta_prime, c_A)


def _moved(A: ThetaMatrix, moves: Sequence[Tuple[int, int, int, int]]) -> ThetaMatrix:
    """A + sum k * E^theta_{i,j} for (i, j, k) moves; re-validated"""
    rows = A.rows()
    size = A.size
    for i, j, k, _ in moves:
        rows[i - 1][j - 1] += k
        rows[size - i][size - j] += k
    return ThetaMatrix.from_rows(rows)


def row_move(A: ThetaMatrix, to_row: int, from_row: int, p: int, k: int = 1) -> ThetaMatrix:
    """A + k (E^theta_{to,p} - E^theta_{from,p})"""
    return _moved(A, [(to_row, p, k, 0), (from_row, p, -k, 0)])


def left_factor(kind: str, h: int, m: int, lam: Composition) -> ThetaMatrix:
    """m E^theta + diag(hat(lambda)) for kind e (E_{h,h+1}), f (E_{h+1,h}) or t (E_{n+1,n})"""
    n = lam.n
    if kind in ("e", "up"):
        off = theta_unit(n, h, h + 1, m)
    elif kind in ("f", "down"):
        off = theta_unit(n, h + 1, h, m)
    elif kind == "t":
        off = theta_unit(n, n + 1, n, m)
    else:
        raise ParameterRangeError(f"Unknown formula kind: {kind}")
    return off.plus_diag(lam.hat())


def _check_formula_args(kind: str, h: int, m: int, lam: Composition, A: ThetaMatrix):
    n, r = A.n, A.total() // 2
    if lam.n != n:
        raise ParameterRangeError(f"lambda={lam.parts} should have {n} parts")
    if lam.weight != r - m:
        raise ParameterRangeError(f"lambda={lam.parts} should have weight {r - m}")
    if m < 1:
        raise ParameterRangeError(f"m={m} must be positive")
    if kind == "t":
        if h != n:
            raise ParameterRangeError(f"kind t uses h = n = {n}, got {h}")
    elif not 1 <= h < n:
        raise ParameterRangeError(f"h={h} out of range [1, {n})")


def short_mul(kind: str, h: int, lam: Composition, A: ThetaMatrix) -> SchurElement:
    """
    Closed-form [E + diag(hat(lambda))] . [A] for the three elementary left factors.

    Args:
        kind: "e" for E^theta_{h,h+1}, "f" for E^theta_{h+1,h}, "t" for E^theta_{n+1,n}
        h: row index (h < n for e/f, h = n for t)
        lam: composition in Lambda(n, r-1)
        A: right factor in Xi_{2n,2r}
    """
    _check_formula_args(kind, h, 1, lam, A)
    n, r = A.n, A.total() // 2
    hat = lam.hat()
    result: Dict[ThetaMatrix, LaurentPoly] = {}

    def add(M: ThetaMatrix, c: LaurentPoly):
        result[M] = result.get(M, ZERO) + c

    if kind == "e":
        if add_vectors(theta_e(n, h + 1), hat) != A.ro():
            return SchurElement.zero(n, r)
        data = coeff_functions(A, h)
        for p in range(1, 2 * n + 1):
            if A(h + 1, p) >= 1:
                add(row_move(A, h, h + 1, p), V ** data.b(p) * bbracket(A(h, p) + 1).bar())
    elif kind == "f":
        if add_vectors(theta_e(n, h), hat) != A.ro():
            return SchurElement.zero(n, r)
        data = coeff_functions(A, h)
        for p in range(1, 2 * n + 1):
            if A(h, p) >= 1:
                add(row_move(A, h + 1, h, p), V ** data.bp(p) * bbracket(A(h + 1, p) + 1).bar())
    else:
        if add_vectors(theta_e(n, n), hat) != A.ro():
            return SchurElement.zero(n, r)
        data = coeff_functions(A, n)
        add(A, data.c_A)
        for p in range(1, 2 * n + 1):
            if A(n, p) >= 1:
                exponent = data.bp(p) - (1 if n + 1 <= p else 0)
                add(row_move(A, n + 1, n, p), V ** exponent * bbracket(A(n + 1, p) + 1).bar())
    return SchurElement(n, r, result)


def bounded_compositions(bounds: Sequence[int], m: int) -> Iterator[Tuple[int, ...]]:
    """nu in Lambda(len(bounds), m) with nu_i <= bounds[i], lexicographic"""
    if not bounds:
        if m == 0:
            yield ()
        return
    for first in range(min(bounds[0], m) + 1):
        for rest in bounded_compositions(bounds[1:], m - first):
            yield (first,) + rest


def multi_mul(direction: str, h: int, m: int, lam: Composition, A: ThetaMatrix) -> SchurElement:
    """
    Closed-form [m E^theta_{h,h+1} + hat(lambda)] . [A] (direction "up") or
    [m E^theta_{h+1,h} + hat(lambda)] . [A] (direction "down"), h < n.
    """
    if direction not in ("up", "down"):
        raise ParameterRangeError(f"Unknown direction: {direction}")
    _check_formula_args("e", h, m, lam, A)
    n, r = A.n, A.total() // 2
    size = 2 * n
    hat = lam.hat()
    # rows: "src" loses nu, "dst" gains it
    src, dst = (h + 1, h) if direction == "up" else (h, h + 1)
    if add_vectors(theta_e(n, src, m), hat) != A.ro():
        return SchurElement.zero(n, r)
    result: Dict[ThetaMatrix, LaurentPoly] = {}
    bounds = [A(src, u) for u in range(1, size + 1)]
    for nu in bounded_compositions(bounds, m):
        exponent = 0
        for p in range(1, size + 1):
            nu_p = nu[p - 1]
            if not nu_p:
                continue
            if direction == "up":
                exponent += (sum(A(h, j) for j in range(p, size + 1)) * nu_p
                             - sum(A(h + 1, j) for j in range(p + 1, size + 1)) * nu_p
                             + sum(nu[j - 1] for j in range(1, p)) * nu_p)
            else:
                exponent += (sum(A(h + 1, j) for j in range(1, p + 1)) * nu_p
                             - sum(A(h, j) for j in range(1, p)) * nu_p
                             + sum(nu[j - 1] for j in range(p + 1, size + 1)) * nu_p)
        coeff = V ** exponent
        for u in range(1, size + 1):
            if nu[u - 1]:
                coeff = coeff * gauss_binom(A(dst, u) + nu[u - 1], nu[u - 1]).bar()
        moves = []
        for u in range(1, size + 1):
            if nu[u - 1]:
                moves.append((dst, u, nu[u - 1], 0))
                moves.append((src, u, -nu[u - 1], 0))
        M = _moved(A, moves)
        result[M] = result.get(M, ZERO) + coeff
    return SchurElement(n, r, result)


def parse_formula_lhs(L: ThetaMatrix) -> Tuple[str, int, int, Composition]:
    """
    Recognise L = m E^theta + diag(hat(lambda)) for a closed-form formula.

    Returns:
        (kind, h, m, lambda) with kind in e / f / t

    Raises:
        InadmissibleFormulaError: if L has another shape
    """
    n = L.n
    off = L.off_diagonal()
    try:
        lam = profile(L.diagonal())
    except InvalidMatrixError as exc:
        raise InadmissibleFormulaError(str(exc)) from exc
    if off.total() == 0:
        raise InadmissibleFormulaError("Diagonal left factor: no formula applies")
    for h in range(1, n):
        m = off(h, h + 1)
        if m and off == theta_unit(n, h, h + 1, m):
            return "e", h, m, lam
        m = off(h + 1, h)
        if m and off == theta_unit(n, h + 1, h, m):
            return "f", h, m, lam
    if off == theta_unit(n, n + 1, n, 1):
        return "t", n, 1, lam
    raise InadmissibleFormulaError(f"{L} is not an elementary left factor")


def formula_product(L: ThetaMatrix, A: ThetaMatrix) -> SchurElement:
    """[L][A] through the closed-form formulas"""
    if L.n != A.n or L.total() != A.total():
        raise AmbientMismatchError("Basis labels come from different Schur algebras")
    kind, h, m, lam = parse_formula_lhs(L)
    if m == 1:
        return short_mul(kind, h, lam, A)
    return multi_mul("up" if kind == "e" else "down", h, m, lam, A)


# ===== Preorder =====

def _corner_sums(A: ThetaMatrix) -> Dict[Tuple[int, int], int]:
    size = A.size
    return {
        (u, v): sum(A(i, j) for i in range(1, u + 1) for j in range(v, size + 1))
        for u in range(1, size + 1) for v in range(u + 1, size + 1)
    }


def preorder_leq(A: ThetaMatrix, B: ThetaMatrix) -> bool:
    """A <= B: every upper-right corner sum of A is at most that of B"""
    if A.size != B.size:
        raise AmbientMismatchError("Matrices of different sizes")
    sa, sb = _corner_sums(A), _corner_sums(B)
    return all(sa[key] <= sb[key] for key in sa)


def preorder_leq_two_condition(A: ThetaMatrix, B: ThetaMatrix) -> bool:
    """The same preorder via upper-right sums for u <= n and lower-left sums for u > v in [1, n]"""
    if A.size != B.size:
        raise AmbientMismatchError("Matrices of different sizes")
    n, size = A.n, A.size
    for u in range(1, n + 1):
        for v in range(u + 1, size + 1):
            left = sum(A(i, j) for i in range(1, u + 1) for j in range(v, size + 1))
            right = sum(B(i, j) for i in range(1, u + 1) for j in range(v, size + 1))
            if left > right:
                return False
    for u in range(1, n + 1):
        for v in range(1, u):
            left = sum(A(i, j) for i in range(u, size + 1) for j in range(1, v + 1))
            right = sum(B(i, j) for i in range(u, size + 1) for j in range(1, v + 1))
            if left > right:
                return False
    return True


def strictly_below(A: ThetaMatrix, B: ThetaMatrix) -> bool:
    """A < B"""
    return preorder_leq(A, B) and not preorder_leq(B, A)


def linear_extension(matrices: Sequence[ThetaMatrix]) -> List[ThetaMatrix]:
    """Topological order of the strict preorder, lexicographic tie-break, lower first"""
    remaining = sorted(set(matrices), key=lambda A: A.row_major())
    below = {A: {B for B in remaining if strictly_below(B, A)} for A in remaining}
    ordered: List[ThetaMatrix] = []
    placed = set()
    while remaining:
        for A in remaining:
            if below[A] <= placed:
                ordered.append(A)
                placed.add(A)
                remaining.remove(A)
                break
        else:
            raise InvalidMatrixError("Strict preorder has a cycle")
    return ordered


# ===== Triangular monomials =====

def triangular_index(N: int) -> List[Tuple[int, int, int]]:
    """(i, h, j) with 1 <= j <= h < i <= N, ordered by i, then j, then h descending"""
    index = [(i, h, j) for i in range(2, N + 1) for h in range(1, i) for j in range(1, h + 1)]
    return sorted(index, key=lambda t: (t[0], t[2], -t[1]))


def triangular_factors(A: ThetaMatrix) -> List[Tuple[Tuple[int, int, int], ThetaMatrix]]:
    """
    The factors D_{i,h,j} + a_{i,j} E^theta_{h+1,h} of m(A), in product order.

    Raises:
        InvalidMatrixError: if the backward recursion produces a negative diagonal entry
    """
    n, size = A.n, A.size
    order = triangular_index(size)
    factors = []
    target = A.co()
    for i, h, j in reversed(order):
        a = A(i, j)
        diag = add_vectors(target, theta_e(n, h, -a))
        if any(x < 0 for x in diag):
            raise InvalidMatrixError(f"Negative diagonal in factor {(i, h, j)} for {A}")
        factor = theta_unit(n, h + 1, h, a).plus_diag(diag)
        factors.append(((i, h, j), factor))
        target = factor.ro()
    factors.reverse()
    return factors


def ordered_product(labels: Sequence[ThetaMatrix]) -> SchurElement:
    result = SchurElement.basis_element(labels[0])
    for label in labels[1:]:
        result = product(result, SchurElement.basis_element(label))
    return result


def triangular_monomial(A: ThetaMatrix) -> SchurElement:
    """m(A) = ordered product of the triangular factors"""
    return ordered_product([factor for _, factor in triangular_factors(A)])


def tr1_replacements(A: ThetaMatrix) -> Iterator[Tuple[str, List[ThetaMatrix]]]:
    """
    Factor lists where some [D + a E^theta_{n+1,n}] become [D + s e^theta_n + (a-s) E^theta_{n+1,n}].

    Yields every single replacement (each factor, each s) and the replacement of
    every eligible pair of factors by their full amount.
    """
    n = A.n
    factors = triangular_factors(A)
    eligible = [k for k, ((i, h, j), _) in enumerate(factors) if h == n and A(i, j) > 0]

    def replaced(choices: Dict[int, int]) -> List[ThetaMatrix]:
        labels = []
        for k, ((i, h, j), factor) in enumerate(factors):
            s = choices.get(k, 0)
            if s:
                factor = factor.combine(theta_unit(n, n + 1, n, 1), -s).plus_diag(theta_e(n, n, s))
            labels.append(factor)
        return labels

    for k in eligible:
        i, h, j = factors[k][0]
        for s in range(1, A(i, j) + 1):
            yield f"factor {(i, h, j)} s={s}", replaced({k: s})
    for k1, k2 in combinations(eligible, 2):
        i1, _, j1 = factors[k1][0]
        i2, _, j2 = factors[k2][0]
        yield (f"factors {factors[k1][0]},{factors[k2][0]} full",
               replaced({k1: A(i1, j1), k2: A(i2, j2)}))


def transition_matrix(n: int, r: int) -> Dict[ThetaMatrix, SchurElement]:
    """A -> m(A) expanded in the [B] basis"""
    return {A: triangular_monomial(A) for A in basis(n, r)}


def unitriangular_failures(n: int, r: int) -> List[str]:
    """Entries breaking unitriangularity of m(A) -> [B] in a linear extension of the preorder"""
    expansions = transition_matrix(n, r)
    order = linear_extension(list(expansions))
    position = {A: k for k, A in enumerate(order)}
    failures = []
    for A, element in expansions.items():
        if element.coefficient(A) != ONE:
            failures.append(f"{A.rows()}: diagonal coefficient {element.coefficient(A).fmt()}")
        for B in element.support():
            if B != A and position[B] > position[A]:
                failures.append(f"{A.rows()}: {B.rows()} appears above the diagonal")
    return failures


# ===== Leading-term hypotheses =====

@dataclass(frozen=True)
class LeadingCase:
    label: str
    left: ThetaMatrix
    right: ThetaMatrix
    leading: ThetaMatrix
    unit_coefficient: bool


def _least_fill(row: Sequence[int], k: int, m: int, leftward: bool) -> Optional[Tuple[int, ...]]:
    """Greedy fill of m units from column k leftward (least) or rightward (largest)"""
    nu = [0] * len(row)
    remaining = m
    columns = range(k, 0, -1) if leftward else range(k, len(row) + 1)
    for col in columns:
        take = min(remaining, row[col - 1])
        nu[col - 1] = take
        remaining -= take
        if not remaining:
            return tuple(nu)
    return None


def leading_term_cases(n: int, r: int, m_max: int = 2) -> List[LeadingCase]:
    """Every (A, k, m) at (n, r) meeting one of the three leading-term hypotheses"""
    size = 2 * n
    cases = []
    for A in basis(n, r):
        for m in range(1, min(m_max, r) + 1):
            for h in range(1, n):
                # moving up from row h+1
                for k in range(1, size + 1):
                    if (all(A(h, j) == 0 for j in range(k, size + 1)) and A(h + 1, k) > 0
                            and all(A(h + 1, j) == 0 for j in range(k + 1, size + 1))):
                        nu = _least_fill([A(h + 1, u) for u in range(1, size + 1)], k, m, True)
                        hat = add_vectors(A.ro(), theta_e(n, h + 1, -m))
                        if nu is None or min(hat) < 0:
                            continue
                        lead = _moved(A, [(row, u, sign * nu[u - 1], 0)
                                          for u in range(1, size + 1) if nu[u - 1]
                                          for row, sign in ((h, 1), (h + 1, -1))])
                        cases.append(LeadingCase(
                            f"up h={h} k={k} m={m}", left_factor("e", h, m, profile(hat)), A, lead,
                            A(h + 1, k) >= m))
                # moving down from row h
                for k in range(1, size + 1):
                    if (A(h, k) > 0 and all(A(h, j) == 0 for j in range(1, k))
                            and all(A(h + 1, j) == 0 for j in range(1, k + 1))):
                        nu = _least_fill([A(h, u) for u in range(1, size + 1)], k, m, False)
                        hat = add_vectors(A.ro(), theta_e(n, h, -m))
                        if nu is None or min(hat) < 0:
                            continue
                        lead = _moved(A, [(row, u, sign * nu[u - 1], 0)
                                          for u in range(1, size + 1) if nu[u - 1]
                                          for row, sign in ((h + 1, 1), (h, -1))])
                        cases.append(LeadingCase(
                            f"down h={h} k={k} m={m}", left_factor("f", h, m, profile(hat)), A, lead,
                            A(h, k) >= m))
            # the middle rows n, n+1
            for k in range(1, n + 1):
                if (A(n, k) >= m and all(A(n, j) == 0 for j in range(1, k))
                        and all(A(n, j) == 0 for j in range(size + 1 - k, size + 1))):
                    hat = add_vectors(A.ro(), theta_e(n, n, -m))
                    if min(hat) < 0:
                        continue
                    lead = row_move(A, n + 1, n, k, m)
                    cases.append(LeadingCase(
                        f"middle k={k} m={m}", left_factor("t", n, m, profile(hat)), A, lead, True))
    return cases


def leading_failures(case: LeadingCase) -> List[str]:
    """Check one leading-term case against the oracle product"""
    value = oracle_product(case.left, case.right)
    failures = []
    coeff = value.coefficient(case.leading)
    if coeff.is_zero():
        failures.append("leading matrix missing")
    elif case.unit_coefficient and coeff != ONE:
        failures.append(f"leading coefficient {coeff.fmt()} is not 1")
    for B in value.support():
        if B != case.leading and not strictly_below(B, case.leading):
            failures.append(f"{B.rows()} is not strictly below the leading term")
    return failures
