"""
Hecke algebra of type C_r for the iSchur toolkit
Elements are expanded over the T_w basis with coefficients in Z[v, v^-1]
(q = v^2). The q-permutation module sum_lambda x_lambda H and the
homomorphisms phi^d_{lambda mu} are the brute-force side of every Schur
algebra check.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

from errors import AmbientMismatchError, DecompositionError
from qarith import ONE, ZERO, LaurentPoly, Scalar
from weyl import (
    Composition,
    ThetaMatrix,
    WeylElement,
    coset_reps,
    double_coset,
    generator,
    identity,
    length,
    parabolic,
    reduced_word,
    right_descent,
    triple_of_matrix,
)


class HeckeElement:
    """Finite sum of c_w T_w over W(C_r)"""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Optional[Dict[WeylElement, LaurentPoly]] = None):
        self.rank = rank
        self._terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def basis(cls, w: WeylElement) -> "HeckeElement":
        return cls(w.rank, {w: ONE})

    @classmethod
    def zero(cls, r: int) -> "HeckeElement":
        return cls(r)

    @classmethod
    def one(cls, r: int) -> "HeckeElement":
        return cls.basis(identity(r))

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, w: WeylElement) -> LaurentPoly:
        return self._terms.get(w, ZERO)

    def terms(self) -> Iterator[Tuple[WeylElement, LaurentPoly]]:
        for w in sorted(self._terms, key=lambda x: (length(x), x.images)):
            yield w, self._terms[w]

    def support(self):
        return set(self._terms)

    def _check(self, other: "HeckeElement"):
        if self.rank != other.rank:
            raise AmbientMismatchError(f"Hecke ranks differ: {self.rank} vs {other.rank}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        result = dict(self._terms)
        for w, c in other._terms.items():
            result[w] = result.get(w, ZERO) + c
        return HeckeElement(self.rank, result)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.rank, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "HeckeElement":
        c = LaurentPoly.coerce(c)
        return HeckeElement(self.rank, {w: c * x for w, x in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def right_mul_generator(self, j: int) -> "HeckeElement":
        return HeckeElement(self.rank, _right_mul_generator(self._terms, self.rank, j))

    def __repr__(self):
        body = " + ".join(f"({c.fmt()})T{w.images}" for w, c in self.terms())
        return f"HeckeElement[{body or '0'}]"

    def to_json(self) -> Dict:
        return {"terms": [{"w": list(w.images), "coeff": c.to_json()} for w, c in self.terms()]}


def _right_mul_generator(terms: Dict[WeylElement, LaurentPoly], r: int,
                         j: int) -> Dict[WeylElement, LaurentPoly]:
    # T_w T_s = T_{ws} if l(ws) > l(w), else (q-1) T_w + q T_{ws}
    s = generator(r, j)
    result: Dict[WeylElement, LaurentPoly] = {}
    for w, c in terms.items():
        ws = w * s
        if not right_descent(w, j):
            result[ws] = result.get(ws, ZERO) + c
        else:
            qc = c.shift(2)
            result[w] = result.get(w, ZERO) + qc - c
            result[ws] = result.get(ws, ZERO) + qc
    return result


@lru_cache(maxsize=None)
def basis_product(x: WeylElement, w: WeylElement) -> HeckeElement:
    """T_x T_w, expanded by right multiplication along a reduced word of w"""
    terms = {x: ONE}
    for j in reduced_word(w):
        terms = _right_mul_generator(terms, x.rank, j)
    return HeckeElement(x.rank, terms)


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Bilinear extension of T_x T_w"""
    a._check(b)
    result: Dict[WeylElement, LaurentPoly] = {}
    for x, cx in a._terms.items():
        for w, cw in b._terms.items():
            coeff = cx * cw
            for y, cy in basis_product(x, w)._terms.items():
                result[y] = result.get(y, ZERO) + coeff * cy
    return HeckeElement(a.rank, result)


def x_lambda(lam: Composition) -> HeckeElement:
    """x_lambda = sum of T_w over the parabolic subgroup W_lambda"""
    return HeckeElement(lam.weight, {w: ONE for w in parabolic(lam)})


def coset_sum(lam: Composition, d: WeylElement) -> HeckeElement:
    """x_lambda T_d = sum of T_w over W_lambda d, for d in D_lambda"""
    return HeckeElement(lam.weight, {w * d: ONE for w in parabolic(lam)})


def double_coset_sum(lam: Composition, d: WeylElement, mu: Composition) -> HeckeElement:
    """T_{W_lambda d W_mu}"""
    return HeckeElement(lam.weight, {w: ONE for w in double_coset(lam, mu, d).elements})


@dataclass(frozen=True)
class ModuleElement:
    """An element of the summand x_lambda H of the q-permutation module"""

    component: Composition
    value: HeckeElement

    def right_mul(self, h: HeckeElement) -> "ModuleElement":
        return ModuleElement(self.component, self.value * h)

    def is_zero(self) -> bool:
        return self.value.is_zero()


def module_decompose(lam: Composition, m: HeckeElement) -> Dict[WeylElement, LaurentPoly]:
    """
    Write m = sum_d c_d x_lambda T_d over d in D_lambda.

    Raises:
        DecompositionError: if m is not in x_lambda H
    """
    coeffs = {}
    residual = m
    for d in coset_reps(lam):
        c = m.coefficient(d)
        if not c.is_zero():
            coeffs[d] = c
            residual = residual - coset_sum(lam, d).scale(c)
    if not residual.is_zero():
        raise DecompositionError(f"Element is not in x_lambda H for lambda={lam.parts}: residual {residual}")
    return coeffs


def phi_apply(A: ThetaMatrix, m: ModuleElement) -> ModuleElement:
    """
    Apply the right module homomorphism phi^d_{lambda mu} attached to A.

    Args:
        A: basis label with A = m(lambda, d, mu)
        m: element of the component x_nu H

    Returns:
        ModuleElement in the lambda component (zero unless nu == mu)
    """
    lam, d, mu = triple_of_matrix(A)
    if m.component != mu:
        return ModuleElement(lam, HeckeElement.zero(lam.weight))
    coeffs = module_decompose(mu, m.value)
    h = HeckeElement(mu.weight, coeffs)
    return ModuleElement(lam, double_coset_sum(lam, d, mu) * h)
