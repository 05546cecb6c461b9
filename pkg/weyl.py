"""
Weyl group of type C_r for the iSchur toolkit
Elements are theta-fixed permutations of [1, 2r]: s_j (j < r) swaps (j, j+1) and
(2r-j, 2r+1-j), s_r swaps (r, r+1). Also holds compositions, centro-symmetric
matrices and the bijection between triples (lambda, d, mu) and matrices.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from errors import (
    CapExceededError,
    InvalidCompositionError,
    InvalidMatrixError,
    ParameterRangeError,
)

MAX_GROUP_RANK = 5


# ===== Weyl group elements =====

@dataclass(frozen=True)
class WeylElement:
    """w stored by its images (w(1), ..., w(2r))"""

    images: Tuple[int, ...]

    @classmethod
    def checked(cls, images: Sequence[int]) -> "WeylElement":
        images = tuple(int(i) for i in images)
        size = len(images)
        if size % 2 or sorted(images) != list(range(1, size + 1)):
            raise ParameterRangeError(f"Invalid permutation images: {images}")
        for j in range(size):
            if images[j] + images[size - 1 - j] != size + 1:
                raise ParameterRangeError(f"Permutation {images} is not theta-fixed")
        return cls(images)

    @property
    def rank(self) -> int:
        return len(self.images) // 2

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(k) = self(other(k))
        mine = self.images
        return WeylElement(tuple(mine[k - 1] for k in other.images))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.images)
        for k, image in enumerate(self.images, start=1):
            inv[image - 1] = k
        return WeylElement(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.images, start=1))

    def __repr__(self):
        return f"WeylElement{self.images}"

    def to_json(self) -> Dict:
        return {"images": list(self.images)}


@lru_cache(maxsize=None)
def identity(r: int) -> WeylElement:
    return WeylElement(tuple(range(1, 2 * r + 1)))


@lru_cache(maxsize=None)
def generator(r: int, j: int) -> WeylElement:
    """The simple reflection s_j of W(C_r)"""
    if not 1 <= j <= r:
        raise ParameterRangeError(f"Generator index {j} out of range [1, {r}]")
    images = list(range(1, 2 * r + 1))
    if j < r:
        images[j - 1], images[j] = images[j], images[j - 1]
        a, b = 2 * r - j, 2 * r + 1 - j
        images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
    else:
        images[r - 1], images[r] = images[r], images[r - 1]
    return WeylElement(tuple(images))


def word_to_element(r: int, word: Sequence[int]) -> WeylElement:
    """Product s_{w1} s_{w2} ... of generators, read left to right"""
    result = identity(r)
    for j in word:
        result = result * generator(r, j)
    return result


def left_descent(w: WeylElement, j: int) -> bool:
    """True when l(s_j w) < l(w): the value j sits to the right of the value j+1"""
    images = w.images
    return images.index(j) > images.index(j + 1)


def right_descent(w: WeylElement, j: int) -> bool:
    """True when l(w s_j) < l(w)"""
    return w.images[j - 1] > w.images[j]


@lru_cache(maxsize=None)
def reduced_word(w: WeylElement) -> Tuple[int, ...]:
    """Descent-greedy reduced word: w = s_{a1} s_{a2} ... s_{ak}"""
    r = w.rank
    word = []
    current = w
    while not current.is_identity():
        for j in range(1, r + 1):
            if left_descent(current, j):
                word.append(j)
                current = generator(r, j) * current
                break
    return tuple(word)


def length(w: WeylElement) -> int:
    return len(reduced_word(w))


@lru_cache(maxsize=None)
def enumerate_group(r: int) -> Tuple[Tuple[WeylElement, int], ...]:
    """
    All 2^r r! elements of W(C_r) with their lengths, found by BFS from the identity.

    Returns:
        tuple of (element, length) sorted by length then images
    """
    if r > MAX_GROUP_RANK:
        raise CapExceededError(f"Rank {r} too large for exhaustive mode (max {MAX_GROUP_RANK})")
    if r < 0:
        raise ParameterRangeError(f"Invalid rank: {r}")
    start = identity(r)
    distance = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for j in range(1, r + 1):
            sw = generator(r, j) * w
            if sw not in distance:
                distance[sw] = distance[w] + 1
                queue.append(sw)
    return tuple(sorted(distance.items(), key=lambda item: (item[1], item[0].images)))


def group_elements(r: int) -> List[WeylElement]:
    return [w for w, _ in enumerate_group(r)]


# ===== Compositions =====

@dataclass(frozen=True)
class Composition:
    """lambda in Lambda(n, r): n nonnegative parts summing to r"""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise InvalidCompositionError("A composition needs at least one part")
        if any((not isinstance(p, int)) or p < 0 for p in self.parts):
            raise InvalidCompositionError(f"Invalid composition parts: {self.parts}")

    @classmethod
    def of(cls, parts: Sequence[int], n: int = None, r: int = None) -> "Composition":
        comp = cls(tuple(int(p) for p in parts))
        if n is not None and comp.n != n:
            raise InvalidCompositionError(f"Composition {comp.parts} should have {n} parts")
        if r is not None and comp.weight != r:
            raise InvalidCompositionError(f"Composition {comp.parts} should have weight {r}")
        return comp

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def hat(self) -> Tuple[int, ...]:
        """(lambda_1, ..., lambda_n, lambda_n, ..., lambda_1)"""
        return self.parts + tuple(reversed(self.parts))

    def __repr__(self):
        return f"Composition{self.parts}"

    def to_json(self) -> Dict:
        return {"parts": list(self.parts)}


@lru_cache(maxsize=None)
def compositions(n: int, r: int) -> Tuple[Composition, ...]:
    """Lambda(n, r) in lexicographic order"""
    if n < 1 or r < 0:
        raise ParameterRangeError(f"Invalid (n, r) = ({n}, {r}) for compositions")

    def build(slots: int, total: int):
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in build(slots - 1, total - first):
                yield (first,) + rest

    return tuple(Composition(parts) for parts in build(n, r))


def blocks(hat_parts: Sequence[int]) -> List[range]:
    """Consecutive index blocks R_1, R_2, ... of a composition of 2r, 1-based"""
    result = []
    start = 1
    for part in hat_parts:
        result.append(range(start, start + part))
        start += part
    return result


def _block_lookup(hat_parts: Sequence[int]) -> Tuple[int, ...]:
    """position k (1-based) -> index of the block containing it (0-based)"""
    lookup = []
    for index, part in enumerate(hat_parts):
        lookup.extend([index] * part)
    return tuple(lookup)


# ===== Parabolic subgroups and cosets =====

def parabolic_generators(lam: Composition) -> Tuple[int, ...]:
    """Generators of W_lambda: S minus {s_{lambda_1 + ... + lambda_i}}, so s_r never appears"""
    r = lam.weight
    removed = set()
    running = 0
    for part in lam.parts:
        running += part
        removed.add(running)
    return tuple(j for j in range(1, r) if j not in removed)


@lru_cache(maxsize=None)
def parabolic(lam: Composition) -> FrozenSet[WeylElement]:
    r = lam.weight
    gens = [generator(r, j) for j in parabolic_generators(lam)]
    seen = {identity(r)}
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        for s in gens:
            sw = s * w
            if sw not in seen:
                seen.add(sw)
                queue.append(sw)
    return frozenset(seen)


@lru_cache(maxsize=None)
def longest_parabolic_length(lam: Composition) -> int:
    """l(w_{lambda,0})"""
    return max(length(w) for w in parabolic(lam))


@lru_cache(maxsize=None)
def coset_reps(lam: Composition, side: str = "right_min") -> Tuple[WeylElement, ...]:
    """
    D_lambda: shortest representatives of the right cosets W_lambda d.

    Args:
        lam: composition in Lambda(n, r)
        side: only "right_min" is supported
    """
    if side != "right_min":
        raise ValueError(f"Invalid coset side: {side}")
    gens = parabolic_generators(lam)
    return tuple(
        d for d in group_elements(lam.weight)
        if not any(left_descent(d, j) for j in gens)
    )


@dataclass(frozen=True)
class DoubleCoset:
    elements: FrozenSet[WeylElement]
    d_min: WeylElement
    d_plus: WeylElement


@lru_cache(maxsize=None)
def double_coset(lam: Composition, mu: Composition, d: WeylElement) -> DoubleCoset:
    """W_lambda d W_mu with its shortest and longest elements"""
    if lam.weight != mu.weight or d.rank != lam.weight:
        raise ParameterRangeError("Double coset data of different ranks")
    left = parabolic(lam)
    right = parabolic(mu)
    elements = frozenset(x * d * y for x in left for y in right)
    ordered = sorted(elements, key=lambda w: (length(w), w.images))
    return DoubleCoset(elements, ordered[0], ordered[-1])


def in_double_reps(lam: Composition, mu: Composition, d: WeylElement) -> bool:
    """d in D_{lambda mu} = D_lambda cap D_mu^{-1}"""
    return (not any(left_descent(d, j) for j in parabolic_generators(lam))
            and not any(right_descent(d, j) for j in parabolic_generators(mu)))


# ===== Centro-symmetric matrices =====

@dataclass(frozen=True)
class ThetaMatrix:
    """A in Xi_{2n}: a centro-symmetric 2n x 2n matrix of nonnegative integers"""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        size = len(self.entries)
        if size == 0 or size % 2:
            raise InvalidMatrixError(f"Matrix must have even positive size, got {size}")
        for row in self.entries:
            if len(row) != size:
                raise InvalidMatrixError("Matrix must be square")
            if any((not isinstance(a, int)) or a < 0 for a in row):
                raise InvalidMatrixError(f"Matrix entries must be nonnegative integers: {row}")
        for i in range(size):
            for j in range(size):
                if self.entries[i][j] != self.entries[size - 1 - i][size - 1 - j]:
                    raise InvalidMatrixError(
                        f"Matrix is not centro-symmetric at ({i + 1}, {j + 1})"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ThetaMatrix":
        return cls(tuple(tuple(int(a) for a in row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> "ThetaMatrix":
        return cls(tuple((0,) * (2 * n) for _ in range(2 * n)))

    @classmethod
    def diag(cls, vector: Sequence[int]) -> "ThetaMatrix":
        size = len(vector)
        return cls(tuple(
            tuple(vector[i] if i == j else 0 for j in range(size)) for i in range(size)
        ))

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    @property
    def size(self) -> int:
        return len(self.entries)

    def __call__(self, i: int, j: int) -> int:
        """a_{i,j}, 1-based"""
        return self.entries[i - 1][j - 1]

    def total(self) -> int:
        """|A|"""
        return sum(sum(row) for row in self.entries)

    def ro(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def co(self) -> Tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.entries))

    def row_major(self) -> Tuple[int, ...]:
        return tuple(a for row in self.entries for a in row)

    def is_diagonal(self) -> bool:
        return all(a == 0 for i, row in enumerate(self.entries) for j, a in enumerate(row) if i != j)

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))

    def off_diagonal(self) -> "ThetaMatrix":
        return ThetaMatrix(tuple(
            tuple(0 if i == j else a for j, a in enumerate(row)) for i, row in enumerate(self.entries)
        ))

    def __add__(self, other: "ThetaMatrix") -> "ThetaMatrix":
        return self.combine(other, 1)

    def __sub__(self, other: "ThetaMatrix") -> "ThetaMatrix":
        return self.combine(other, -1)

    def combine(self, other: "ThetaMatrix", k: int) -> "ThetaMatrix":
        """self + k * other; raises InvalidMatrixError on a negative entry"""
        if other.size != self.size:
            raise InvalidMatrixError("Matrix sizes differ")
        return ThetaMatrix(tuple(
            tuple(a + k * b for a, b in zip(row, orow))
            for row, orow in zip(self.entries, other.entries)
        ))

    def plus_diag(self, vector: Sequence[int]) -> "ThetaMatrix":
        return self + ThetaMatrix.diag(vector)

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def __repr__(self):
        return f"ThetaMatrix({self.rows()})"

    def to_json(self) -> Dict:
        return {"n": self.n, "rows": self.rows()}


def theta_unit(n: int, i: int, j: int, k: int = 1) -> ThetaMatrix:
    """k * E^theta_{i,j} = k * (E_{i,j} + E_{2n+1-i, 2n+1-j})"""
    size = 2 * n
    if not (1 <= i <= size and 1 <= j <= size):
        raise ParameterRangeError(f"Index ({i}, {j}) out of range for 2n = {size}")
    rows = [[0] * size for _ in range(size)]
    rows[i - 1][j - 1] += k
    rows[size - i][size - j] += k
    return ThetaMatrix.from_rows(rows)


def theta_e(n: int, i: int, k: int = 1) -> Tuple[int, ...]:
    """k * e^theta_i = k * (e_i + e_{2n+1-i})"""
    vector = [0] * (2 * n)
    vector[i - 1] += k
    vector[2 * n - i] += k
    return tuple(vector)


def unit_vector(size: int, i: int, k: int = 1) -> Tuple[int, ...]:
    vector = [0] * size
    vector[i - 1] = k
    return tuple(vector)


def add_vectors(*vectors: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(parts) for parts in zip(*vectors))


def profile(vector: Sequence[int]) -> Composition:
    """The composition lambda with hat(lambda) == vector"""
    n = len(vector) // 2
    parts = tuple(vector[:n])
    if tuple(vector) != parts + tuple(reversed(parts)):
        raise InvalidMatrixError(f"Profile {tuple(vector)} is not palindromic")
    return Composition(parts)


# ===== Triples and matrices =====

def matrix_of_triple(lam: Composition, d: WeylElement, mu: Composition,
                     check: bool = True) -> ThetaMatrix:
    """
    a_{i,j} = |R_i cap d(C_j)| for the blocks R, C of hat(lambda), hat(mu).

    Raises:
        ParameterRangeError: if d is not in D_{lambda mu} (when check is on)
    """
    if lam.n != mu.n or lam.weight != mu.weight or d.rank != lam.weight:
        raise ParameterRangeError("Triple has inconsistent n or r")
    if check and not in_double_reps(lam, mu, d):
        raise ParameterRangeError(f"{d} is not a minimal double coset representative")
    size = 2 * lam.n
    row_block = _block_lookup(lam.hat())
    col_block = _block_lookup(mu.hat())
    counts = [[0] * size for _ in range(size)]
    for k in range(1, 2 * lam.weight + 1):
        counts[row_block[d(k) - 1]][col_block[k - 1]] += 1
    return ThetaMatrix.from_rows(counts)


@lru_cache(maxsize=None)
def double_coset_table(lam: Composition, mu: Composition) -> Dict[ThetaMatrix, WeylElement]:
    """Every d in D_{lambda mu} keyed by its matrix"""
    table = {}
    for d in group_elements(lam.weight):
        if in_double_reps(lam, mu, d):
            table[matrix_of_triple(lam, d, mu, check=False)] = d
    return table


def triple_of_matrix(A: ThetaMatrix) -> Tuple[Composition, WeylElement, Composition]:
    """Inverse of matrix_of_triple"""
    lam = profile(A.ro())
    mu = profile(A.co())
    d = double_coset_table(lam, mu).get(A)
    if d is None:
        raise InvalidMatrixError(f"No double coset matches {A}")
    return lam, d, mu


def triple_count(n: int, r: int) -> int:
    """Number of triples (lambda, d, mu) with d in D_{lambda mu}"""
    comps = compositions(n, r)
    return sum(len(double_coset_table(lam, mu)) for lam in comps for mu in comps)
