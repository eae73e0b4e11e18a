"""
Повышающие операторы U (слабый порядок) и V (порядок Брюа), алгебра
нильКокстера и построение матриц D(n,k), D̃(n,k), D̃_q(n,k), E(n,k).

Строки матриц нумеруются уровнем k, столбцы - уровнем C(n,2)-k, оба в
лексикографическом порядке однострочных записей.
"""
import csv
import io
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence

import numpy as np
from tqdm import tqdm

from ..combinatorics.permutation import (
    Permutation, RankLevel, bruhat_covers, compose, format_permutation, identity, inverse,
    length, level, max_length, rank_sizes, simple_reflection, weak_covers,
)
from ..errors import LevelRangeError, PermutationError
from .nu_cache import NuCache
from .polynomial import UnivariatePolynomial
from .schubert import monk_sum, nu, q_nu, schubert, schubert_coefficient

logger = logging.getLogger(__name__)


@dataclass
class LevelVector:
    """Элемент пространства с базисом (W_n)_k: {перестановка длины k: коэффициент}"""
    n: int
    k: int
    coordinates: Dict[Permutation, int] = field(default_factory=dict)

    def __post_init__(self):
        for w in self.coordinates:
            if w.n != self.n or length(w) != self.k:
                raise LevelRangeError(f"{w} не лежит на уровне {self.k} группы S_{self.n}")
        self.coordinates = {w: c for w, c in self.coordinates.items() if c}

    @classmethod
    def basis(cls, w: Permutation) -> 'LevelVector':
        return cls(w.n, length(w), {w: 1})

    def coefficient(self, w: Permutation) -> int:
        return self.coordinates.get(w, 0)

    def is_zero(self) -> bool:
        return not self.coordinates

    def __eq__(self, other) -> bool:
        return isinstance(other, LevelVector) and (self.n, self.k, self.coordinates) == \
            (other.n, other.k, other.coordinates)


def _raise(x: LevelVector, covers: Callable, weight: Callable) -> LevelVector:
    if x.k >= max_length(x.n):
        raise LevelRangeError(f"уровень {x.k} - верхний для S_{x.n}, подъём невозможен")
    result: Dict[Permutation, int] = {}
    for u, c in x.coordinates.items():
        for label, v in covers(u):
            result[v] = result.get(v, 0) + c * weight(label)
    return LevelVector(x.n, x.k + 1, result)


def apply_U(x: LevelVector) -> LevelVector:
    """U(u) = Σ_{ℓ(us_i) = ℓ(u)+1} i · us_i"""
    return _raise(x, weak_covers, lambda i: i)


def apply_V(x: LevelVector) -> LevelVector:
    """V(u) = Σ_{ℓ(ut_ij) = ℓ(u)+1} (j-i) · ut_ij"""
    return _raise(x, bruhat_covers, lambda pair: pair[1] - pair[0])


def apply_U_power(x: LevelVector, j: int) -> LevelVector:
    for _ in range(j):
        x = apply_U(x)
    return x


def apply_V_power(x: LevelVector, j: int) -> LevelVector:
    for _ in range(j):
        x = apply_V(x)
    return x


class LabeledMatrix:
    """Плотная матрица с подписями строк и столбцов перестановками"""

    def __init__(self, n: int, k: int, kind: str, row_labels: RankLevel, col_labels: RankLevel,
                 entries: np.ndarray):
        """
        Args:
            n: размер группы
            k: нижний уровень
            kind: "D", "Dtilde", "Dtilde_q", "E" или "theta"
            row_labels: уровень строк
            col_labels: уровень столбцов
            entries: numpy-массив dtype=object с целыми или многочленами от q
        """
        self.n = n
        self.k = k
        self.kind = kind
        self.row_labels = row_labels
        self.col_labels = col_labels
        self.entries = entries

    @property
    def shape(self):
        return self.entries.shape

    def is_square(self) -> bool:
        rows, cols = self.entries.shape
        return rows == cols

    def __getitem__(self, index):
        return self.entries[index]

    def entry(self, u: Permutation, v: Permutation):
        return self.entries[self.row_labels.position(u), self.col_labels.position(v)]

    def submatrix(self, drop_row: int, drop_col: int) -> np.ndarray:
        """Минор без строки drop_row и столбца drop_col (подписи теряются)"""
        kept = np.delete(self.entries, drop_row, axis=0)
        return np.delete(kept, drop_col, axis=1)

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> np.ndarray:
        return self.entries[np.ix_(list(row_order), list(col_order))]

    def map(self, function: Callable, kind: Optional[str] = None) -> 'LabeledMatrix':
        mapped = np.empty(self.entries.shape, dtype=object)
        for index, value in np.ndenumerate(self.entries):
            mapped[index] = function(value)
        return LabeledMatrix(self.n, self.k, kind or self.kind, self.row_labels, self.col_labels, mapped)

    def at_q(self, value: int) -> 'LabeledMatrix':
        """Подстановка q = value во все элементы q-матрицы"""
        kind = 'Dtilde' if self.kind == 'Dtilde_q' else self.kind
        return self.map(lambda p: p(value) if isinstance(p, UnivariatePolynomial) else p, kind)

    def __eq__(self, other) -> bool:
        return isinstance(other, LabeledMatrix) and self.entries.shape == other.entries.shape \
            and self.row_labels.members == other.row_labels.members \
            and self.col_labels.members == other.col_labels.members \
            and all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    def to_json_dict(self) -> dict:
        def encode(value):
            if isinstance(value, UnivariatePolynomial):
                return [str(c) for c in value.coefficients]
            return str(value)

        return {
            'n': self.n,
            'k': self.k,
            'kind': self.kind,
            'row_labels': [format_permutation(w) for w in self.row_labels],
            'col_labels': [format_permutation(w) for w in self.col_labels],
            'entries': [[encode(x) for x in row] for row in self.entries],
        }

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow([''] + [format_permutation(w) for w in self.col_labels])
        for u, row in zip(self.row_labels, self.entries):
            writer.writerow([format_permutation(u)] + [str(x) for x in row])
        return buffer.getvalue()

    def to_text(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        lines = [f"{self.kind}({self.n},{self.k}): {self.shape[0]}x{self.shape[1]}"]
        for row in cells:
            lines.append(' '.join(c.rjust(width) for c in row))
        return '\n'.join(lines)


def check_level_range(n: int, k: int):
    if n < 2 or not 0 <= 2 * k < max_length(n):
        raise LevelRangeError(f"k={k} вне диапазона 0 <= k < C({n},2)/2")


def _fill_rows(rows: RankLevel, cols: RankLevel, row_builder: Callable[[Permutation], Sequence],
               threads: int = 1, progress: bool = False, description: str = '') -> np.ndarray:
    # строки независимы; порядок сборки не зависит от порядка завершения задач
    entries = np.empty((len(rows), len(cols)), dtype=object)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            built = list(tqdm(pool.map(row_builder, rows.members), total=len(rows),
                              desc=description, disable=not progress))
    else:
        built = [row_builder(u) for u in tqdm(rows.members, desc=description, disable=not progress)]
    for index, row in enumerate(built):
        entries[index, :] = row
    return entries


def _power_row(u: Permutation, cols: RankLevel, raise_once: Callable, power: int) -> list:
    vector = LevelVector.basis(u)
    for _ in range(power):
        vector = raise_once(vector)
    row = [0] * len(cols)
    for v, c in vector.coordinates.items():
        row[cols.position(v)] = c
    return row


def build_D(n: int, k: int, threads: int = 1, progress: bool = False) -> LabeledMatrix:
    """
    Матрица D(n,k) отображения U^{C(n,2)-2k}: (W_n)_k -> (W_n)_{C(n,2)-k}

    Args:
        n: размер группы
        k: уровень, 0 <= k < C(n,2)/2
        threads: число потоков для построения строк
        progress: показывать прогресс

    Returns:
        квадратная LabeledMatrix
    """
    check_level_range(n, k)
    top = max_length(n)
    rows, cols = level(n, k), level(n, top - k)
    entries = _fill_rows(rows, cols, lambda u: _power_row(u, cols, apply_U, top - 2 * k),
                         threads, progress, f"D({n},{k})")
    return LabeledMatrix(n, k, 'D', rows, cols, entries)


def connecting_permutation(u: Permutation, v: Permutation) -> Optional[Permutation]:
    """u^{-1}∘v, если u <= v в слабом порядке, иначе None"""
    c = compose(inverse(u), v)
    if length(u) + length(c) == length(v):
        return c
    return None


def build_D_tilde(n: int, k: int, cache: Optional[NuCache] = None, threads: int = 1,
                  progress: bool = False) -> LabeledMatrix:
    """
    Матрица D̃(n,k): элемент (u,v) равен ν_{u^{-1}∘v} при u <= v, иначе 0

    Args:
        n: размер группы
        k: уровень
        cache: кеш значений ν (создаётся в памяти, если не задан)
        threads: число потоков
        progress: показывать прогресс

    Returns:
        LabeledMatrix с целыми элементами
    """
    check_level_range(n, k)
    cache = cache if cache is not None else NuCache(n)
    rows, cols = level(n, k), level(n, max_length(n) - k)

    def row_builder(u: Permutation) -> list:
        row = []
        for v in cols:
            c = connecting_permutation(u, v)
            row.append(0 if c is None else nu(c, cache))
        return row

    entries = _fill_rows(rows, cols, row_builder, threads, progress, f"D~({n},{k})")
    return LabeledMatrix(n, k, 'Dtilde', rows, cols, entries)


def build_D_tilde_q(n: int, k: int, threads: int = 1, progress: bool = False) -> LabeledMatrix:
    """D̃_q(n,k): элементы 𝔖_c(1, q, q^2, ...) вместо ν_c"""
    check_level_range(n, k)
    rows, cols = level(n, k), level(n, max_length(n) - k)
    zero = UnivariatePolynomial([])

    def row_builder(u: Permutation) -> list:
        row = []
        for v in cols:
            c = connecting_permutation(u, v)
            row.append(zero if c is None else q_nu(c))
        return row

    entries = _fill_rows(rows, cols, row_builder, threads, progress, f"D~_q({n},{k})")
    return LabeledMatrix(n, k, 'Dtilde_q', rows, cols, entries)


def build_E(n: int, k: int, threads: int = 1, progress: bool = False) -> LabeledMatrix:
    """Матрица E(n,k) отображения V^{C(n,2)-2k} в порядке Брюа"""
    check_level_range(n, k)
    top = max_length(n)
    rows, cols = level(n, k), level(n, top - k)
    entries = _fill_rows(rows, cols, lambda u: _power_row(u, cols, apply_V, top - 2 * k),
                         threads, progress, f"E({n},{k})")
    return LabeledMatrix(n, k, 'E', rows, cols, entries)


def build_E_via_expansion(n: int, k: int) -> LabeledMatrix:
    """
    E(n,k) по определению: [𝔖_v] 𝔖_u (𝔖_{s_1} + ... + 𝔖_{s_{n-1}})^{C(n,2)-2k}

    Коэффициент при 𝔖_v, v ∈ S_n, читается как свободный член ∂_v без
    полного разложения произведения.
    """
    check_level_range(n, k)
    top = max_length(n)
    power = top - 2 * k
    degree = top - k
    rows, cols = level(n, k), level(n, degree)
    generator = monk_sum(n, n - 1) ** power
    entries = np.empty((len(rows), len(cols)), dtype=object)
    for index, u in enumerate(rows):
        f = schubert(u) * generator
        entries[index, :] = [schubert_coefficient(f, v) for v in cols]
    return LabeledMatrix(n, k, 'E', rows, cols, entries)


def k1_display_matrix(n: int) -> np.ndarray:
    """
    Явная (n-1)x(n-1) матрица для k = 1: в строке r ноль в столбце n-2-r,
    двойка в столбце n-3-r, остальные единицы
    """
    size = n - 1
    matrix = np.ones((size, size), dtype=object)
    for r in range(size):
        matrix[r, size - 1 - r] = 0
        if size - 2 - r >= 0:
            matrix[r, size - 2 - r] = 2
    return matrix


@dataclass
class NilCoxeterElement:
    """Элемент алгебры нильКокстера: {w: коэффициент при σ_w}"""
    n: int
    terms: Dict[Permutation, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if c}

    def __mul__(self, other: 'NilCoxeterElement') -> 'NilCoxeterElement':
        return nilcoxeter_multiply(self, other)


def nilcoxeter_multiply(a: NilCoxeterElement, b: NilCoxeterElement) -> NilCoxeterElement:
    """σ_u σ_v = σ_{uv} при ℓ(uv) = ℓ(u) + ℓ(v), иначе 0"""
    if a.n != b.n:
        raise PermutationError(f"элементы из разных алгебр: N_{a.n} и N_{b.n}")
    result: Dict[Permutation, int] = {}
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            uv = compose(u, v)
            if length(uv) == length(u) + length(v):
                result[uv] = result.get(uv, 0) + c * d
    return NilCoxeterElement(a.n, result)


def theta(n: int) -> NilCoxeterElement:
    """θ = Σ i σ_{s_i}"""
    return NilCoxeterElement(n, {simple_reflection(n, i): i for i in range(1, n)})


def nilcoxeter_power(a: NilCoxeterElement, j: int) -> NilCoxeterElement:
    result = NilCoxeterElement(a.n, {identity(a.n): 1})
    for _ in range(j):
        result = nilcoxeter_multiply(result, a)
    return result


def theta_matrix(n: int, k: int) -> LabeledMatrix:
    """Матрица умножения справа на θ^{C(n,2)-2k}: (N_n)_k -> (N_n)_{C(n,2)-k}"""
    check_level_range(n, k)
    top = max_length(n)
    rows, cols = level(n, k), level(n, top - k)
    power = nilcoxeter_power(theta(n), top - 2 * k)
    entries = np.empty((len(rows), len(cols)), dtype=object)
    for index, u in enumerate(rows):
        product = nilcoxeter_multiply(NilCoxeterElement(n, {u: 1}), power)
        entries[index, :] = [product.terms.get(v, 0) for v in cols]
    return LabeledMatrix(n, k, 'theta', rows, cols, entries)


def scaling_factor(n: int, k: int) -> int:
    return math.factorial(max_length(n) - 2 * k)


def level_side(n: int, k: int) -> int:
    return rank_sizes(n)[k]
