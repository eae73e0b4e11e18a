"""
Точная линейная алгебра над целыми: определитель Бареисса, мультимодульный
определитель, определитель матрицы многочленов от q и нормальная форма Смита.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import factorint, prevprime

from ..errors import MatrixShapeError, PolynomialError
from .polynomial import UnivariatePolynomial

logger = logging.getLogger(__name__)

Grid = List[List[int]]

PRIME_CEILING = 2 ** 31


@dataclass(frozen=True)
class SnfDiagonal:
    """Диагональ нормальной формы Смита, дополненная нулями до min(строк, столбцов)"""
    entries: Tuple[int, ...]

    def nonzero(self) -> Tuple[int, ...]:
        return tuple(d for d in self.entries if d)

    def product(self) -> int:
        return math.prod(self.nonzero())

    def is_divisibility_chain(self) -> bool:
        values = self.nonzero()
        return all(values[i + 1] % values[i] == 0 for i in range(len(values) - 1))

    def render(self) -> str:
        return render_exponent_notation(self.entries)

    def __str__(self) -> str:
        return self.render()


def _as_grid(m) -> list:
    """LabeledMatrix, numpy-массив или список списков -> список списков"""
    entries = getattr(m, 'entries', m)
    return [list(row) for row in entries]


def _square_grid(m) -> list:
    grid = _as_grid(m)
    size = len(grid)
    if any(len(row) != size for row in grid):
        raise MatrixShapeError(f"ожидалась квадратная матрица, получено {size} строк разной длины")
    return grid


def _bareiss(grid: Grid) -> int:
    size = len(grid)
    if size == 0:
        return 1
    a = [[int(x) for x in row] for row in grid]
    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, size):
                # деление точное по тождеству Сильвестра
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous
            row_i[k] = 0
        previous = pivot
    return sign * a[size - 1][size - 1]


def det_integer(m) -> int:
    """
    Точный определитель целочисленной матрицы (метод Бареисса без дробей)

    Args:
        m: LabeledMatrix, numpy-массив dtype=object или список списков

    Returns:
        определитель
    """
    return _bareiss(_square_grid(m))


def hadamard_bound(m) -> int:
    """Целая верхняя граница |det| через произведение евклидовых норм строк"""
    bound = 1
    for row in _square_grid(m):
        bound *= math.isqrt(sum(int(x) * int(x) for x in row)) + 1
    return bound


def _det_mod_p(grid: Grid, p: int) -> int:
    size = len(grid)
    a = [[int(x) % p for x in row] for row in grid]
    det = 1
    for k in range(size):
        pivot_row = next((i for i in range(k, size) if a[i][k]), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot % p
        inverse = pow(pivot, -1, p)
        for i in range(k + 1, size):
            factor = a[i][k] * inverse % p
            if factor:
                row_i, row_k = a[i], a[k]
                for j in range(k, size):
                    row_i[j] = (row_i[j] - factor * row_k[j]) % p
    return det % p


def det_modular(m) -> int:
    """
    Мультимодульный определитель: вычеты по простым ниже 2^31 до превышения
    удвоенной границы Адамара, затем китайская теорема об остатках с
    симметричным подъёмом
    """
    grid = _square_grid(m)
    if not grid:
        return 1
    limit = 2 * hadamard_bound(grid)
    modulus = 1
    residue = 0
    p = PRIME_CEILING
    primes_used = 0
    while modulus <= limit:
        p = prevprime(p)
        r = _det_mod_p(grid, p)
        # склейка residue (mod modulus) и r (mod p)
        t = (r - residue) * pow(modulus, -1, p) % p
        residue += modulus * t
        modulus *= p
        primes_used += 1
    logger.debug("Мультимодульный определитель: %d простых", primes_used)
    if residue > modulus // 2:
        residue -= modulus
    return residue


def interpolate(points: Sequence[Tuple[int, int]]) -> UnivariatePolynomial:
    """
    Интерполяция Ньютона в рациональных числах; результат обязан иметь целые
    коэффициенты

    Args:
        points: пары (q, значение) с различными q

    Returns:
        многочлен степени < len(points)
    """
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    size = len(points)
    newton = [table[0]]
    for level in range(1, size):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(size - level)]
        newton.append(table[0])
    coefficients = [Fraction(0)]
    for index in range(size - 1, -1, -1):
        # coefficients * (q - x_index) + newton[index]
        shifted = [Fraction(0)] + coefficients
        for j, c in enumerate(coefficients):
            shifted[j] -= xs[index] * c
        shifted[0] += newton[index]
        coefficients = shifted
    if any(c.denominator != 1 for c in coefficients):
        raise PolynomialError("интерполяционный многочлен не имеет целых коэффициентов")
    return UnivariatePolynomial(int(c) for c in coefficients)


def _entry_degree(value) -> int:
    if isinstance(value, UnivariatePolynomial):
        return value.degree()
    return 0 if value else -1


def det_q(m) -> UnivariatePolynomial:
    """
    Определитель матрицы многочленов от q: значения в q = 2, 3, ..., B+2 и
    точная интерполяция, B - сумма по строкам максимальной степени элемента

    Args:
        m: квадратная матрица из UnivariatePolynomial и целых

    Returns:
        определитель как многочлен от q
    """
    grid = _square_grid(m)
    if not grid:
        return UnivariatePolynomial([1])
    bound = 0
    for row in grid:
        row_degree = max(_entry_degree(x) for x in row)
        if row_degree < 0:
            return UnivariatePolynomial([])
        bound += row_degree
    points = []
    for q in range(2, bound + 3):
        evaluated = [[x(q) if isinstance(x, UnivariatePolynomial) else int(x) for x in row] for row in grid]
        points.append((q, _bareiss(evaluated)))
    logger.debug("det_q: граница степени %d, %d точек интерполяции", bound, len(points))
    return interpolate(points)


def smith_normal_form(m) -> SnfDiagonal:
    """
    Нормальная форма Смита над Z

    Ведущий элемент - наименьший по модулю ненулевой; строка и столбец ведущего
    элемента зачищаются полностью до перехода к следующему шагу.

    Args:
        m: целочисленная матрица (не обязательно квадратная)

    Returns:
        SnfDiagonal с неотрицательными элементами
    """
    a = [[int(x) for x in row] for row in _as_grid(m)]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank_limit = min(rows, cols)
    diagonal: List[int] = []
    for t in range(rank_limit):
        pivot = _smallest_nonzero(a, t, range(t, rows), range(t, cols))
        if pivot is None:
            break
        _move_to(a, t, pivot)
        while True:
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    factor = a[i][t] // a[t][t]
                    row_i, row_t = a[i], a[t]
                    for j in range(t, cols):
                        row_i[j] -= factor * row_t[j]
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    factor = a[t][j] // a[t][t]
                    for i in range(t, rows):
                        a[i][j] -= factor * a[i][t]
                    clean = clean and a[t][j] == 0
            if not clean:
                # остатки меньше ведущего: переносим наименьший на диагональ
                cross = [(i, t) for i in range(t, rows)] + [(t, j) for j in range(t + 1, cols)]
                _move_to(a, t, min((cell for cell in cross if a[cell[0]][cell[1]]),
                                   key=lambda cell: abs(a[cell[0]][cell[1]])))
                continue
            offender = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                             if a[i][j] % a[t][t]), None)
            if offender is None:
                break
            row_t, row_i = a[t], a[offender[0]]
            for j in range(t, cols):
                row_t[j] += row_i[j]
        diagonal.append(abs(a[t][t]))
    diagonal.extend([0] * (rank_limit - len(diagonal)))
    return SnfDiagonal(tuple(diagonal))


def _smallest_nonzero(a: Grid, t: int, row_range, col_range):
    best = None
    for i in row_range:
        for j in col_range:
            value = a[i][j]
            if value and (best is None or abs(value) < abs(a[best[0]][best[1]])):
                best = (i, j)
                if abs(value) == 1:
                    return best
    return best


def _move_to(a: Grid, t: int, cell: Tuple[int, int]):
    i, j = cell
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def render_exponent_notation(entries: Sequence[int]) -> str:
    """(1,1,1,1,1,3,3) -> "(1^5,3^2)" """
    groups = []
    for value in entries:
        if groups and groups[-1][0] == value:
            groups[-1][1] += 1
        else:
            groups.append([value, 1])
    parts = [str(value) if count == 1 else f"{value}^{count}" for value, count in groups]
    return '(' + ','.join(parts) + ')'


def parse_exponent_notation(text: str) -> Tuple[int, ...]:
    body = text.strip()
    if not (body.startswith('(') and body.endswith(')')):
        raise ValueError(f"ожидалась запись в скобках: '{text}'")
    entries = []
    for part in body[1:-1].split(','):
        value, _, count = part.strip().partition('^')
        entries.extend([int(value)] * (int(count) if count else 1))
    return tuple(entries)


def factor_integer(value: int) -> str:
    """Каноническая запись разложения со знаком: 182400 -> 2^7*3*5^2*19"""
    if value == 0:
        return '0'
    sign = '-' if value < 0 else ''
    factors = factorint(abs(value))
    if not factors:
        return sign + '1'
    parts = [str(p) if e == 1 else f"{p}^{e}" for p, e in sorted(factors.items())]
    return sign + '*'.join(parts)


def determinant(m, method: str = 'bareiss') -> int:
    if method == 'bareiss':
        return det_integer(m)
    if method == 'modular':
        return det_modular(m)
    raise ValueError(f"неизвестный метод определителя: {method}")
