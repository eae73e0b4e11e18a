"""
Разреженные многочлены от x_1, ..., x_m с целыми коэффициентами произвольной
точности, разделённые разности и специализации; многочлены от одной
переменной q.
"""
import re
from typing import Dict, Iterable, List, Sequence, Tuple

from ..errors import PolynomialError

Exponent = Tuple[int, ...]


class SparsePolynomial:
    """Многочлен как словарь {вектор показателей: ненулевой коэффициент}"""

    __slots__ = ('nvars', 'terms')

    def __init__(self, nvars: int, terms: Dict[Exponent, int] = None):
        """
        Args:
            nvars: число переменных m
            terms: словарь {показатели: коэффициент}, нули отбрасываются
        """
        self.nvars = nvars
        cleaned = {}
        for exponent, coefficient in (terms or {}).items():
            if len(exponent) != nvars:
                raise PolynomialError(f"вектор показателей {exponent} не имеет длину {nvars}")
            if coefficient:
                cleaned[tuple(exponent)] = int(coefficient)
        self.terms = cleaned

    @classmethod
    def constant(cls, value: int, nvars: int) -> 'SparsePolynomial':
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index: int, nvars: int) -> 'SparsePolynomial':
        """Переменная x_index (нумерация с 1)"""
        if not 1 <= index <= nvars:
            raise PolynomialError(f"переменная x{index} вне диапазона 1..{nvars}")
        exponent = [0] * nvars
        exponent[index - 1] = 1
        return cls(nvars, {tuple(exponent): 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: int = 1) -> 'SparsePolynomial':
        return cls(len(exponent), {tuple(exponent): coefficient})

    def _check(self, other: 'SparsePolynomial'):
        if self.nvars != other.nvars:
            raise PolynomialError(f"число переменных не совпадает: {self.nvars} и {other.nvars}")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == SparsePolynomial.constant(other, self.nvars)
        return isinstance(other, SparsePolynomial) and self.nvars == other.nvars \
            and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: 'SparsePolynomial') -> 'SparsePolynomial':
        return add(self, other)

    def __sub__(self, other: 'SparsePolynomial') -> 'SparsePolynomial':
        return subtract(self, other)

    def __neg__(self) -> 'SparsePolynomial':
        return scale(self, -1)

    def __mul__(self, other) -> 'SparsePolynomial':
        if isinstance(other, int):
            return scale(self, other)
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'SparsePolynomial':
        return power(self, exponent)

    def degree(self) -> int:
        """Полная степень; для нулевого многочлена -1"""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def extend(self, nvars: int) -> 'SparsePolynomial':
        """Тот же многочлен в большем числе переменных"""
        if nvars < self.nvars:
            raise PolynomialError("число переменных можно только увеличить")
        pad = (0,) * (nvars - self.nvars)
        return SparsePolynomial(nvars, {e + pad: c for e, c in self.terms.items()})

    def support_size(self) -> int:
        """Наибольший номер переменной, реально входящей в многочлен"""
        used = 0
        for exponent in self.terms:
            for index in range(len(exponent), 0, -1):
                if exponent[index - 1]:
                    used = max(used, index)
                    break
        return used

    def __repr__(self) -> str:
        return f"SparsePolynomial({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def add(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    f._check(g)
    terms = dict(f.terms)
    for exponent, coefficient in g.terms.items():
        terms[exponent] = terms.get(exponent, 0) + coefficient
    return SparsePolynomial(f.nvars, terms)


def scale(f: SparsePolynomial, factor: int) -> SparsePolynomial:
    return SparsePolynomial(f.nvars, {e: c * factor for e, c in f.terms.items()})


def subtract(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return add(f, scale(g, -1))


def multiply(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    f._check(g)
    terms: Dict[Exponent, int] = {}
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            exponent = tuple(a + b for a, b in zip(e1, e2))
            terms[exponent] = terms.get(exponent, 0) + c1 * c2
    return SparsePolynomial(f.nvars, terms)


def power(f: SparsePolynomial, exponent: int) -> SparsePolynomial:
    if exponent < 0:
        raise PolynomialError("отрицательная степень многочлена")
    result = SparsePolynomial.constant(1, f.nvars)
    base = f
    while exponent:
        if exponent & 1:
            result = multiply(result, base)
        exponent >>= 1
        if exponent:
            base = multiply(base, base)
    return result


def swap_variables(f: SparsePolynomial, i: int) -> SparsePolynomial:
    """s_i f: перестановка переменных x_i и x_{i+1}"""
    if not 1 <= i < f.nvars:
        raise PolynomialError(f"индекс {i} вне диапазона 1..{f.nvars - 1}")
    terms = {}
    for exponent, coefficient in f.terms.items():
        swapped = list(exponent)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        terms[tuple(swapped)] = coefficient
    return SparsePolynomial(f.nvars, terms)


def divided_difference(f: SparsePolynomial, i: int) -> SparsePolynomial:
    """
    Разделённая разность ∂_i f = (f - s_i f) / (x_i - x_{i+1})

    Деление точное: каждый моном x_i^a x_{i+1}^b раскрывается в сумму
    геометрической прогрессии без деления многочленов.

    Args:
        f: многочлен
        i: индекс, 1 <= i < m

    Returns:
        многочлен степени deg(f) - 1 (или нулевой)
    """
    if not 1 <= i < f.nvars:
        raise PolynomialError(f"индекс ∂_{i} вне диапазона 1..{f.nvars - 1}")
    left, right = i - 1, i
    terms: Dict[Exponent, int] = {}
    for exponent, coefficient in f.terms.items():
        a, b = exponent[left], exponent[right]
        if a == b:
            continue
        if a > b:
            sign, high, low = 1, a, b
        else:
            sign, high, low = -1, b, a
        base = list(exponent)
        for t in range(high - low):
            base[left] = high - 1 - t
            base[right] = low + t
            key = tuple(base)
            terms[key] = terms.get(key, 0) + sign * coefficient
    return SparsePolynomial(f.nvars, terms)


def evaluate_ones(f: SparsePolynomial) -> int:
    """Значение при x_1 = ... = x_m = 1: сумма коэффициентов"""
    return sum(f.terms.values())


def evaluate_at(f: SparsePolynomial, values: Sequence[int]) -> int:
    if len(values) != f.nvars:
        raise PolynomialError(f"ожидалось {f.nvars} значений, получено {len(values)}")
    total = 0
    for exponent, coefficient in f.terms.items():
        term = coefficient
        for value, e in zip(values, exponent):
            if e:
                term *= value ** e
        total += term
    return total


def evaluate_q_powers(f: SparsePolynomial) -> 'UnivariatePolynomial':
    """Подстановка x_i -> q^{i-1}"""
    coefficients: Dict[int, int] = {}
    for exponent, coefficient in f.terms.items():
        degree = sum(index * e for index, e in enumerate(exponent))
        coefficients[degree] = coefficients.get(degree, 0) + coefficient
    if not coefficients:
        return UnivariatePolynomial([])
    dense = [0] * (max(coefficients) + 1)
    for degree, coefficient in coefficients.items():
        dense[degree] = coefficient
    return UnivariatePolynomial(dense)


def _grlex_key(exponent: Exponent):
    return (sum(exponent), exponent)


def render(f: SparsePolynomial) -> str:
    """Каноническая запись, например "x1^2*x2 + x1*x2^2" (градуированный лексикографический порядок)"""
    if f.is_zero():
        return '0'
    pieces = []
    for exponent in sorted(f.terms, key=_grlex_key, reverse=True):
        coefficient = f.terms[exponent]
        factors = []
        for index, e in enumerate(exponent, 1):
            if e == 1:
                factors.append(f"x{index}")
            elif e > 1:
                factors.append(f"x{index}^{e}")
        magnitude = abs(coefficient)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = '*'.join(factors)
        else:
            body = f"{magnitude}*" + '*'.join(factors)
        if not pieces:
            pieces.append(body if coefficient > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
    return ' '.join(pieces)


_TERM_RE = re.compile(r'([+-])?\s*([^+-]+)')
_FACTOR_RE = re.compile(r'^(?:(\d+)|x(\d+)(?:\^(\d+))?)$')


def parse(text: str, nvars: int) -> SparsePolynomial:
    """
    Разбор канонической записи (та же грамматика, что у render)

    Args:
        text: строка вида "3*x1^2*x2 - x3 + 1"
        nvars: число переменных

    Returns:
        многочлен
    """
    compact = text.replace(' ', '')
    if compact in ('', '0'):
        return SparsePolynomial(nvars)
    terms: Dict[Exponent, int] = {}
    position = 0
    for match in _TERM_RE.finditer(compact):
        if match.start() != position:
            raise PolynomialError(f"не удалось разобрать '{text}'")
        position = match.end()
        sign = -1 if match.group(1) == '-' else 1
        coefficient = sign
        exponent = [0] * nvars
        for factor in match.group(2).split('*'):
            parsed = _FACTOR_RE.match(factor)
            if parsed is None:
                raise PolynomialError(f"неизвестный множитель '{factor}' в '{text}'")
            if parsed.group(1) is not None:
                coefficient *= int(parsed.group(1))
                continue
            index = int(parsed.group(2))
            if not 1 <= index <= nvars:
                raise PolynomialError(f"переменная x{index} вне диапазона 1..{nvars}")
            exponent[index - 1] += int(parsed.group(3) or 1)
        key = tuple(exponent)
        terms[key] = terms.get(key, 0) + coefficient
    if position != len(compact):
        raise PolynomialError(f"не удалось разобрать '{text}'")
    return SparsePolynomial(nvars, terms)


class UnivariatePolynomial:
    """Многочлен от q с целыми коэффициентами, младшая степень первой"""

    __slots__ = ('coefficients',)

    def __init__(self, coefficients: Iterable[int]):
        coefficients = [int(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self.coefficients = tuple(coefficients)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> 'UnivariatePolynomial':
        return cls([0] * degree + [coefficient])

    @classmethod
    def q_integer(cls, k: int) -> 'UnivariatePolynomial':
        """[k]_q = 1 + q + ... + q^{k-1}"""
        return cls([1] * k)

    @classmethod
    def q_factorial(cls, k: int) -> 'UnivariatePolynomial':
        result = cls([1])
        for j in range(1, k + 1):
            result = result * cls.q_integer(j)
        return result

    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def valuation(self) -> int:
        """Наименьшая степень q с ненулевым коэффициентом; для нуля -1"""
        for degree, coefficient in enumerate(self.coefficients):
            if coefficient:
                return degree
        return -1

    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def __call__(self, value):
        result = 0
        for coefficient in reversed(self.coefficients):
            result = result * value + coefficient
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coefficients == UnivariatePolynomial([other]).coefficients
        return isinstance(other, UnivariatePolynomial) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other) -> 'UnivariatePolynomial':
        other = _as_univariate(other)
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (size - len(self.coefficients))
        b = other.coefficients + (0,) * (size - len(other.coefficients))
        return UnivariatePolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> 'UnivariatePolynomial':
        return UnivariatePolynomial(-c for c in self.coefficients)

    def __sub__(self, other) -> 'UnivariatePolynomial':
        return self + (-_as_univariate(other))

    def __rsub__(self, other) -> 'UnivariatePolynomial':
        return _as_univariate(other) - self

    def __mul__(self, other) -> 'UnivariatePolynomial':
        other = _as_univariate(other)
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial([])
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return UnivariatePolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'UnivariatePolynomial':
        result = UnivariatePolynomial([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, divisor: 'UnivariatePolynomial'):
        """Деление с остатком; старший коэффициент делителя должен делить все промежуточные"""
        divisor = _as_univariate(divisor)
        if divisor.is_zero():
            raise PolynomialError("деление на нулевой многочлен")
        remainder = list(self.coefficients)
        lead = divisor.coefficients[-1]
        shift_max = len(remainder) - len(divisor.coefficients)
        quotient = [0] * max(shift_max + 1, 0)
        for shift in range(shift_max, -1, -1):
            top = remainder[shift + len(divisor.coefficients) - 1]
            if top == 0:
                continue
            if top % lead:
                raise PolynomialError("частное не имеет целых коэффициентов")
            factor = top // lead
            quotient[shift] = factor
            for j, c in enumerate(divisor.coefficients):
                remainder[shift + j] -= factor * c
        return UnivariatePolynomial(quotient), UnivariatePolynomial(remainder)

    def divides(self, other: 'UnivariatePolynomial') -> bool:
        try:
            _, remainder = divmod(other, self)
        except PolynomialError:
            return False
        return remainder.is_zero()

    def to_list(self) -> List[int]:
        return list(self.coefficients)

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({list(self.coefficients)})"

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        pieces = []
        for degree, coefficient in enumerate(self.coefficients):
            if coefficient == 0:
                continue
            magnitude = abs(coefficient)
            if degree == 0:
                body = str(magnitude)
            else:
                power_text = 'q' if degree == 1 else f"q^{degree}"
                body = power_text if magnitude == 1 else f"{magnitude}*{power_text}"
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return ' '.join(pieces)


def _as_univariate(value) -> UnivariatePolynomial:
    if isinstance(value, UnivariatePolynomial):
        return value
    if isinstance(value, int):
        return UnivariatePolynomial([value])
    raise PolynomialError(f"ожидался многочлен от q, получено {type(value).__name__}")


def substitute_all(f: SparsePolynomial, value: int) -> int:
    """Значение f при x_1 = ... = x_m = value"""
    return evaluate_at(f, [value] * f.nvars)


def rank_generating_function(n: int) -> UnivariatePolynomial:
    """F(W_n, q) = [1]_q [2]_q ... [n]_q"""
    result = UnivariatePolynomial([1])
    for i in range(1, n + 1):
        result = result * UnivariatePolynomial.q_integer(i)
    return result
