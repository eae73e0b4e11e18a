"""
Многочлены Шуберта 𝔖_w, специализация ν_w = 𝔖_w(1, ..., 1) с независимыми
проверочными путями, q-специализация и разложение по базису Шуберта.

Для w из S_n многочлен 𝔖_w хранится в m = n-1 переменных.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..combinatorics.permutation import (
    Permutation, all_permutations, codes_with_sum, compose, descents, find_132, from_lehmer_code,
    inverse, is_dominant, length, lehmer_code, longest, reduced_word, right_multiply_s,
    weak_leq,
)
from ..errors import ExpansionError, PermutationError, PolynomialError, ResourceBoundError
from .nu_cache import NuCache
from .polynomial import (
    SparsePolynomial, UnivariatePolynomial, divided_difference, evaluate_ones,
    evaluate_q_powers,
)

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


@dataclass(frozen=True)
class SchubertExpansion:
    """Коэффициенты [𝔖_v]F многочлена степени degree"""
    degree: int
    coefficients: Dict[Permutation, int]

    def get(self, v: Permutation) -> int:
        return self.coefficients.get(v, 0)

    def restricted_to(self, n: int) -> Dict[Permutation, int]:
        """Коэффициенты при v, лежащих в S_n (хвост неподвижных точек отбрасывается)"""
        result = {}
        for v, c in self.coefficients.items():
            word = v.word
            if all(word[i] == i + 1 for i in range(n, len(word))):
                result[Permutation(word[:n])] = c
        return result


@dataclass(frozen=True)
class TwoTermShape:
    """Разбор перестановки с единственным вхождением 132"""
    w: Permutation
    covering: Permutation
    index: int
    polynomial: SparsePolynomial


def staircase(n: int) -> SparsePolynomial:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1} в n переменных"""
    return SparsePolynomial.monomial(tuple(range(n - 1, -1, -1)))


def _drop_last_variable(f: SparsePolynomial) -> SparsePolynomial:
    terms = {}
    for exponent, coefficient in f.terms.items():
        if exponent[-1]:
            raise PolynomialError("многочлен зависит от последней переменной")
        terms[exponent[:-1]] = coefficient
    return SparsePolynomial(f.nvars - 1, terms)


@lru_cache(maxsize=None)
def _schubert_full(word: Word) -> SparsePolynomial:
    # 𝔖_w в n переменных: спуск от w_0 по первому подъёму w
    n = len(word)
    for i in range(1, n):
        if word[i - 1] < word[i]:
            upper = list(word)
            upper[i - 1], upper[i] = upper[i], upper[i - 1]
            return divided_difference(_schubert_full(tuple(upper)), i)
    return staircase(n)


def schubert(w: Permutation, chain: Optional[Sequence[int]] = None) -> SparsePolynomial:
    """
    Многочлен Шуберта как цепочка разделённых разностей от x^δ

    Args:
        w: перестановка из S_n
        chain: приведённое слово (a_1, ..., a_p) для w^{-1}w_0; тогда
            𝔖_w = ∂_{a_1}...∂_{a_p} x^δ. По умолчанию цепочка выбирается
            сверху вниз по первому подъёму.

    Returns:
        однородный многочлен степени ℓ(w) в n-1 переменных
    """
    n = w.n
    if n == 1:
        return SparsePolynomial.constant(1, 0)
    if chain is None:
        full = _schubert_full(w.word)
    else:
        target = compose(inverse(w), longest(n))
        check = w
        for letter in chain:
            check = right_multiply_s(check, letter)
        if check != longest(n) or len(chain) != length(target):
            raise PermutationError(f"{tuple(chain)} не является приведённым словом для w^(-1)w_0")
        full = staircase(n)
        for letter in reversed(chain):
            full = divided_difference(full, letter)
    return _drop_last_variable(full)


def _transition_children(word: Word) -> List[Word]:
    # 𝔖_w = x_r 𝔖_v + Σ_{q<r} 𝔖_{v t_qr}; при x = 1 дети складываются
    n = len(word)
    r = 0
    for i in range(n - 1, 0, -1):
        if word[i - 1] > word[i]:
            r = i
            break
    pivot = word[r - 1]
    s = max(j for j in range(r + 1, n + 1) if word[j - 1] < pivot)
    v = list(word)
    v[r - 1], v[s - 1] = v[s - 1], v[r - 1]
    children = [tuple(v)]
    top = v[r - 1]
    floor = 0
    for q in range(r - 1, 0, -1):
        value = v[q - 1]
        if floor < value < top:
            child = list(v)
            child[q - 1], child[r - 1] = child[r - 1], child[q - 1]
            children.append(tuple(child))
            floor = value
    return children


def _dominant_word(word: Word) -> bool:
    n = len(word)
    code = [sum(1 for j in range(i + 1, n) if word[j] < word[i]) for i in range(n)]
    return all(code[i] >= code[i + 1] for i in range(n - 1))


def nu_transition(word: Word, memo: Dict[Word, int], lookup=None) -> int:
    """
    ν_w по рекурсии перехода Ласку-Шютценберже без рекурсии Python

    Args:
        word: однострочная запись w
        memo: словарь вычисленных значений (пополняется)
        lookup: дополнительный источник готовых значений (например, кеш)

    Returns:
        ν_w
    """
    if word in memo:
        return memo[word]
    stack = [word]
    pending: Dict[Word, List[Word]] = {}
    while stack:
        current = stack[-1]
        if current in memo:
            stack.pop()
            continue
        if lookup is not None:
            known = lookup(current)
            if known is not None:
                memo[current] = known
                stack.pop()
                continue
        children = pending.get(current)
        if children is None:
            if _dominant_word(current):
                memo[current] = 1
                stack.pop()
                continue
            children = _transition_children(current)
            pending[current] = children
        missing = [c for c in children if c not in memo]
        if missing:
            stack.extend(missing)
        else:
            memo[current] = sum(memo[c] for c in children)
            del pending[current]
            stack.pop()
    return memo[word]


def nu(w: Permutation, cache: NuCache) -> int:
    """
    ν_w = 𝔖_w(1, ..., 1) с запоминанием в кеше

    Args:
        w: перестановка
        cache: кеш для S_n

    Returns:
        ν_w >= 1
    """
    cached = cache.get(w)
    if cached is not None:
        return cached
    memo: Dict[Word, int] = {}
    value = nu_transition(w.word, memo, cache.lookup_word)
    cache.update(memo)
    return value


def nu_via_polynomial(w: Permutation) -> int:
    return evaluate_ones(schubert(w))


def _reduced_words(w: Permutation) -> Iterator[Word]:
    # все приведённые слова: последняя буква - любой спуск
    options = descents(w)
    if not options:
        yield ()
        return
    for i in options:
        for prefix in _reduced_words(right_multiply_s(w, i)):
            yield prefix + (i,)


def reduced_words(w: Permutation) -> List[Word]:
    return sorted(_reduced_words(w))


def nu_reduced_word_formula(w: Permutation) -> int:
    """ν_w = (1/ℓ!) Σ_{a ∈ R(w)} a_1 a_2 ... a_ℓ"""
    total = sum(math.prod(word) for word in _reduced_words(w))
    value, remainder = divmod(total, math.factorial(length(w)))
    if remainder:
        raise PolynomialError(f"сумма по приведённым словам {total} не делится на ℓ!")
    return value


def _comaj(word: Word) -> int:
    return sum(i for i in range(1, len(word)) if word[i - 1] < word[i])


def q_nu_reduced_word_formula(w: Permutation) -> UnivariatePolynomial:
    """[ℓ]_q! 𝔖_w(1, q, q^2, ...) = Σ_{a ∈ R(w)} q^{comaj(a)} [a_1]_q ... [a_ℓ]_q"""
    total = UnivariatePolynomial([])
    for word in _reduced_words(w):
        term = UnivariatePolynomial.monomial(_comaj(word))
        for letter in word:
            term = term * UnivariatePolynomial.q_integer(letter)
        total = total + term
    quotient, remainder = divmod(total, UnivariatePolynomial.q_factorial(length(w)))
    if not remainder.is_zero():
        raise PolynomialError("сумма по приведённым словам не делится на [ℓ]_q!")
    return quotient


def pipe_dreams(w: Permutation) -> Iterator[frozenset]:
    """
    Приведённые пайп-дримы для w: множества клеток (i, j), i + j <= n

    Крест в клетке (i, j) даёт букву s_{i+j-1}; буквы читаются по строкам
    сверху вниз, в строке справа налево, и образуют приведённое слово w.
    """
    n = w.n
    cells = [(i, j) for i in range(1, n) for j in range(n - i, 0, -1)]
    target_length = length(w)
    chosen: List[Tuple[int, int]] = []

    def search(position: int, current: Permutation):
        done = length(current)
        if done == target_length:
            if current == w:
                yield frozenset(chosen)
            return
        if target_length - done > len(cells) - position:
            return
        i, j = cells[position]
        letter = i + j - 1
        word = current.word
        if word[letter - 1] < word[letter]:
            extended = right_multiply_s(current, letter)
            if weak_leq(extended, w):
                chosen.append((i, j))
                yield from search(position + 1, extended)
                chosen.pop()
        yield from search(position + 1, current)

    start = Permutation(range(1, n + 1))
    if weak_leq(start, w):
        yield from search(0, start)


def nu_pipe_dream_oracle(w: Permutation, max_n: int = 7) -> int:
    """Число приведённых пайп-дримов (независимая проверка ν_w)"""
    if w.n > max_n:
        raise ResourceBoundError(f"перебор пайп-дримов ограничен n <= {max_n}, получено n = {w.n}")
    return sum(1 for _ in pipe_dreams(w))


def q_nu(w: Permutation, m: Optional[int] = None) -> UnivariatePolynomial:
    """
    𝔖_w(1, q, q^2, ..., q^{m-1})

    Args:
        w: перестановка
        m: число переменных (по умолчанию n-1)

    Returns:
        многочлен от q
    """
    f = schubert(w)
    if m is not None and f.support_size() > m:
        raise PolynomialError(f"𝔖_w зависит от x_{f.support_size()}, а m = {m}")
    return evaluate_q_powers(f)


def _trim_fixed_tail(v: Permutation) -> Permutation:
    word = v.word
    end = len(word)
    while end > 1 and word[end - 1] == end:
        end -= 1
    return Permutation(word[:end])


def schubert_coefficient(f: SparsePolynomial, v: Permutation) -> int:
    """
    [𝔖_v]f как свободный член ∂_v f

    Верно для любого многочлена f от достаточного числа переменных: ∂_v 𝔖_w
    имеет ненулевой свободный член только при w = v.
    """
    g = f.extend(max(f.nvars, v.n))
    for letter in reversed(reduced_word(v)):
        g = divided_difference(g, letter)
        if g.is_zero():
            return 0
    return g.constant_term()


def expand_in_schuberts(f: SparsePolynomial, d: int, n: int) -> SchubertExpansion:
    """
    Разложение однородного f степени d по 𝔖_v, v ∈ S_n, ℓ(v) = d

    Коэффициент при 𝔖_v равен свободному члену ∂_{a_1}...∂_{a_ℓ} f, где
    (a_1, ..., a_ℓ) - приведённое слово v.

    Args:
        f: однородный многочлен
        d: степень
        n: размер группы

    Returns:
        SchubertExpansion; при несовпадении реконструкции - ExpansionError
    """
    if not f.is_zero() and (not f.is_homogeneous() or f.degree() != d):
        raise ExpansionError(f"многочлен не однороден степени {d}")
    if f.support_size() > n - 1:
        raise ExpansionError(f"многочлен зависит от x_{f.support_size()}, вне S_{n}")
    work = f.extend(max(f.nvars, n))
    coefficients: Dict[Permutation, int] = {}
    support = f.support_size()
    for code in codes_with_sum(n, d, support=support):
        v = from_lehmer_code(code)
        c = schubert_coefficient(work, v)
        if c:
            coefficients[v] = c
    logger.debug("Разложение степени %d: %d ненулевых коэффициентов", d, len(coefficients))
    common = max(f.nvars, n - 1)
    rebuilt = SparsePolynomial(common)
    for v, c in coefficients.items():
        rebuilt = rebuilt + schubert(_trim_fixed_tail(v)).extend(common) * c
    if rebuilt != f.extend(common):
        raise ExpansionError(f"f не лежит в линейной оболочке 𝔖_v, v ∈ S_{n}, ℓ(v) = {d}")
    return SchubertExpansion(d, coefficients)


def monk_sum(n: int, nvars: int) -> SparsePolynomial:
    """𝔖_{s_1} + ... + 𝔖_{s_{n-1}} = Σ_r (x_1 + ... + x_r)"""
    terms = {}
    for index in range(1, n):
        exponent = [0] * nvars
        exponent[index - 1] = 1
        terms[tuple(exponent)] = n - index
    return SparsePolynomial(nvars, terms)


def cauchy_product(n: int) -> SparsePolynomial:
    """∏_{i+j<=n} (x_i + y_j) в 2(n-1) переменных x_1..x_{n-1}, y_1..y_{n-1}"""
    m = n - 1
    result = SparsePolynomial.constant(1, 2 * m)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            result = result * (SparsePolynomial.variable(i, 2 * m) + SparsePolynomial.variable(m + j, 2 * m))
    return result


def cauchy_sum(n: int) -> SparsePolynomial:
    """Σ_{w ∈ S_n} 𝔖_w(x) 𝔖_{w∘w_0}(y)"""
    m = n - 1
    w0 = longest(n)
    total = SparsePolynomial(2 * m)
    zeros = (0,) * m
    for w in all_permutations(n):
        fx = schubert(w)
        fy = schubert(compose(w, w0))
        left = SparsePolynomial(2 * m, {e + zeros: c for e, c in fx.terms.items()})
        right = SparsePolynomial(2 * m, {zeros + e: c for e, c in fy.terms.items()})
        total = total + left * right
    return total


def two_term_shape(w: Permutation) -> Optional[TwoTermShape]:
    """
    Для w с единственным вхождением 132 вида a_i, a_{i+1}, a_j: доминантная
    w' = w·s_i, для которой λ_i(w') = λ_{i+1}(w') + 2 и 𝔖_w = ∂_i 𝔖_{w'}
    """
    occurrences = find_132(w)
    if len(occurrences) != 1:
        return None
    i, j, _ = occurrences[0]
    if j != i + 1:
        raise PermutationError(f"единственное вхождение 132 в {w} не имеет вида a_i, a_(i+1), a_j")
    covering = right_multiply_s(w, i)
    if not is_dominant(covering):
        raise PermutationError(f"{covering} не доминантна")
    code = lehmer_code(covering)
    if code[i - 1] != code[i] + 2:
        raise PermutationError(f"λ_{i}({covering}) != λ_{i + 1}({covering}) + 2")
    dominant_monomial = SparsePolynomial.monomial(code.entries)
    polynomial = _drop_last_variable(divided_difference(dominant_monomial, i))
    return TwoTermShape(w, covering, i, polynomial)


def clear_polynomial_cache():
    _schubert_full.cache_clear()
