"""
Перестановки S_n в однострочной записи: длина, композиция, покрытия в слабом
порядке и порядке Брюа, уровни рангов, код Лемера и статистика паттерна 132.

Соглашение о композиции: (u∘v)(i) = u(v(i)). Правое умножение на s_i меняет
местами позиции i и i+1 однострочной записи.
"""
import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..errors import LevelRangeError, PermutationError


class Permutation:
    """Неизменяемая перестановка {1, ..., n} в однострочной записи"""

    __slots__ = ('word', '_length')

    def __init__(self, word: Sequence[int]):
        """
        Args:
            word: последовательность w_1, ..., w_n различных чисел из 1..n
        """
        word = tuple(int(a) for a in word)
        if not word:
            raise PermutationError("перестановка должна содержать хотя бы один элемент")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise PermutationError(f"{word} не является перестановкой 1..{len(word)}")
        object.__setattr__(self, 'word', word)
        object.__setattr__(self, '_length', None)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation неизменяема")

    def __reduce__(self):
        return Permutation, (self.word,)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __getitem__(self, position: int) -> int:
        """Значение w(position), позиции нумеруются с 1"""
        return self.word[position - 1]

    def __iter__(self):
        return iter(self.word)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __lt__(self, other: 'Permutation') -> bool:
        return self.word < other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)})"

    def __str__(self) -> str:
        return format_permutation(self)


@dataclass(frozen=True)
class LehmerCode:
    """Код Лемера λ_1, ..., λ_n, где λ_i = #{j > i : w_j < w_i}"""
    entries: Tuple[int, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]


@dataclass(frozen=True)
class RankLevel:
    """Уровень (W_n)_k: все перестановки длины k в лексикографическом порядке"""
    n: int
    k: int
    members: Tuple[Permutation, ...]
    _index: Dict[Permutation, int] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {w: i for i, w in enumerate(self.members)})

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.members)

    def __getitem__(self, index: int) -> Permutation:
        return self.members[index]

    def __contains__(self, w: Permutation) -> bool:
        return w in self._index

    def position(self, w: Permutation) -> int:
        """Номер перестановки в каноническом порядке уровня"""
        try:
            return self._index[w]
        except KeyError:
            raise PermutationError(f"{w} не лежит на уровне {self.k} группы S_{self.n}") from None


def _check_same_size(u: Permutation, v: Permutation):
    if u.n != v.n:
        raise PermutationError(f"размеры перестановок не совпадают: {u.n} и {v.n}")


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def longest(n: int) -> Permutation:
    """Самый длинный элемент w_0 = n, n-1, ..., 1"""
    return Permutation(range(n, 0, -1))


def simple_reflection(n: int, i: int) -> Permutation:
    """Соседняя транспозиция s_i как перестановка S_n"""
    return right_multiply_s(identity(n), i)


def length(w: Permutation) -> int:
    """
    Число инверсий #{(i, j) : i < j, w_i > w_j}

    Args:
        w: перестановка

    Returns:
        длина ℓ(w)
    """
    cached = w._length
    if cached is None:
        word = w.word
        cached = sum(1 for a, b in itertools.combinations(word, 2) if a > b)
        object.__setattr__(w, '_length', cached)
    return cached


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Композиция (u∘v)(i) = u(v(i))"""
    _check_same_size(u, v)
    uw = u.word
    return Permutation(tuple(uw[b - 1] for b in v.word))


def inverse(w: Permutation) -> Permutation:
    result = [0] * w.n
    for position, value in enumerate(w.word, 1):
        result[value - 1] = position
    return Permutation(result)


def right_multiply_s(u: Permutation, i: int) -> Permutation:
    """
    Умножение u·s_i: обмен значений в позициях i и i+1

    Args:
        u: перестановка
        i: позиция, 1 <= i <= n-1

    Returns:
        новая перестановка
    """
    if not 1 <= i <= u.n - 1:
        raise PermutationError(f"индекс s_{i} вне диапазона 1..{u.n - 1}")
    word = list(u.word)
    word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation(word)


def right_multiply_t(u: Permutation, i: int, j: int) -> Permutation:
    """Умножение u·t_ij: обмен значений в позициях i < j"""
    if not 1 <= i < j <= u.n:
        raise PermutationError(f"транспозиция t_({i},{j}) вне диапазона для S_{u.n}")
    word = list(u.word)
    word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
    return Permutation(word)


def descents(w: Permutation) -> List[int]:
    """Позиции i, для которых w_i > w_{i+1}"""
    word = w.word
    return [i for i in range(1, w.n) if word[i - 1] > word[i]]


def weak_covers(u: Permutation) -> List[Tuple[int, Permutation]]:
    """
    Покрытия u в слабом порядке: пары (i, u·s_i) для всех подъёмов u

    Args:
        u: перестановка

    Returns:
        список пар (i, u·s_i) по возрастанию i
    """
    word = u.word
    return [(i, right_multiply_s(u, i)) for i in range(1, u.n) if word[i - 1] < word[i]]


def bruhat_covers(u: Permutation) -> List[Tuple[Tuple[int, int], Permutation]]:
    """
    Покрытия u в порядке Брюа: ((i, j), u·t_ij), где длина растёт ровно на 1

    Условие: w_i < w_j и ни одна позиция строго между i и j не содержит
    промежуточного значения.
    """
    word = u.word
    n = u.n
    covers = []
    for i in range(1, n):
        low = word[i - 1]
        # наименьшее значение > low среди уже пройденных позиций справа от i
        ceiling = n + 1
        for j in range(i + 1, n + 1):
            value = word[j - 1]
            if low < value < ceiling:
                covers.append(((i, j), right_multiply_t(u, i, j)))
                ceiling = value
    return covers


def weak_leq(u: Permutation, v: Permutation) -> bool:
    """u <= v в правом слабом порядке: ℓ(u) + ℓ(u^{-1}∘v) = ℓ(v)"""
    _check_same_size(u, v)
    return length(u) + length(compose(inverse(u), v)) == length(v)


def max_length(n: int) -> int:
    return n * (n - 1) // 2


def rank_sizes(n: int) -> List[int]:
    """
    Коэффициенты производящей функции (1+q)(1+q+q^2)...(1+q+...+q^{n-1})

    Args:
        n: размер группы

    Returns:
        список #(W_n)_k для k = 0..C(n,2)
    """
    if n < 1:
        raise PermutationError("n должно быть не меньше 1")
    sizes = [1]
    for m in range(2, n + 1):
        expanded = [0] * (len(sizes) + m - 1)
        for degree, coefficient in enumerate(sizes):
            for shift in range(m):
                expanded[degree + shift] += coefficient
        sizes = expanded
    return sizes


def lehmer_code(w: Permutation) -> LehmerCode:
    word = w.word
    n = w.n
    return LehmerCode(tuple(
        sum(1 for j in range(i + 1, n) if word[j] < word[i]) for i in range(n)
    ))


def from_lehmer_code(code: Sequence[int]) -> Permutation:
    """
    Восстановление перестановки по коду Лемера

    Args:
        code: λ_1, ..., λ_n, где 0 <= λ_i <= n-i

    Returns:
        перестановка с данным кодом
    """
    n = len(code)
    available = list(range(1, n + 1))
    word = []
    for i, entry in enumerate(code):
        if not 0 <= entry <= n - 1 - i:
            raise PermutationError(f"некорректный код Лемера {tuple(code)}")
        word.append(available.pop(entry))
    return Permutation(word)


def codes_with_sum(n: int, k: int, support: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Коды Лемера длины n с суммой k в лексикографическом порядке

    Args:
        n: длина кода
        k: сумма
        support: если задан, λ_i = 0 при i > support
    """
    # лексикографический порядок кодов совпадает с порядком однострочных записей
    limit = n if support is None else min(support, n)
    bound = [n - 1 - i if i < limit else 0 for i in range(n)]
    capacity = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        capacity[i] = capacity[i + 1] + bound[i]
    prefix: List[int] = []

    def extend(i: int, remaining: int):
        if i == n:
            if remaining == 0:
                yield tuple(prefix)
            return
        low = max(0, remaining - capacity[i + 1])
        high = min(bound[i], remaining)
        for entry in range(low, high + 1):
            prefix.append(entry)
            yield from extend(i + 1, remaining - entry)
            prefix.pop()

    yield from extend(0, k)


def level(n: int, k: int) -> RankLevel:
    """
    Уровень (W_n)_k в каноническом (лексикографическом) порядке

    Args:
        n: размер группы
        k: ранг, 0 <= k <= C(n,2)

    Returns:
        RankLevel с перестановками длины k
    """
    if n < 1 or not 0 <= k <= max_length(n):
        raise LevelRangeError(f"уровень k={k} вне диапазона 0..{max_length(max(n, 1))} для S_{n}")
    members = tuple(from_lehmer_code(code) for code in codes_with_sum(n, k))
    return RankLevel(n, k, members)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Все перестановки S_n в лексикографическом порядке"""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def find_132(w: Permutation) -> List[Tuple[int, int, int]]:
    """Все тройки позиций i < j < k с a_i < a_k < a_j"""
    word = w.word
    n = w.n
    occurrences = []
    for i in range(n):
        for j in range(i + 1, n):
            if word[j] <= word[i]:
                continue
            for k in range(j + 1, n):
                if word[i] < word[k] < word[j]:
                    occurrences.append((i + 1, j + 1, k + 1))
    return occurrences


def count_132(w: Permutation) -> int:
    word = w.word
    n = w.n
    total = 0
    for i in range(n):
        a = word[i]
        for j in range(i + 1, n):
            b = word[j]
            if b <= a:
                continue
            for k in range(j + 1, n):
                if a < word[k] < b:
                    total += 1
    return total


def is_dominant(w: Permutation) -> bool:
    """132-избегающая перестановка: код Лемера не возрастает"""
    code = lehmer_code(w).entries
    return all(code[i] >= code[i + 1] for i in range(len(code) - 1))


def reduced_word(w: Permutation, rng: Optional[random.Random] = None) -> Tuple[int, ...]:
    """
    Приведённое слово (a_1, ..., a_l) с w = s_{a_1}...s_{a_l}

    Args:
        w: перестановка
        rng: если задан, спуск на каждом шаге выбирается случайно

    Returns:
        кортеж индексов
    """
    letters = []
    current = w
    while True:
        options = descents(current)
        if not options:
            break
        i = rng.choice(options) if rng is not None else options[0]
        letters.append(i)
        current = right_multiply_s(current, i)
    letters.reverse()
    return tuple(letters)


def random_reduced_word(w: Permutation, rng: random.Random) -> Tuple[int, ...]:
    return reduced_word(w, rng=rng)


def is_involution(w: Permutation) -> bool:
    return compose(w, w) == identity(w.n)


def is_symmetric_unimodal(sizes: Sequence[int]) -> bool:
    """Последовательность читается одинаково с обоих концов и не убывает до середины"""
    if list(sizes) != list(reversed(sizes)):
        return False
    middle = (len(sizes) + 1) // 2
    return all(sizes[i] <= sizes[i + 1] for i in range(middle - 1))


def embed(w: Permutation, n: int) -> Permutation:
    """Вложение S_m в S_n дописыванием неподвижных точек"""
    if n < w.n:
        raise PermutationError(f"нельзя вложить S_{w.n} в S_{n}")
    return Permutation(w.word + tuple(range(w.n + 1, n + 1)))


def parse_permutation(text: str) -> Permutation:
    """
    Разбор текстового формата: "1,4,3,2,10,9,8,7,6,5" или компактно "1432" (n <= 9)
    """
    text = text.strip()
    if not text:
        raise PermutationError("пустая запись перестановки")
    try:
        if ',' in text:
            word = [int(part) for part in text.split(',')]
        else:
            word = [int(ch) for ch in text]
            if len(word) > 9:
                raise PermutationError("компактная запись допустима только при n <= 9")
    except ValueError:
        raise PermutationError(f"не удалось разобрать перестановку '{text}'") from None
    return Permutation(word)


def format_permutation(w: Permutation) -> str:
    return ','.join(str(a) for a in w.word)
