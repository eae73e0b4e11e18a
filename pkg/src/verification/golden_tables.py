"""
Опубликованные значения: диагонали SNF f(n,k), определители e(n,k) матриц
порядка Брюа и таблица максимумов u(n) с множествами перестановок, на которых
они достигаются.
"""
import hashlib
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from ..combinatorics.permutation import Permutation, format_permutation, parse_permutation

# f(n,k): диагональ нормальной формы Смита D̃(n,k). Источник: опубликованный
# список диагоналей SNF, 27 строк от (4,1) до (10,2) в том же порядке; номер
# строки списка указан у каждой записи. Для k = 1 строки совпадают с
# (1^{n-2}, C(n,2)-1), произведение диагонали равно |det D̃(n,k)|.
F_TABLE: Dict[Tuple[int, int], str] = {
    (4, 1): "(1^2,5)",  # строка 1; k = 1
    (4, 2): "(1^2,3^2,6)",  # строка 2; произведение 54
    (5, 1): "(1^3,9)",  # строка 3; k = 1
    (5, 2): "(1^5,7^3,28)",  # строка 4; произведение 9604
    (5, 3): "(1^6,5^6,15^2,105)",  # строка 5
    (5, 4): "(1^8,3^4,6^4,30^4)",  # строка 6
    (6, 1): "(1^4,14)",  # строка 7; k = 1
    (6, 2): "(1^9,6,12^3,156)",  # строка 8
    (6, 3): "(1^15,5^4,10^5,110^4,220)",  # строка 9
    (6, 4): "(1^20,2,4^9,8^5,24^5,72^4,360^4,3960)",  # строка 10
    (6, 5): "(1^31,3^6,6^5,42^19,84,168^4,504^5)",  # строка 11
    (6, 6): "(1^28,2^18,10^2,20^28,140^10,280^3,840)",  # строка 12
    (6, 7): "(1^52,2^18,6^10,12^6,60^11,420^3,840)",  # строка 13; средний уровень S_6
    (7, 1): "(1^5,20)",  # строка 14; k = 1
    (7, 2): "(1^14,9,18^4,342)",  # строка 15
    (7, 3): "(1^29,8^5,16^9,272^5,816)",  # строка 16
    (7, 4): "(1^49,7^14,14^15,70^6,210^8,420,1680^4,28560)",  # строка 17
    (7, 5): "(1^76,2^9,6^20,12^15,156^29,1092^15,5460^4,21840)",  # строка 18
    (8, 1): "(1^6,27)",  # строка 19; k = 1
    (8, 2): "(1^20,25^6,325)",  # строка 20
    (8, 3): "(1^49,23^20,92,276^5,6900)",  # строка 21
    (8, 4): "(1^98,7^6,21^43,231^20,5313^6,10626)",  # строка 22
    (9, 1): "(1^7,35)",  # строка 23; k = 1
    (9, 2): "(1^27,33^7,561)",  # строка 24
    (9, 3): "(1^76,31^27,496^7,5456)",  # строка 25
    (10, 1): "(1^8,44)",  # строка 26; k = 1
    (10, 2): "(1^35,21,42^7,1806)",  # строка 27
}

# пары, входящие в расширенный (долгий) набор
F_TABLE_EXTENDED = frozenset({(7, 4), (7, 5), (8, 3), (8, 4), (9, 2), (9, 3)})

# |e(n,k)| = |det E(n,k)| в виде разложения на простые. Источник: опубликованный
# список вычисленных определителей e(n,k) = ±..., приведённый сразу после
# определения E(n,k) как матрицы V^{C(n,2)-2k}; знак там не фиксирован.
E_TABLE: Dict[Tuple[int, int], Dict[int, int]] = {
    (4, 1): {2: 7, 3: 1, 5: 2, 19: 1},  # строка 1: ±2^7·3·5^2·19 = 182400
    (4, 2): {2: 6, 3: 1, 29: 1},  # строка 2: ±2^6·3·29 = 5568
    (5, 1): {2: 22, 3: 6, 5: 5, 7: 4, 59: 1, 89: 1},  # строка 3: ±2^22·3^6·5^5·7^4·59·89
}

# u(n) = max ν_w и все w, на которых максимум достигается. Источник:
# опубликованная таблица максимумов для n = 3..10 (строка n = 10 присутствует
# в таблице, хотя в тексте заявлен диапазон до 9); слова перестановок
# переписаны без изменений.
U_TABLE: Dict[int, Tuple[int, Tuple[str, ...]]] = {
    3: (2, ("132",)),  # строка n = 3
    4: (5, ("1432",)),  # строка n = 4
    5: (14, ("12543", "15432", "21543")),  # строка n = 5; три максимизатора
    6: (84, ("126543", "216543")),  # строка n = 6
    7: (660, ("1327654",)),  # строка n = 7
    8: (9438, ("13287654",)),  # строка n = 8
    9: (163592, ("132987654",)),  # строка n = 9; расширенный набор
    10: (4424420, ("1,4,3,2,10,9,8,7,6,5",)),  # строка n = 10; расширенный набор
}

U_TABLE_EXTENDED = frozenset({9, 10})


def e_value(factorization: Dict[int, int]) -> int:
    value = 1
    for prime, exponent in factorization.items():
        value *= prime ** exponent
    return value


def render_factorization(factorization: Dict[int, int]) -> str:
    return '*'.join(str(p) if e == 1 else f"{p}^{e}" for p, e in sorted(factorization.items()))


@dataclass(frozen=True)
class GoldenTables:
    """Набор эталонных таблиц с канонической сериализацией"""
    f_table: Dict[Tuple[int, int], str] = field(default_factory=lambda: dict(F_TABLE))
    e_table: Dict[Tuple[int, int], Dict[int, int]] = field(default_factory=lambda: dict(E_TABLE))
    u_table: Dict[int, Tuple[int, Tuple[str, ...]]] = field(default_factory=lambda: dict(U_TABLE))

    def f(self, n: int, k: int) -> Optional[str]:
        return self.f_table.get((n, k))

    def e(self, n: int, k: int) -> Optional[int]:
        factorization = self.e_table.get((n, k))
        return None if factorization is None else e_value(factorization)

    def u(self, n: int) -> Optional[Tuple[int, FrozenSet[Permutation]]]:
        entry = self.u_table.get(n)
        if entry is None:
            return None
        value, words = entry
        return value, frozenset(parse_permutation(word) for word in words)

    def serialize(self) -> str:
        """
        Каноническая сериализация: по строке на запись, ключи по возрастанию

        Returns:
            текст вида "f 4 1 (1^2,5)\\n...e 4 1 2^7*3*5^2*19\\n...u 3 2 1,3,2\\n..."
        """
        lines = []
        for (n, k), value in sorted(self.f_table.items()):
            lines.append(f"f {n} {k} {value}")
        for (n, k), factorization in sorted(self.e_table.items()):
            lines.append(f"e {n} {k} {render_factorization(factorization)}")
        for n, (value, words) in sorted(self.u_table.items()):
            perms = sorted(parse_permutation(word) for word in words)
            lines.append(f"u {n} {value} " + ' '.join(format_permutation(w) for w in perms))
        return '\n'.join(lines) + '\n'

    def checksum(self) -> str:
        return hashlib.sha256(self.serialize().encode('utf-8')).hexdigest()
