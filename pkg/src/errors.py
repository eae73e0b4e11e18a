"""
Исключения библиотеки.
"""


class SchubertError(ValueError):
    """Базовое исключение для всех ошибок библиотеки"""


class PermutationError(SchubertError):
    """Некорректная перестановка, несовпадение размеров или индекс вне диапазона"""


class PolynomialError(SchubertError):
    """Несовпадение числа переменных, неверный индекс, ошибка разбора"""


class ExpansionError(SchubertError):
    """Многочлен не лежит в линейной оболочке многочленов Шуберта"""


class MatrixShapeError(SchubertError):
    """Матрица не квадратная"""


class LevelRangeError(SchubertError):
    """Ранг k вне допустимого диапазона"""


class ResourceBoundError(SchubertError):
    """Превышено ограничение ресурсов (n, размер матрицы, время)"""


class CacheFormatError(SchubertError):
    """Файл кеша повреждён или имеет другую версию формата"""
