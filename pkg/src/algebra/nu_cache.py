"""
Постоянный кеш значений ν_w = 𝔖_w(1, ..., 1) для фиксированного n.

Формат файла: строка заголовка "# nu-cache n=<n> version=<v>", затем строки
"<перестановка>\\t<ν в десятичной записи>".
"""
import logging
import os
import random
import threading
from typing import Callable, Dict, Iterator, Optional, Tuple

from ..combinatorics.permutation import Permutation, format_permutation, parse_permutation
from ..errors import CacheFormatError, PermutationError

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


class NuCache:
    """Кеш ν_w для перестановок S_n; чтение без блокировки, запись под замком"""

    def __init__(self, n: int, cache_dir: Optional[str] = None):
        """
        Args:
            n: размер группы
            cache_dir: директория для файла кеша (None - только в памяти)
        """
        self.n = n
        self.cache_dir = cache_dir
        self._entries: Dict[Tuple[int, ...], int] = {}
        self._lock = threading.Lock()
        self._dirty = False

    @property
    def path(self) -> Optional[str]:
        if not self.cache_dir:
            return None
        return os.path.join(self.cache_dir, f"nu_n{self.n}.tsv")

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, w: Permutation) -> bool:
        return w.word in self._entries

    def _check_size(self, w: Permutation):
        if w.n != self.n:
            raise PermutationError(f"кеш хранит S_{self.n}, а перестановка из S_{w.n}")

    def get(self, w: Permutation) -> Optional[int]:
        self._check_size(w)
        return self._entries.get(w.word)

    def lookup_word(self, word: Tuple[int, ...]) -> Optional[int]:
        return self._entries.get(word)

    def put(self, w: Permutation, value: int):
        self._check_size(w)
        self.update({w.word: value})

    def update(self, values: Dict[Tuple[int, ...], int]):
        """Пакетная запись; значение уже записанного ключа не меняется"""
        with self._lock:
            for word, value in values.items():
                if value < 1:
                    raise CacheFormatError(f"ν({word}) = {value} < 1")
                if word not in self._entries:
                    self._entries[word] = value
                    self._dirty = True

    def snapshot(self) -> Dict[Tuple[int, ...], int]:
        with self._lock:
            return dict(self._entries)

    def items(self) -> Iterator[Tuple[Permutation, int]]:
        for word, value in sorted(self.snapshot().items()):
            yield Permutation(word), value

    def load(self) -> int:
        """
        Загрузка кеша с диска. Файл другой версии формата не используется.

        Returns:
            число загруженных значений
        """
        path = self.path
        if path is None or not os.path.exists(path):
            return 0
        with open(path, 'r', encoding='utf-8') as f:
            header = f.readline().strip()
            expected = f"# nu-cache n={self.n} version={FORMAT_VERSION}"
            if header != expected:
                logger.warning("Кеш %s имеет заголовок '%s', ожидался '%s'; кеш будет пересчитан",
                               path, header, expected)
                return 0
            loaded = {}
            for line_number, line in enumerate(f, 2):
                line = line.rstrip('\n')
                if not line:
                    continue
                try:
                    perm_text, value_text = line.split('\t')
                    w = parse_permutation(perm_text)
                    value = int(value_text)
                except (ValueError, PermutationError) as e:
                    raise CacheFormatError(f"{path}:{line_number}: повреждённая строка ({e})") from None
                if w.n != self.n:
                    raise CacheFormatError(f"{path}:{line_number}: перестановка не из S_{self.n}")
                loaded[w.word] = value
        self.update(loaded)
        self._dirty = False
        logger.debug("Загружено %d значений ν из %s", len(loaded), path)
        return len(loaded)

    def save(self) -> Optional[str]:
        """Запись кеша на диск (если есть изменения)"""
        path = self.path
        if path is None or not self._dirty:
            return path
        os.makedirs(self.cache_dir, exist_ok=True)
        snapshot = self.snapshot()
        tmp_path = path + '.tmp'
        with open(tmp_path, 'w', encoding='utf-8') as f:
            f.write(f"# nu-cache n={self.n} version={FORMAT_VERSION}\n")
            for word in sorted(snapshot):
                f.write(f"{format_permutation(Permutation(word))}\t{snapshot[word]}\n")
        os.replace(tmp_path, path)
        self._dirty = False
        logger.debug("Сохранено %d значений ν в %s", len(snapshot), path)
        return path

    def spot_check(self, recompute: Callable[[Permutation], int], sample: int = 20,
                   rng: Optional[random.Random] = None) -> int:
        """
        Сверка случайной выборки кеша с повторным вычислением

        Args:
            recompute: функция, вычисляющая ν заново
            sample: размер выборки
            rng: генератор случайных чисел

        Returns:
            число проверенных значений
        """
        rng = rng or random.Random(0)
        words = sorted(self.snapshot())
        chosen = rng.sample(words, min(sample, len(words)))
        for word in chosen:
            w = Permutation(word)
            fresh = recompute(w)
            cached = self._entries[word]
            if fresh != cached:
                raise CacheFormatError(f"ν({format_permutation(w)}): в кеше {cached}, пересчёт дал {fresh}")
        return len(chosen)
