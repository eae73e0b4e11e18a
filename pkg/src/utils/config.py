"""
Загрузка конфигурации: configs/default_config.json, пользовательский файл,
переменная окружения SCHUBERT_CACHE_DIR.
"""
import copy
import json
import logging
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional

from ..errors import SchubertError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent.parent / 'configs' / 'default_config.json'

CACHE_DIR_ENV = 'SCHUBERT_CACHE_DIR'

DETERMINANT_METHODS = ('bareiss', 'modular')


@dataclass(frozen=True)
class Bounds:
    """Ограничения ресурсов; превышение даёт отчёт "skipped" или код выхода 3"""
    max_n: int = 10
    max_dim: int = 200
    max_seconds: float = 1800.0
    oracle_max_n: int = 6
    exhaustive_max_n: int = 8
    max_nu_max_n: int = 8
    chevalley_max_n: int = 6


CONFIG_KEYS = {
    'bounds': set(Bounds.__dataclass_fields__),
    'cache': {'cache_dir'},
    'runtime': {'threads', 'determinant_method'},
    'verify_all': {'max_n', 'max_k', 'extended'},
    'plots': {'output_dir', 'dpi'},
}


@dataclass(frozen=True)
class Settings:
    bounds: Bounds = field(default_factory=Bounds)
    cache_dir: Optional[str] = None
    threads: int = 1
    determinant_method: str = 'bareiss'
    verify_max_n: int = 6
    verify_max_k: Optional[int] = None
    extended: bool = False
    plot_dir: str = 'plots'
    plot_dpi: int = 150

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Settings':
        """
        Построение настроек из словаря с группами bounds/cache/runtime/verify_all/plots

        Args:
            data: словарь конфигурации

        Returns:
            Settings
        """
        for group, known in CONFIG_KEYS.items():
            unknown = set(data.get(group, {})) - known
            if unknown:
                raise SchubertError(f"неизвестные параметры {group}: {', '.join(sorted(unknown))}")
        bounds_data = data.get('bounds', {})
        runtime = data.get('runtime', {})
        verify = data.get('verify_all', {})
        plots = data.get('plots', {})
        settings = cls(
            bounds=Bounds(**bounds_data),
            cache_dir=data.get('cache', {}).get('cache_dir'),
            threads=int(runtime.get('threads', 1)),
            determinant_method=runtime.get('determinant_method', 'bareiss'),
            verify_max_n=int(verify.get('max_n', 6)),
            verify_max_k=verify.get('max_k'),
            extended=bool(verify.get('extended', False)),
            plot_dir=plots.get('output_dir', 'plots'),
            plot_dpi=int(plots.get('dpi', 150)),
        )
        settings.validate()
        return settings

    def validate(self):
        if self.threads < 1:
            raise SchubertError(f"threads должно быть >= 1, получено {self.threads}")
        if self.determinant_method not in DETERMINANT_METHODS:
            raise SchubertError(f"неизвестный метод определителя: {self.determinant_method}")

    def with_overrides(self, **overrides) -> 'Settings':
        """Замена полей, для которых передано значение не None"""
        values = {key: value for key, value in overrides.items() if value is not None}
        bounds_values = {key: values.pop(key) for key in list(values) if key in Bounds.__dataclass_fields__}
        settings = replace(self, bounds=replace(self.bounds, **bounds_values), **values)
        settings.validate()
        return settings


def merge_dicts(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    result = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(result.get(key), dict):
            result[key] = merge_dicts(result[key], value)
        else:
            result[key] = value
    return result


def _read_json(path) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Настройки по умолчанию, поверх них пользовательский файл и SCHUBERT_CACHE_DIR

    Args:
        config_path: путь к пользовательскому JSON (необязательно)

    Returns:
        Settings
    """
    data: Dict[str, Any] = {}
    if DEFAULT_CONFIG_PATH.exists():
        data = _read_json(DEFAULT_CONFIG_PATH)
    if config_path:
        if not os.path.exists(config_path):
            raise SchubertError(f"файл конфигурации {config_path} не существует")
        try:
            data = merge_dicts(data, _read_json(config_path))
        except json.JSONDecodeError as e:
            raise SchubertError(f"не удалось разобрать {config_path}: {e}") from None
        logger.debug("Загружена конфигурация %s", config_path)
    settings = Settings.from_dict(data)
    env_cache = os.environ.get(CACHE_DIR_ENV)
    if env_cache:
        settings = replace(settings, cache_dir=env_cache)
    return settings
