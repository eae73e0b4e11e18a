"""
Матрицы перестановок, на которых достигается u(n), и график log2 u(n) / n^2
относительно полосы [1/4, 1/2].
"""
import logging
import math
from typing import Dict, FrozenSet, Tuple

import matplotlib as mpl

mpl.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402

from ..combinatorics.permutation import Permutation, format_permutation

logger = logging.getLogger(__name__)

MaxNuResults = Dict[int, Tuple[int, FrozenSet[Permutation]]]


def plot_argmax_shapes(results: MaxNuResults, path: str, dpi: int = 150) -> str:
    """
    Точки (i, w_i) для каждой перестановки с ν_w = u(n); строка рисунков на каждое n

    Args:
        results: {n: (u(n), множество перестановок)}
        path: путь к PNG
        dpi: разрешение

    Returns:
        путь к сохранённому файлу
    """
    ns = sorted(results)
    columns = max(len(results[n][1]) for n in ns)
    fig, axes = plt.subplots(nrows=len(ns), ncols=columns, squeeze=False,
                             figsize=(2.0 * columns, 2.0 * len(ns)))
    for row, n in enumerate(ns):
        value, winners = results[n]
        for column in range(columns):
            ax = axes[row][column]
            ax.set_xticks([])
            ax.set_yticks([])
            if column >= len(winners):
                ax.axis('off')
                continue
            w = sorted(winners)[column]
            ax.scatter(range(1, n + 1), w.word, s=12, color='k')
            ax.set_xlim(0.5, n + 0.5)
            ax.set_ylim(n + 0.5, 0.5)
            ax.set_aspect('equal')
            ax.set_title(f"n={n}, ν={value}\n{format_permutation(w)}", fontsize=6)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    logger.info("Сохранён рисунок %s", path)
    return path


def plot_growth(results: MaxNuResults, path: str, dpi: int = 150) -> str:
    """log2 u(n) / n^2 против n с полосой [1/4, 1/2] и верхней границей C(n,2)/n^2"""
    ns = sorted(results)
    ratios = [math.log2(results[n][0]) / n ** 2 for n in ns]
    upper = [n * (n - 1) / 2 / n ** 2 for n in ns]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.axhspan(0.25, 0.5, color='0.9', label='[1/4, 1/2]')
    ax.plot(ns, ratios, 'o-', color='k', label='log2 u(n) / n^2')
    ax.plot(ns, upper, '--', color='0.4', label='C(n,2) / n^2')
    ax.set_xlabel('n')
    ax.set_ylim(0, 0.55)
    ax.spines['right'].set_visible(False)
    ax.spines['top'].set_visible(False)
    ax.legend(fontsize=7, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    logger.info("Сохранён рисунок %s", path)
    return path
