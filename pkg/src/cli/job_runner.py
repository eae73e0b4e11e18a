"""
Описание задания командной строки и его выполнение.
"""
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from ..algebra.exact_linalg import det_q, determinant, smith_normal_form
from ..algebra.operators import (
    build_D, build_D_tilde, build_D_tilde_q, build_E, check_level_range, level_side,
)
from ..algebra.polynomial import render
from ..algebra.schubert import nu, q_nu, schubert
from ..combinatorics.permutation import Permutation, format_permutation, parse_permutation
from ..errors import PermutationError, ResourceBoundError, SchubertError
from ..utils.config import Settings
from ..utils.report_writer import ReportWriter, save_reports
from ..verification.claim_verifier import SKIPPED, ClaimVerifier, VerificationReport
from ..visualization.shapes import plot_argmax_shapes, plot_growth

logger = logging.getLogger(__name__)

PERMUTATION_COMMANDS = ('nu', 'schubert', 'qnu')
MATRIX_COMMANDS = ('dmatrix', 'ematrix', 'det', 'qdet', 'snf')
N_COMMANDS = ('maxnu', 'cauchy', 'shape')
COMMANDS = PERMUTATION_COMMANDS + MATRIX_COMMANDS + N_COMMANDS + ('verify',)

CLAIMS_WITH_K = ('det', 'snf', 'e', 'qdet', 'scaling', 'theta', 'e-expansion')
CLAIMS_WITH_N = ('k1sign', 'fn1', 'twoterm', 'maxnu', 'cauchy', 'chevalley', 'bounds',
                 'dominant', 'rank-sizes', 'nu-oracles')
CLAIMS = CLAIMS_WITH_K + CLAIMS_WITH_N + ('all',)

MATRIX_VARIANTS = ('tilde', 'scaled', 'q')

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class JobSpec:
    """Одно задание командной строки"""
    command: str
    n: Optional[int] = None
    k: Optional[int] = None
    permutation: Optional[str] = None
    output_format: str = 'text'
    claim: Optional[str] = None
    variant: str = 'tilde'
    extended: bool = False
    report_path: Optional[str] = None

    def validate(self):
        """Проверка согласованности полей; ошибки - SchubertError"""
        if self.command not in COMMANDS:
            raise SchubertError(f"неизвестная команда: {self.command}")
        needs_perm = self.command in PERMUTATION_COMMANDS
        if needs_perm != (self.permutation is not None):
            raise SchubertError(f"--perm {'обязателен' if needs_perm else 'не используется'} для {self.command}")
        if self.command == 'verify' and self.claim not in CLAIMS:
            raise SchubertError(f"неизвестное утверждение: {self.claim}")
        if self.command == 'verify':
            needs_k = self.claim in CLAIMS_WITH_K
            k_allowed = needs_k or self.claim == 'all'
        else:
            needs_k = k_allowed = self.command in MATRIX_COMMANDS
        if needs_k and self.k is None:
            raise SchubertError(f"--k обязателен для {self.command}")
        if not k_allowed and self.k is not None:
            raise SchubertError(f"--k не используется для {self.command}")
        if not needs_perm and self.command != 'verify' and self.n is None:
            raise SchubertError(f"--n обязателен для {self.command}")
        if self.command == 'verify' and self.claim != 'all' and self.n is None:
            raise SchubertError("--n обязателен для verify")
        if self.variant not in MATRIX_VARIANTS:
            raise SchubertError(f"неизвестный вариант матрицы: {self.variant}")


class JobRunner:
    """Выполнение заданий с общими настройками, кешем ν и форматом вывода"""

    def __init__(self, settings: Settings, stream: Optional[TextIO] = None, progress: bool = False):
        """
        Args:
            settings: итоговые настройки (после CLI и переменных окружения)
            stream: поток результатов (по умолчанию stdout)
            progress: показывать прогресс
        """
        self.settings = settings
        self.stream = stream or sys.stdout
        self.progress = progress
        self.verifier = ClaimVerifier(settings.bounds, settings.cache_dir, settings.threads,
                                      settings.determinant_method, progress)

    def run(self, job: JobSpec) -> int:
        """
        Выполнение задания

        Returns:
            код выхода: 0 - успех, 1 - несовпадение, 2 - ошибка использования,
            3 - превышено ограничение ресурсов
        """
        try:
            job.validate()
            status = self._dispatch(job)
        except ResourceBoundError as e:
            logger.error("Превышено ограничение: %s", e)
            return EXIT_RESOURCE
        except SchubertError as e:
            print(f"Ошибка: {e}", file=sys.stderr)
            return EXIT_USAGE
        finally:
            self.verifier.save_caches()
        return status

    def _writer(self, job: JobSpec) -> ReportWriter:
        return ReportWriter(self.stream, job.output_format)

    def _check_matrix(self, n: int, k: int):
        check_level_range(n, k)
        self._check_n(n)
        side = level_side(n, k)
        if side > self.settings.bounds.max_dim:
            raise ResourceBoundError(f"сторона матрицы {side} > max_dim {self.settings.bounds.max_dim}")

    def _check_n(self, n: int):
        if n > self.settings.bounds.max_n:
            raise ResourceBoundError(f"n = {n} превышает max_n {self.settings.bounds.max_n}")

    def _permutation(self, job: JobSpec) -> Permutation:
        w = parse_permutation(job.permutation)
        if job.n is not None and job.n != w.n:
            raise PermutationError(f"--n {job.n} не совпадает с длиной перестановки {w.n}")
        self._check_n(w.n)
        return w

    def _dispatch(self, job: JobSpec) -> int:
        writer = self._writer(job)
        command = job.command
        params = {'n': job.n, 'k': job.k}
        if command == 'nu':
            w = self._permutation(job)
            writer.write_value('nu', nu(w, self.verifier.cache(w.n)), {'perm': format_permutation(w)})
        elif command == 'schubert':
            w = self._permutation(job)
            writer.write_value('schubert', render(schubert(w)), {'perm': format_permutation(w)})
        elif command == 'qnu':
            w = self._permutation(job)
            writer.write_value('qnu', q_nu(w), {'perm': format_permutation(w)})
        elif command == 'dmatrix':
            self._check_matrix(job.n, job.k)
            writer.write_matrix(self._d_matrix(job))
        elif command == 'ematrix':
            self._check_matrix(job.n, job.k)
            writer.write_matrix(build_E(job.n, job.k, self.settings.threads, self.progress))
        elif command == 'det':
            self._check_matrix(job.n, job.k)
            matrix = build_D_tilde(job.n, job.k, self.verifier.cache(job.n), self.settings.threads, self.progress)
            writer.write_value('det', determinant(matrix, self.settings.determinant_method), params)
        elif command == 'qdet':
            self._check_matrix(job.n, job.k)
            writer.write_value('qdet', det_q(build_D_tilde_q(job.n, job.k, self.settings.threads, self.progress)),
                               params)
        elif command == 'snf':
            self._check_matrix(job.n, job.k)
            matrix = build_D_tilde(job.n, job.k, self.verifier.cache(job.n), self.settings.threads, self.progress)
            writer.write_value('snf', smith_normal_form(matrix).render(), params)
        elif command == 'maxnu':
            value, winners = self.verifier.max_nu(job.n, job.extended)
            writer.write_value('maxnu', f"{value} " + ' '.join(format_permutation(w) for w in sorted(winners)),
                               {'n': job.n})
        elif command == 'cauchy':
            return self._finish_reports(job, [self.verifier.verify_cauchy(job.n)])
        elif command == 'shape':
            return self._shape(job)
        else:
            return self._verify(job)
        return EXIT_OK

    def _d_matrix(self, job: JobSpec):
        if job.variant == 'scaled':
            return build_D(job.n, job.k, self.settings.threads, self.progress)
        if job.variant == 'q':
            return build_D_tilde_q(job.n, job.k, self.settings.threads, self.progress)
        return build_D_tilde(job.n, job.k, self.verifier.cache(job.n), self.settings.threads, self.progress)

    def _verify(self, job: JobSpec) -> int:
        if job.claim == 'all':
            return self.verify_all(job)
        verifier = self.verifier
        n, k = job.n, job.k
        calls = {
            'det': lambda: verifier.verify_det_conjecture(n, k),
            'snf': lambda: verifier.verify_snf(n, k, force=True),
            'e': lambda: verifier.verify_e(n, k),
            'qdet': lambda: verifier.verify_qdet(n, k),
            'scaling': lambda: verifier.verify_scaling(n, k),
            'theta': lambda: verifier.verify_theta(n, k),
            'e-expansion': lambda: verifier.verify_e_expansion(n, k),
            'k1sign': lambda: verifier.verify_k1_sign(n),
            'fn1': lambda: verifier.verify_f_n1(n),
            'twoterm': lambda: verifier.verify_two_term(n),
            'maxnu': lambda: verifier.verify_max_nu(n, job.extended),
            'cauchy': lambda: verifier.verify_cauchy(n),
            'chevalley': lambda: verifier.verify_chevalley(n),
            'bounds': lambda: verifier.verify_bounds(n, job.extended),
            'dominant': lambda: verifier.verify_dominant_nu(n),
            'rank-sizes': lambda: verifier.verify_rank_sizes(n),
            'nu-oracles': lambda: verifier.verify_nu_oracles(n),
        }
        return self._finish_reports(job, [calls[job.claim]()])

    def verify_all(self, job: JobSpec) -> int:
        """
        Все проверки в пределах ограничений; код 0, если нет несовпадений
        """
        max_n = job.n if job.n is not None else self.settings.verify_max_n
        max_k = job.k if job.k is not None else self.settings.verify_max_k
        extended = job.extended or self.settings.extended
        reports = self.verifier.run_all(max_n, max_k, extended)
        return self._finish_reports(job, reports, aggregate=True)

    def _finish_reports(self, job: JobSpec, reports: List[VerificationReport], aggregate: bool = False) -> int:
        self._writer(job).write_reports(reports)
        if job.report_path:
            save_reports(reports, job.report_path)
            logger.info("Отчёты сохранены в %s", job.report_path)
        if any(r.failed for r in reports):
            return EXIT_MISMATCH
        if not aggregate and any(r.matched == SKIPPED for r in reports):
            return EXIT_RESOURCE
        return EXIT_OK

    def _shape(self, job: JobSpec) -> int:
        results = {}
        for n in range(3, job.n + 1):
            results[n] = self.verifier.max_nu(n, job.extended)
        os.makedirs(self.settings.plot_dir, exist_ok=True)
        shapes_path = os.path.join(self.settings.plot_dir, f"argmax_shapes_n{job.n}.png")
        growth_path = os.path.join(self.settings.plot_dir, f"growth_n{job.n}.png")
        plot_argmax_shapes(results, shapes_path, dpi=self.settings.plot_dpi)
        plot_growth(results, growth_path, dpi=self.settings.plot_dpi)
        self._writer(job).write_mapping('shape', {'shapes': shapes_path, 'growth': growth_path})
        return EXIT_OK
