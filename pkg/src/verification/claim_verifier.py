"""
Проверка опубликованных утверждений: по одному методу на утверждение, каждый
возвращает VerificationReport.
"""
import logging
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple, Union

import numpy as np
from tqdm import tqdm

from ..algebra.exact_linalg import (
    det_integer, det_q, determinant, factor_integer, parse_exponent_notation,
    render_exponent_notation, smith_normal_form,
)
from ..algebra.nu_cache import NuCache
from ..algebra.operators import (
    LevelVector, apply_V_power, build_D, build_D_tilde, build_D_tilde_q, build_E,
    build_E_via_expansion, check_level_range, k1_display_matrix, level_side, scaling_factor,
    theta_matrix,
)
from ..algebra.polynomial import (
    UnivariatePolynomial, evaluate_ones, rank_generating_function, substitute_all,
)
from ..algebra.schubert import (
    cauchy_product, cauchy_sum, clear_polynomial_cache, expand_in_schuberts, monk_sum, nu,
    nu_pipe_dream_oracle, nu_reduced_word_formula, nu_transition, nu_via_polynomial, q_nu,
    q_nu_reduced_word_formula, schubert, two_term_shape,
)
from ..combinatorics.permutation import (
    Permutation, all_permutations, compose, count_132, embed, format_permutation, identity,
    inverse, is_dominant, is_involution, is_symmetric_unimodal, level, longest, max_length,
    random_reduced_word, rank_sizes,
)
from ..errors import LevelRangeError, ResourceBoundError, SchubertError
from ..utils.config import Bounds
from .golden_tables import F_TABLE_EXTENDED, U_TABLE_EXTENDED, GoldenTables

logger = logging.getLogger(__name__)

NO_REFERENCE = 'no-reference'
SKIPPED = 'skipped'

CACHE_SPOT_CHECK = 5
# пределы для дорогих независимых проверок
REDUCED_WORD_MAX_N = 5
Q_FORMULA_MAX_N = 4
CAUCHY_SYMBOLIC_MAX_N = 4
FULL_EXPANSION_MAX_N = 5

Matched = Union[bool, str]


@dataclass
class VerificationReport:
    """Итог проверки одного утверждения"""
    claim_id: str
    parameters: Dict[str, int]
    computed: str
    expected: str
    matched: Matched
    elapsed: float = 0.0
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.matched is True:
            return 'matched'
        if self.matched is False:
            return 'mismatch'
        return self.matched

    @property
    def failed(self) -> bool:
        return self.matched is False

    def sort_key(self) -> Tuple:
        return self.claim_id, tuple(sorted(self.parameters.items()))

    def to_dict(self) -> Dict:
        return {
            'claim_id': self.claim_id,
            'parameters': dict(self.parameters),
            'computed': self.computed,
            'expected': self.expected,
            'matched': self.matched,
            'elapsed': round(self.elapsed, 6),
            'details': dict(self.details),
        }


class ClaimVerifier:
    """Проверка утверждений о матрицах D̃, E, значениях ν и эталонных таблицах"""

    def __init__(self, bounds: Optional[Bounds] = None, cache_dir: Optional[str] = None,
                 threads: int = 1, determinant_method: str = 'bareiss', progress: bool = False,
                 golden: Optional[GoldenTables] = None):
        """
        Инициализация проверяющего

        Args:
            bounds: ограничения ресурсов
            cache_dir: директория постоянного кеша ν
            threads: число потоков при построении матриц
            determinant_method: "bareiss" или "modular"
            progress: показывать прогресс tqdm
            golden: эталонные таблицы
        """
        self.bounds = bounds or Bounds()
        self.cache_dir = cache_dir
        self.threads = threads
        self.determinant_method = determinant_method
        self.progress = progress
        self.golden = golden or GoldenTables()
        self._caches: Dict[int, NuCache] = {}
        self._max_nu: Dict[int, Tuple[int, FrozenSet[Permutation]]] = {}

    def cache(self, n: int) -> NuCache:
        """Кеш ν для S_n; загруженные с диска значения сверяются выборочно"""
        if n not in self._caches:
            cache = NuCache(n, self.cache_dir)
            if cache.load():
                cache.spot_check(lambda w: nu_transition(w.word, {}), sample=CACHE_SPOT_CHECK)
            self._caches[n] = cache
        return self._caches[n]

    def save_caches(self) -> List[str]:
        return [path for path in (c.save() for c in self._caches.values()) if path]

    # --- ограничения ---

    def _check_n(self, n: int, limit: Optional[int] = None, what: str = 'n'):
        limit = self.bounds.max_n if limit is None else limit
        if n > limit:
            raise ResourceBoundError(f"{what} = {n} превышает ограничение {limit}")

    def _check_dim(self, n: int, k: int):
        check_level_range(n, k)
        self._check_n(n)
        side = level_side(n, k)
        if side > self.bounds.max_dim:
            raise ResourceBoundError(f"сторона матрицы ({n},{k}) равна {side} > max_dim {self.bounds.max_dim}")

    def _run(self, claim_id: str, parameters: Dict[str, int],
             body: Callable[[], Tuple[str, str, Matched, Dict[str, str]]]) -> VerificationReport:
        start = time.perf_counter()
        try:
            computed, expected, matched, details = body()
        except ResourceBoundError as e:
            logger.info("%s %s пропущено: %s", claim_id, parameters, e)
            return VerificationReport(claim_id, parameters, str(e), '', SKIPPED,
                                      time.perf_counter() - start)
        report = VerificationReport(claim_id, parameters, computed, expected, matched,
                                    time.perf_counter() - start, details)
        if report.failed:
            logger.warning("%s %s: вычислено %s, ожидалось %s", claim_id, parameters, computed, expected)
        else:
            logger.debug("%s %s: %s за %.2f с", claim_id, parameters, report.status, report.elapsed)
        return report

    # --- определители D̃(n,k) ---

    @staticmethod
    def conjecture_rhs(n: int, k: int) -> Fraction:
        """
        Правая часть гипотезы об определителе: ∏_{i<k} ((C(n,2)-(k+i))/(k-i))^{#(W_n)_i}

        Args:
            n: размер группы
            k: уровень

        Returns:
            модуль произведения как точная дробь
        """
        check_level_range(n, k)
        top = max_length(n)
        sizes = rank_sizes(n)
        result = Fraction(1)
        for i in range(k):
            result *= Fraction(top - (k + i), k - i) ** sizes[i]
        return abs(result)

    def verify_det_conjecture(self, n: int, k: int) -> VerificationReport:
        def body():
            self._check_dim(n, k)
            matrix = build_D_tilde(n, k, self.cache(n), self.threads, self.progress)
            det = determinant(matrix, self.determinant_method)
            rhs = self.conjecture_rhs(n, k)
            details = {
                'sign': '+' if det > 0 else '-' if det < 0 else '0',
                'nonzero': str(det != 0).lower(),
                'rhs_integral': str(rhs.denominator == 1).lower(),
            }
            return str(abs(det)), str(rhs), Fraction(abs(det)) == rhs, details
        return self._run('det', {'n': n, 'k': k}, body)

    @staticmethod
    def k1_orderings(matrix: np.ndarray) -> Optional[Tuple[List[int], List[int]]]:
        """
        Перестановки строк и столбцов, переводящие D̃(n,1) в явную матрицу
        (ноль в столбце n-2-r, двойка в столбце n-3-r строки r)

        Returns:
            (порядок строк, порядок столбцов) или None, если структура другая
        """
        size = matrix.shape[0]
        zero_of = {}
        two_of = {}
        for r in range(size):
            row = list(matrix[r])
            zeros = [c for c, x in enumerate(row) if x == 0]
            twos = [c for c, x in enumerate(row) if x == 2]
            if len(zeros) != 1 or len(twos) > 1 or any(x not in (0, 1, 2) for x in row):
                return None
            zero_of[r] = zeros[0]
            two_of[r] = twos[0] if twos else None
        start = [r for r in range(size) if two_of[r] is None]
        if len(start) != 1:
            return None
        rows = [0] * size
        cols = [0] * size
        current = start[0]
        for t in range(size):
            rows[size - 1 - t] = current
            cols[t] = zero_of[current]
            if t == size - 1:
                break
            following = [r for r in range(size) if two_of[r] == cols[t]]
            if len(following) != 1:
                return None
            current = following[0]
        if sorted(rows) != list(range(size)) or sorted(cols) != list(range(size)):
            return None
        return rows, cols

    def verify_k1_sign(self, n: int) -> VerificationReport:
        def body():
            if n < 3:
                raise LevelRangeError(f"проверка k = 1 требует n >= 3, получено {n}")
            self._check_dim(n, 1)
            matrix = build_D_tilde(n, 1, self.cache(n), self.threads, self.progress)
            display = k1_display_matrix(n)
            orderings = self.k1_orderings(matrix.entries)
            reordered = orderings is not None and bool(
                np.array_equal(matrix.permuted(*orderings), display))
            signed = det_integer(display)
            expected = (-1) ** ((n - 2) // 2) * (max_length(n) - 1)
            computed_abs = abs(determinant(matrix, self.determinant_method))
            details = {'reordered': str(reordered).lower(), 'abs_det': str(computed_abs)}
            matched = reordered and signed == expected and computed_abs == abs(expected)
            return str(signed), str(expected), matched, details
        return self._run('k1sign', {'n': n}, body)

    # --- нормальная форма Смита ---

    def verify_snf(self, n: int, k: int, force: bool = False) -> VerificationReport:
        """
        Диагональ SNF D̃(n,k) против эталона f(n,k)

        Args:
            n: размер группы
            k: уровень
            force: считать и без эталона (отчёт "no-reference")
        """
        golden = self.golden.f(n, k)
        if golden is None and not force:
            raise LevelRangeError(f"нет эталонного значения f({n},{k})")

        def body():
            self._check_dim(n, k)
            matrix = build_D_tilde(n, k, self.cache(n), self.threads, self.progress)
            diagonal = smith_normal_form(matrix)
            computed = diagonal.render()
            details = {'chain': str(diagonal.is_divisibility_chain()).lower()}
            if golden is None:
                return computed, NO_REFERENCE, NO_REFERENCE, details
            matched = diagonal.entries == parse_exponent_notation(golden)
            return computed, golden, matched, details
        return self._run('snf', {'n': n, 'k': k}, body)

    def verify_f_n1(self, n: int) -> VerificationReport:
        def body():
            if n < 3:
                raise LevelRangeError(f"f(n,1) определено при n >= 3, получено {n}")
            self._check_dim(n, 1)
            matrix = build_D_tilde(n, 1, self.cache(n), self.threads, self.progress)
            computed = smith_normal_form(matrix).render()
            expected = render_exponent_notation([1] * (n - 2) + [max_length(n) - 1])
            orderings = self.k1_orderings(matrix.entries)
            # угловой минор явной матрицы: без первой строки и первого столбца
            minor = det_integer(matrix.submatrix(orderings[0][0], orderings[1][0])) if orderings else 0
            details = {'minor_det': str(minor)}
            return computed, expected, computed == expected and abs(minor) == 1, details
        return self._run('fn1', {'n': n}, body)

    # --- значения ν ---

    def verify_two_term(self, n: int) -> VerificationReport:
        def body():
            if n < 3:
                raise LevelRangeError(f"подсчёт C(2n-3, n-3) требует n >= 3, получено {n}")
            self._check_n(n, self.bounds.exhaustive_max_n)
            cache = self.cache(n)
            two = set()
            single = set()
            for w in tqdm(all_permutations(n), total=math.factorial(n), desc=f"ν=2, S_{n}",
                          disable=not self.progress):
                if nu(w, cache) == 2:
                    two.add(w)
                if count_132(w) == 1:
                    single.add(w)
            expected_size = math.comb(2 * n - 3, n - 3)
            shapes_ok = True
            for w in sorted(single):
                shape = two_term_shape(w)
                if len(shape.polynomial.terms) != 2 or evaluate_ones(shape.polynomial) != 2:
                    shapes_ok = False
                elif n <= self.bounds.oracle_max_n and shape.polynomial != schubert(w):
                    shapes_ok = False
            details = {
                'nu_two': str(len(two)),
                'one_132': str(len(single)),
                'proved_direction': str(single <= two).lower(),
                'shapes': str(shapes_ok).lower(),
            }
            matched = two == single and len(two) == expected_size and shapes_ok
            return str(len(two)), str(expected_size), matched, details
        return self._run('twoterm', {'n': n}, body)

    def verify_dominant_nu(self, n: int) -> VerificationReport:
        def body():
            self._check_n(n, self.bounds.exhaustive_max_n)
            cache = self.cache(n)
            disagreements = [w for w in all_permutations(n)
                             if (nu(w, cache) == 1) != is_dominant(w) or is_dominant(w) != (count_132(w) == 0)]
            computed = str(len(disagreements))
            details = {'first': format_permutation(disagreements[0])} if disagreements else {}
            return computed, '0', not disagreements, details
        return self._run('dominant', {'n': n}, body)

    def _oracle_disagrees(self, w: Permutation, value: int, rng: random.Random) -> bool:
        n = w.n
        if value != nu_via_polynomial(w) or value != nu_pipe_dream_oracle(w, self.bounds.oracle_max_n):
            return True
        if nu(embed(w, n + 1), self.cache(n + 1)) != value:
            return True
        if n <= REDUCED_WORD_MAX_N:
            chain = random_reduced_word(compose(inverse(w), longest(n)), rng)
            if value != nu_reduced_word_formula(w) or schubert(w, chain) != schubert(w):
                return True
        return n <= Q_FORMULA_MAX_N and q_nu(w) != q_nu_reduced_word_formula(w)

    def verify_nu_oracles(self, n: int) -> VerificationReport:
        """
        ν через рекурсию перехода против многочлена Шуберта, пайп-дримов,
        стабильности при вложении в S_{n+1}, а при малых n также против
        формул по приведённым словам и выбора цепочки разделённых разностей
        """
        def body():
            self._check_n(n, self.bounds.oracle_max_n, 'n для оракулов')
            cache = self.cache(n)
            rng = random.Random(n)
            disagreements = []
            for w in tqdm(all_permutations(n), total=math.factorial(n), desc=f"оракулы ν, S_{n}",
                          disable=not self.progress):
                if self._oracle_disagrees(w, nu(w, cache), rng):
                    disagreements.append(w)
            details = {'first': format_permutation(disagreements[0])} if disagreements else {}
            return str(len(disagreements)), '0', not disagreements, details
        return self._run('nu-oracles', {'n': n}, body)

    def max_nu(self, n: int, extended: bool = False) -> Tuple[int, FrozenSet[Permutation]]:
        """
        u(n) = max ν_w по S_n и множество всех перестановок, где он достигается

        Args:
            n: размер группы
            extended: разрешить n сверх max_nu_max_n

        Returns:
            (u(n), множество перестановок)
        """
        if n in self._max_nu:
            return self._max_nu[n]
        if not extended:
            self._check_n(n, self.bounds.max_nu_max_n, 'n для max ν')
        cache = self.cache(n)
        best = 0
        winners: List[Permutation] = []
        for w in tqdm(all_permutations(n), total=math.factorial(n), desc=f"max ν, S_{n}",
                      disable=not self.progress):
            value = nu(w, cache)
            if value > best:
                best, winners = value, [w]
            elif value == best:
                winners.append(w)
        result = (best, frozenset(winners))
        self._max_nu[n] = result
        return result

    def verify_max_nu(self, n: int, extended: bool = False) -> VerificationReport:
        def body():
            value, winners = self.max_nu(n, extended)
            computed = f"{value} " + ' '.join(format_permutation(w) for w in sorted(winners))
            details = {'involutions': str(all(is_involution(w) for w in winners)).lower()}
            golden = self.golden.u(n)
            if golden is None:
                return computed, NO_REFERENCE, NO_REFERENCE, details
            golden_value, golden_winners = golden
            expected = f"{golden_value} " + ' '.join(format_permutation(w) for w in sorted(golden_winners))
            return computed, expected, computed == expected, details
        return self._run('maxnu', {'n': n}, body)

    def verify_cauchy(self, n: int) -> VerificationReport:
        """
        Σ_w ν_w ν_{w^{-1}∘w_0} = 2^{C(n,2)}; при малых n также символьное тождество Коши
        """
        def body():
            self._check_n(n, self.bounds.exhaustive_max_n)
            cache = self.cache(n)
            w0 = longest(n)
            total = 0
            best = 0
            for w in all_permutations(n):
                value = nu(w, cache)
                best = max(best, value)
                total += value * nu(compose(inverse(w), w0), cache)
            expected = 2 ** max_length(n)
            matched = total == expected
            details = {'log2_u_over_n2': f"{math.log2(best) / n ** 2:.6f}"}
            if n <= CAUCHY_SYMBOLIC_MAX_N:
                product = cauchy_product(n)
                symbolic = product == cauchy_sum(n) and substitute_all(product, 1) == expected
                details['symbolic'] = str(symbolic).lower()
                matched = matched and symbolic
            return str(total), str(expected), matched, details
        return self._run('cauchy', {'n': n}, body)

    def verify_bounds(self, n: int, extended: bool = False) -> VerificationReport:
        """
        Границы из тождества Коши при конечном n: 2^{C(n,2)} <= n!·u(n)^2 и u(n) <= 2^{C(n,2)}
        """
        def body():
            value, _ = self.max_nu(n, extended)
            power = 2 ** max_length(n)
            lower = math.factorial(n) * value * value >= power
            upper = value <= power
            ratio = math.log2(value) / n ** 2
            details = {'lower': str(lower).lower(), 'upper': str(upper).lower(),
                       'inside_quarter_half': str(0.25 <= ratio <= 0.5).lower()}
            return f"{ratio:.6f}", f"<= {max_length(n) / n ** 2:.6f}", lower and upper, details
        return self._run('bounds', {'n': n}, body)

    # --- порядок Брюа ---

    def verify_e(self, n: int, k: int) -> VerificationReport:
        def body():
            self._check_dim(n, k)
            matrix = build_E(n, k, self.threads, self.progress)
            value = abs(determinant(matrix, self.determinant_method))
            details = {'factorization': factor_integer(value)}
            golden = self.golden.e(n, k)
            if golden is None:
                return str(value), NO_REFERENCE, NO_REFERENCE, details
            return str(value), str(golden), value == golden, details
        return self._run('e', {'n': n, 'k': k}, body)

    def verify_e_expansion(self, n: int, k: int) -> VerificationReport:
        """
        Итерации V против коэффициентов [𝔖_v]𝔖_u(𝔖_{s_1} + ... + 𝔖_{s_{n-1}})^j;
        при малом n строки сверяются и с полным разложением по базису Шуберта
        """
        def body():
            self._check_n(n, 4, 'n для разложения E')
            check_level_range(n, k)
            iterated = build_E(n, k)
            expanded = build_E_via_expansion(n, k)
            matched = iterated == expanded
            details = {}
            degree = max_length(n) - k
            ambient = n - 1 + degree
            if ambient <= FULL_EXPANSION_MAX_N:
                generator = monk_sum(n, n - 1) ** (max_length(n) - 2 * k)
                full = all(
                    expand_in_schuberts(schubert(u) * generator, degree, ambient).restricted_to(n)
                    == {v: c for v, c in zip(iterated.col_labels, row) if c}
                    for u, row in zip(iterated.row_labels, iterated.entries)
                )
                details['full_expansion'] = str(full).lower()
                matched = matched and full
            return str(matched).lower(), 'true', matched, details
        return self._run('e-expansion', {'n': n, 'k': k}, body)

    def verify_chevalley(self, n: int) -> VerificationReport:
        def body():
            self._check_n(n, self.bounds.chevalley_max_n, 'n для тождества Шевалле')
            top = max_length(n)
            result = apply_V_power(LevelVector.basis(identity(n)), top)
            expected = {longest(n): math.factorial(top)}
            computed = ' + '.join(f"{c}*{format_permutation(w)}" for w, c in sorted(result.coordinates.items()))
            expected_text = f"{math.factorial(top)}*{format_permutation(longest(n))}"
            return computed, expected_text, result.coordinates == expected, {}
        return self._run('chevalley', {'n': n}, body)

    # --- q-определители ---

    def verify_qdet(self, n: int, k: int) -> VerificationReport:
        def body():
            self._check_dim(n, k)
            matrix = build_D_tilde_q(n, k, self.threads, self.progress)
            polynomial = det_q(matrix)
            at_one = det_integer(matrix.at_q(1))
            consistent = polynomial(1) == at_one
            details = {
                'valuation': str(polynomial.valuation()),
                'degree': str(polynomial.degree()),
                'at_q1': str(at_one),
            }
            computed = f"valuation={polynomial.valuation()} degree={polynomial.degree()} q1={abs(at_one)}"
            if (n, k) == (5, 2):
                expected = "valuation=36 degree=56 q1=9604"
                return computed, expected, consistent and computed == expected, details
            if (n, k) == (5, 3):
                divisor = (UnivariatePolynomial.monomial(26)
                           * UnivariatePolynomial.q_integer(3) ** 3
                           * UnivariatePolynomial.q_integer(5) ** 3)
                divisible = divisor.divides(polynomial)
                quotient_degree = divmod(polynomial, divisor)[0].degree() if divisible else -1
                details['quotient_degree'] = str(quotient_degree) if divisible else ''
                computed = f"divisible={str(divisible).lower()} quotient_degree={quotient_degree}"
                matched = consistent and divisible and quotient_degree == 28
                return computed, "divisible=true quotient_degree=28", matched, details
            if k == 0:
                monomial = polynomial == UnivariatePolynomial.monomial(
                    polynomial.valuation(), polynomial.leading_coefficient())
                return computed, 'monomial', consistent and monomial, details
            return computed, NO_REFERENCE, NO_REFERENCE if consistent else False, details
        return self._run('qdet', {'n': n, 'k': k}, body)

    # --- свойства оператора и уровней ---

    def verify_rank_sizes(self, n: int) -> VerificationReport:
        def body():
            self._check_n(n)
            sizes = rank_sizes(n)
            matched = (is_symmetric_unimodal(sizes) and sum(sizes) == math.factorial(n)
                       and sizes == rank_generating_function(n).to_list())
            if n <= self.bounds.oracle_max_n:
                matched = matched and all(len(level(n, k)) == sizes[k] for k in range(len(sizes)))
            return ','.join(str(s) for s in sizes), 'symmetric unimodal', matched, {}
        return self._run('rank-sizes', {'n': n}, body)

    def verify_scaling(self, n: int, k: int) -> VerificationReport:
        def body():
            self._check_dim(n, k)
            d = build_D(n, k, self.threads)
            d_tilde = build_D_tilde(n, k, self.cache(n), self.threads)
            factor = scaling_factor(n, k)
            matched = all(a == factor * b for a, b in zip(d.entries.flat, d_tilde.entries.flat))
            return str(matched).lower(), 'true', matched, {'factor': str(factor)}
        return self._run('scaling', {'n': n, 'k': k}, body)

    def verify_theta(self, n: int, k: int) -> VerificationReport:
        def body():
            self._check_n(n, 5, 'n для алгебры нильКокстера')
            check_level_range(n, k)
            matched = bool(np.array_equal(theta_matrix(n, k).entries, build_D(n, k).entries))
            return str(matched).lower(), 'true', matched, {}
        return self._run('theta', {'n': n, 'k': k}, body)

    # --- пакетный запуск ---

    def plan(self, max_n: int, max_k: Optional[int] = None,
             extended: bool = False) -> List[Tuple[str, Dict[str, int], Callable[[], VerificationReport]]]:
        """
        Список проверок в пределах max_n и max_k

        Args:
            max_n: наибольшее n
            max_k: наибольшее k (None - все допустимые)
            extended: включить долгие наборы

        Returns:
            список (claim_id, параметры, вызов)
        """
        jobs = []

        def add(claim_id, parameters, call):
            jobs.append((claim_id, parameters, call))

        for n in range(3, max_n + 1):
            top = max_length(n)
            ks = [k for k in range((top + 1) // 2) if max_k is None or k <= max_k]
            add('rank-sizes', {'n': n}, lambda n=n: self.verify_rank_sizes(n))
            for k in ks:
                if n <= 6 or k <= 5 or extended:
                    add('det', {'n': n, 'k': k}, lambda n=n, k=k: self.verify_det_conjecture(n, k))
            if 1 in ks:
                add('k1sign', {'n': n}, lambda n=n: self.verify_k1_sign(n))
                add('fn1', {'n': n}, lambda n=n: self.verify_f_n1(n))
            for k in ks:
                if self.golden.f(n, k) is not None and (extended or (n, k) not in F_TABLE_EXTENDED):
                    add('snf', {'n': n, 'k': k}, lambda n=n, k=k: self.verify_snf(n, k))
            if n <= self.bounds.exhaustive_max_n:
                add('twoterm', {'n': n}, lambda n=n: self.verify_two_term(n))
                add('dominant', {'n': n}, lambda n=n: self.verify_dominant_nu(n))
                add('cauchy', {'n': n}, lambda n=n: self.verify_cauchy(n))
            if n <= self.bounds.oracle_max_n:
                add('nu-oracles', {'n': n}, lambda n=n: self.verify_nu_oracles(n))
            if n <= self.bounds.max_nu_max_n or (extended and n in U_TABLE_EXTENDED):
                add('maxnu', {'n': n}, lambda n=n: self.verify_max_nu(n, extended))
                add('bounds', {'n': n}, lambda n=n: self.verify_bounds(n, extended))
            if n <= self.bounds.chevalley_max_n:
                add('chevalley', {'n': n}, lambda n=n: self.verify_chevalley(n))
            for k in ks:
                if (n, k) in self.golden.e_table:
                    add('e', {'n': n, 'k': k}, lambda n=n, k=k: self.verify_e(n, k))
                if n <= 4:
                    add('e-expansion', {'n': n, 'k': k}, lambda n=n, k=k: self.verify_e_expansion(n, k))
                    add('theta', {'n': n, 'k': k}, lambda n=n, k=k: self.verify_theta(n, k))
                if n <= 5:
                    add('scaling', {'n': n, 'k': k}, lambda n=n, k=k: self.verify_scaling(n, k))
                if (n, k) in ((5, 2), (5, 3)):
                    add('qdet', {'n': n, 'k': k}, lambda n=n, k=k: self.verify_qdet(n, k))
        return jobs

    def run_all(self, max_n: int, max_k: Optional[int] = None,
                extended: bool = False) -> List[VerificationReport]:
        """
        Все проверки в пределах ограничений; по исчерпании max_seconds оставшиеся
        проверки получают статус "skipped"

        Returns:
            отчёты, упорядоченные по claim_id и параметрам
        """
        jobs = self.plan(max_n, max_k, extended)
        logger.info("Запланировано проверок: %d", len(jobs))
        start = time.perf_counter()
        reports = []
        for claim_id, parameters, call in tqdm(jobs, desc='проверки', disable=not self.progress):
            if time.perf_counter() - start > self.bounds.max_seconds:
                reports.append(VerificationReport(claim_id, parameters, 'time budget exhausted', '', SKIPPED))
                continue
            try:
                reports.append(call())
            except SchubertError as e:
                reports.append(VerificationReport(claim_id, parameters, str(e), '', False))
        self.save_caches()
        clear_polynomial_cache()
        reports.sort(key=VerificationReport.sort_key)
        return reports
