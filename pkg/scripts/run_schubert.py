#!/usr/bin/env python
import argparse
import sys
from pathlib import Path

# Добавление директории проекта в sys.path
project_dir = str(Path(__file__).resolve().parent.parent)
sys.path.append(project_dir)

from src.cli.job_runner import CLAIMS, COMMANDS, EXIT_USAGE, MATRIX_VARIANTS, JobRunner, JobSpec
from src.errors import SchubertError
from src.utils.config import DETERMINANT_METHODS, load_settings
from src.utils.logging_setup import progress_enabled, setup_logging
from src.utils.report_writer import FORMATS


def parse_args(argv=None):
    parser = argparse.ArgumentParser(
        description='Специализации многочленов Шуберта, матрицы слабого порядка и порядка Брюа')
    parser.add_argument('command', choices=COMMANDS,
                        help='Команда')
    parser.add_argument('claim', nargs='?', choices=CLAIMS, default=None,
                        help='Утверждение для команды verify')
    parser.add_argument('--n', type=int, default=None,
                        help='Размер группы S_n (для verify all - наибольшее n)')
    parser.add_argument('--k', type=int, default=None,
                        help='Уровень k (для verify all - наибольшее k)')
    parser.add_argument('--perm', type=str, default=None,
                        help='Перестановка: "1,4,3,2" или "1432"')
    parser.add_argument('--format', type=str, choices=FORMATS, default='text',
                        help='Формат вывода')
    parser.add_argument('--variant', type=str, choices=MATRIX_VARIANTS, default='tilde',
                        help='Вариант матрицы для dmatrix: D̃, D или D̃_q')
    parser.add_argument('--cache-dir', type=str, default=None,
                        help='Директория кеша ν (иначе SCHUBERT_CACHE_DIR или конфигурация)')
    parser.add_argument('--threads', type=int, default=None,
                        help='Число потоков при построении матриц')
    parser.add_argument('--max-seconds', type=float, default=None,
                        help='Бюджет времени пакетной проверки (сек)')
    parser.add_argument('--max-dim', type=int, default=None,
                        help='Наибольшая сторона матрицы')
    parser.add_argument('--method', type=str, choices=DETERMINANT_METHODS, default=None,
                        help='Метод целочисленного определителя')
    parser.add_argument('--config', type=str, default=None,
                        help='JSON файл с параметрами поверх configs/default_config.json')
    parser.add_argument('--report', type=str, default=None,
                        help='Файл для сохранения отчётов проверок (JSON lines)')
    parser.add_argument('--extended', action='store_true',
                        help='Включить долгие наборы проверок')
    parser.add_argument('--verbose', action='store_true',
                        help='Отладочный вывод')
    parser.add_argument('--quiet', action='store_true',
                        help='Без прогресса и информационных сообщений')
    args = parser.parse_args(argv)
    if args.command == 'verify' and args.claim is None:
        parser.error('для verify нужно указать утверждение')
    if args.command != 'verify' and args.claim is not None:
        parser.error(f'лишний аргумент {args.claim} для {args.command}')
    return args


def main(argv=None) -> int:
    args = parse_args(argv)
    setup_logging(args.verbose, args.quiet)

    try:
        settings = load_settings(args.config).with_overrides(
            cache_dir=args.cache_dir,
            threads=args.threads,
            determinant_method=args.method,
            max_seconds=args.max_seconds,
            max_dim=args.max_dim,
        )
    except SchubertError as e:
        print(f"Ошибка: {e}", file=sys.stderr)
        return EXIT_USAGE

    job = JobSpec(
        command=args.command,
        n=args.n,
        k=args.k,
        permutation=args.perm,
        output_format=args.format,
        claim=args.claim,
        variant=args.variant,
        extended=args.extended,
        report_path=args.report,
    )
    runner = JobRunner(settings, sys.stdout, progress=progress_enabled(args.quiet))
    return runner.run(job)


if __name__ == "__main__":
    sys.exit(main())
