"""
Вывод результатов: отчёты проверок в JSON lines, сводная таблица, матрицы
в текстовом, JSON и CSV форматах.
"""
import json
import os
from typing import Any, Dict, Iterable, List, TextIO

FORMATS = ('text', 'json', 'csv')


class ReportWriter:
    """Запись результатов в поток в выбранном формате"""

    def __init__(self, stream: TextIO, output_format: str = 'text'):
        """
        Args:
            stream: поток вывода (обычно sys.stdout)
            output_format: "text", "json" или "csv"
        """
        if output_format not in FORMATS:
            raise ValueError(f"неизвестный формат вывода: {output_format}")
        self.stream = stream
        self.output_format = output_format

    def _line(self, text: str = ''):
        self.stream.write(text + '\n')

    def write_value(self, name: str, value: Any, parameters: Dict[str, Any] = None):
        """Скалярный результат; большие целые в JSON всегда строками"""
        if self.output_format == 'json':
            payload = {'result': name, 'value': str(value)}
            payload.update(parameters or {})
            self._line(json.dumps(payload, ensure_ascii=False))
        elif self.output_format == 'csv':
            self._line(f"{name},{value}")
        else:
            self._line(str(value))

    def write_mapping(self, name: str, mapping: Dict[str, Any]):
        if self.output_format == 'json':
            self._line(json.dumps({'result': name, 'value': {k: str(v) for k, v in mapping.items()}},
                                  ensure_ascii=False))
        else:
            for key, value in mapping.items():
                self._line(f"{key},{value}" if self.output_format == 'csv' else f"{key}: {value}")

    def write_matrix(self, matrix):
        if self.output_format == 'json':
            self._line(json.dumps(matrix.to_json_dict(), ensure_ascii=False))
        elif self.output_format == 'csv':
            self.stream.write(matrix.to_csv())
        else:
            self._line(matrix.to_text())

    def write_reports(self, reports: Iterable):
        """
        Отчёты проверок: JSON lines (по отчёту на строку) или таблица

        Args:
            reports: последовательность VerificationReport
        """
        reports = list(reports)
        if self.output_format == 'json':
            for report in reports:
                self._line(json.dumps(report.to_dict(), ensure_ascii=False, sort_keys=True))
            return
        if self.output_format == 'csv':
            self._line('claim_id,parameters,status,computed,expected,elapsed')
            for report in reports:
                params = ' '.join(f"{k}={v}" for k, v in report.parameters.items())
                self._line(f"{report.claim_id},{params},{report.status},\"{report.computed}\","
                           f"\"{report.expected}\",{report.elapsed:.3f}")
            return
        for report in reports:
            params = ' '.join(f"{k}={v}" for k, v in report.parameters.items())
            self._line(f"[{report.status:>12}] {report.claim_id:<12} {params:<10} "
                       f"{report.computed} (ожидалось: {report.expected}) {report.elapsed:.2f}с")
        self.write_summary(reports)

    def write_summary(self, reports: List):
        counts: Dict[str, int] = {}
        for report in reports:
            counts[report.status] = counts.get(report.status, 0) + 1
        self._line()
        self._line("Итог проверок:")
        for status in sorted(counts):
            self._line(f"  {status}: {counts[status]}")


def save_reports(reports: Iterable, path: str):
    """Сохранение отчётов в файл JSON lines"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        for report in reports:
            f.write(json.dumps(report.to_dict(), ensure_ascii=False, sort_keys=True) + '\n')


def load_reports(path: str) -> List[Dict[str, Any]]:
    with open(path, 'r', encoding='utf-8') as f:
        return [json.loads(line) for line in f if line.strip()]
