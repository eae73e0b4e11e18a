import io
import json

import pytest

from src.algebra.operators import build_D_tilde
from src.utils.report_writer import ReportWriter, load_reports, save_reports
from src.verification.claim_verifier import VerificationReport


def sample_reports():
    return [
        VerificationReport('det', {'n': 4, 'k': 2}, '54', '54', True, 0.01),
        VerificationReport('snf', {'n': 3, 'k': 1}, '(1,2)', 'no-reference', 'no-reference', 0.02),
        VerificationReport('e', {'n': 6, 'k': 1}, 'n = 6', '', 'skipped'),
    ]


def test_json_values_are_strings():
    stream = io.StringIO()
    ReportWriter(stream, 'json').write_value('det', 10 ** 30, {'n': 9, 'k': 2})
    payload = json.loads(stream.getvalue())
    assert payload == {'result': 'det', 'value': str(10 ** 30), 'n': 9, 'k': 2}


def test_text_and_csv_values():
    stream = io.StringIO()
    ReportWriter(stream).write_value('nu', 5)
    ReportWriter(stream, 'csv').write_value('nu', 5)
    assert stream.getvalue() == "5\nnu,5\n"


def test_matrix_formats():
    matrix = build_D_tilde(3, 1)
    stream = io.StringIO()
    ReportWriter(stream, 'json').write_matrix(matrix)
    assert json.loads(stream.getvalue())['entries'] == [['0', '1'], ['2', '0']]
    stream = io.StringIO()
    ReportWriter(stream, 'csv').write_matrix(matrix)
    assert stream.getvalue().splitlines() == [',"2,3,1","3,1,2"', '"1,3,2",0,1', '"2,1,3",2,0']


def test_reports_as_json_lines():
    stream = io.StringIO()
    ReportWriter(stream, 'json').write_reports(sample_reports())
    lines = [json.loads(line) for line in stream.getvalue().splitlines()]
    assert [line['claim_id'] for line in lines] == ['det', 'snf', 'e']
    assert lines[0]['matched'] is True
    assert lines[2]['matched'] == 'skipped'


def test_reports_as_table_with_summary():
    stream = io.StringIO()
    ReportWriter(stream).write_reports(sample_reports())
    text = stream.getvalue()
    assert "matched: 1" in text
    assert "skipped: 1" in text
    assert "no-reference: 1" in text


def test_save_and_load(tmp_path):
    path = str(tmp_path / "out" / "reports.jsonl")
    save_reports(sample_reports(), path)
    loaded = load_reports(path)
    assert len(loaded) == 3
    assert loaded[0]['parameters'] == {'n': 4, 'k': 2}
    assert loaded[1]['expected'] == 'no-reference'


def test_unknown_format():
    with pytest.raises(ValueError):
        ReportWriter(io.StringIO(), 'xml')
