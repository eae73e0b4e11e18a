"""
Комбинаторика симметрической группы: перестановки, порядки, уровни рангов.
"""
