"""
Проверка опубликованных утверждений и эталонные таблицы.
"""
