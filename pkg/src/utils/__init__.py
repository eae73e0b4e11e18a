"""
Пакет с утилитами: конфигурация, логирование и вывод результатов.
"""
