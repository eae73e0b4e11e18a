"""
Командная строка: описание заданий и их выполнение.
"""
