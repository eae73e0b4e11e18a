"""
Графики: форма перестановок с максимальным ν и рост u(n).
"""
