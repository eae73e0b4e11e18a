"""
Алгебра: многочлены, многочлены Шуберта, повышающие операторы и точная линейная алгебра.
"""
