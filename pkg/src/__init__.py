"""
Точные вычисления с многочленами Шуберта и матрицами слабого порядка.
"""
