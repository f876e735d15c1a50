"""Published reference values the computations are checked against."""

from fractions import Fraction

# p(n), 0 <= n <= 10
TABLE1 = (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)

# P_{a,b}(2) for a, b in 1..4 (row a, column b)
TABLE2 = (
    (-1, 0, 0, 4),
    (0, 5, 14, 35),
    (0, 14, 35, 90),
    (4, 35, 90, 215),
)

# Largest real zeros of P_{a,b}(x), one decimal, 1 <= a, b <= 14
TABLE3 = (
    ("3.0", "2.0", "2.0", "1.7", "1.7", "1.6", "1.6", "1.5", "1.5", "1.4", "1.5", "1.4", "1.4", "1.4",),
    ("2.0", "1.4", "1.2", "1.1", "1.1", "1.0", "1.0", "0.9", "0.9", "0.9", "0.9", "0.9", "0.9", "0.8",),
    ("2.0", "1.2", "1.2", "1.0", "1.0", "0.9", "0.9", "0.8", "0.9", "0.8", "0.8", "0.8", "0.8", "0.8",),
    ("1.7", "1.1", "1.0", "0.9", "0.9", "0.8", "0.8", "0.7", "0.7", "0.7", "0.7", "0.6", "0.6", "0.6",),
    ("1.7", "1.1", "1.0", "0.9", "0.9", "0.7", "0.8", "0.7", "0.7", "0.7", "0.7", "0.6", "0.7", "0.6",),
    ("1.6", "1.0", "0.9", "0.8", "0.7", "0.7", "0.7", "0.6", "0.6", "0.6", "0.6", "0.5", "0.5", "0.5",),
    ("1.6", "1.0", "0.9", "0.8", "0.8", "0.7", "0.7", "0.6", "0.6", "0.6", "0.6", "0.5", "0.6", "0.5",),
    ("1.5", "0.9", "0.8", "0.7", "0.7", "0.6", "0.6", "0.6", "0.6", "0.5", "0.5", "0.5", "0.5", "0.5",),
    ("1.5", "0.9", "0.9", "0.7", "0.7", "0.6", "0.6", "0.6", "0.6", "0.5", "0.5", "0.5", "0.5", "0.5",),
    ("1.4", "0.9", "0.8", "0.7", "0.7", "0.6", "0.6", "0.5", "0.5", "0.5", "0.5", "0.5", "0.5", "0.4",),
    ("1.5", "0.9", "0.8", "0.7", "0.7", "0.6", "0.6", "0.5", "0.5", "0.5", "0.5", "0.5", "0.5", "0.4",),
    ("1.4", "0.9", "0.8", "0.6", "0.6", "0.5", "0.5", "0.5", "0.5", "0.5", "0.5", "0.4", "0.4", "0.4",),
    ("1.4", "0.9", "0.8", "0.6", "0.7", "0.5", "0.6", "0.5", "0.5", "0.5", "0.5", "0.4", "0.4", "0.4",),
    ("1.4", "0.8", "0.8", "0.6", "0.6", "0.5", "0.5", "0.5", "0.5", "0.4", "0.4", "0.4", "0.4", "0.4",),
)

# Exception sets of the k-colored inequality p_{-k}(a) p_{-k}(b) > p_{-k}(a+b), k >= 2
COLORED_BO_EXCEPTIONS = frozenset({(1, 1, 2), (1, 2, 2), (2, 1, 2), (1, 3, 2), (3, 1, 2), (1, 1, 3)})

# (k, n, m) where p_{-k}(n-1) p_{-k}(m+1) >= p_{-k}(n) p_{-k}(m) fails
COLORED_LOGCONCAVE_EXCEPTIONS = frozenset({(2, 6, 4)})

# Delta_{a,b}(x) >= 0 for x >= 2 fails only for b == 0 and this pair
DELTA_EXCEPTIONAL_PAIR = (6, 4)

# Numeric side facts quoted with the proofs
P8_AT_3 = 810
P15_AT_9_5_LOWER = 2000
R31_CONSTANT_X18 = Fraction("1.5648")
