"""Published reference values used by ``--check`` and the acceptance tests.

Each constant is labelled with the table it was transcribed from.  They are
compared against, never fed into, the computations.
"""

# Table 1: D(l, q) for l < 8; cells not listed are empty (unattainable).
TABLE_1_D = {
    1: {0: 1},
    2: {0: 2},
    3: {0: 4},
    4: {0: 8, 1: 4},
    5: {0: 16, 1: 8},
    6: {0: 16, 1: 16, 3: 8},
    7: {0: 32, 1: 32, 2: 16, 3: 16, 7: 8},
}
TABLE_1_MAX_QUADS = 7

# Eight-card classification: attainable quad counts and their smallest decks.
EIGHT_CARDS_D = {0: 64, 1: 32, 2: 32, 3: 32, 5: 16, 6: 16, 7: 16, 14: 8}

# Table 2: card examples in quaternary notation, deck 16.
TABLE_2_EXAMPLES = [
    (0, ["00", "01", "02", "10", "20", "33"]),
    (3, ["00", "01", "02", "10", "13", "03"]),
    (2, ["00", "02", "10", "13", "20", "21", "32"]),
    (7, ["00", "01", "02", "03", "10", "11", "12"]),
]
# Eight-card examples from the classification discussion, deck 16.
EIGHT_CARD_EXAMPLES = [
    (5, ["00", "01", "02", "03", "10", "20", "30", "33"]),
    (6, ["03", "11", "12", "13", "21", "30", "31", "33"]),
]

# Table 3: B(l) for l = 1..12.
TABLE_3_B = {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 2, 7: 2, 8: 2, 9: 4, 10: 4, 11: 4, 12: 8}

# Table 4 (n = 1..7) plus the value stated for n = 8.
TABLE_4_F = {1: 2, 2: 3, 3: 4, 4: 6, 5: 7, 6: 9, 7: 10, 8: 12}

# Table 5: lower bounds on the deck dimension for a quad-free set of l cards.
TABLE_5_LOWER = {4: 3, 5: 4, 6: 4, 7: 5, 8: 5, 9: 6, 10: 6, 11: 6, 12: 7, 13: 7, 14: 7, 15: 7}

# Table 6: threshold sizes of quad-free sets guaranteed by the counting argument.
TABLE_6_UPPER = {3: 4, 4: 5, 5: 6, 6: 7, 7: 8, 8: 10, 9: 12, 10: 14}

# Lazy caterer numbers (l^2 - l + 2)/2 for l = 1..20.
LAZY_CATERER = [1, 2, 4, 7, 11, 16, 22, 29, 37, 46, 56, 67, 79, 92, 106, 121, 137, 154, 172, 191]

# Total quads in the deck of size 2^n, n = 2..9.
TOTAL_QUADS = {2: 1, 3: 14, 4: 140, 5: 1240, 6: 10416, 7: 85344, 8: 690880, 9: 5559680}

# Square code weight enumerators: A_w for w = 0, 4, 6, 8, 10, 12, 16.
SQUARE_ENUMERATORS = {
    "semimagic": {0: 1, 4: 8, 6: 16, 8: 78, 10: 16, 12: 8, 16: 1},
    "magic": {0: 1, 4: 12, 6: 64, 8: 102, 10: 64, 12: 12, 16: 1},
    "strongly-magic": {0: 1, 4: 140, 6: 448, 8: 870, 10: 448, 12: 140, 16: 1},
}
SQUARE_DIMENSIONS = {"semimagic": 7, "magic": 8, "strongly-magic": 11}
