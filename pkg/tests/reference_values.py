"""Published census statistics used as exact targets."""

CUBIC_MULTIPLETS_1E5 = {1: (4785, 7), 2: (3863, 63), 3: (783, 819), 4: (26, 15561)}
CUBIC_FIELDS_1E5 = 15851
QUINTIC_MULTIPLETS_1E5 = {1: (2388, 11), 2: (845, 275), 3: (49, 8525)}
QUINTIC_TOTALS_1E5 = (3282, 6552)

BOUNDS = (25000, 50000, 75000, 100000)
# (category, graph): (counts at the four bounds, minimal conductor)
CATEGORY_GRAPHS = {
    ("I", 1): ((7, 19, 27, 38), 4977),
    ("I", 2): ((15, 29, 44, 60), 7657),
    ("II", 1): ((10, 25, 36, 47), 3913),
    ("II", 2): ((7, 19, 34, 45), 6327),
    ("III", 1): ((11, 22, 41, 52), 1953),
    ("III", 2): ((57, 125, 181, 262), 819),
    ("III", 3): ((20, 50, 81, 124), 1197),
    ("III", 4): ((5, 8, 16, 17), 6643),
    ("III", 5): ((4, 17, 27, 37), 14049),
    ("III", 6): ((5, 16, 27, 31), 8541),
    ("III", 7): ((4, 8, 20, 34), 4599),
    ("III", 8): ((1, 4, 6, 7), 20293),
    ("III", 9): ((3, 7, 11, 15), 16471),
    ("IV", 1): ((0, 0, 2, 7), 61579),
    ("IV", 2): ((0, 1, 1, 2), 49543),
    ("IV", 3): ((0, 1, 2, 5), 38311),
}
SUBTOTALS = {"I": (22, 48, 71, 98), "II": (17, 44, 70, 92),
             "III": (110, 257, 410, 579), "IV": (0, 2, 5, 14)}
QUARTET_TOTALS = (149, 351, 556, 783)

DOUBLET_GRAPHS_1E5 = (1740, 1715, 408)

SIGMA_TABLE = {
    "<4,2>": (6, 2, 2, 2),
    "<8,3>": (8, 0, 0, 0),
    "<8,4>": (24, 8, 8, 2),
    "<8,5>": (168, 56, 0, 0),
    "<25,2>": (480, 20, 20, 20),
    "<125,3>": (12000, 500, 500, 20),
    "<125,4>": (500, 0, 0, 0),
}
