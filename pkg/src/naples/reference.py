"""Published values the library must reproduce exactly."""

# F_n: {fiber size: number of permutations of S_n with that fiber size}, k = 0
FIBER_SIZE_SERIES = {
    1: {1: 1},
    2: {1: 1, 2: 1},
    3: {1: 1, 2: 3, 3: 1, 6: 1},
    4: {1: 1, 2: 6, 3: 4, 4: 4, 6: 4, 8: 3, 12: 1, 24: 1},
    5: {
        1: 1, 2: 10, 3: 10, 4: 20, 5: 1, 6: 20, 8: 15, 10: 6, 12: 15,
        15: 4, 20: 4, 24: 5, 30: 4, 40: 3, 60: 1, 120: 1,
    },
}

# distribution of area_k over PF_{n,k}, keyed by (n, k), as typeset
AREA_DISTRIBUTIONS = {
    (1, 0): "1",
    (2, 0): "q+2",
    (2, 1): "2q+2",
    (3, 0): "q^3+3q^2+6q+6",
    (3, 1): "2q^3+7q^2+9q+6",
    (3, 2): "3q^3+9q^2+9q+6",
    (4, 0): "q^6 + 4q^5 + 10q^4 + 20q^3 + 30q^2 + 36q + 24",
    (4, 1): "2q^6 + 9q^5 + 24q^4 + 41q^3 + 53q^2 + 50q + 24",
    (4, 2): "3q^6 + 13q^5 + 34q^4 + 58q^3 + 60q^2 + 48q + 24",
    (4, 3): "4q^6 + 16q^5 + 40q^4 + 64q^3 + 60q^2 + 48q + 24",
    (5, 0): "q^{10} + 5q^9 + 15q^8 + 35q^7 + 70q^6 + 120q^5 + 180q^4 + 240q^3 + 270q^2 + 240q + 120",
    (5, 1): "2q^{10} + 11q^9 + 35q^8 + 84q^7 + 165q^6 + 263q^5 + 361q^4 + 429q^3 + 435q^2 + 320q + 120",
    (5, 2): "3q^{10} + 16q^9 + 50q^8 + 121q^7 + 238q^6 + 384q^5 + 502q^4 + 529q^3 + 462q^2 + 306q + 120",
    (5, 3): "4q^{10} + 21q^9 + 65q^8 + 155q^7 + 295q^6 + 464q^5 + 576q^4 + 550q^3 + 450q^2 + 300q + 120",
    (5, 4): "5q^{10} + 25q^9 + 75q^8 + 175q^7 + 325q^6 + 500q^5 + 600q^4 + 550q^3 + 450q^2 + 300q + 120",
}

# (preference, k) -> outcome permutation
OUTCOMES = {
    ((2, 1, 1), 0): (2, 1, 3),
    ((4, 2, 2, 4, 1), 0): (5, 2, 3, 1, 4),
    ((4, 2, 2, 4, 1), 1): (3, 2, 4, 1, 5),
    ((3, 2, 2), 1): (3, 2, 1),
    ((2, 4, 5, 3, 1), 2): (5, 1, 4, 2, 3),
}

# (permutation, k) -> complete fiber, in lexicographic order
FIBERS = {
    ((2, 3, 5, 1, 4), 0): [
        tuple(int(c) for c in s) for s in
        "41141 41142 41143 41151 41152 41153 41241 41242 41243 41251 41252 41253".split()
    ],
    ((5, 1, 4, 2, 3), 2): [
        tuple(int(c) for c in s) for s in
        "24531 24532 24533 24541 24542 24543 24551 24552 24553".split()
    ],
}

# labeled Dyck path of (3,3,1,4,2,2): South steps per column and their labels
DYCK_EXAMPLE = {
    "pref": (3, 3, 1, 4, 2, 2),
    "runs": (1, 2, 2, 1, 0, 0),
    "labels": ((3,), (5, 6), (1, 2), (4,)),
    "vertices": ((0, 6), (0, 5), (1, 5), (1, 3), (2, 3), (2, 1), (3, 1), (3, 0), (6, 0)),
}

# 2-lattice path of (6,6,4,4,2,2), corner points
KLATTICE_EXAMPLE = {
    "pref": (6, 6, 4, 4, 2, 2),
    "k": 2,
    "corners": ((0, 6), (0, 5), (2, 5), (2, 3), (4, 3), (4, 1), (6, 1), (6, 0)),
}


def normalize_latex(text: str) -> str:
    """Strip whitespace, which is insignificant in math mode."""
    return "".join(text.split())
