"""Census counts produced by scripts/pin_census.py (brute-force oracles).

Keys: (m, n) -> (n_hyp, n_nc, classes_isotopy, classes_isotopy_hyp, classes_homeo_hyp).
"""

ORACLE_CENSUS = {
    (1, 1): (0, 0, 2, 0, 0),
    (1, 4): (0, 0, 5, 0, 0),
    (4, 1): (0, 0, 5, 0, 0),
    (2, 2): (2, 2, 7, 1, 1),
    (2, 3): (0, 0, 13, 0, 0),
    (3, 3): (84, 12, 38, 6, 2),
    (2, 4): (2, 2, 23, 1, 1),
    (4, 2): (2, 2, 23, 1, 1),
    (3, 4): (432, 48, 104, 12, 6),
    (4, 3): (432, 48, 104, 12, 6),
    (2, 5): (0, 0, 37, 0, 0),
    (4, 4): (16426, 1066, 647, 241, 46),
}
