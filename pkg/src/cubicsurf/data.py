"""Published W(E6) data: class list, character table, cohomology of the PGL(4)-quotient.

Classes are named by virtual cycle type in ASCII, e.g. ``"1^-2,2^4"``.
Nothing here is used to *construct* the group; these tables are the
reference the constructed objects are checked against, plus the
irreducible characters and cohomology decomposition that are taken as input.
"""

from __future__ import annotations

from typing import NamedTuple


class ClassRow(NamedTuple):
    name: str
    atlas: str
    swinnerton_dyer: str
    order: int
    size: int
    centralizer: int
    even: bool


# fmt: off
CLASS_TABLE: tuple[ClassRow, ...] = (
    ClassRow("1^6",                    "1A",      "C1",  1,  1,    51840, True),
    ClassRow("1^2,2^2",                "2B",      "C2",  2,  270,  192,   True),
    ClassRow("1^-2,2^4",               "2A",      "C3",  2,  45,   1152,  True),
    ClassRow("1^3,3",                  "3D",      "C6",  3,  240,  216,   True),
    ClassRow("1^-3,3^3",               "3A, 3B",  "C11", 3,  80,   648,   True),
    ClassRow("3^2",                    "3C",      "C9",  3,  480,  108,   True),
    ClassRow("1^2,2^-2,4^2",           "4A",      "C4",  4,  540,  96,    True),
    ClassRow("2,4",                    "4B",      "C5",  4,  3240, 16,    True),
    ClassRow("1,5",                    "5A",      "C15", 5,  5184, 10,    True),
    ClassRow("1,2,3^-1,6",             "6C, 6D",  "C7",  6,  1440, 36,    True),
    ClassRow("1^-1,2^2,3",             "6F",      "C8",  6,  2160, 24,    True),
    ClassRow("1^-2,2,6",               "6E",      "C10", 6,  1440, 36,    True),
    ClassRow("1,2^-2,3^-1,6^2",        "6A, 6B",  "C12", 6,  720,  72,    True),
    ClassRow("3^-1,9",                 "9A, 9B",  "C14", 9,  5760, 9,     True),
    ClassRow("1^-1,2,3,4^-1,6^-1,12",  "12A, 12B", "C13", 12, 4320, 12,   True),
    ClassRow("1^4,2",                  "2C",      "C16", 2,  36,   1440,  False),
    ClassRow("2^3",                    "2D",      "C17", 2,  540,  96,    False),
    ClassRow("1^2,4",                  "4D",      "C18", 4,  1620, 32,    False),
    ClassRow("1^-2,2^2,4",             "4C",      "C19", 4,  540,  96,    False),
    ClassRow("1,2,3",                  "6G",      "C21", 6,  1440, 36,    False),
    ClassRow("1^-2,2,3^2",             "6H",      "C22", 6,  1440, 36,    False),
    ClassRow("6",                      "6I",      "C23", 6,  4320, 12,    False),
    ClassRow("2,4^-1,8",               "8A",      "C20", 8,  6480, 8,     False),
    ClassRow("1^-1,2,5",               "10A",     "C25", 10, 5184, 10,    False),
    ClassRow("1,2^-1,3^-1,4,6",        "12C",     "C24", 12, 4320, 12,    False),
)
# fmt: on

CLASS_NAMES: tuple[str, ...] = tuple(r.name for r in CLASS_TABLE)

# Irreducibles whose values are given directly; primed twins are derived.
BASE_IRREPS: tuple[str, ...] = (
    "V1", "V6", "V15,1", "V15,2", "V20", "V24", "V30", "V60", "V64", "V81",
    "U10", "U20", "U60", "U80", "U90",
)
V_IRREPS = BASE_IRREPS[:10]
U_IRREPS = BASE_IRREPS[10:]

# Rows follow CLASS_TABLE; columns follow BASE_IRREPS. U-values on odd
# classes are not printed in the source table: they are zero.
# fmt: off
CHARACTER_VALUES: dict[str, tuple[int, ...]] = {
    "1^6":                   (1,  6, 15, 15, 20, 24,  30, 60, 64, 81, 10, 20, 60,  80, 90),
    "1^2,2^2":               (1,  2, -1,  3,  4,  0,   2,  4,  0, -3,  2, -4,  4,   0, -6),
    "1^-2,2^4":              (1, -2, -1,  7,  4,  8, -10, -4,  0,  9, -6,  4, 12, -16, -6),
    "1^3,3":                 (1,  3,  3,  0,  5,  0,   3, -3,  4,  0, -2,  2, -6,  -4,  0),
    "1^-3,3^3":              (1, -3,  6, -3,  2,  6,   3,  6, -8,  0,  1, -7, -3, -10,  9),
    "3^2":                   (1,  0,  0,  3, -1,  3,   3, -3, -2,  0,  4,  2,  0,   2,  0),
    "1^2,2^-2,4^2":          (1,  2,  3, -1,  0,  0,  -2,  0,  0, -3,  2,  4,  4,   0,  2),
    "2,4":                   (1,  0, -1,  1,  0,  0,   0,  0,  0, -1, -2,  0,  0,   0,  2),
    "1,5":                   (1,  1,  0,  0,  0, -1,   0,  0, -1,  1,  0,  0,  0,   0,  0),
    "1,2,3^-1,6":            (1,  1, -1, -2,  1,  2,  -1, -1,  0,  0,  0, -2,  0,   2,  0),
    "1^-1,2^2,3":            (1, -1, -1,  0,  1,  0,  -1,  1,  0,  0,  2,  2, -2,   0,  0),
    "1^-2,2,6":              (1, -2,  2,  1,  1, -1,  -1, -1,  0,  0,  0, -2,  0,   2,  0),
    "1,2^-2,3^-1,6^2":       (1,  1,  2,  1, -2,  2,  -1,  2,  0,  0, -3,  1, -3,   2, -3),
    "3^-1,9":                (1,  0,  0,  0, -1,  0,   0,  0,  1,  0,  1, -1,  0,  -1,  0),
    "1^-1,2,3,4^-1,6^-1,12": (1, -1,  0, -1,  0,  0,   1,  0,  0,  0, -1,  1,  1,   0, -1),
    "1^4,2":                 (1,  4,  5,  5, 10,  4,  10, 10, 16,  9,  0,  0,  0,   0,  0),
    "2^3":                   (1,  0, -3,  1,  2,  4,  -2,  2,  0, -3,  0,  0,  0,   0,  0),
    "1^2,4":                 (1,  2,  1, -1,  2,  0,   0, -2,  0, -1,  0,  0,  0,   0,  0),
    "1^-2,2^2,4":            (1, -2,  1,  3,  2,  0,  -4, -2,  0,  3,  0,  0,  0,   0,  0),
    "1,2,3":                 (1,  1, -1,  2,  1, -2,   1,  1, -2,  0,  0,  0,  0,   0,  0),
    "1^-2,2,3^2":            (1, -2,  2, -1,  1,  1,   1,  1, -2,  0,  0,  0,  0,   0,  0),
    "6":                     (1,  0,  0,  1, -1,  1,   1, -1,  0,  0,  0,  0,  0,   0,  0),
    "2,4^-1,8":              (1,  0, -1, -1,  0,  0,   0,  0,  0,  1,  0,  0,  0,   0,  0),
    "1^-1,2,5":              (1, -1,  0,  0,  0, -1,   0,  0,  1, -1,  0,  0,  0,   0,  0),
    "1,2^-1,3^-1,4,6":       (1,  1,  1,  0, -1,  0,  -1,  1,  0,  0,  0,  0,  0,   0,  0),
}
# fmt: on

# Atlas/other names for the irreducibles.
IRREP_ALIASES: dict[str, tuple[str, str, str]] = {
    "V1": ("1_p", "chi_1", "phi_{1,0}"),
    "V6": ("6_p", "chi_4", "phi_{6,1}"),
    "V15,1": ("15_p", "chi_7", "phi_{15,5}"),
    "V15,2": ("15_q", "chi_8", "phi_{15,4}"),
    "V20": ("20_p", "chi_9", "phi_{20,2}"),
    "V24": ("24_p", "chi_10", "phi_{24,6}"),
    "V30": ("30_p", "chi_11", "phi_{30,3}"),
    "V60": ("60_p", "chi_18", "phi_{60,5}"),
    "V64": ("64_p", "chi_19", "phi_{64,4}"),
    "V81": ("81_p", "chi_20", "phi_{81,6}"),
    "V1'": ("1_n", "", "phi_{1,36}"),
    "V6'": ("6_n", "", "phi_{6,25}"),
    "V15,1'": ("15_n", "", "phi_{15,17}"),
    "V15,2'": ("15_m", "", "phi_{15,16}"),
    "V20'": ("20_n", "", "phi_{20,20}"),
    "V24'": ("24_n", "", "phi_{24,12}"),
    "V30'": ("30_n", "", "phi_{30,15}"),
    "V60'": ("60_n", "", "phi_{60,11}"),
    "V64'": ("64_n", "", "phi_{64,13}"),
    "V81'": ("81_n", "", "phi_{81,10}"),
    "U10": ("10_s", "chi_2 + chi_3", "phi_{10,9}"),
    "U20": ("20_s", "chi_5 + chi_6", "phi_{20,10}"),
    "U60": ("60_s", "chi_12 + chi_13", "phi_{60,8}"),
    "U80": ("80_s", "chi_14 + chi_15", "phi_{80,7}"),
    "U90": ("90_s", "chi_16 + chi_17", "phi_{90,8}"),
}

# Cohomology of Y/PGL(4) by degree, as multisets of irreducibles.
QUOTIENT_COHOMOLOGY: tuple[dict[str, int], ...] = (
    {"V1": 1},
    {"V15,2": 1},
    {"V81": 1},
    {"V15,1": 1, "U80": 1, "U90": 1},
    {"V30": 1, "V30'": 1, "U10": 1, "U80": 1},
)

# Stated decomposition of H*(UConf^2 S), degree -> irreducibles.
UCONF2_COHOMOLOGY: dict[int, dict[str, int]] = {
    0: {"V1": 1},
    2: {"V1": 1, "V6": 1},
    4: {"V1": 2, "V6": 1, "V20": 1},
}
