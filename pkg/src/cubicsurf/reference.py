"""Published counting tables, as polynomials in q, for verification.

Each entry is written in the factored form it is usually printed in and
expanded with ``QPoly`` arithmetic; comparisons are coefficient-level.
"""

from __future__ import annotations

from .qpoly import QPoly

q = QPoly.gen()

# class -> (normalised count, prime powers where it vanishes)
TABLE1: dict[str, tuple[QPoly, tuple[int, ...]]] = {
    "1^6": ((q - 2) * (q - 3) * (q - 5) ** 2, (2, 3, 5)),
    "1^2,2^2": ((q + 1) ** 2 * (q - 2) * (q - 3), (2, 3)),
    "1^-2,2^4": ((q - 2) * (q - 3) * (q**2 - 2 * q - 7), (2, 3)),
    "1^3,3": (q * (q + 1) * (q**2 - q + 1), ()),
    "1^-3,3^3": ((q + 1) ** 2 * (q**2 + q - 3), ()),
    "3^2": ((q - 2) * (q**3 - q**2 - 2 * q - 6), (2,)),
    "1^2,2^-2,4^2": ((q + 1) ** 3 * (q - 2), (2,)),
    "2,4": ((q + 1) * (q - 2) * (q**2 + 1), (2,)),
    "1,5": (q**2 * (q**2 + 1), ()),
    "1,2,3^-1,6": (q * (q + 1) * (q**2 + q - 1), ()),
    "1^-1,2^2,3": (q * (q + 1) * (q**2 - q + 1), ()),
    "1^-2,2,6": (q * (q - 2) * (q**2 + q + 2), (2,)),
    "1,2^-2,3^-1,6^2": ((q + 1) * (q**3 - 2 * q**2 + 2 * q - 3), ()),
    "3^-1,9": (q * (q + 1) * (q**2 - q + 1), ()),
    "1^-1,2,3,4^-1,6^-1,12": ((q + 1) ** 2 * (q**2 - q + 1), ()),
    "1^4,2": (q * (q - 1) * (q**2 - 4 * q + 5), ()),
    "2^3": (q * (q - 1) * (q**2 - 3), ()),
    "1^2,4": (q * (q + 1) ** 2 * (q - 1), ()),
    "1^-2,2^2,4": (q * (q - 1) ** 3, ()),
    "1,2,3": (q * (q - 1) * (q**2 - q - 1), ()),
    "1^-2,2,3^2": (q * (q - 1) * (q**2 + 2 * q + 2), ()),
    "6": (q**3 * (q - 1), ()),
    "2,4^-1,8": (q * (q + 1) * (q**2 + 1), ()),
    "1^-1,2,5": (q**2 * (q + 1) * (q - 1), ()),
    "1,2^-1,3^-1,4,6": (q * (q - 1) * (q**2 + q + 1), ()),
}

# t -> normalised number of surfaces with q^2 + t q + 1 points
TABLE2: dict[int, QPoly] = {
    -2: 80 * (q**2 + q - 3) * (q + 1) ** 2,
    -1: 45 * (77 * q**4 - 43 * q**3 + 45 * q**2 - 181 * q - 42),
    0: 432 * (27 * q**3 - 17 * q**2 + 5 * q + 10) * (q + 1),
    1: 60 * (347 * q**4 - 51 * q**3 + 27 * q**2 + 161 * q - 12),
    2: 144 * (91 * q**4 - 5 * q**3 + 36 * q**2 - 35 * q - 15),
    3: 270 * (9 * q**2 - 13 * q + 2) * (q + 1) ** 2,
    4: 240 * (q**2 - q + 1) * (q + 1) * q,
    5: 36 * (q**2 - 4 * q + 5) * (q - 1) * q,
    7: (q - 2) * (q - 3) * (q - 5) ** 2,
}

# N -> normalised number of surfaces with N rational tritangents
TABLE3: dict[int, QPoly] = {
    0: 576 * (38 * q**3 - 5 * q**2 + 5) * q,
    1: 540 * (39 * q**4 + 3 * q**3 + 3 * q**2 - 3 * q - 10),
    2: 2160 * (q**2 - q + 1) * (q + 1) * q,
    3: 240 * (17 * q**4 - 25 * q + 24),
    4: 1440 * (q**2 + q - 1) * (q + 1) * q,
    5: 270 * (q + 1) ** 2 * (q - 2) * (q - 3),
    6: 240 * (q**2 - q + 1) * (q + 1) * q,
    7: 540 * (q**2 - 3) * (q - 1) * q,
    9: 80 * (q**2 + q - 3) * (q + 1) ** 2,
    13: 45 * (q**2 - 2 * q - 7) * (q - 2) * (q - 3),
    15: 36 * (q**2 - 4 * q + 5) * (q - 1) * q,
    45: (q - 2) * (q - 3) * (q - 5) ** 2,
}

# #UConf^2(S) -> normalised number of surfaces
TABLE4: dict[QPoly, QPoly] = {
    q**4 - 2 * q**3 + q**2: 80 * (q + 1) ** 2 * (q**2 + q - 3),
    q**4 - q**3 + q**2: 2880 * q * (q**3 - 3),
    q**4 - q**3 + 2 * q**2: 540 * q * (q - 1) ** 3,
    q**4 - q**3 + 4 * q**2: 45 * (q - 2) * (q - 3) * (q**2 - 2 * q - 7),
    q**4 + q**2: 864 * (q + 1) * (11 * q**3 - 6 * q**2 + 5),
    q**4 + 2 * q**2: 2160 * q * (q + 1) * (q**2 - q + 1),
    q**4 + q**3 + q**2: 960 * (11 * q**4 - 6 * q**3 + 5 * q + 6),
    q**4 + q**3 + 2 * q**2: 3240 * (q + 1) * (3 * q - 2) * (q**2 + 1),
    q**4 + q**3 + 4 * q**2: 540 * q * (q - 1) * (q**2 - 3),
    q**4 + 2 * q**3 + q**2: 720 * (q + 1) * (q**3 - 2 * q**2 + 2 * q - 3),
    q**4 + 2 * q**3 + 2 * q**2: 4320 * q * (q - 1) * (q**2 + q + 1),
    q**4 + 2 * q**3 + 3 * q**2: 5184 * q**2 * (q**2 + 1),
    q**4 + 2 * q**3 + 4 * q**2: 2880 * q**4,
    q**4 + 3 * q**3 + 4 * q**2: 540 * (q + 1) ** 3 * (q - 2),
    q**4 + 3 * q**3 + 6 * q**2: 1620 * q * (q + 1) ** 2 * (q - 1),
    q**4 + 3 * q**3 + 8 * q**2: 270 * (q + 1) ** 2 * (q - 2) * (q - 3),
    q**4 + 4 * q**3 + 10 * q**2: 240 * q * (q + 1) * (q**2 - q + 1),
    q**4 + 5 * q**3 + 16 * q**2: 36 * q * (q - 1) * (q**2 - 4 * q + 5),
    q**4 + 7 * q**3 + 28 * q**2: (q - 2) * (q - 3) * (q - 5) ** 2,
}

# averages over X(F_q) stated for the tables
TABLE3_AVERAGE = QPoly([1])
TABLE4_AVERAGE = q**2 * (q**2 + q + 2)
