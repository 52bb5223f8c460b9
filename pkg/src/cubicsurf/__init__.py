"""Arithmetic statistics of smooth cubic surfaces over finite fields.

Frobenius acts on the 27 lines through an element of W(E6); counting the
surfaces in each conjugacy class gives polynomials in q, from which the
distributions of points, rational tritangents and configuration counts
follow.
"""

from .chars import CharacterTable, ClassFunction, decompose, load_character_table
from .counting import absolute_count, class_count_poly, config_count, exceptions
from .qpoly import QPoly
from .schlafli import build_incidence
from .weyl import WeylGroup, weyl_group

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "QPoly",
    "WeylGroup",
    "absolute_count",
    "build_incidence",
    "class_count_poly",
    "config_count",
    "decompose",
    "exceptions",
    "load_character_table",
    "weyl_group",
]
