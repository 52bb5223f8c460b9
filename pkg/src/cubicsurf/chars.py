"""Class functions on W(E6) and its character table.

All arithmetic is exact; values live in ``Fraction`` (integers in practice).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import data
from .weyl import WeylGroup, weyl_group


class CharacterError(ValueError):
    pass


class ClassFunction:
    """Rational-valued function on the conjugacy classes (canonical order)."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable):
        self.values = tuple(Fraction(v) for v in values)

    @classmethod
    def zero(cls, n: int = 25) -> "ClassFunction":
        return cls([0] * n)

    @classmethod
    def indicator(cls, index: int, n: int = 25) -> "ClassFunction":
        return cls([1 if k == index else 0 for k in range(n)])

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return ClassFunction(a + other for a in self.values)
        return ClassFunction(a + b for a, b in zip(self.values, other.values, strict=True))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        """Pointwise product (tensor product of characters) or scalar multiple."""
        if isinstance(other, ClassFunction):
            return ClassFunction(a * b for a, b in zip(self.values, other.values, strict=True))
        return ClassFunction(a * other for a in self.values)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    @property
    def degree(self) -> Fraction:
        """Value at the identity class (index 0)."""
        return self.values[0]

    def as_ints(self) -> list[int]:
        if any(v.denominator != 1 for v in self.values):
            raise CharacterError("class function is not integer-valued")
        return [int(v) for v in self.values]

    def __repr__(self):
        return f"ClassFunction({[str(v) for v in self.values]})"


def _sizes(G: WeylGroup | None = None) -> list[int]:
    return [c.size for c in (G or weyl_group()).classes]


def inner_product(f: ClassFunction, g: ClassFunction, sizes: Sequence[int] | None = None) -> Fraction:
    sizes = sizes if sizes is not None else _sizes()
    total = sum(s * a * b for s, a, b in zip(sizes, f.values, g.values, strict=True))
    return Fraction(total, sum(sizes))


@dataclass(frozen=True)
class CharacterTable:
    names: tuple[str, ...]
    chars: dict[str, ClassFunction]
    sizes: tuple[int, ...]
    even: tuple[bool, ...]

    def __getitem__(self, name: str) -> ClassFunction:
        return self.chars[name]

    def __iter__(self):
        return iter(self.names)

    def degrees(self) -> dict[str, int]:
        return {n: int(self.chars[n].degree) for n in self.names}

    def inner(self, f: ClassFunction, g: ClassFunction) -> Fraction:
        return inner_product(f, g, self.sizes)

    def combination(self, multiset: Mapping[str, int]) -> ClassFunction:
        out = ClassFunction.zero(len(self.sizes))
        for name, m in multiset.items():
            out = out + m * self.chars[name]
        return out

    def check_orthogonality(self) -> list[str]:
        """Names of failed orthogonality relations; empty when the table is sound."""
        failures = []
        n = len(self.names)
        for i in range(n):
            for j in range(i, n):
                a, b = self.names[i], self.names[j]
                ip = self.inner(self.chars[a], self.chars[b])
                if ip != (1 if i == j else 0):
                    failures.append(f"row <{a},{b}> = {ip}")
        order = sum(self.sizes)
        for c in range(len(self.sizes)):
            for d in range(c, len(self.sizes)):
                s = sum(self.chars[x][c] * self.chars[x][d] for x in self.names)
                want = Fraction(order, self.sizes[c]) if c == d else 0
                if s != want:
                    failures.append(f"column ({c},{d}) = {s}, expected {want}")
        return failures


def primed(name: str) -> str:
    return name + "'"


def build_character_table(values: Mapping[str, Sequence[int]] | None = None,
                          G: WeylGroup | None = None, check: bool = True) -> CharacterTable:
    """Character table in the group's canonical class order.

    ``values`` maps class name to the row of base-irreducible values; primed
    characters are the base V-characters twisted by the sign character.
    """
    G = G or weyl_group()
    values = values if values is not None else data.CHARACTER_VALUES
    names_cls = [c.name for c in G.classes]
    missing = set(names_cls) - set(values)
    if missing:
        raise CharacterError(f"no character values for classes {sorted(missing)}")
    even = tuple(c.even for c in G.classes)
    sign = [1 if e else -1 for e in even]
    chars: dict[str, ClassFunction] = {}
    for k, irr in enumerate(data.BASE_IRREPS):
        chars[irr] = ClassFunction(values[n][k] for n in names_cls)
    ordered = []
    for irr in data.V_IRREPS:
        chars[primed(irr)] = ClassFunction(s * v for s, v in zip(sign, chars[irr].values))
        ordered += [irr, primed(irr)]
    ordered += list(data.U_IRREPS)
    table = CharacterTable(tuple(ordered), chars, tuple(c.size for c in G.classes), even)
    if check:
        failures = table.check_orthogonality()
        if failures:
            raise CharacterError("orthogonality fails: " + "; ".join(failures[:5]))
    return table


@lru_cache(maxsize=1)
def load_character_table() -> CharacterTable:
    return build_character_table()


def decompose(f: ClassFunction, table: CharacterTable | None = None) -> dict[str, int]:
    """Multiplicities of the irreducibles in a virtual character (zeros omitted)."""
    table = table or load_character_table()
    out = {}
    residual = f
    for name in table.names:
        m = table.inner(f, table[name])
        if m.denominator != 1:
            raise CharacterError(f"not a virtual character: <f, {name}> = {m}")
        if m:
            out[name] = int(m)
            residual = residual - int(m) * table[name]
    if any(residual.values):
        raise CharacterError("class function is not in the span of the irreducibles")
    return out


def format_decomposition(d: Mapping[str, int]) -> str:
    if not d:
        return "0"
    return " + ".join(name if m == 1 else f"{m}*{name}" for name, m in d.items())


def permutation_character(action: str, G: WeylGroup | None = None) -> ClassFunction:
    G = G or weyl_group()
    return ClassFunction(G.fixed_points(c, action) for c in G.classes)


def invariant_dim(f: ClassFunction, gens: Sequence | None = None, G: WeylGroup | None = None,
                  elements: np.ndarray | None = None, character: bool = True) -> Fraction:
    """Average of ``f`` over the subgroup generated by ``gens`` (or given by ``elements``).

    When ``f`` is a character this is the dimension of the invariants, and
    must be an integer; pass ``character=False`` for arbitrary class functions.
    """
    G = G or weyl_group()
    if elements is None:
        elements = G.elements[G.subgroup(gens)] if gens else G.elements[[G.identity_index]]
    dist = G.class_distribution(elements)
    total = sum(int(n) * v for n, v in zip(dist, f.values))
    val = Fraction(total, len(elements))
    if character and val.denominator != 1:
        raise CharacterError(f"invariant dimension {val} is not an integer")
    return val


def is_character_integral(f: ClassFunction) -> bool:
    return all(v.denominator == 1 for v in f.values)
