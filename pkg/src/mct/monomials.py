"""Monomials and monomial ideals.

A :class:`Monomial` is a bare exponent vector; the variable names live on
the :class:`MonomialIdeal` that owns it.  Ideals always store their minimal
generating set, sorted in graded-lex order of the declared variable order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    AmbientMismatchError,
    ParseError,
    UnknownVariableError,
    NotSquareFreeError,
)

MAX_PRIME_SEARCH_VARS = 20

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"[0-9]+")


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, nvars: int) -> Monomial:
        return cls((0,) * nvars)

    @classmethod
    def from_support(cls, support: Iterable[int], nvars: int) -> Monomial:
        s = set(support)
        return cls(tuple(1 if i in s else 0 for i in range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    @property
    def support_mask(self) -> int:
        mask = 0
        for i, e in enumerate(self.exponents):
            if e:
                mask |= 1 << i
        return mask

    def is_one(self) -> bool:
        return not any(self.exponents)

    def is_square_free(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def radical(self) -> Monomial:
        return Monomial(tuple(1 if e else 0 for e in self.exponents))

    def grlex_key(self) -> tuple:
        # ascending degree, then lex-descending in the declared variable order
        return (self.degree, tuple(-e for e in self.exponents))

    def format(self, variables: Sequence[str]) -> str:
        parts = []
        for name, e in zip(variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def lcm_all(monomials: Iterable[Monomial], nvars: int) -> Monomial:
    return reduce(Monomial.lcm, monomials, Monomial.one(nvars))


def minimalize(monomials: Iterable[Monomial]) -> frozenset[Monomial]:
    """Divisibility-minimal elements of ``monomials``."""
    ms = sorted(set(monomials), key=Monomial.grlex_key)
    kept: list[Monomial] = []
    for m in ms:
        # sorting by degree means only earlier elements can divide m
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    variables: tuple[str, ...]
    generators: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise ValueError(f"duplicate variable names in {self.variables}")
        for g in self.generators:
            if g.nvars != n:
                raise AmbientMismatchError(
                    f"generator with {g.nvars} exponents in a {n}-variable ring"
                )
        gens = tuple(sorted(minimalize(self.generators), key=Monomial.grlex_key))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "variables", tuple(self.variables))

    @classmethod
    def from_exponents(cls, variables: Sequence[str], exps: Iterable[Sequence[int]]) -> MonomialIdeal:
        return cls(tuple(variables), tuple(Monomial(tuple(e)) for e in exps))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def square_free(self) -> bool:
        return all(g.is_square_free() for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def radical(self) -> MonomialIdeal:
        return MonomialIdeal(self.variables, tuple(g.radical() for g in self.generators))

    def index(self, variable: str) -> int:
        try:
            return self.variables.index(variable)
        except ValueError:
            raise UnknownVariableError(f"unknown variable {variable!r}") from None

    def format(self, sep: str = ", ") -> str:
        return sep.join(g.format(self.variables) for g in self.generators)

    def __str__(self) -> str:
        return f"({self.format()})"

    def __len__(self) -> int:
        return len(self.generators)


def _natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def _split_juxtaposed(name: str, declared: Sequence[str]) -> list[str] | None:
    """Greedy longest-match split of ``x0x1`` style tokens into declared names."""
    by_len = sorted(declared, key=len, reverse=True)
    out, pos = [], 0
    while pos < len(name):
        for d in by_len:
            if name.startswith(d, pos):
                out.append(d)
                pos += len(d)
                break
        else:
            return None
    return out


def parse_ideal(text: str, variables: Sequence[str] | None = None) -> MonomialIdeal:
    """Parse a comma/newline separated list of monomials into a minimalized ideal.

    Without ``variables`` the ambient ring is every name that occurs, in
    natural-sort order (``x2`` before ``x10``).  With ``variables``, a token
    that is not a declared name is split into declared names when it is a
    juxtaposition such as ``x0x1``.
    """
    raw: list[list[tuple[str, int, int]]] = []  # per generator: (name, exponent, pos)
    current: list[tuple[str, int, int]] = []
    expect_factor = True
    unit_seen: list[bool] = []
    is_unit = False
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r":
            i += 1
            continue
        if c in ",\n":
            if expect_factor and (current or is_unit):
                raise ParseError("dangling '*'", i)
            if current or is_unit:
                raw.append(current)
                unit_seen.append(is_unit)
            elif c == ",":
                raise ParseError("empty generator", i)
            current, expect_factor, is_unit = [], True, False
            i += 1
            continue
        if c == "*":
            if expect_factor:
                raise ParseError("unexpected '*'", i)
            expect_factor = True
            i += 1
            continue
        if not expect_factor:
            raise ParseError(f"expected '*', ',' or newline, got {c!r}", i)
        if c == "1" and not current and not is_unit:
            j = i + 1
            if j == n or text[j] in " \t\r,\n":
                is_unit = True
                expect_factor = False
                i = j
                continue
        m = _NAME_RE.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {c!r}", i)
        name, pos = m.group(), i
        i = m.end()
        exp = 1
        while i < n and text[i] in " \t":
            i += 1
        if i < n and text[i] == "^":
            i += 1
            while i < n and text[i] in " \t":
                i += 1
            mi = _INT_RE.match(text, i)
            if not mi:
                raise ParseError("expected integer exponent after '^'", i)
            exp = int(mi.group())
            if exp < 1:
                raise ParseError("exponent must be >= 1", i)
            i = mi.end()
        current.append((name, exp, pos))
        expect_factor = False
    if current or is_unit:
        if expect_factor:
            raise ParseError("dangling '*'", n)
        raw.append(current)
        unit_seen.append(is_unit)
    elif raw and expect_factor and text.rstrip().endswith(","):
        raise ParseError("empty generator", len(text.rstrip()) - 1)
    if not raw:
        raise ParseError("empty generator list", 0)

    if variables is None:
        names = {name for gen in raw for name, _, _ in gen}
        variables = sorted(names, key=_natural_key)
    variables = tuple(variables)
    idx = {v: k for k, v in enumerate(variables)}
    gens = []
    for gen in raw:
        exps = [0] * len(variables)
        for name, e, pos in gen:
            if name in idx:
                parts = [name]
            else:
                parts = _split_juxtaposed(name, variables)
                if parts is None:
                    raise UnknownVariableError(f"unknown variable {name!r} at position {pos}")
                # NAME^k on a juxtaposed token applies to its last factor only
            for k, part in enumerate(parts):
                exps[idx[part]] += e if k == len(parts) - 1 else 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(variables, tuple(gens))


def _require_same_ambient(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.variables != J.variables:
        raise AmbientMismatchError(f"ambient rings differ: {I.variables} vs {J.variables}")


def _require_square_free(I: MonomialIdeal) -> None:
    if not I.square_free:
        raise NotSquareFreeError(f"{I} is not square-free")


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _require_same_ambient(I, J)
    return MonomialIdeal(I.variables, tuple(f.lcm(g) for f in I.generators for g in J.generators))


def minimal_primes(I: MonomialIdeal) -> frozenset[frozenset[int]]:
    """Minimal primes of a square-free ideal, as sets of variable indices.

    These are the inclusion-minimal vertex covers of the hypergraph of
    generator supports.  Enumerated by increasing cover size, so a candidate
    is minimal exactly when no smaller cover found so far sits inside it.
    """
    _require_square_free(I)
    n = I.nvars
    if n > MAX_PRIME_SEARCH_VARS:
        raise ValueError(f"minimal_primes supports at most {MAX_PRIME_SEARCH_VARS} variables")
    if I.is_zero():
        return frozenset({frozenset()})
    edges = [g.support_mask for g in I.generators]
    if any(e == 0 for e in edges):
        return frozenset()  # unit ideal: no primes
    found: list[int] = []
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any(f & mask == f for f in found):
                continue
            if all(e & mask for e in edges):
                found.append(mask)
    return frozenset(frozenset(i for i in range(n) if mask >> i & 1) for mask in found)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    primes = minimal_primes(I)
    return MonomialIdeal(I.variables, tuple(Monomial.from_support(P, I.nvars) for P in primes))


def restrict_ideal(I: MonomialIdeal, v: str | int) -> MonomialIdeal:
    """Drop every generator divisible by the variable ``v``."""
    k = I.index(v) if isinstance(v, str) else v
    if not 0 <= k < I.nvars:
        raise UnknownVariableError(f"variable index {k} out of range")
    return MonomialIdeal(I.variables, tuple(g for g in I.generators if g.exponents[k] == 0))


def ideal_height(I: MonomialIdeal) -> int:
    """Codimension of V(I): the smallest minimal prime of the radical."""
    return min(len(P) for P in minimal_primes(I.radical()))
