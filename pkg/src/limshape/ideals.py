"""Exponent vectors and monomial ideals with exact integer arithmetic.

A monomial in K[x_0, ..., x_n] is identified with its exponent vector in
Z_{>=0}^{n+1}.  Variables are ordered x_0 > x_1 > ... > x_n, so the exchange
move used by the strong-stability test replaces one unit of x_j by x_i with
i < j.  Ideals are stored as the antichain of minimal generators; the empty
generator set denotes the zero ideal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "ExponentVector",
    "MonomialIdeal",
    "monomial_divides",
    "monomial_product",
    "monomial_lcm",
    "total_degree",
    "minimal_exponents",
    "minimal_generators",
    "parse_exponents",
    "format_exponents",
    "format_monomial",
]

ExponentVector = tuple  # tuple[int, ...]; kept loose for readable signatures

_VAR_NAMES = ("x", "y", "z", "w")


def _check_vector(vec) -> tuple:
    v = tuple(int(e) for e in vec)
    if not v:
        raise ValueError("exponent vector must be non-empty")
    if any(e < 0 for e in v):
        raise ValueError(f"negative exponent in {v}")
    return v


def _check_same_length(a, b) -> None:
    if len(a) != len(b):
        raise ValueError(f"exponent length mismatch: {len(a)} vs {len(b)}")


def monomial_divides(a, b) -> bool:
    """True iff x^a divides x^b, i.e. a <= b componentwise."""
    _check_same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def monomial_product(a, b) -> tuple:
    _check_same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def monomial_lcm(a, b) -> tuple:
    _check_same_length(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def total_degree(a) -> int:
    return sum(a)


def minimal_exponents(vectors: Iterable) -> tuple:
    """Antichain of <=-minimal vectors; the generated ideal is unchanged."""
    vs = sorted({_check_vector(v) for v in vectors}, key=lambda v: (sum(v), v))
    lengths = {len(v) for v in vs}
    if len(lengths) > 1:
        raise ValueError("mixed exponent-vector lengths")
    keep: list[tuple] = []
    for v in vs:
        # any divisor of v has strictly smaller degree (or equals v), so it
        # already sits in `keep` when v is redundant
        if not any(all(x <= y for x, y in zip(u, v)) for u in keep):
            keep.append(v)
    return tuple(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (an antichain)."""

    nvars: int
    gens: tuple

    @classmethod
    def from_gens(cls, nvars: int, gens: Iterable) -> "MonomialIdeal":
        if nvars < 1:
            raise ValueError("need at least one variable")
        mins = minimal_exponents(gens)
        if mins and len(mins[0]) != nvars:
            raise ValueError(
                f"generators have {len(mins[0])} exponents, expected {nvars}"
            )
        return cls(nvars, mins)

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ())

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ((0,) * nvars,))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and sum(self.gens[0]) == 0

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    def contains(self, mono) -> bool:
        """Membership test: some minimal generator divides the monomial."""
        m = _check_vector(mono)
        if len(m) != self.nvars:
            raise ValueError(
                f"monomial has {len(m)} exponents, ideal lives in {self.nvars} variables"
            )
        return any(all(g[i] <= m[i] for i in range(self.nvars)) for g in self.gens)

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.nvars != other.nvars:
            raise ValueError("ideal product across different variable counts")
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.nvars)
        sums = {monomial_product(a, b) for a in self.gens for b in other.gens}
        return MonomialIdeal.from_gens(self.nvars, sums)

    def power(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative ideal power")
        if k == 0:
            return MonomialIdeal.unit(self.nvars)
        out = self
        for _ in range(k - 1):
            out = out.product(self)
        return out

    def is_borel_fixed(self) -> bool:
        """Strong stability: every exchange x_j -> x_i (i < j) of every minimal
        generator stays in the ideal.  Checking minimal generators suffices;
        the property propagates to all monomials of the ideal."""
        if self.is_zero:
            raise ValueError("Borel test undefined for the zero ideal")
        for g in self.gens:
            for j in range(self.nvars):
                if g[j] == 0:
                    continue
                moved = list(g)
                moved[j] -= 1
                for i in range(j):
                    moved[i] += 1
                    if not self.contains(moved):
                        return False
                    moved[i] -= 1
        return True

    def alpha(self) -> int:
        """Least degree of a nonzero element: min total degree of generators."""
        if self.is_zero:
            raise ValueError("zero ideal has elements in no degree")
        return min(sum(g) for g in self.gens)

    def max_generator_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero ideal has no generators")
        return max(sum(g) for g in self.gens)

    def borel_regularity(self) -> int:
        """Regularity of a strongly stable ideal: the maximal generator degree.
        Rejects non-Borel input, where this formula is not valid."""
        if not self.is_borel_fixed():
            raise ValueError("regularity-by-generator-degree needs a Borel-fixed ideal")
        return self.max_generator_degree()

    def padded(self, nvars: int) -> "MonomialIdeal":
        """Extend to a larger polynomial ring (new variables get exponent 0)."""
        if nvars < self.nvars:
            raise ValueError("cannot pad to fewer variables")
        if nvars == self.nvars:
            return self
        pad = (0,) * (nvars - self.nvars)
        return MonomialIdeal(nvars, tuple(g + pad for g in self.gens))

    def to_json(self) -> dict:
        return {"vars": self.nvars, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, obj: dict) -> "MonomialIdeal":
        if "vars" not in obj or "gens" not in obj:
            raise ValueError("ideal JSON needs 'vars' and 'gens'")
        return cls.from_gens(int(obj["vars"]), [tuple(g) for g in obj["gens"]])

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def minimal_generators(gens: Iterable, nvars: int | None = None) -> MonomialIdeal:
    """Minimalize a generator set into an ideal; `nvars` required when empty."""
    gens = [tuple(g) for g in gens]
    if not gens:
        if nvars is None:
            raise ValueError("empty generator set needs an explicit variable count")
        return MonomialIdeal.zero(nvars)
    n = nvars if nvars is not None else len(gens[0])
    return MonomialIdeal.from_gens(n, gens)


_TUPLE_RE = re.compile(r"^\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*,?\s*\)?$")
_FACTOR_RE = re.compile(r"^([A-Za-z])(\d*)(?:\^(\d+))?$")


def parse_exponents(text: str, nvars: int | None = None) -> tuple:
    """Parse "(2,0,1)" or "x0^2*x2" (also x/y/z/w names) into a vector."""
    s = text.strip()
    if s == "1":
        if nvars is None:
            raise ValueError("monomial '1' needs an explicit variable count")
        return (0,) * nvars
    m = _TUPLE_RE.match(s)
    if m:
        vec = tuple(int(p) for p in m.group(1).split(","))
        if any(e < 0 for e in vec):
            raise ValueError(f"negative exponent in {text!r}")
        if nvars is not None and len(vec) != nvars:
            raise ValueError(f"expected {nvars} exponents in {text!r}")
        return vec
    indices: dict[int, int] = {}
    for factor in s.split("*"):
        fm = _FACTOR_RE.match(factor.strip())
        if not fm:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        name, idx, exp = fm.groups()
        if idx:
            if name != "x":
                raise ValueError(f"indexed variables must use 'x' in {factor!r}")
            i = int(idx)
        else:
            if name not in _VAR_NAMES:
                raise ValueError(f"unknown variable {name!r}")
            i = _VAR_NAMES.index(name)
        indices[i] = indices.get(i, 0) + (int(exp) if exp else 1)
    width = nvars if nvars is not None else max(indices) + 1
    if max(indices) >= width:
        raise ValueError(f"variable index out of range in {text!r}")
    return tuple(indices.get(i, 0) for i in range(width))


def format_exponents(vec) -> str:
    return "(" + ",".join(str(e) for e in vec) + ")"


def format_monomial(vec) -> str:
    parts = []
    for i, e in enumerate(vec):
        if e == 0:
            continue
        parts.append(f"x{i}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts) if parts else "1"
