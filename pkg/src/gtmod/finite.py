"""Finite-dimensional highest-weight modules as standard-tableau spans.

For a dominant integral weight the standard tableaux with the fixed top
row ``(lam_1, lam_2 - 1, ..., lam_n - n + 1)`` form a basis; the adjacent
generators act by the classical formulas with the convention that a
summand whose target leaves the standard set is zero.  Non-adjacent
generators are taken as nested commutators of adjacent ones, which is what
makes the composed central words computable here.

The dimension has an independent oracle in the Weyl product formula; the
enumeration and the formula are compared in the regression suite.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import coeffs
from .lincomb import LinComb
from .tableaux import ShiftVector, Tableau, is_standard

__all__ = ["FiniteModule", "standard_tableaux", "weyl_dimension", "highest_weight_tableau"]


def weyl_dimension(lam: tuple[int, ...]) -> int:
    """dim of the irreducible with highest weight lam, by the Weyl product."""
    n = len(lam)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def top_row(lam: tuple[int, ...]) -> list[int]:
    return [lam[i] - i for i in range(len(lam))]


def highest_weight_tableau(lam: tuple[int, ...]) -> Tableau:
    """The standard tableau whose every row is a prefix of the top row."""
    row = top_row(lam)
    return Tableau.from_rows([row[:r] for r in range(len(lam), 0, -1)])


def standard_tableaux(lam: tuple[int, ...]) -> list[Tableau]:
    """All standard tableaux with the fixed top row, by interlacing ranges:
    each entry below runs over the integers [left-neighbour-above + 1,
    entry-above]."""
    results: list[list[list[int]]] = []

    def extend(rows: list[list[int]]):
        above = rows[-1]
        r = len(above) - 1
        if r == 0:
            results.append(rows)
            return
        ranges = [range(above[i + 1] + 1, above[i] + 1) for i in range(r)]
        for picks in itertools.product(*ranges):
            extend(rows + [list(picks)])

    extend([top_row(lam)])
    return [Tableau.from_rows(rows) for rows in results]


class FiniteModule:
    """The standard-tableau model of one finite-dimensional irreducible."""

    def __init__(self, lam: tuple[int, ...]):
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise ValueError("highest weight must be dominant (weakly decreasing)")
        if any(not isinstance(x, int) for x in lam):
            raise ValueError("integral weights only")
        self.lam = tuple(lam)
        self.n = len(lam)
        self.base = highest_weight_tableau(self.lam)
        shifts = []
        for t in standard_tableaux(self.lam):
            shifts.append(ShiftVector.of(self.n, {
                (r, s): int(t.base(r, s) - self.base.base(r, s))
                for r in range(1, self.n)
                for s in range(1, r + 1)
            }))
        self.basis: tuple[ShiftVector, ...] = tuple(shifts)
        self._basis_set = frozenset(shifts)
        self._act_cache: dict = {}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def tableau(self, z: ShiftVector) -> Tableau:
        return self.base.with_shift(z)

    def act_symbol(self, l: int, m: int, z: ShiftVector) -> LinComb:
        key = (l, m, z)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        if abs(l - m) <= 1:
            out = LinComb.zero()
            for c, dz in coeffs.classical_action(l, m, self.tableau(z), finite_dim=True):
                if c:
                    target = z + dz
                    if target not in self._basis_set:
                        raise RuntimeError("standard span was not preserved")
                    out = out + LinComb.single(target, c)
        elif l < m:
            # E_{l,m} = [E_{l,l+1}, E_{l+1,m}]
            out = self._commute((l, l + 1), (l + 1, m), z)
        else:
            # E_{l,m} = [E_{l,l-1}, E_{l-1,m}]
            out = self._commute((l, l - 1), (l - 1, m), z)
        self._act_cache[key] = out
        return out

    def _commute(self, g1, g2, z) -> LinComb:
        x = LinComb.single(z)
        return (self.act(g1[0], g1[1], self.act(g2[0], g2[1], x))
                - self.act(g2[0], g2[1], self.act(g1[0], g1[1], x)))

    def act(self, l: int, m: int, x: LinComb) -> LinComb:
        out = LinComb.zero()
        for z, c in x.items():
            out = out + c * self.act_symbol(l, m, z)
        return out

    def bracket_defect(self, g1, g2, z: ShiftVector) -> LinComb:
        a, b = g1
        c, d = g2
        x = LinComb.single(z)
        lhs = self.act(a, b, self.act(c, d, x)) - self.act(c, d, self.act(a, b, x))
        rhs = LinComb.zero()
        if b == c:
            rhs = rhs + self.act(a, d, x)
        if d == a:
            rhs = rhs - self.act(c, b, x)
        return lhs - rhs

    def gamma_eigenvalue(self, r: int, s: int, z: ShiftVector) -> Fraction:
        return coeffs.gamma(r, s, self.tableau(z)).const_value()

    def crs_via_composition(self, r: int, s: int, x: LinComb) -> LinComb:
        total = LinComb.zero()
        for tup in itertools.product(range(1, r + 1), repeat=s):
            pairs = [(tup[a], tup[a + 1]) for a in range(s - 1)] + [(tup[-1], tup[0])]
            y = x
            for (l, m) in reversed(pairs):
                y = self.act(l, m, y)
                if y.is_zero:
                    break
            total = total + y
        return total
