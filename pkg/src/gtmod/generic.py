"""The universal tableau module over a generic base point.

Basis symbols are integer shift vectors relative to a fixed generic
tableau (top row frozen).  The action of a generator E_{lm} on a basis
symbol is the finite sum given by the permutation-form coefficients; the
central elements of each nested gl(m) act through either the closed-form
symmetric functions or by literally composing generator words, which is
what the verification suites compare.

The basis is lazy: vectors store only the shifts they touch, so nothing
ever enumerates the (infinite) full basis.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import coeffs
from .lincomb import LinComb
from .tableaux import ShiftVector, Tableau, is_generic, omega_plus

__all__ = ["GenericModule", "submodule_membership", "irreducible_membership"]


class GenericModule:
    """gl(n) acting on shifts of one generic tableau."""

    def __init__(self, base: Tableau, validate: bool = True):
        if validate and not is_generic(base):
            raise ValueError("base tableau is not generic")
        self.base = base
        self.n = base.n
        self._act_cache: dict = {}
        self._gamma_cache: dict = {}

    # -- generator action ----------------------------------------------------

    def act_symbol(self, l: int, m: int, z: ShiftVector) -> LinComb:
        """E_{lm} applied to the basis tableau at shift z."""
        key = (l, m, z)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        t = self.base.with_shift(z)
        out = LinComb.zero()
        for fn, dz in coeffs.perm_action(l, m, t):
            c = fn.const_value()
            if c:
                out = out + LinComb.single(z + dz, c)
        self._act_cache[key] = out
        return out

    def act(self, l: int, m: int, x: LinComb) -> LinComb:
        out = LinComb.zero()
        for z, c in x.items():
            out = out + c * self.act_symbol(l, m, z)
        return out

    def bracket_defect(self, g1: tuple[int, int], g2: tuple[int, int],
                       z: ShiftVector) -> LinComb:
        """[E_{g1}, E_{g2}] minus its structure-constant value on one symbol;
        zero iff the commutation relation holds there."""
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

    # -- the commutative family ----------------------------------------------

    def gamma_eigenvalue(self, r: int, s: int, z: ShiftVector) -> Fraction:
        key = (r, s, z)
        hit = self._gamma_cache.get(key)
        if hit is None:
            hit = coeffs.gamma(r, s, self.base.with_shift(z)).const_value()
            self._gamma_cache[key] = hit
        return hit

    def character(self, z: ShiftVector, max_row: int | None = None) -> tuple:
        """The eigenvalue tuple (gamma_{rs}) for 1 <= s <= r <= max_row."""
        top = max_row if max_row is not None else self.n
        return tuple(self.gamma_eigenvalue(r, s, z)
                     for r in range(1, top + 1) for s in range(1, r + 1))

    def crs_via_composition(self, r: int, s: int, x: LinComb) -> LinComb:
        """The central generator c_{rs} as a sum of composed generator words
        E_{i_1 i_2} E_{i_2 i_3} ... E_{i_s i_1} over all index tuples."""
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

    def describe(self) -> str:
        return f"n={self.n} generic base={self.base.to_text()}"


def submodule_membership(left: Tableau, right: Tableau) -> bool:
    """True when the submodule generated by ``left`` contains ``right``,
    by the cross-row nonnegative-integer-difference criterion."""
    return omega_plus(left) <= omega_plus(right)


def irreducible_membership(left: Tableau, right: Tableau) -> bool:
    """True when the two tableaux lie in the same irreducible subquotient."""
    return omega_plus(left) == omega_plus(right)
