"""Gelfand-Tsetlin tableaux, shift lattices and row-permutation machinery.

A tableau is a triangular array with rows of lengths n, n-1, ..., 1 (top
row first).  Entries are exact rationals, optionally carrying a multiple
of the formal variable ``t``: an entry is a pair ``(base, tcoef)`` meaning
``base + tcoef*t``.  Plain tableaux (all ``tcoef == 0``) represent actual
points; a singular frame produces tableaux carrying ``t = +1`` and
``t = -1`` on its two singular positions, which is how every coefficient
function is pushed down to a univariate :class:`~gtmod.ratfun.RatFun`.

The integer lattice of shifts leaves the top row fixed, so a
:class:`ShiftVector` has rows n-1, ..., 1 only.

Row permutations act position-wise on rows: ``(sigma(w))[r,s] =
w[r, sigma[r]^{-1}(s)]``.  Only tuples of transpositions of the form
``(1, a)`` per row are ever needed (the sets ``Phi_{lm}``).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .ratfun import Poly

Entry = tuple[Fraction, int]  # base + tcoef * t

__all__ = [
    "Tableau", "ShiftVector", "PermTuple", "SingularFrame",
    "epsilon", "phi_set", "tau_perm", "tau_star",
    "is_standard", "is_generic", "singular_pairs", "omega_plus",
    "closest_representative", "window_shifts", "parse_rational",
]


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _fmt_rational(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class Tableau:
    """Triangular array of entries ``base + tcoef*t``; rows top-first."""

    rows: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for idx, row in enumerate(self.rows):
            if len(row) != n - idx:
                raise ValueError(f"row {n - idx} has {len(row)} entries, wants {n - idx}")

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Tableau":
        """Build a plain tableau from rationals/ints, top row first."""
        packed = tuple(
            tuple((Fraction(x), 0) for x in row) for row in rows
        )
        return Tableau(packed)

    # -- entry access (r = row length 1..n, s = 1..r) ------------------------

    def entry(self, r: int, s: int) -> Entry:
        return self.rows[self.n - r][s - 1]

    def base(self, r: int, s: int) -> Fraction:
        return self.rows[self.n - r][s - 1][0]

    def poly(self, r: int, s: int) -> Poly:
        b, c = self.rows[self.n - r][s - 1]
        return Poly([b, c])

    @property
    def is_plain(self) -> bool:
        return all(e[1] == 0 for row in self.rows for e in row)

    # -- construction of shifted / t-carrying variants -----------------------

    def with_shift(self, z: "ShiftVector") -> "Tableau":
        """Add integer shifts to rows <= n-1; the top row is fixed."""
        if z.n != self.n:
            raise ValueError("shift size mismatch")
        new = [self.rows[0]]
        for ridx in range(1, self.n):
            r = self.n - ridx
            zrow = z.rows[ridx - 1]
            new.append(tuple((b + zrow[s], c) for s, (b, c) in enumerate(self.rows[ridx])))
        return Tableau(tuple(new))

    def with_tcoefs(self, coefs: dict[tuple[int, int], int]) -> "Tableau":
        """Set the t-coefficient of the given (row, position) entries."""
        new = [list(row) for row in self.rows]
        for (r, s), c in coefs.items():
            b, _ = new[self.n - r][s - 1]
            new[self.n - r][s - 1] = (b, c)
        return Tableau(tuple(tuple(row) for row in new))

    def with_t(self, k: int, i: int, j: int) -> "Tableau":
        """Put ``+t`` on entry (k, i) and ``-t`` on entry (k, j)."""
        return self.with_tcoefs({(k, i): 1, (k, j): -1})

    # -- text form "(a,b,c|d,e|f)" with rationals "p/q" ----------------------

    def to_text(self) -> str:
        if not self.is_plain:
            raise ValueError("text form is defined for plain tableaux only")
        return "(" + "|".join(
            ",".join(_fmt_rational(e[0]) for e in row) for row in self.rows
        ) + ")"

    @staticmethod
    def from_text(text: str) -> "Tableau":
        body = text.strip()
        if body.startswith("("):
            if not body.endswith(")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            body = body[1:-1]
        rows = [
            [parse_rational(x) for x in re.split(r",", part)]
            for part in body.split("|")
        ]
        return Tableau.from_rows(rows)

    def __repr__(self) -> str:
        if self.is_plain:
            return f"Tableau{self.to_text()}"
        cells = "|".join(
            ",".join(f"{b}{'+' if c > 0 else '-'}{abs(c)}t" if c else str(b) for (b, c) in row)
            for row in self.rows
        )
        return f"Tableau({cells})"


@dataclass(frozen=True)
class ShiftVector:
    """Integer shifts of the rows 1..n-1 of a tableau (top row fixed).

    Stored row-major, row n-1 first, matching the tuple notation
    ``(z_{n-1,1},...,z_{n-1,n-1} | ... | z_{11})``.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n - 1:
            raise ValueError("wrong number of rows")
        for idx, row in enumerate(self.rows):
            if len(row) != self.n - 1 - idx:
                raise ValueError("ragged shift vector")

    @staticmethod
    def zero(n: int) -> "ShiftVector":
        return ShiftVector(n, tuple(tuple(0 for _ in range(r)) for r in range(n - 1, 0, -1)))

    @staticmethod
    def delta(n: int, r: int, s: int) -> "ShiftVector":
        """The unit shift on position (r, s), 1 <= s <= r <= n-1."""
        if not (1 <= s <= r <= n - 1):
            raise ValueError(f"delta position ({r},{s}) out of range for n={n}")
        rows = [[0] * q for q in range(n - 1, 0, -1)]
        rows[n - 1 - r][s - 1] = 1
        return ShiftVector(n, tuple(tuple(row) for row in rows))

    @staticmethod
    def of(n: int, entries: dict) -> "ShiftVector":
        rows = [[0] * q for q in range(n - 1, 0, -1)]
        for (r, s), v in entries.items():
            rows[n - 1 - r][s - 1] = v
        return ShiftVector(n, tuple(tuple(row) for row in rows))

    def get(self, r: int, s: int) -> int:
        return self.rows[self.n - 1 - r][s - 1]

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for ridx, row in enumerate(self.rows):
            r = self.n - 1 - ridx
            for s, v in enumerate(row, start=1):
                yield (r, s), v

    def __add__(self, other: "ShiftVector") -> "ShiftVector":
        return ShiftVector(self.n, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: "ShiftVector") -> "ShiftVector":
        return self + (-other)

    def __neg__(self) -> "ShiftVector":
        return ShiftVector(self.n, tuple(tuple(-a for a in row) for row in self.rows))

    def swapped(self, k: int, i: int, j: int) -> "ShiftVector":
        """The shift with entries (k,i) and (k,j) exchanged."""
        rows = [list(row) for row in self.rows]
        ridx = self.n - 1 - k
        rows[ridx][i - 1], rows[ridx][j - 1] = rows[ridx][j - 1], rows[ridx][i - 1]
        return ShiftVector(self.n, tuple(tuple(row) for row in rows))

    def to_text(self) -> str:
        return "(" + "|".join(",".join(str(v) for v in row) for row in self.rows) + ")"

    @staticmethod
    def from_text(n: int, text: str) -> "ShiftVector":
        body = text.strip()
        if body.startswith("("):
            body = body[1:-1]
        rows = tuple(tuple(int(x) for x in part.split(",")) for part in body.split("|"))
        return ShiftVector(n, rows)

    def __repr__(self) -> str:
        return f"z{self.to_text()}"


def window_shifts(n: int, bound: int) -> Iterator[ShiftVector]:
    """All shift vectors with every component in [-bound, bound]."""
    sizes = list(range(n - 1, 0, -1))
    total = sum(sizes)
    for flat in itertools.product(range(-bound, bound + 1), repeat=total):
        rows = []
        pos = 0
        for size in sizes:
            rows.append(tuple(flat[pos:pos + size]))
            pos += size
        yield ShiftVector(n, tuple(rows))


def epsilon(n: int, r: int, s: int) -> ShiftVector:
    """The move vector of the generator E_{rs}.

    For r < s it is ``delta(r,1) + delta(r+1,1) + ... + delta(s-1,1)``;
    ``epsilon(r, r) = 0`` and ``epsilon(s, r) = -epsilon(r, s)``.
    """
    if not (1 <= r <= n and 1 <= s <= n):
        raise ValueError(f"epsilon({r},{s}) out of range for n={n}")
    if r == s:
        return ShiftVector.zero(n)
    if r > s:
        return -epsilon(n, s, r)
    out = ShiftVector.zero(n)
    for q in range(r, s):
        out = out + ShiftVector.delta(n, q, 1)
    return out


# ---------------------------------------------------------------------------
# Row permutations
# ---------------------------------------------------------------------------

def _transposition(size: int, a: int, b: int) -> tuple[int, ...]:
    images = list(range(1, size + 1))
    images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
    return tuple(images)


def _identity(size: int) -> tuple[int, ...]:
    return tuple(range(1, size + 1))


@dataclass(frozen=True)
class PermTuple:
    """An element of S_n x S_{n-1} x ... x S_1, one permutation per row.

    ``perms[r-1]`` is the image tuple of the row-r permutation:
    ``sigma[r](x) = perms[r-1][x-1]``.
    """

    perms: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.perms)

    @staticmethod
    def identity(n: int) -> "PermTuple":
        return PermTuple(tuple(_identity(r) for r in range(1, n + 1)))

    @staticmethod
    def row_transposition(n: int, row: int, a: int, b: int) -> "PermTuple":
        perms = [_identity(r) for r in range(1, n + 1)]
        perms[row - 1] = _transposition(row, a, b)
        return PermTuple(tuple(perms))

    def row(self, r: int) -> tuple[int, ...]:
        return self.perms[r - 1]

    def apply_row(self, r: int, x: int) -> int:
        return self.perms[r - 1][x - 1]

    def is_identity_row(self, r: int) -> bool:
        return self.perms[r - 1] == _identity(r)

    def inverse(self) -> "PermTuple":
        out = []
        for images in self.perms:
            inv = [0] * len(images)
            for x, y in enumerate(images, start=1):
                inv[y - 1] = x
            out.append(tuple(inv))
        return PermTuple(tuple(out))

    def __mul__(self, other: "PermTuple") -> "PermTuple":
        """Composition: ``(self*other)[r](x) = self[r](other[r](x))``."""
        return PermTuple(tuple(
            tuple(p[q[x] - 1] for x in range(len(p)))
            for p, q in zip(self.perms, other.perms)
        ))

    def __call__(self, w):
        """Row-wise position action on a Tableau or ShiftVector."""
        inv = self.inverse()
        if isinstance(w, Tableau):
            n = w.n
            new = []
            for ridx in range(n):
                r = n - ridx
                row = w.rows[ridx]
                new.append(tuple(row[inv.apply_row(r, s) - 1] for s in range(1, r + 1)))
            return Tableau(tuple(new))
        if isinstance(w, ShiftVector):
            n = w.n
            if not self.is_identity_row(n):
                raise ValueError("permutation moves the fixed top row")
            new = []
            for ridx in range(n - 1):
                r = n - 1 - ridx
                row = w.rows[ridx]
                new.append(tuple(row[inv.apply_row(r, s) - 1] for s in range(1, r + 1)))
            return ShiftVector(n, tuple(new))
        raise TypeError(f"cannot permute {w!r}")

    def __repr__(self) -> str:
        moved = [f"{r}:{self.perms[r - 1]}" for r in range(1, self.n + 1)
                 if not self.is_identity_row(r)]
        return "PermTuple(" + (", ".join(moved) if moved else "id") + ")"


def phi_set(l: int, m: int, n: int) -> list[PermTuple]:
    """Enumerate Phi_{lm}: per row t in [min(l,m), max(l,m)-1] a transposition
    (1, a_t) with 1 <= a_t <= t; Phi_{ll} = {id}.
    """
    if not (1 <= l <= n and 1 <= m <= n):
        raise ValueError(f"phi_set({l},{m}) out of range for n={n}")
    lo, hi = min(l, m), max(l, m)
    if lo == hi:
        return [PermTuple.identity(n)]
    choices = [range(1, t + 1) for t in range(lo, hi)]
    out = []
    for picks in itertools.product(*choices):
        perms = [_identity(r) for r in range(1, n + 1)]
        for t, a in zip(range(lo, hi), picks):
            perms[t - 1] = _transposition(t, 1, a)
        out.append(PermTuple(tuple(perms)))
    return out


def tau_perm(n: int, k: int, i: int, j: int) -> PermTuple:
    """The involution exchanging the two singular positions in row k."""
    return PermTuple.row_transposition(n, k, i, j)


def tau_star(sigma: PermTuple, k: int, i: int, j: int) -> PermTuple:
    """Conjugation-type twist of sigma by tau on the singular row.

    Defined for sigma with ``sigma[k] in {(1,i), (1,j)}``; it exchanges the
    two cases.  Concretely ``tau sigma tau`` when ``1 not in {i, j}`` and
    ``tau sigma`` when ``i == 1`` (the two group products coincide with
    ``sigma tau sigma`` resp. ``sigma tau`` on this domain).
    """
    n = sigma.n
    rowk = sigma.row(k)
    allowed = (_transposition(k, 1, i), _transposition(k, 1, j))
    if rowk not in allowed:
        raise ValueError(f"row-{k} component {rowk} is not (1,{i}) or (1,{j})")
    tau = tau_perm(n, k, i, j)
    if i == 1:
        return tau * sigma
    return tau * sigma * tau


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def _is_nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _is_pos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def is_standard(t: Tableau) -> bool:
    """Interlacing test: for all 1 <= s <= r <= n-1,
    ``t[r+1,s] - t[r,s]`` is a nonnegative integer and
    ``t[r,s] - t[r+1,s+1]`` is a positive integer.
    """
    if not t.is_plain:
        raise ValueError("standardness is defined for plain tableaux")
    for r in range(1, t.n):
        for s in range(1, r + 1):
            if not _is_nonneg_int(t.base(r + 1, s) - t.base(r, s)):
                return False
            if not _is_pos_int(t.base(r, s) - t.base(r + 1, s + 1)):
                return False
    return True


def singular_pairs(t: Tableau) -> list[tuple[int, int, int]]:
    """Same-row index pairs (r, s, u), s < u, rows r <= n-1, whose entry
    difference is an integer."""
    if not t.is_plain:
        raise ValueError("singularity is defined for plain tableaux")
    out = []
    for r in range(1, t.n):
        for s in range(1, r + 1):
            for u in range(s + 1, r + 1):
                if (t.base(r, s) - t.base(r, u)).denominator == 1:
                    out.append((r, s, u))
    return out


def is_generic(t: Tableau) -> bool:
    return not singular_pairs(t)


def omega_plus(t: Tableau) -> frozenset[tuple[int, int, int]]:
    """The set of triples (r, s, u), 1 < r <= n, with
    ``t[r,s] - t[r-1,u]`` a nonnegative integer."""
    if not t.is_plain:
        raise ValueError("omega_plus is defined for plain tableaux")
    out = set()
    for r in range(2, t.n + 1):
        for s in range(1, r + 1):
            for u in range(1, r):
                if _is_nonneg_int(t.base(r, s) - t.base(r - 1, u)):
                    out.add((r, s, u))
    return frozenset(out)


def closest_representative(w: Tableau, vbar: Tableau) -> Tableau:
    """Shift w by integers on rows <= n-1 so that every component of
    ``vbar - result`` has floor zero."""
    if w.n != vbar.n:
        raise ValueError("size mismatch")
    shift = ShiftVector.of(w.n, {
        (r, s): math.floor(vbar.base(r, s) - w.base(r, s))
        for r in range(1, w.n)
        for s in range(1, r + 1)
    })
    return w.with_shift(shift)


# ---------------------------------------------------------------------------
# Singular frames
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SingularFrame:
    """The data of one singular pair: (k, i, j) with i < j <= k <= n-1 and a
    base point whose (k,i) and (k,j) entries coincide while every other
    same-row difference on rows <= n-1 is a noninteger.
    """

    k: int
    i: int
    j: int
    vbar: Tableau

    def __post_init__(self):
        n = self.vbar.n
        if not (1 <= self.i < self.j <= self.k <= n - 1):
            raise ValueError(f"bad singular triple (k,i,j)=({self.k},{self.i},{self.j})")
        if not self.vbar.is_plain:
            raise ValueError("base point must be a plain tableau")
        if self.vbar.base(self.k, self.i) != self.vbar.base(self.k, self.j):
            raise ValueError("entries at the singular pair must be equal")
        for (r, s, u) in singular_pairs(self.vbar):
            if (r, s, u) != (self.k, self.i, self.j):
                raise ValueError(f"extra integral same-row pair {(r, s, u)}; frame is not 1-singular")

    @property
    def n(self) -> int:
        return self.vbar.n

    def line(self) -> Tableau:
        """The base point with ``+t`` / ``-t`` on the singular pair."""
        return self.vbar.with_t(self.k, self.i, self.j)

    def tableau_at(self, z: ShiftVector) -> Tableau:
        """The t-carrying tableau for base-plus-shift z."""
        return self.line().with_shift(z)

    def point_at(self, z: ShiftVector) -> Tableau:
        """The plain tableau at t = 0 for shift z."""
        return self.vbar.with_shift(z)

    def tau(self, z: ShiftVector) -> ShiftVector:
        return z.swapped(self.k, self.i, self.j)

    def is_tau_fixed(self, z: ShiftVector) -> bool:
        return z.get(self.k, self.i) == z.get(self.k, self.j)

    def stratum(self, z: ShiftVector) -> int:
        """The index m with |z_{ki} - z_{kj}| = m."""
        return abs(z.get(self.k, self.i) - z.get(self.k, self.j))

    def describe(self) -> str:
        return (f"n={self.n} singular (k,i,j)=({self.k},{self.i},{self.j}) "
                f"vbar={self.vbar.to_text()}")
