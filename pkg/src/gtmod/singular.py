"""The universal tableau module attached to a 1-singular base point.

Alongside the ordinary basis tableaux ``Reg(z)`` (one per integer shift z)
the space carries *derivative* symbols ``Der(z)``, subject to the
relations

    Reg(z) = Reg(tau(z)),      Der(z) = -Der(tau(z)),

where tau exchanges the shift entries on the singular pair; in particular
``Der(z) = 0`` for tau-fixed z.  Canonical representatives put
``z_ki <= z_kj`` on regular symbols and ``z_ki > z_kj`` on derivative
symbols.

The generator action is computed on the line through the base point
(singular entries ``a + t`` and ``a - t``): write every coefficient as a
rational function of t, then

    E_lm Reg(z) = sum_sigma  d[(2t) e_lm(sigma(v+z))] Reg(z')
                           + ev[(2t) e_lm(sigma(v+z))] Der(z'),
    E_lm Der(z) = sum_sigma  d[e_lm(sigma(v+z))] Reg(z')
                           + ev[e_lm(sigma(v+z))] Der(z'),

with z' = z + sigma(eps_lm), ev the value at t = 0 and d the
half-derivative there.  The derivative line requires tau(z) != z, which
keeps every coefficient smooth; on the regular line the prefactor 2t
absorbs the (at most simple) poles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import coeffs
from .lincomb import LinComb
from .ratfun import RatFun, TWO_T
from .tableaux import (
    PermTuple, ShiftVector, SingularFrame, epsilon, phi_set, window_shifts,
)

__all__ = [
    "REG", "DER", "BasisSymbol", "InvariantViolation", "SingularModule",
    "canonicalize", "irreducibility_hypothesis", "generation_witnesses",
    "connecting_shift", "canonical_window",
]

REG = "reg"
DER = "der"


class InvariantViolation(RuntimeError):
    """A structural fact the construction guarantees failed to hold."""


@dataclass(frozen=True)
class BasisSymbol:
    kind: str
    shift: ShiftVector

    def __repr__(self) -> str:
        tag = "Reg" if self.kind == REG else "Der"
        return f"{tag}{self.shift.to_text()}"


def canonicalize(kind: str, z: ShiftVector,
                 frame: SingularFrame) -> tuple[int, BasisSymbol | None]:
    """Canonical representative of Reg(z) / Der(z) with its sign; Der of a
    tau-fixed shift collapses to zero."""
    zi = z.get(frame.k, frame.i)
    zj = z.get(frame.k, frame.j)
    if kind == REG:
        if zi > zj:
            return 1, BasisSymbol(REG, frame.tau(z))
        return 1, BasisSymbol(REG, z)
    if kind == DER:
        if zi == zj:
            return 0, None
        if zi < zj:
            return -1, BasisSymbol(DER, frame.tau(z))
        return 1, BasisSymbol(DER, z)
    raise ValueError(f"unknown symbol kind {kind!r}")


def canonical_window(frame: SingularFrame, bound: int) -> list[BasisSymbol]:
    """All canonical basis symbols whose shift lies in the given window."""
    out = []
    for z in window_shifts(frame.n, bound):
        kind = REG if z.get(frame.k, frame.i) <= z.get(frame.k, frame.j) else DER
        out.append(BasisSymbol(kind, z))
    return out


class SingularModule:
    """gl(n) on the span of the regular and derivative symbols of a frame."""

    def __init__(self, frame: SingularFrame):
        self.frame = frame
        self.n = frame.n
        self._act_cache: dict = {}
        self._gamma_cache: dict = {}

    # -- canonical single-term combinations ----------------------------------

    def reg(self, z: ShiftVector, coeff=1) -> LinComb:
        sign, sym = canonicalize(REG, z, self.frame)
        return LinComb.single(sym, Fraction(coeff) * sign)

    def der(self, z: ShiftVector, coeff=1) -> LinComb:
        sign, sym = canonicalize(DER, z, self.frame)
        if sign == 0:
            return LinComb.zero()
        return LinComb.single(sym, Fraction(coeff) * sign)

    # -- single-generator action ----------------------------------------------

    def act_on_regular(self, l: int, m: int, z: ShiftVector) -> LinComb:
        """E_{lm} on Reg(z), through d((x-y) * coefficient) and
        ev((x-y) * coefficient)."""
        frame = self.frame
        eps = epsilon(self.n, l, m)
        out = LinComb.zero()
        for sigma in phi_set(l, m, self.n):
            e = coeffs.coeff_e(l, m, sigma(frame.tableau_at(z)))
            g = RatFun(TWO_T) * e
            if g.pole_order() > 0:
                raise InvariantViolation(
                    f"pole of order >= 2 in e_{l}{m} over {frame.describe()} at z={z}")
            target = z + sigma(eps)
            rc = g.d()
            if rc:
                out = out + self.reg(target, rc)
            dc = g.ev()
            if dc:
                out = out + self.der(target, dc)
        return out

    def act_on_derivative(self, l: int, m: int, w: ShiftVector) -> LinComb:
        """E_{lm} on Der(w); requires tau(w) != w."""
        frame = self.frame
        if frame.is_tau_fixed(w):
            raise ValueError("derivative symbols require a tau-unfixed shift")
        eps = epsilon(self.n, l, m)
        out = LinComb.zero()
        for sigma in phi_set(l, m, self.n):
            e = coeffs.coeff_e(l, m, sigma(frame.tableau_at(w)))
            if e.pole_order() > 0:
                raise InvariantViolation(
                    f"unexpected pole in e_{l}{m} at tau-unfixed w={w}")
            target = w + sigma(eps)
            rc = e.d()
            if rc:
                out = out + self.reg(target, rc)
            dc = e.ev()
            if dc:
                out = out + self.der(target, dc)
        return out

    def act_on_regular_by_evaluation(self, l: int, m: int,
                                     z: ShiftVector) -> LinComb:
        """Alternative form of E_{lm} on Reg(z) for tau-unfixed z: plain
        evaluation of every coefficient at t = 0.  Must agree with
        :meth:`act_on_regular`; kept as an independent cross-check path."""
        frame = self.frame
        if frame.is_tau_fixed(z):
            raise ValueError("the evaluation form needs a tau-unfixed shift")
        eps = epsilon(self.n, l, m)
        out = LinComb.zero()
        for sigma in phi_set(l, m, self.n):
            e = coeffs.coeff_e(l, m, sigma(frame.tableau_at(z)))
            c = e.ev()
            if c:
                out = out + self.reg(z + sigma(eps), c)
        return out

    def act_symbol(self, l: int, m: int, sym: BasisSymbol) -> LinComb:
        key = (l, m, sym)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        if sym.kind == REG:
            out = self.act_on_regular(l, m, sym.shift)
        else:
            out = self.act_on_derivative(l, m, sym.shift)
        self._act_cache[key] = out
        return out

    def act(self, l: int, m: int, x: LinComb) -> LinComb:
        out = LinComb.zero()
        for sym, c in x.items():
            out = out + c * self.act_symbol(l, m, sym)
        return out

    def bracket_defect(self, g1: tuple[int, int], g2: tuple[int, int],
                       sym: BasisSymbol) -> LinComb:
        a, b = g1
        c, d = g2
        x = LinComb.single(sym)
        lhs = self.act(a, b, self.act(c, d, x)) - self.act(c, d, self.act(a, b, x))
        rhs = LinComb.zero()
        if b == c:
            rhs = rhs + self.act(a, d, x)
        if d == a:
            rhs = rhs - self.act(c, b, x)
        return lhs - rhs

    # -- the commutative family -------------------------------------------------

    def _gamma_ratfun(self, r: int, s: int, z: ShiftVector) -> RatFun:
        key = (r, s, z)
        hit = self._gamma_cache.get(key)
        if hit is None:
            hit = coeffs.gamma(r, s, self.frame.tableau_at(z))
            if hit.pole_order() > 0:
                raise InvariantViolation(
                    f"gamma_{r}{s} failed to cancel its pole at z={z}")
            self._gamma_cache[key] = hit
        return hit

    def gamma_value(self, r: int, s: int, z: ShiftVector) -> Fraction:
        return self._gamma_ratfun(r, s, z).ev()

    def gamma_dvalue(self, r: int, s: int, z: ShiftVector) -> Fraction:
        return self._gamma_ratfun(r, s, z).d()

    def character(self, z: ShiftVector, max_row: int | None = None) -> tuple:
        top = max_row if max_row is not None else self.n
        return tuple(self.gamma_value(r, s, z)
                     for r in range(1, top + 1) for s in range(1, r + 1))

    def gamma_action(self, r: int, s: int, x: LinComb) -> LinComb:
        """c_{rs} in closed form: eigenvalue on Reg, a 2x2 upper-triangular
        contribution Der -> Der + Reg."""
        out = LinComb.zero()
        for sym, c in x.items():
            value = self.gamma_value(r, s, sym.shift)
            if value:
                out = out + LinComb.single(sym, c * value)
            if sym.kind == DER:
                dval = self.gamma_dvalue(r, s, sym.shift)
                if dval:
                    out = out + self.reg(sym.shift, c * dval)
        return out

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

    def character_classes(self, bound: int) -> dict[tuple, list[BasisSymbol]]:
        """Window symbols grouped by their full eigenvalue tuple."""
        groups: dict[tuple, list[BasisSymbol]] = {}
        for sym in canonical_window(self.frame, bound):
            groups.setdefault(self.character(sym.shift), []).append(sym)
        return groups

    def describe(self) -> str:
        return self.frame.describe()


# ---------------------------------------------------------------------------
# Irreducibility hypothesis and generation witnesses
# ---------------------------------------------------------------------------

def irreducibility_hypothesis(frame: SingularFrame) -> bool:
    """No cross-row entry difference of the base point is an integer."""
    v = frame.vbar
    for r in range(2, frame.n + 1):
        for s in range(1, r + 1):
            for t in range(1, r):
                if (v.base(r, s) - v.base(r - 1, t)).denominator == 1:
                    return False
    return True


def _derivative_coefficient_closed_form(frame: SingularFrame,
                                        z: ShiftVector) -> Fraction:
    """Closed form of d[e_{k-1,k}(v+z)]:
    -(z_kj - z_ki)/2 * prod_{t not in {i,j}} (w_{k-1,1} - w_{k,t})
                     / prod_{t != 1} (w_{k-1,1} - w_{k-1,t}),
    evaluated at the base point (w = vbar + z)."""
    k, i, j = frame.k, frame.i, frame.j
    w = frame.point_at(z)
    num = Fraction(z.get(k, j) - z.get(k, i))
    for t in range(1, k + 1):
        if t not in (i, j):
            num *= w.base(k - 1, 1) - w.base(k, t)
    den = Fraction(1)
    for t in range(2, k):
        den *= w.base(k - 1, 1) - w.base(k - 1, t)
    return -num / den / 2


def generation_witnesses(frame: SingularFrame, z: ShiftVector) -> dict:
    """Exact values of the coefficients that drive the generation argument
    for the module: the derivative-line coefficient of E_{k-1,k}, the
    evaluation coefficient of (x-y) e_{k+1,k} on a tau-fixed neighbour, and
    the full family of derivative-to-derivative coefficients at z."""
    if frame.is_tau_fixed(z):
        raise ValueError("witnesses are reported for a tau-unfixed shift")
    k, i, j = frame.k, frame.i, frame.j
    n = frame.n

    d_coeff = coeffs.coeff_e(k - 1, k, frame.tableau_at(z)).d()
    closed = _derivative_coefficient_closed_form(frame, z)

    # tau-fixed neighbour for the regular-to-derivative step
    zfix = ShiftVector.of(n, {pos: val for pos, val in z.items()})
    zfix = zfix + ShiftVector.of(n, {(k, j): z.get(k, i) - z.get(k, j)})
    sigma_i = PermTuple.row_transposition(n, k, 1, i)
    e = coeffs.coeff_e(k + 1, k, sigma_i(frame.tableau_at(zfix)))
    step2_ev = (RatFun(TWO_T) * e).ev()
    step2_num = Fraction(1)
    w = frame.point_at(zfix)
    for q in range(1, k):
        step2_num *= w.base(k, i) - w.base(k - 1, q)

    step3 = {}
    for l in range(1, n + 1):
        for m in range(1, n + 1):
            if l == m:
                continue
            for idx, sigma in enumerate(phi_set(l, m, n)):
                val = coeffs.coeff_e(l, m, sigma(frame.tableau_at(z))).ev()
                step3[(l, m, idx)] = val

    return {
        "hypothesis": irreducibility_hypothesis(frame),
        "shift": z.to_text(),
        "derivative_coefficient": d_coeff,
        "derivative_coefficient_closed_form": closed,
        "step2_shift": zfix.to_text(),
        "step2_ev_coefficient": step2_ev,
        "step2_numerator": step2_num,
        "step3_values": step3,
    }


def connecting_shift(frame: SingularFrame,
                     z: ShiftVector) -> tuple[int, ShiftVector, ShiftVector]:
    """Climb one stratum: for z with |z_ki - z_kj| = m, build (t, z', zbar)
    with zbar at stratum m+1 such that Reg(z') appears in
    E_{k+1,k-t} Reg(zbar); z' is z or tau(z), whichever has z_ki >= z_kj.

    The row index drop t follows the chain of entries exceeding the last by
    exactly one, starting just above w_{ki}."""
    k, i = frame.k, frame.i
    zi, zj = z.get(frame.k, frame.i), z.get(frame.k, frame.j)
    zrep = z if zi >= zj else frame.tau(z)
    w = frame.point_at(zrep)
    additions = {(k, i): 1}
    value = w.base(k, i) + 1
    t = 0
    row = k - 1
    while row >= 1:
        found = next((s for s in range(1, row + 1) if w.base(row, s) == value), None)
        if found is None:
            break
        additions[(row, found)] = 1
        value += 1
        t += 1
        row -= 1
    zbar = zrep + ShiftVector.of(frame.n, additions)
    return t, zrep, zbar
