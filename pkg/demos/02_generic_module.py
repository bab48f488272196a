"""Generic tableau modules: infinite-dimensional, multiplicity-free.

A generic base point (no two same-row entries differing by an integer)
carries a module structure on all integer shifts of the tableau.  The
script shows the generator action, the eigenvalue tuples that separate
basis vectors, and the cross-row difference sets that control submodules.
"""

from gtmod.fixtures import generic_base_n3
from gtmod.generic import GenericModule, submodule_membership
from gtmod.lincomb import LinComb
from gtmod.tableaux import ShiftVector, Tableau, omega_plus, window_shifts

base = generic_base_n3()
print(f"generic base point: {base.to_text()}")
mod = GenericModule(base)

z0 = ShiftVector.zero(3)
for (l, m) in ((1, 2), (2, 1), (1, 3), (2, 2)):
    out = mod.act(l, m, LinComb.single(z0))
    terms = ", ".join(f"{c} * T{z.to_text()}" for z, c in out.items()) or "0"
    print(f"E_{l}{m} T(base) = {terms}")

print("\neigenvalue tuples of the commuting family separate the basis:")
for z in list(window_shifts(3, 1))[:4]:
    print(f"   {z.to_text()} -> {tuple(str(v) for v in mod.character(z))}")

print("\nsubmodule structure through cross-row integer differences:")
layered = Tableau.from_rows([[2, "1/3", "-5/3"], [0, "1/3"], ["1/3"]])
print(f"   base with integral ties: {layered.to_text()}")
print(f"   difference set: {sorted(omega_plus(layered))}")
up = layered.with_shift(ShiftVector.of(3, {(2, 1): 3}))
print(f"   after raising row 2: {sorted(omega_plus(up))}")
print(f"   submodule_membership(base, raised) = {submodule_membership(layered, up)}")
print(f"   submodule_membership(raised, base) = {submodule_membership(up, layered)}")
