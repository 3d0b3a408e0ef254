# %% [markdown]
# # Filtrations of differential operators
#
# Every K-linear map between bimodules over a finite-dimensional algebra gets
# an order from the left filtration I_0 ⊂ I_1 ⊂ ... of its hom space.  On a
# commutative algebra this is the familiar order: the number of commutators
# with multiplication operators needed to kill the map.

# %%
from ncdiff import regular, zoo
from ncdiff.diffop import (diff_space_commutative, left_filtration, min_order,
                           order_commutative, right_filtration)
from ncdiff.exactla import Matrix
from ncdiff.homspace import LinearMap

# %% [markdown]
# ## Dual numbers
#
# On Q[ε]/ε² the hom space of the regular bimodule is 4-dimensional.  The
# ladder climbs one dimension per order and stops at order 2.

# %%
A = zoo("dual")
R = regular(A)
F = left_filtration(R, R)
print("level dims:", F.dims, "stabilized at", F.stabilized_at)
for r in range(len(F.levels)):
    print(r, F.level(r) == diff_space_commutative(R, R, r))

# %% [markdown]
# Matrices act on coordinate columns.  E sends ε to 1 and kills 1; it is
# not a derivation, since E(ε·ε) = 0 while εE(ε) + E(ε)ε = 2ε.  It has order 2.
# The Euler operator ε ↦ ε is a derivation, so its order is 1.

# %%
E = LinearMap(R, R, Matrix([[0, 1], [0, 0]], 2))
euler = LinearMap(R, R, Matrix([[0, 0], [0, 1]], 2))
for name, D in [("E", E), ("euler", euler)]:
    print(name, "left order", min_order(D, F), "commutative order", order_commutative(D))

# %% [markdown]
# ## Central simple algebras collapse
#
# For M₂(Q) every linear map is a sum of maps p ↦ a p b, so I_0 is already
# everything: there is no room for higher order.

# %%
for name in ("m2", "quat", "ut2", "trunc4"):
    R = regular(zoo(name))
    F = left_filtration(R, R, 3)
    print("%-7s left %-16s right %s" % (name, F.dims, right_filtration(R, R, 3).dims))

# %% [markdown]
# Orders behave well under composition: a composite of operators of orders
# n and m has order at most n + m.

# %%
import random

R = regular(zoo("trunc4"))
F = left_filtration(R, R, 4)
rng = random.Random(1)
for n, m in [(0, 1), (1, 1), (1, 2)]:
    D1, D2 = F.hom.random_element(F.level(n), rng), F.hom.random_element(F.level(m), rng)
    print(n, m, "->", min_order(D1 @ D2, F))
