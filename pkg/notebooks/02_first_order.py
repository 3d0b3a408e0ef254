# %% [markdown]
# # First-order operators and their splittings
#
# An operator D is first order in the two-sided sense when
# D(apb) is determined by D on the middle factor plus two one-sided
# correction maps.  On the regular bimodule each such D is a zero-order part
# plus a derivation, in two ways whose difference is an inner derivation.

# %%
from ncdiff import HomSpace, derivation_space, regular, zoo
from ncdiff.diffop import first_order_decompose, first_order_space, split_first_order
from ncdiff.diffop.first_order import inner_of_unit_value

A = zoo("m2")
R = regular(A)
S = first_order_space(R, R)
ds = derivation_space(A)
print("first-order dim", S.dim, "derivations", ds.dim, "inner", ds.inner.dim)

# %%
import random

H = HomSpace(R, R)
D = H.random_element(S, random.Random(0))
print("reconstruction and Leibniz checks:", first_order_decompose(D).check().ok)
left, right = split_first_order(D, "left"), split_first_order(D, "right")
print("gap is inner:", right.deriv_part - left.deriv_part == inner_of_unit_value(D))

# %% [markdown]
# ## A module where order one and finite order part ways
#
# Take the upper triangular 2×2 matrices and the one-dimensional bimodule on
# which A acts by the first diagonal entry from the left and the second from
# the right.  Every map from A into it is first order, yet most have no
# finite left order at all: the left filtration is stuck at its zero level.

# %%
from ncdiff import character_bimodule
from ncdiff.diffop import is_first_order_ncg, left_filtration, min_order

U = zoo("ut2")
K = character_bimodule(U, (1, 0, 0), (0, 0, 1))
H = HomSpace(regular(U), K)
F = left_filtration(regular(U), K, 3)
print("filtration", F.dims, "stabilized at", F.stabilized_at)
for D in H.basis_maps(H.full()):
    print([str(x) for x in D.matrix.rows[0]], "first order:", is_first_order_ncg(D), "left order:", min_order(D, F))
