# %% [markdown]
# # Chevalley-Eilenberg forms and Cartan pairs
#
# Forms of degree k are skew, center-multilinear maps from k derivations into
# the algebra.  Exact one-forms da generate a differential subalgebra.

# %%
from ncdiff import CECalculus, zoo

for name in ("dual", "ut2", "m2"):
    C = CECalculus(zoo(name))
    print("%-5s cochains %s generated %s" % (
        name, [C.cochain_space(k).dim for k in range(4)],
        [S.dim for S in C.generated_subalgebra(3)]))

# %% [markdown]
# On M₂(Q) all derivations are inner and the algebra has trivial center, so
# one-forms are 12-dimensional.  Derivations pair with one-forms; the pairing
# is onto the bimodule homs from one-forms to A, but not onto the 12-dimensional
# space of homs that are linear on one side only.

# %%
from ncdiff import vector_field_duality

C = CECalculus(zoo("m2"))
for lin in ("left", "right", "two-sided"):
    r = vector_field_duality(C.algebra, C, lin)
    print("%-9s dim Der %d  homs %d  rank %d" % (lin, r.der_dim, r.hom_dim, r.rank))

# %% [markdown]
# ## Cartan pairs
#
# The dual of one-forms acts on functions through u ↦ û = u∘d.  Evaluation at
# a derivation recovers that derivation.  Left multiples a·v are noncommutative
# vector fields: for non-central a they are neither derivations nor first order
# in the two-sided sense, while central multiples stay derivations.

# %%
from ncdiff import cartan_pair, check_cartan_relations, hat, inner_derivation, is_derivation
from ncdiff.cartan import evaluation, noncommutative_vector_field, two_sided_dual_test
from ncdiff.diffop import is_first_order_ncg

A = C.algebra
cp = cartan_pair(A, calc=C)
print("relations:", check_cartan_relations(cp).ok, " dual dim:", cp.dual.dim)
v = inner_derivation(A, A.element("E12"))
print("hat of ev_v is v:", hat(cp, evaluation(cp, v)) == v)
X = noncommutative_vector_field(cp, A.element("E11"), v)
print("E11·v derivation:", is_derivation(X), " first order:", is_first_order_ncg(X))
Z = noncommutative_vector_field(cp, A.elem([2, 0, 0, 2]), v)
print("2·v derivation:", is_derivation(Z))
rep = two_sided_dual_test(cp)
print("two-sided dual", rep.two_sided_dim, "of", rep.one_sided_dim,
      "; first-order hats outside it:", sum(rep.outside))
