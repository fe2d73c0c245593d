# %% [markdown]
# # The canonical basis and straightening
#
# For bc <= 4 the algebra has a basis labelled by all lattice vectors:
# cluster monomials y_m^p y_{m+1}^q (label REAL(alpha)) plus, in the
# affine types, the Chebyshev elements z_n = T_n(z) (label IMAGINARY(n)).

# %%
from rank2cluster import CartanParams, ClusterChart, Imaginary, Real, basis_element, decompose, expand, parse
from rank2cluster import straighten_fully, straighten_pair

P = CartanParams(2, 2)
chart = ClusterChart(P)
print(basis_element(chart, Real((3, 2))).to_text())
print(basis_element(chart, Imaginary(1)).to_text())

# %% [markdown]
# A product of two cluster variables that are not neighbours is not a basis
# element.  `straighten_pair` returns the rewriting rule as an expression.

# %%
print(straighten_pair(("y", 1), ("y", 4), P).to_text())
print(straighten_pair(("z", 2), ("y", 0), P).to_text())
print(straighten_pair(("z", 1), ("z", 3), P).to_text())

# %% [markdown]
# `decompose` works on a Laurent expansion by greedy elimination of the
# minimal exponent.  `straighten_fully` reaches the same answer by
# rewriting alone, with no Laurent arithmetic.

# %%
e = parse("y1*y4*z2 + y0^2*y5 - 3")
print(decompose(chart, expand(chart, e)))
print(straighten_fully(e, P))
