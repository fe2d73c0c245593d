# %% [markdown]
# # Cluster variables as Laurent polynomials
#
# A rank-2 cluster algebra A(b, c) is generated by the sequence y_m with
# y_{m-1} y_{m+1} = y_m^b + 1 for odd m and y_m^c + 1 for even m.  Every
# y_m is a Laurent polynomial in any pair of neighbours (y_k, y_{k+1}).
# A `ClusterChart` picks that pair and runs the recursion with exact
# division.

# %%
from rank2cluster import CartanParams, ClusterChart, expand, parse

A2 = CartanParams(1, 1)
chart = ClusterChart(A2, base=1)
for m in range(3, 8):
    print(f"y{m} =", chart.variable(m).to_text())

# %% [markdown]
# Type A2 has period 5: y6 = y1 and y7 = y2.  Types with bc <= 3 are
# periodic with period h + 2, where h is the Coxeter number.

# %%
for bc in [(1, 2), (1, 3), (2, 2)]:
    P = CartanParams(*bc)
    print(bc, P.kind.value, "period", P.period)

# %% [markdown]
# Other charts work the same way.  Here is y5 of A(2, 2) written in the
# cluster (y_{-1}, y_0); negative indices print in brackets.

# %%
affine = CartanParams(2, 2)
print(ClusterChart(affine, base=-1).variable(5).to_text())

# %% [markdown]
# `expand` evaluates any polynomial expression in the generators.  The
# presentation relations vanish identically:

# %%
chart = ClusterChart(affine)
print(expand(chart, parse("y0*y2 - y1^2 - 1")).to_text())
print(expand(chart, parse("y0*y3 - y1*y2")).to_text())
