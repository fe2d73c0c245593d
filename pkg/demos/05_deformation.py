# %% [markdown]
# # A two-parameter deformation
#
# Over Z[q1, q2] put Y_{m-1} Y_{m+1} = Y_m^2 + q Y_m + 1, with q = q1 for odd
# m and q2 for even m.  Setting q1 = q2 = 0 gives A(2, 2).  Setting q1 = 2,
# q2 = 0 and Y_m = y_m (odd m) or y_m^2 (even m) gives A(1, 4).

# %%
from rank2cluster import CartanParams, ClusterChart, DeformedChart, specialize_14, specialize_22, verify_lemma_relations

D = DeformedChart(base=1)
print(D.variable(3).to_text(("Y1", "Y2")))
print(D.Z().to_text(("Y1", "Y2")))

# %%
c22 = ClusterChart(CartanParams(2, 2))
c14 = ClusterChart(CartanParams(1, 4))
print(specialize_22(D.Z_n(2)) == c22.z_n(2))
print(specialize_14(D.Z_n(2)) == c14.z_n(2))
print(specialize_14(D.variable(4)) == c14.variable(4) ** 2)

# %% [markdown]
# The products Z_n Z_p, Z_n Y_m and Y_m Y_{m+n} have closed forms; each
# check below expands both sides over Z[q1, q2].

# %%
report = verify_lemma_relations(3, 4, -2)
for case in report.cases:
    print(case.to_json())
