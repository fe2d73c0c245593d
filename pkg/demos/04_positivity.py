# %% [markdown]
# # Deciding positivity
#
# An element is positive when its Laurent expansion in every cluster has
# nonnegative coefficients.  For bc <= 4 this holds exactly when its
# canonical-basis coefficients are nonnegative, which gives a finite test.

# %%
from rank2cluster import CartanParams, ClusterChart, expand, is_positive, parse, positivity_window_check

P = CartanParams(2, 2)
chart = ClusterChart(P)
print(is_positive(chart, chart.variable(7)).verdict)
print(is_positive(chart, chart.z_n(3)).verdict)

# %% [markdown]
# Checking finitely many clusters is not enough.  The element below looks
# positive in the first clusters, yet its basis expansion has the
# coefficient -1 on z.

# %%
e = parse("y0*y1 + y2*y3 + y3*y4 - z1")
report = positivity_window_check(e, P, 1, 3)
print(report.charts)
result = is_positive(chart, expand(chart, e))
print(result.verdict, result.negative_label, result.negative_coeff)
print("negative coefficient seen in chart", result.witness_chart, "at", result.witness_exponent)

# %% [markdown]
# Adding more neighbouring products pushes the first bad cluster further
# out, while the verdict stays the same.

# %%
for n in range(1, 4):
    f = " + ".join(f"y{m}*y{m + 1}" for m in range(0, n + 3)) + " - z1"
    win = positivity_window_check(parse(f), P, 1, n)
    print(n, win.all_positive, is_positive(chart, expand(chart, parse(f))).verdict)
