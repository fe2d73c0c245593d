# %% [markdown]
# # Denominator vectors, roots and Newton polygons
#
# The leading denominator of y_m is y1^a1 y2^a2 for a vector alpha(m) in the
# root lattice.  Away from the initial cluster these are positive real
# roots.

# %%
from rank2cluster import (CartanParams, ClusterChart, denominator_vector, denominator_vector_of,
                          newton_polygon, positive_real_roots, triangle)

P = CartanParams(2, 2)
for m in range(-2, 8):
    print(m, denominator_vector(m, P))
print("roots of height <= 5:", positive_real_roots(P, 5))

# %% [markdown]
# The same vector can be read off the Laurent expansion: it is minus the
# unique minimal exponent, whose coefficient is 1.

# %%
chart = ClusterChart(P)
print(denominator_vector_of(chart.variable(6)), denominator_vector(6, P))

# %% [markdown]
# The Newton polygon of y_m is the triangle with vertices -alpha,
# -alpha + b*a2*e1 and -alpha + c*a1*e2, and every vertex coefficient is 1.

# %%
for m in range(3, 7):
    poly = newton_polygon(chart.variable(m))
    print(m, poly.vertices, poly == triangle(denominator_vector(m, P), P))

# %% [markdown]
# Polygons render to a small standalone SVG document.

# %%
svg = newton_polygon(chart.z_n(4)).to_svg()
print(svg[:80], "...")
