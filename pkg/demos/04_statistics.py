"""Kruskal-Wallis with Dunn's post-hoc test and Bonferroni correction.

The omnibus test asks whether any algorithm differs. Only if it rejects do
we look at pairs, each at alpha divided by the number of pairs.
"""

# %%
import numpy as np

from dynkp.stats import bonferroni_posthoc, chi2_sf, compare, dunn_pvalues, format_marks, kruskal_wallis

rng = np.random.default_rng(0)
groups = [rng.normal(10, 2, 10), rng.normal(12, 2, 10), rng.normal(20, 2, 10)]
h, p = kruskal_wallis(groups)
print(f"H = {h:.3f}, p = {p:.2e}")

# %%
# Unadjusted pairwise p-values, then the marks that survive the correction.
print(np.round(dunn_pvalues(groups), 5))
for i, marks in enumerate(bonferroni_posthoc(groups)):
    print(f"group {i + 1}: {format_marks(marks) or '-'}")

# %%
# With only three observations per group even a clean separation leaves the
# middle pairs short of significance.
tiny = [[1, 2, 3], [101, 102, 103], [201, 202, 203]]
print([format_marks(m) for m in bonferroni_posthoc(tiny)])

# %%
# The chi-square tail used for the omnibus p-value.
print(f"P(chi2_2 >= 5.991) = {chi2_sf(5.991, 2):.5f}")
report = compare({"A": groups[0], "B": groups[1], "C": groups[2]})
print(report.significant("A", "C"), report.mark_string(0))
