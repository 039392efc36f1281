"""Exact bad-error sums next to their closed-form ceilings.

For one undetectable cluster of weight m, an error is bad when flipping
it on the cluster support does not lower its probability.  The exact
sums integrate over that region; the closed forms bound them by an
effective erasure rate to the power m, which is what the threshold
conditions use.
"""

from clusterbounds import (
    bad_probability_bound_css,
    bad_probability_bound_depol,
    bad_probability_bound_ft,
    exact_bad_probability_css,
    exact_bad_probability_depol,
    exact_bad_probability_ft,
)

y, p = 0.05, 0.02
print(f"one CSS sector, y={y}, p={p}")
print(f"{'m':>2} {'exact':>12} {'bound':>12} {'ratio':>7}")
for m in range(1, 9):
    exact = exact_bad_probability_css(m, y, p)
    bound = bad_probability_bound_css(m, y, p)
    print(f"{m:>2} {exact:>12.3e} {bound:>12.3e} {exact / bound:>7.3f}")
print()

print(f"depolarizing channel, y={y}, p={p}")
for m in (2, 4, 6):
    exact = exact_bad_probability_depol(m, y, p)
    bound = bad_probability_bound_depol(m, y, p)
    print(f"  m={m}: exact {exact:.3e} <= bound {bound:.3e}")
print()

print("space-time clusters, p=0.01 qubit flips, q=0.02 syndrome flips")
m = 6
for m_q in range(0, m + 1, 2):
    exact = exact_bad_probability_ft(m, m_q, 0.01, 0.02)
    bound = bad_probability_bound_ft(m, m_q, 0.01, 0.02)
    print(f"  m={m} m_q={m_q}: exact {exact:.3e} <= bound {bound:.3e}")
