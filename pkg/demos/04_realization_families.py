"""Classes with any prescribed correction-term gaps.

For every pair of gaps (d_bar - d, d - d_under) = (2M, 2N) and any target
(d, mu_bar), the realization family produces a class hitting those values
exactly; distinct family parameters k give distinct classes with identical
invariants, so the invariants cannot separate them.
"""

from hfi.cterms import correction_terms, realization_family
from hfi.localclass import mu_bar

print("prescribing d = -2, mu_bar = 0, gaps (2M, 2N):\n")
for M in range(0, 3):
    for N in range(0, 3):
        if M == 0 and N == 0:
            continue
        cls = realization_family(M, N, -2, 0)
        d, db, du = correction_terms(cls)
        print(f"M={M} N={N}: {cls}")
        print(f"    (d, d_bar, d_under) = ({d}, {db}, {du}), "
              f"mu_bar = {mu_bar(cls)}")
        assert (db - d, d - du) == (2 * M, 2 * N)

print("\nthree distinct classes sharing (d, d_bar, d_under, mu_bar):")
for k in range(3):
    cls = realization_family(1, 1, -2, 0, k)
    print(f"  k={k}: {cls}  ->  {tuple(map(int, correction_terms(cls)))}")
