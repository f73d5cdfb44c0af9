# %% Profile statistics, simple bases, leading coefficients
from ratsign.profiles import (EVEN, ODD, ReducedProfiles, assembled_leading_coefficients,
                              degree_bounds, enumerate_simple_bases, leading_coefficients,
                              nonvanishing, signed_sum, simple_base_counts_closed, stats)

for text in ["", "2", "2,1", "3,1", "1,1", "2;2", "3,2,1,1;3,2,2"]:
    for parity in (ODD, EVEN):
        lam = ReducedProfiles.parse(text, parity)
        print(f"{text or '()':>14} {parity:4}", stats(lam), nonvanishing(lam), degree_bounds(lam))

# %% signed sums of simple bases next to the closed counts
for text in ["1", "2", "1;1", "2;2", "3,2;1", "1,1;1"]:
    for parity in (ODD, EVEN):
        lam = ReducedProfiles.parse(text, parity)
        if not nonvanishing(lam):
            continue
        sc = signed_sum(enumerate_simple_bases(lam, "C"))
        sb = signed_sum(enumerate_simple_bases(lam, "B"))
        print(text, parity, sc, sb, simple_base_counts_closed(lam))

# %% leading coefficients: closed formula vs summing F_B over bases
# they agree when there are no equal-entry pairs and differ by the factor c+1 otherwise
for text in ["1", "2;2", "1,1", "1,1;1"]:
    lam = ReducedProfiles.parse(text, EVEN)
    a = [str(t.coefficient) for t in leading_coefficients(lam)]
    b = [str(t.coefficient) for t in assembled_leading_coefficients(lam)]
    print(text, a, b)
