# %% S-numbers of the empty profile and their growth
import math

from ratsign.profiles import EVEN, ODD
from ratsign.snumbers import asymptotic_report, complex_reference, s_numbers_empty

odd = s_numbers_empty(63, ODD)
even = s_numbers_empty(62, EVEN)
print(odd.values[:8])
print(even.values[:8])

# %% ratio test; the double pole at i*pi/2 needs the k/(k+1) correction
diag = asymptotic_report(odd)
for k, r in diag.corrected_ratios[-5:]:
    print(k, r, 4 / math.pi ** 2)
print("radius", diag.radius_naive, diag.radius_corrected, math.pi ** 2 / 4)

# %% ln|S| / (m ln m) creeps towards 1 very slowly
for m, r in diag.log_ratios[::5]:
    print(m, round(r, 4))

# %% at most twice the complex count
values = dict(odd.values) | dict(even.values)
for m in range(2, 13):
    print(m, values[m], complex_reference(m))
