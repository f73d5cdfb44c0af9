# %% Broken alternations and the series u, v
from ratsign.alternations import U, V, broken_series, classify, count_bruteforce, count_recursive, verify_odes
from ratsign.algebra import expand, format_gelement

t = count_recursive(12)
for n in range(1, 13):
    print(n, t.A[n], t.B[n], t.B_by_pos[n])

# %% brute force agrees up to 8
for n in range(1, 9):
    a, b, pos = count_bruteforce(n)
    print(n, (a, b) == (t.A[n], t.B[n]), pos == t.B_by_pos[n])

# %%
for perm in [(3, 2, 4, 1), (2, 5, 4, 3, 1), (3, 1, 2)]:
    print(perm, classify(perm))

# %% closed forms in f = tanh, g = sech
print("u =", format_gelement(U))
print("v =", format_gelement(V))
print(expand(U, 9).coeffs)
print(broken_series("u", 9) == expand(U, 9))
print("ODEs to order 40:", verify_odes(40))
