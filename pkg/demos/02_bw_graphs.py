# %% Signed counts of real bw-graphs
from ratsign import bwgraphs as bw
from ratsign.verify import fixture_graphs

graphs = bw.enumerate_graphs((3, 2, 1, 1), (3, 2, 2))
for G in graphs:
    r = bw.graph_report(G)
    print(r["side"], r["sigma_w"], r["sigma_b"], r["lev"], r["pol"], r["sign"])
print(bw.signed_sums((3, 2, 1, 1), (3, 2, 2)))

# %% the two drawn examples
for G in fixture_graphs():
    print(bw.real_sequences(G), bw.sign(G))

# %% flip the top one at its first non-symmetric pair
top, _ = fixture_graphs()
pair = bw.nearly_symmetric(top)
print("first pair", pair, bw.sign(top).sign, "->", bw.sign(bw.flip(top, *pair)).sign)

# %% invariance for every type up to degree 7
for d in range(2, 8):
    n = sum(1 for _ in bw.all_graphs(d))
    print(d, n, "graphs, mismatches:", bw.verify_invariance(d))
