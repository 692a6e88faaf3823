"""Reference metrics for tests/data/six_objects.tsv, computed straight from
the definitions with no indexing: degrees by counting rows, pairwise AUC,
set arithmetic for P_n and Q_n, and rank differences for dr."""
import csv
import math

rows = []
with open("tests/data/six_objects.tsv") as f:
    for line in f:
        if line.startswith("#") or not line.strip():
            continue
        u, o, d = line.rstrip("\n").split("\t")
        rows.append((u, o, int(d)))

objs = []
for _, o, _ in rows:
    if o not in objs:
        objs.append(o)          # dense-id order = first appearance

t, tf, tp, lam, n = 10, 5, 5, 0.5, 2


def k(o, s):
    return sum(1 for _, oo, d in rows if oo == o and d <= s)


cands = [o for o in objs if k(o, t) >= 1]
pbp = {o: k(o, t) - lam * k(o, t - tp) for o in cands}
tbp = {o: sum(math.exp(0.5 * (d - t)) for _, oo, d in rows if oo == o and d <= t) for o in cands}
dk = {o: k(o, t + tf) - k(o, t) for o in cands}
deg = {o: k(o, t) for o in cands}


def ranking(s):
    return sorted(cands, key=lambda o: (-s[o], objs.index(o)))


truth, pred, past = ranking(dk), ranking(pbp), ranking(deg)
B = truth[:n]
Bp = [o for o in cands if o not in B]
I = lambda a, b: 1.0 if a > b else (0.5 if a == b else 0.0)
auc = sum(I(pbp[a], pbp[b]) for a in B for b in Bp) / (len(B) * len(Bp))
D = len(set(pred[:n]) & set(B))
new = set(B) - set(past[:n])
C = len(set(pred[:n]) & new)
print("pbp scores", pbp)
print("truth", truth, "pred", pred, "past", past)
print("AUC", auc, "P", D / n, "D", D, "E", len(new), "C", C)
print("rankshift top4 (object, r_k, dr):")
for r, o in enumerate(truth[:4], 1):
    print(o, past.index(o) + 1, r - (pred.index(o) + 1))
print("tbp gamma=0.5 scores", {o: repr(v) for o, v in tbp.items()})
