#!/usr/bin/env python3
"""Independent numpy reference for the frozen expected values in the tests.

Shares no code with the C++ library: moments come from numpy.cov, the
inverse square root from numpy.linalg.eigh, per-class rates at each threshold
by direct counting, and AUCs by explicit pair enumeration.

    python3 tests/oracles/oracle.py data/imbalanced_9class.csv
"""
import sys

import numpy as np

RIDGE = 1e-8
GRID = 512


def load(path):
    with open(path) as f:
        header = f.readline().rstrip("\n").split(",")
        rows = [line.rstrip("\n").split(",") for line in f if line.strip()]
    cols = [i for i, h in enumerate(header) if h.startswith("score_")]
    classes = [header[i][len("score_"):] for i in cols]
    li = header.index("label")
    y = np.array([classes.index(r[li]) for r in rows])
    x = np.array([[float(r[i]) for i in cols] for r in rows])
    return classes, y, x


def inv_sqrt(m):
    lam, u = np.linalg.eigh(m)
    lam = np.maximum(lam, 1e-10 * lam.max())
    return (u / np.sqrt(lam)) @ u.T


def zca_cor_weights(x, ridge=RIDGE):
    cov = np.cov(x, rowvar=False, ddof=1)
    sd = np.sqrt(np.diag(cov))
    p = cov / np.outer(sd, sd)
    np.fill_diagonal(p, 1.0)
    k = p.shape[0]
    p_r = (p + ridge * np.eye(k)) / (1 + ridge)
    w = inv_sqrt(p_r) @ np.diag(1 / sd)
    m_star = w @ x.mean(axis=0)
    return np.abs(m_star) / np.abs(m_star).sum(), w


def pair_auc(pos, neg):
    """P(pos > neg) + P(pos == neg) / 2 by enumerating every pair."""
    pos = np.asarray(pos)[:, None]
    total = 0.0
    for chunk in np.array_split(np.asarray(neg), max(1, len(neg) // 2000)):
        total += (pos > chunk[None, :]).sum() + 0.5 * (pos == chunk[None, :]).sum()
    return total / (len(pos) * len(neg))


def grid(x, y, g=GRID):
    pooled = np.sort(x.ravel())
    uniq = np.unique(pooled)
    if len(uniq) <= g:
        t = list(uniq)
    else:
        n = len(pooled)
        t = []
        for j in range(g):
            v = pooled[(j * (n - 1)) // (g - 1)]
            if not t or t[-1] != v:
                t.append(v)
        # lowest true-class score of each class
        t = sorted(set(t) | {x[y == c, c].min() for c in range(x.shape[1]) if np.any(y == c)})
    return [np.inf] + t[::-1] + [-np.inf]


def aggregated_auc(x, y, weights, g=GRID):
    k = x.shape[1]
    fpr, tpr = [], []
    for t in grid(x, y, g):
        if t == np.inf:
            fpr.append(0.0); tpr.append(0.0); continue
        if t == -np.inf:
            fpr.append(1.0); tpr.append(1.0); continue
        f = sum(weights[c] * np.mean(x[y != c, c] >= t) for c in range(k))
        r = sum(weights[c] * np.mean(x[y == c, c] >= t) for c in range(k))
        fpr.append(min(f, 1.0)); tpr.append(min(r, 1.0))
    fpr, tpr = np.array(fpr), np.array(tpr)
    return float(np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1]) / 2))


def micro_auc(x, y):
    onehot = np.eye(x.shape[1])[y].astype(bool)
    return pair_auc(x[onehot], x[~onehot])


def macro_auc(x, y):
    return float(np.mean([pair_auc(x[y == c, c], x[y != c, c]) for c in range(x.shape[1])]))


def m_measure(x, y):
    k = x.shape[1]
    vals = []
    for i in range(k):
        for j in range(i + 1, k):
            a_ij = pair_auc(x[y == i, i], x[y == j, i])
            a_ji = pair_auc(x[y == j, j], x[y == i, j])
            vals.append(0.5 * (a_ij + a_ji))
    return float(np.mean(vals))


def main(path):
    classes, y, x = load(path)
    w, _ = zca_cor_weights(x)
    print("classes", classes)
    print("weights", " ".join(f"{v:.17g}" for v in w))
    print(f"gini_auc {aggregated_auc(x, y, w):.17g}")
    print(f"micro_auc {micro_auc(x, y):.17g}")
    print(f"macro_auc {macro_auc(x, y):.17g}")
    print(f"m_measure {m_measure(x, y):.17g}")


if __name__ == "__main__":
    main(sys.argv[1])
