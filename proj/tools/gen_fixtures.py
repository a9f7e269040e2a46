#!/usr/bin/env python3
"""Regenerates the bundled synthetic score files under data/.

Deterministic: fixed seeds, values written with 17 significant digits.
"""
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent.parent / "data"


def softmax(z):
    z = z - z.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def write(path, classes, labels, scores):
    with open(path, "w", newline="\n") as f:
        f.write("label," + ",".join(f"score_{c}" for c in classes) + "\n")
        for y, row in zip(labels, scores):
            f.write(classes[y] + "," + ",".join(f"{v:.17g}" for v in row) + "\n")


def noisy_model(rng, labels, k, signal, noise=1.0, prior=None):
    z = rng.normal(0.0, noise, size=(len(labels), k))
    z[np.arange(len(labels)), labels] += signal[labels]
    if prior is not None:
        # calibrated posteriors carry the class prior, as a fitted model's would
        z += np.log(prior)
    return softmax(z)


def main():
    OUT.mkdir(exist_ok=True)

    rng = np.random.default_rng(20240501)
    classes = ["A", "B", "C"]
    labels = rng.choice(3, size=300, p=[0.5, 0.3, 0.2])
    write(OUT / "synthetic_3class.csv", classes, labels,
          noisy_model(rng, labels, 3, np.array([1.5, 1.0, 2.0])))

    rng = np.random.default_rng(7)
    labels = np.repeat(np.arange(3), [40, 35, 25])
    rng.shuffle(labels)
    top = rng.uniform(0.7, 0.9, size=len(labels))
    split = rng.uniform(0.0, 1.0, size=len(labels))
    scores = np.zeros((len(labels), 3))
    for i, y in enumerate(labels):
        others = [c for c in range(3) if c != y]
        scores[i, y] = top[i]
        scores[i, others[0]] = (1 - top[i]) * split[i]
        scores[i, others[1]] = (1 - top[i]) * (1 - split[i])
    write(OUT / "perfect_3class.csv", classes, labels, scores)

    # Nine rating-like classes, frequencies geometric in the order of `by_size`.
    rng = np.random.default_rng(1803)
    classes = ["AAA", "AA", "A", "BBB", "BB", "B", "CCC", "CC", "C&D"]
    by_size = [4, 3, 5, 2, 6, 1, 7, 0, 8]
    freq = np.zeros(9)
    freq[by_size] = 0.62 ** np.arange(9)
    freq /= freq.sum()
    labels = rng.choice(9, size=2000, p=freq)
    signal = np.array([2.5, 2.0, 1.6, 1.3, 1.2, 1.0, 0.8, 0.6, 1.8])
    write(OUT / "imbalanced_9class.csv", classes, labels,
          noisy_model(rng, labels, 9, signal, prior=freq))


if __name__ == "__main__":
    main()
