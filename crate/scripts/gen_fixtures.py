#!/usr/bin/env python3
"""Regenerate the vendored b-files in crates/core/data without network access.

A000009 is computed as the number of partitions into odd parts (equinumerous
with partitions into distinct parts) by unbounded coin-change over odd parts.
A087135 is computed directly as the number of partitions whose smallest part
occurs once or twice with all other parts distinct.
"""
import pathlib

N = 1000
out = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "data"

odd = [1] + [0] * N
for part in range(1, N + 1, 2):
    for w in range(part, N + 1):
        odd[w] += odd[w - part]

# above[m][w]: strict partitions of w with every part > m, built from m = N down.
above = [[0] * (N + 1) for _ in range(N + 2)]
above[N + 1][0] = 1
above[N][0] = 1
for m in range(N - 1, -1, -1):
    row, nxt = above[m], above[m + 1]
    part = m + 1
    for w in range(N + 1):
        row[w] = nxt[w] + (nxt[w - part] if w >= part else 0)

def a087135(n):
    total = 0
    for m in range(1, n + 1):
        for reps in (1, 2):
            rest = n - reps * m
            if rest >= 0:
                total += above[m][rest]
    return total

header = "# {id}: {name}\n# n = {lo}..{hi}; regenerated offline by scripts/gen_fixtures.py\n"
with open(out / "b000009.txt", "w") as f:
    f.write(header.format(id="A000009", name="number of partitions of n into distinct parts", lo=0, hi=N))
    for n in range(N + 1):
        f.write(f"{n} {odd[n]}\n")
with open(out / "b087135.txt", "w") as f:
    f.write(header.format(id="A087135", name="partitions of n whose smallest part occurs once or twice, other parts distinct", lo=1, hi=N))
    for n in range(1, N + 1):
        f.write(f"{n} {a087135(n)}\n")
