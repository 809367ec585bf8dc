#!/usr/bin/env python3
"""Regenerates the La Scala golden files from first principles.

Run from this directory: python3 make_golden.py
"""

from pathlib import Path


def fibonacci_terms(count):
    a, b = 1, 1
    out = []
    for _ in range(count):
        out.append(a)
        a, b = b, a + b
    return out


def naturals_terms(count):
    return list(range(1, count + 1))


def gaussian_terms(q, count):
    return [(q**k - 1) // (q - 1) for k in range(1, count + 1)]


def levels(sizes, v):
    out = []
    for s, size in enumerate(sizes, start=1):
        out.extend([s] * size)
    return out[:v]


def zeta(sizes, v):
    lv = levels(sizes, v)
    return [[int(x == y or lv[x] < lv[y]) for y in range(v)] for x in range(v)]


def ascii_rows(z):
    lines = []
    for i, row in enumerate(z):
        cells = []
        for j, one in enumerate(row):
            if j < i:
                cells.append("-" if one else " ")
            elif j == i:
                cells.append("1" if one else "0")
            else:
                cells.append("-" if one else "0")
        lines.append(" ".join(cells).rstrip(" "))
    return "".join(line + "\n" for line in lines)


def plain_bitmap(z):
    v = len(z)
    body = "".join(" ".join(str(c) for c in row) + "\n" for row in z)
    return f"P1\n{v} {v}\n" + body


def main():
    here = Path(__file__).resolve().parent
    (here / "lascala_fibonacci_54.txt").write_text(ascii_rows(zeta(fibonacci_terms(20), 54)))
    (here / "lascala_naturals_21.txt").write_text(ascii_rows(zeta(naturals_terms(20), 21)))
    (here / "lascala_gaussian2_90.pbm").write_text(plain_bitmap(zeta(gaussian_terms(2, 20), 90)))


if __name__ == "__main__":
    main()
