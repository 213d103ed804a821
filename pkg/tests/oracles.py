"""Brute-force oracles written against plain Fractions, independent of specrel."""

from __future__ import annotations

from fractions import Fraction


def cone_value(vertex, slope, p) -> Fraction:
    """space2(vertex, p) - slope^2 time2(vertex, p) on plain tuples."""
    dt = p[0] - vertex[0]
    sp = sum((a - b) ** 2 for a, b in zip(p[1:], vertex[1:]))
    return sp - slope * slope * dt * dt


def line_cone_scan(base, direction, vertex, slope):
    """Root structure of the cone equation along an integer line by sign scanning.

    All inputs are integers, so the quadratic A s^2 + 2B s + C has integer
    coefficients.  Distinct real roots are then at least 2/|A| apart, every
    rational root is a multiple of 1/|A| (or 1/(2|B|) when A = 0), and all
    roots lie within the Cauchy bound.  Scanning with step 1/(2|A|) therefore
    hits every rational root exactly and brackets every irrational one.

    Returns ("whole", []) , or ("roots", items) where each item is
    ("exact", s) or ("bracket", lo, hi).
    """
    def q(s):
        return cone_value(vertex, slope, [b + s * d for b, d in zip(base, direction)])

    # recover the coefficients only to size the scan
    c0, c1, cm1 = q(Fraction(0)), q(Fraction(1)), q(Fraction(-1))
    A = (c1 + cm1 - 2 * c0) / 2
    B2 = (c1 - cm1) / 2
    C = c0
    if A == 0 and B2 == 0:
        return ("whole", []) if C == 0 else ("roots", [])
    if A != 0:
        step = Fraction(1, 2 * abs(int(A)))
        bound = 1 + max(abs(B2), abs(C)) / abs(A)
    else:
        step = Fraction(1, 2 * abs(int(B2)))
        bound = 1 + abs(C) / abs(B2)
    n = int(bound / step) + 2
    samples = [(k * step, q(k * step)) for k in range(-n, n + 1)]
    items = []
    for s, v in samples:
        if v == 0:
            items.append(("exact", s))
    for (s0, v0), (s1, v1) in zip(samples, samples[1:]):
        if v0 != 0 and v1 != 0 and (v0 > 0) != (v1 > 0):
            items.append(("bracket", s0, s1))
    return ("roots", items)
