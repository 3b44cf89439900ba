#!/usr/bin/env python3
"""Emit src/quadrature_tables.cpp: collapsed Gauss-Jacobi rules on the
reference simplices of dimension 1..3, exactness degrees 1..8.

Points are given in reference coordinates of the unit simplex
{x_i >= 0, sum x_i <= 1}; weights sum to the reference measure.
"""
import math
import sys

from scipy.special import roots_jacobi


def gauss_jacobi01(m, alpha):
    # integrates (1-s)^alpha g(s) over [0, 1]
    t, w = roots_jacobi(m, alpha, 0.0)
    s = (1.0 + t) / 2.0
    w = w / 2.0 ** (alpha + 1)
    return list(s), list(w)


def rule(dim, degree):
    m = max(1, math.ceil((degree + 1) / 2))
    if dim == 1:
        s, w = gauss_jacobi01(m, 0)
        return [((a,), wa) for a, wa in zip(s, w)]
    if dim == 2:
        su, wu = gauss_jacobi01(m, 0)
        sv, wv = gauss_jacobi01(m, 1)
        out = []
        for v, wvv in zip(sv, wv):
            for u, wuu in zip(su, wu):
                out.append(((u * (1 - v), v), wuu * wvv))
        return out
    su, wu = gauss_jacobi01(m, 0)
    sv, wv = gauss_jacobi01(m, 1)
    sw, ww = gauss_jacobi01(m, 2)
    out = []
    for w_, www in zip(sw, ww):
        for v, wvv in zip(sv, wv):
            for u, wuu in zip(su, wu):
                out.append(((u * (1 - v) * (1 - w_), v * (1 - w_), w_), wuu * wvv * www))
    return out


def main():
    lines = [
        "// Generated by tools/gen_quadrature_tables.py. Do not edit.",
        "",
        '#include "quadrature_tables.hpp"',
        "",
        "namespace mwx::detail {",
        "",
    ]
    index = []
    for dim in (1, 2, 3):
        for degree in range(1, 9):
            pts = rule(dim, degree)
            name = f"kRule{dim}d{degree}"
            lines.append(f"static constexpr double {name}[] = {{")
            for x, w in pts:
                coords = ", ".join(f"{c:.17e}" for c in x)
                lines.append(f"    {coords}, {w:.17e},")
            lines.append("};")
            lines.append("")
            index.append((dim, degree, name, len(pts)))
    lines.append("const RawRule kRawRules[] = {")
    for dim, degree, name, npts in index:
        lines.append(f"    {{{dim}, {degree}, {npts}, {name}}},")
    lines.append("};")
    lines.append("")
    lines.append(f"const int kRawRuleCount = {len(index)};")
    lines.append("")
    lines.append("}  // namespace mwx::detail")
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
