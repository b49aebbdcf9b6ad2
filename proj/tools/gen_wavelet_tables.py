#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The biosig Authors
"""Regenerate include/biosig/detail/wavelet_tables.hpp.

Seeds each filter from PyWavelets, then polishes it with Gauss-Newton at 60
digits against the orthonormal-filter equations (sum = sqrt(2), shifted
orthonormality, N vanishing moments) so every constant is correctly rounded
to double precision.
"""
import sys

import mpmath as mp
import pywt

mp.mp.dps = 60


def residuals(h, n_moments):
    nw = len(h)
    f = [sum(h) - mp.sqrt(2)]
    for m in range(nw // 2):
        f.append(sum(h[k] * h[k + 2 * m] for k in range(nw - 2 * m)) - (1 if m == 0 else 0))
    for p in range(n_moments):
        f.append(sum((-1) ** k * mp.mpf(k) ** p * h[k] for k in range(nw)))
    return f


def jacobian(h, n_moments):
    nw = len(h)
    rows = [[mp.mpf(1)] * nw]
    for m in range(nw // 2):
        row = [mp.mpf(0)] * nw
        for k in range(nw - 2 * m):
            row[k] += h[k + 2 * m]
            row[k + 2 * m] += h[k]
        rows.append(row)
    for p in range(n_moments):
        rows.append([(-1) ** k * mp.mpf(k) ** p for k in range(nw)])
    return mp.matrix(rows)


def polish(seed):
    h = [mp.mpf(repr(c)) for c in seed]
    n_moments = len(h) // 2
    for _ in range(30):
        f = mp.matrix(residuals(h, n_moments))
        if mp.norm(f) < mp.mpf(10) ** -50:
            break
        J = jacobian(h, n_moments)
        step = mp.lu_solve(J.T * J, -(J.T * f))
        h = [h[i] + step[i] for i in range(len(h))]
    return h


def main(out):
    names = ["haar"] + [f"db{i}" for i in range(2, 11)] + [f"sym{i}" for i in range(2, 9)]
    lines = [
        "// SPDX-License-Identifier: Apache-2.0",
        "// Copyright 2026 The biosig Authors",
        "",
        "// Generated by tools/gen_wavelet_tables.py. Do not edit.",
        "",
        "#pragma once",
        "",
        "#include <array>",
        "#include <span>",
        "#include <string_view>",
        "",
        "namespace biosig::detail {",
        "",
        "struct LowpassTable {",
        "  std::string_view name;",
        "  std::span<const double> dec_lo;",
        "};",
        "",
    ]
    ident = []
    for name in names:
        h = polish(pywt.Wavelet(name).dec_lo)
        var = f"k_{name}"
        ident.append((name, var))
        lines.append(f"inline constexpr std::array<double, {len(h)}> {var} = {{")
        for c in h:
            lines.append(f"    {mp.nstr(c, 20, min_fixed=0, max_fixed=0)},")
        lines.append("};")
        lines.append("")
    lines.append(f"inline constexpr std::array<LowpassTable, {len(ident)}> k_lowpass_tables = {{{{")
    for name, var in ident:
        lines.append(f'    {{"{name}", {var}}},')
    lines.append("}};")
    lines.append("")
    lines.append("}  // namespace biosig::detail")
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/biosig/detail/wavelet_tables.hpp")
