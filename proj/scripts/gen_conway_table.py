#!/usr/bin/env python3
"""Regenerates include/qcq/conway_table.hpp from Frank Luebeck's Conway
polynomial database as shipped with the `galois` package."""
import sys

import galois

LIMITS = [(2, 128), (3, 90), (5, 70), (7, 20)]


def main(out):
    rows = []
    for p, top in LIMITS:
        for m in range(1, top + 1):
            try:
                poly = galois.conway_poly(p, m)
            except LookupError:
                continue
            digits = "".join(str(int(c)) for c in poly.coeffs[::-1])
            rows.append(f'    {{{p}, {m}, "{digits}"}},')
    with open(out, "w") as f:
        f.write("// Generated by scripts/gen_conway_table.py. Do not edit.\n")
        f.write("#pragma once\n\n#include <string_view>\n\nnamespace qcq::detail {\n\n")
        f.write("struct ConwayEntry {\n    int p;\n    int m;\n")
        f.write("    std::string_view coeffs;  // ascending degree, one digit per coefficient\n};\n\n")
        f.write("inline constexpr ConwayEntry kConwayTable[] = {\n")
        f.write("\n".join(rows))
        f.write("\n};\n\n}  // namespace qcq::detail\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/qcq/conway_table.hpp")
