#pragma once

#include "tptri/coefficient_spec.hpp"
#include "tptri/q_analogue.hpp"
#include "tptri/qpoly.hpp"
#include "tptri/seq_expr.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tptri {

// A reference row bundled with a spec file: the triangle's row n must come
// out exactly as these entries.
struct GoldenRow {
    long n = 0;
    std::vector<QPoly> entries;
};

// Key-value triangle description:
//
//     # Catalan triangle
//     name shapiro-catalan
//     r 1
//     s 2
//     t 1
//     row 0 1
//     row 1 2 1
//
// '#' starts a comment, blank lines are ignored, r/s/t take the sequence
// generator syntax (lists, expressions in k and q, or both), and each
// optional `row n` line lists the n+1 expected entries of row n.
struct SpecFile {
    std::string name;
    SeqGen r, s, t;
    std::vector<GoldenRow> golden;

    bool q_valued() const;

    CoefficientSpec numeric() const;  // throws Error when the spec uses q
    QCoefficientSpec q_spec() const;
};

SpecFile parse_spec_file(std::istream& in);
SpecFile load_spec_file(const std::string& path);  // Error if unreadable

}  // namespace tptri
