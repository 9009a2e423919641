#pragma once

#include <optional>
#include <vector>

#include "freealg/ncpoly.hpp"

namespace freealg {

/// Incremental exact Gaussian elimination over the word-indexed coordinates
/// of NcPoly rows.  Kept in reduced row echelon form so span membership is a
/// single elimination pass.  Tracks how each pivot row was formed from the
/// inserted rows, which yields expression coefficients and kernel vectors.
class PolySolver {
public:
    explicit PolySolver(unsigned long characteristic)
        : char_(characteristic) {}

    /// Insert a row.  Returns true when it enlarged the span.  A dependent
    /// row contributes a kernel vector instead.
    bool add_row(const NcPoly& p);

    std::size_t rank() const { return rows_.size(); }
    std::size_t rows_added() const { return n_added_; }
    unsigned long characteristic() const { return char_; }

    /// p minus its projection onto the span; zero iff p lies in the span.
    NcPoly reduce(const NcPoly& p) const;

    bool contains(const NcPoly& p) const { return reduce(p).is_zero(); }

    /// Coefficients c with p = sum c_i * (i-th inserted row), when p lies in
    /// the span.
    std::optional<std::vector<Scalar>> express(const NcPoly& p) const;

    /// Basis of relations sum c_i * row_i = 0 among the inserted rows.  Each
    /// vector is padded to rows_added() entries.
    std::vector<std::vector<Scalar>> kernel() const;

private:
    struct Row {
        NcPoly poly;                // pivot coefficient 1, pivot word unique
        Word pivot;                 // deglex-least word of poly
        std::vector<Scalar> comb;   // poly = sum comb_i * inserted row i
    };

    unsigned long char_;
    std::size_t n_added_ = 0;
    std::vector<Row> rows_;
    std::vector<std::vector<Scalar>> kernel_;

    void pad(std::vector<Scalar>& v, std::size_t n) const;
};

}  // namespace freealg
