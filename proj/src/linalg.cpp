#include "freealg/linalg.hpp"

namespace freealg {

void PolySolver::pad(std::vector<Scalar>& v, std::size_t n) const {
    while (v.size() < n) v.push_back(Scalar::zero(char_));
}

bool PolySolver::add_row(const NcPoly& p) {
    if (p.characteristic() != char_)
        throw FieldMismatchError("row over wrong field");
    std::size_t idx = n_added_++;

    NcPoly r = p;
    std::vector<Scalar> comb(n_added_, Scalar::zero(char_));
    comb[idx] = Scalar::one(char_);

    for (auto& row : rows_) {
        Scalar c = r.coeff(row.pivot);
        if (c.is_zero()) continue;
        r -= c * row.poly;
        pad(comb, row.comb.size());
        for (std::size_t i = 0; i < row.comb.size(); ++i)
            comb[i] -= c * row.comb[i];
    }

    if (r.is_zero()) {
        // comb expresses 0 as a combination with coefficient 1 on row idx.
        kernel_.push_back(std::move(comb));
        return false;
    }

    Word pivot = r.terms().begin()->first;
    Scalar lead = r.terms().begin()->second;
    Scalar inv = lead.inverse();
    r *= inv;
    for (auto& c : comb) c *= inv;

    // Clear the new pivot from earlier rows to stay in RREF.
    for (auto& row : rows_) {
        Scalar c = row.poly.coeff(pivot);
        if (c.is_zero()) continue;
        row.poly -= c * r;
        pad(row.comb, comb.size());
        for (std::size_t i = 0; i < comb.size(); ++i)
            row.comb[i] -= c * comb[i];
    }

    rows_.push_back(Row{std::move(r), pivot, std::move(comb)});
    return true;
}

NcPoly PolySolver::reduce(const NcPoly& p) const {
    if (p.characteristic() != char_)
        throw FieldMismatchError("polynomial over wrong field");
    NcPoly r = p;
    for (auto& row : rows_) {
        Scalar c = r.coeff(row.pivot);
        if (!c.is_zero()) r -= c * row.poly;
    }
    return r;
}

std::optional<std::vector<Scalar>> PolySolver::express(const NcPoly& p) const {
    if (p.characteristic() != char_)
        throw FieldMismatchError("polynomial over wrong field");
    NcPoly r = p;
    std::vector<Scalar> coeffs(n_added_, Scalar::zero(char_));
    for (auto& row : rows_) {
        Scalar c = r.coeff(row.pivot);
        if (c.is_zero()) continue;
        r -= c * row.poly;
        for (std::size_t i = 0; i < row.comb.size(); ++i)
            coeffs[i] += c * row.comb[i];
    }
    if (!r.is_zero()) return std::nullopt;
    return coeffs;
}

std::vector<std::vector<Scalar>> PolySolver::kernel() const {
    std::vector<std::vector<Scalar>> out = kernel_;
    for (auto& v : out) pad(v, n_added_);
    return out;
}

}  // namespace freealg
