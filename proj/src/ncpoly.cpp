#include "freealg/ncpoly.hpp"

#include <algorithm>

namespace freealg {

NcPoly NcPoly::constant(const Scalar& c) {
    NcPoly p(c.characteristic());
    if (!c.is_zero()) p.terms_.emplace(Word(), c);
    return p;
}

NcPoly NcPoly::monomial(const Scalar& c, const Word& w) {
    NcPoly p(c.characteristic());
    if (!c.is_zero()) p.terms_.emplace(w, c);
    return p;
}

NcPoly NcPoly::generator(unsigned g, unsigned long characteristic) {
    return monomial(Scalar::one(characteristic), Word::letter(g));
}

Scalar NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(char_) : it->second;
}

void NcPoly::set_coeff(const Word& w, const Scalar& c) {
    if (c.characteristic() != char_)
        throw FieldMismatchError("coefficient over wrong field");
    if (c.is_zero())
        terms_.erase(w);
    else
        terms_[w] = c;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.characteristic() != char_)
        throw FieldMismatchError("coefficient over wrong field");
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

void NcPoly::check_same_field(const NcPoly& o) const {
    if (char_ != o.char_)
        throw FieldMismatchError("polynomials over different fields");
}

NcPoly NcPoly::operator-() const {
    NcPoly p(char_);
    for (auto& [w, c] : terms_) p.terms_.emplace(w, -c);
    return p;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    check_same_field(o);
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    check_same_field(o);
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly& NcPoly::operator*=(const NcPoly& o) {
    check_same_field(o);
    NcPoly out(char_);
    for (auto& [wa, ca] : terms_)
        for (auto& [wb, cb] : o.terms_) out.add_term(wa * wb, ca * cb);
    return *this = std::move(out);
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
    if (c.characteristic() != char_)
        throw FieldMismatchError("scalar over wrong field");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

bool NcPoly::operator==(const NcPoly& o) const {
    return char_ == o.char_ && terms_ == o.terms_;
}

NcPoly NcPoly::component(std::size_t degree) const {
    NcPoly p(char_);
    for (auto& [w, c] : terms_)
        if (w.degree() == degree) p.terms_.emplace(w, c);
    return p;
}

long NcPoly::nu_top() const {
    if (terms_.empty()) return kNegInfinity;
    return static_cast<long>(terms_.rbegin()->first.degree());
}

long NcPoly::nu_low() const {
    if (terms_.empty()) return kPosInfinity;
    return static_cast<long>(terms_.begin()->first.degree());
}

bool NcPoly::is_homogeneous() const {
    return terms_.empty() ||
           terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::vector<std::size_t> NcPoly::support_degrees() const {
    std::vector<std::size_t> out;
    for (auto& [w, c] : terms_) {
        if (out.empty() || out.back() != w.degree()) out.push_back(w.degree());
    }
    return out;
}

unsigned NcPoly::max_letter_bound() const {
    unsigned bound = 0;
    for (auto& [w, c] : terms_) bound = std::max(bound, w.max_letter_bound());
    return bound;
}

std::optional<std::pair<Word, Scalar>> NcPoly::leading_term() const {
    if (terms_.empty()) return std::nullopt;
    auto it = terms_.rbegin();
    return std::make_pair(it->first, it->second);
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        if (!w.empty()) {
            s += '*';
            s += w.str();
        }
    }
    return s;
}

NcPoly bracket(const NcPoly& a, const NcPoly& b) {
    return a * b - b * a;
}

}  // namespace freealg
