#include "freealg/freelie.hpp"

#include <algorithm>

namespace freealg {

namespace {

void require_char_zero(unsigned long ch) {
    if (ch != 0)
        throw CharacteristicError(
            "Lie operations require characteristic zero");
}

NcPoly theta_word(const Word& w, const Scalar& c) {
    NcPoly acc = NcPoly::generator(w[0], 0);
    for (std::size_t k = 1; k < w.degree(); ++k)
        acc = bracket(acc, NcPoly::generator(w[k], 0));
    return c * acc;
}

}  // namespace

NcPoly dynkin_theta(const NcPoly& p) {
    require_char_zero(p.characteristic());
    NcPoly out(0ul);
    for (auto& [w, c] : p.terms())
        if (!w.empty()) out += theta_word(w, c);
    return out;
}

bool is_lie_element(const NcPoly& p) {
    require_char_zero(p.characteristic());
    if (!p.coeff(Word()).is_zero()) return false;
    for (std::size_t d : p.support_degrees()) {
        if (d == 0) continue;
        NcPoly comp = p.component(d);
        if (dynkin_theta(comp) != Scalar::integer(static_cast<long>(d), 0) * comp)
            return false;
    }
    return true;
}

LiePoly LiePoly::zero() { return LiePoly(NcPoly(0ul), LieCert::from_brackets); }

LiePoly LiePoly::generator(unsigned g) {
    return LiePoly(NcPoly::generator(g, 0), LieCert::from_brackets);
}

LiePoly LiePoly::check(const NcPoly& p) {
    if (!is_lie_element(p))
        throw std::invalid_argument("polynomial fails the Lie criterion");
    return LiePoly(p, LieCert::criterion);
}

namespace {
LieCert join(LieCert a, LieCert b) {
    return (a == LieCert::from_brackets && b == LieCert::from_brackets)
               ? LieCert::from_brackets
               : LieCert::criterion;
}
}  // namespace

LiePoly LiePoly::operator+(const LiePoly& o) const {
    return LiePoly(carrier_ + o.carrier_, join(cert_, o.cert_));
}

LiePoly LiePoly::operator-(const LiePoly& o) const {
    return LiePoly(carrier_ - o.carrier_, join(cert_, o.cert_));
}

LiePoly LiePoly::operator-() const { return LiePoly(-carrier_, cert_); }

LiePoly operator*(const Scalar& c, const LiePoly& p) {
    return LiePoly(c * p.carrier_, p.cert_);
}

LiePoly bracket(const LiePoly& a, const LiePoly& b) {
    return LiePoly(bracket(a.carrier_, b.carrier_), join(a.cert_, b.cert_));
}

bool is_lyndon(const std::vector<unsigned>& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(),
                                          w.begin() + static_cast<long>(i),
                                          w.end()))
            return false;
    return true;
}

std::vector<std::vector<unsigned>> lyndon_words(
    const std::vector<unsigned>& alphabet, std::size_t length) {
    std::vector<std::vector<unsigned>> out;
    if (length == 0 || alphabet.empty()) return out;
    std::vector<unsigned> sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> idx(length, 0);
    while (true) {
        std::vector<unsigned> w;
        for (std::size_t i : idx) w.push_back(sorted[i]);
        if (is_lyndon(w)) out.push_back(std::move(w));
        std::size_t k = length;
        while (k-- > 0) {
            if (++idx[k] < sorted.size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

namespace {

/// Position of the lexicographically smallest proper suffix; for a Lyndon
/// word both halves of the split are Lyndon again.
std::size_t standard_split(const std::vector<unsigned>& w) {
    std::size_t best = 1;
    for (std::size_t i = 2; i < w.size(); ++i)
        if (std::lexicographical_compare(w.begin() + static_cast<long>(i),
                                         w.end(),
                                         w.begin() + static_cast<long>(best),
                                         w.end()))
            best = i;
    return best;
}

}  // namespace

NcPoly lyndon_bracketing(const std::vector<unsigned>& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    if (w.size() == 1) return NcPoly::generator(w[0], 0);
    std::size_t cut = standard_split(w);
    std::vector<unsigned> u(w.begin(), w.begin() + static_cast<long>(cut));
    std::vector<unsigned> v(w.begin() + static_cast<long>(cut), w.end());
    return bracket(lyndon_bracketing(u), lyndon_bracketing(v));
}

std::vector<LiePoly> lyndon_basis(const std::vector<unsigned>& window,
                                  std::size_t d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    std::vector<LiePoly> out;
    for (auto& w : lyndon_words(window, d))
        out.push_back(LiePoly::check(lyndon_bracketing(w)));
    return out;
}

LieMonomial LieMonomial::leaf(unsigned slot) {
    LieMonomial m;
    m.slot_ = slot;
    return m;
}

LieMonomial LieMonomial::node(const LieMonomial& l, const LieMonomial& r) {
    LieMonomial m;
    m.left_ = std::make_shared<LieMonomial>(l);
    m.right_ = std::make_shared<LieMonomial>(r);
    return m;
}

std::size_t LieMonomial::length() const {
    if (is_leaf()) return 1;
    return left_->length() + right_->length();
}

namespace {
void count_slots(const LieMonomial& m, std::vector<unsigned>& e) {
    if (m.is_leaf()) {
        if (m.slot() >= e.size())
            throw std::invalid_argument("slot exceeds arity");
        ++e[m.slot()];
        return;
    }
    count_slots(m.left(), e);
    count_slots(m.right(), e);
}
}  // namespace

std::vector<unsigned> LieMonomial::multidegree(std::size_t arity) const {
    std::vector<unsigned> e(arity, 0);
    count_slots(*this, e);
    return e;
}

NcPoly LieMonomial::eval(const std::vector<NcPoly>& args) const {
    if (is_leaf()) {
        if (slot_ >= args.size())
            throw std::invalid_argument("slot exceeds argument count");
        return args[slot_];
    }
    return bracket(left_->eval(args), right_->eval(args));
}

std::string LieMonomial::str() const {
    if (is_leaf()) return "b" + std::to_string(slot_ + 1);
    return "[" + left_->str() + "," + right_->str() + "]";
}

void LieTemplate::add(const Scalar& c, const LieMonomial& m) {
    if (c.is_zero()) return;
    monomials_.emplace_back(c, m);
}

std::string LieTemplate::str() const {
    if (monomials_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        const Scalar& c = monomials_[i].first;
        std::string cs = c.str();
        if (i == 0) {
            if (cs == "1") {
            } else if (cs == "-1") {
                out += "-";
            } else {
                out += cs + "*";
            }
        } else if (!cs.empty() && cs[0] == '-') {
            out += " - ";
            if (cs != "-1") out += cs.substr(1) + "*";
        } else {
            out += " + ";
            if (cs != "1") out += cs + "*";
        }
        out += monomials_[i].second.str();
    }
    return out;
}

NcPoly eval_template(const LieTemplate& f, const std::vector<NcPoly>& args) {
    if (f.arity() != args.size())
        throw std::invalid_argument("template arity mismatch");
    unsigned long ch = args.empty() ? 0 : args.front().characteristic();
    NcPoly out(ch);
    for (auto& [c, m] : f.monomials()) out += c * m.eval(args);
    return out;
}

}  // namespace freealg
