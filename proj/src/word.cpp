#include "freealg/word.hpp"

#include <algorithm>

namespace freealg {

Word Word::operator*(const Word& o) const {
    std::vector<unsigned> out;
    out.reserve(letters_.size() + o.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(out));
}

Word Word::prefix(std::size_t n) const {
    return Word(std::vector<unsigned>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix(std::size_t n) const {
    return Word(std::vector<unsigned>(letters_.end() - n, letters_.end()));
}

unsigned Word::max_letter_bound() const {
    unsigned bound = 0;
    for (unsigned g : letters_) bound = std::max(bound, g + 1);
    return bound;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += '.';
        s += 'g' + std::to_string(letters_[i]);
    }
    return s;
}

bool DegLexLess::operator()(const Word& a, const Word& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.letters() < b.letters();
}

bool LexLess::operator()(const Word& a, const Word& b) const {
    return a.letters() < b.letters();
}

std::vector<Word> words_of_degree(unsigned n_gens, std::size_t degree) {
    std::vector<Word> out;
    if (degree == 0) {
        out.emplace_back();
        return out;
    }
    if (n_gens == 0) return out;
    std::vector<unsigned> cur(degree, 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = degree;
        while (i > 0 && cur[i - 1] == n_gens - 1) {
            cur[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

}  // namespace freealg
