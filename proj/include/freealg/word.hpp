#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace freealg {

/// Monomial in the free monoid on generator indices.  The empty word is the
/// multiplicative identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<unsigned> letters) : letters_(std::move(letters)) {}
    static Word letter(unsigned g) { return Word({g}); }

    std::size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<unsigned>& letters() const { return letters_; }
    unsigned operator[](std::size_t i) const { return letters_[i]; }

    Word operator*(const Word& o) const;
    Word prefix(std::size_t n) const;  // first n letters
    Word suffix(std::size_t n) const;  // last n letters

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    /// Largest generator index + 1, or 0 for the empty word.
    unsigned max_letter_bound() const;

    std::string str() const;  // indices as g0.g1..., "1" when empty

private:
    std::vector<unsigned> letters_;
};

/// Degree first, then lexicographic on letter indices.  Total order on words,
/// compatible with multiplication on both sides.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const;
};

/// Pure lexicographic order (used for Lyndon word machinery).
struct LexLess {
    bool operator()(const Word& a, const Word& b) const;
};

/// All words of exactly the given degree over generators {0,...,n_gens-1},
/// in deglex (= lex within fixed degree) order.
std::vector<Word> words_of_degree(unsigned n_gens, std::size_t degree);

}  // namespace freealg
