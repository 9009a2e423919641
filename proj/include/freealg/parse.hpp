#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "freealg/ncpoly.hpp"

namespace freealg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generator-name table.  Parsing interns identifiers here; a frozen table
/// rejects names it has not seen, so a declared generator list acts as a
/// closed alphabet.
class GenTable {
public:
    GenTable() = default;
    explicit GenTable(const std::vector<std::string>& names);

    unsigned intern(const std::string& name);
    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    std::size_t size() const { return names_.size(); }
    const std::string& name(unsigned i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, unsigned> index_;
    bool frozen_ = false;
};

/// Parse one polynomial expression.  Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*     '/' needs a constant divisor
///   factor := atom ('^' uint)*
///   atom   := uint | ident | '(' expr ')' | '[' expr ',' expr ']'
/// Identifiers may contain letters, digits, '_' and '\'' and must not start
/// with a digit.  Integer literals land in the coefficient field.
NcPoly parse_poly(std::string_view text, GenTable& gens,
                  unsigned long characteristic);

/// Split on a separator at bracket depth zero, trimming whitespace.  Empty
/// pieces are dropped.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// True when the string is a lone identifier.
bool is_bare_name(std::string_view text);

/// Render with generator names, ascending deglex term order, powers folded
/// ("x^2*y").  Falls back to "g<i>" for indices outside the table.
std::string to_string(const NcPoly& p, const GenTable& gens);

}  // namespace freealg
