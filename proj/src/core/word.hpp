#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/errors.hpp"

namespace hyptv {

// Generator alphabet: names are interned to 1-based ids.
class Alphabet {
 public:
  int add(const std::string& name);
  int id(const std::string& name) const;       // throws parse_error if unknown
  const std::string& name(int id) const;
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
};

// Freely reduced word: signed generator ids, -x meaning the inverse of x.
// The empty word is the identity.
using Word = std::vector<int>;

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);  // reduced concatenation

// Partial map from generators to words, extended homomorphically and to
// inverses. A generator outside the table is a hard MissingRuleError, never a
// silent identity.
struct PartialEndomorphism {
  std::string name;
  std::unordered_map<int, Word> table;
};

Word apply(const PartialEndomorphism& e, const Word& w, const Alphabet& alphabet);

// maps.back() is applied first (composition of mapping classes acting on loops).
Word apply_sequence(std::span<const PartialEndomorphism> maps, const Word& w,
                    const Alphabet& alphabet);

// Replaces every occurrence of the generator (and its inverse) and reduces.
Word substitute(const Word& w, int symbol, const Word& replacement);

// "e2 e1^-1" <-> word; the empty word prints as "1".
Word parse_word(const Alphabet& alphabet, const std::string& text);
std::string format_word(const Alphabet& alphabet, const Word& w);

}  // namespace hyptv
