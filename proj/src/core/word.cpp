#include "core/word.hpp"

#include <sstream>

namespace hyptv {

int Alphabet::add(const std::string& name) {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  names_.push_back(name);
  const int id = static_cast<int>(names_.size());
  ids_.emplace(name, id);
  return id;
}

int Alphabet::id(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw Error(Errc::parse_error, "unknown generator '" + name + "'");
  return it->second;
}

const std::string& Alphabet::name(int id) const {
  if (id < 1 || id > size()) throw Error(Errc::invalid_argument, "generator id out of range");
  return names_[static_cast<std::size_t>(id) - 1];
}

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x == 0) throw Error(Errc::invalid_argument, "zero is not a generator id");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

Word apply(const PartialEndomorphism& e, const Word& w, const Alphabet& alphabet) {
  Word out;
  for (int x : w) {
    auto it = e.table.find(std::abs(x));
    if (it == e.table.end()) throw MissingRuleError(alphabet.name(std::abs(x)), e.name);
    const Word image = x > 0 ? it->second : inverse(it->second);
    out.insert(out.end(), image.begin(), image.end());
  }
  return reduce(out);
}

Word apply_sequence(std::span<const PartialEndomorphism> maps, const Word& w,
                    const Alphabet& alphabet) {
  Word cur = reduce(w);
  for (std::size_t i = maps.size(); i-- > 0;) {
    try {
      cur = apply(maps[i], cur, alphabet);
    } catch (const MissingRuleError& e) {
      throw MissingRuleError(e.symbol(), e.table_name(), static_cast<int>(i));
    }
  }
  return cur;
}

Word substitute(const Word& w, int symbol, const Word& replacement) {
  Word out;
  for (int x : w) {
    if (x == symbol)
      out.insert(out.end(), replacement.begin(), replacement.end());
    else if (x == -symbol) {
      const Word inv = inverse(replacement);
      out.insert(out.end(), inv.begin(), inv.end());
    } else
      out.push_back(x);
  }
  return reduce(out);
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    int sign = 1;
    std::string name = token;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string exp = token.substr(caret + 1);
      if (exp == "-1")
        sign = -1;
      else if (exp != "1")
        throw Error(Errc::parse_error, "unsupported exponent '" + exp + "' in word");
    }
    w.push_back(sign * alphabet.id(name));
  }
  return reduce(w);
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

}  // namespace hyptv
