#include "core/valency.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "core/abelian.hpp"
#include "core/rational.hpp"

namespace hyptv {

using json = nlohmann::ordered_json;

Valency make_valency(std::int64_t theta, std::int64_t lambda) {
  if (lambda < 2) throw Error(Errc::invalid_argument, "valency denominator must be >= 2");
  if (theta < 1 || theta >= lambda)
    throw Error(Errc::invalid_argument, "valency numerator must lie in 1..lambda-1");
  if (std::gcd(theta, lambda) != 1)
    throw Error(Errc::invalid_argument, "valency numerator and denominator must be coprime");
  return Valency{theta, lambda};
}

const char* family_name(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::IF3: return "IF3";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "F1" || name == "f1" || name == "1") return Family::F1;
  if (name == "F2" || name == "f2" || name == "2") return Family::F2;
  if (name == "F3" || name == "f3" || name == "3") return Family::F3;
  if (name == "IF3" || name == "if3" || name == "If3") return Family::IF3;
  return std::nullopt;
}

std::int64_t mod_inverse(std::int64_t nu, std::int64_t lambda) {
  if (lambda < 2 || nu < 1 || nu >= lambda)
    throw Error(Errc::invalid_rotation, "rotation amount must lie in 1..lambda-1");
  // extended Euclid
  std::int64_t r0 = lambda, r1 = nu, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw Error(Errc::invalid_rotation, "rotation amount not coprime to isotropy order");
  return ((t0 % lambda) + lambda) % lambda;
}

void canonicalize(TotalValency& tv) {
  std::sort(tv.valencies.begin(), tv.valencies.end(), [](const Valency& a, const Valency& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    return a.theta < b.theta;
  });
}

std::optional<std::int64_t> rh_quotient_genus(std::int64_t genus, std::int64_t order,
                                              const std::vector<Valency>& valencies) {
  // 2 - 2g = n(2 - 2h) - sum (n/lambda)(lambda - 1)
  std::int64_t branch = 0;
  for (const auto& v : valencies) {
    if (v.lambda < 2 || order % v.lambda != 0) return std::nullopt;
    branch = checked_add(branch, checked_mul(order / v.lambda, v.lambda - 1));
  }
  const std::int64_t numer =
      checked_sub(checked_add(checked_mul(2, order), checked_mul(2, genus)),
                  checked_add(branch, 2));
  const std::int64_t denom = checked_mul(2, order);
  if (numer < 0 || numer % denom != 0) return std::nullopt;
  return numer / denom;
}

ValidationResult validate_total_valency(const TotalValency& tv) {
  auto fail = [](ValidationFailure f, std::string why) {
    return ValidationResult{false, f, std::move(why)};
  };
  if (tv.genus < 0) return fail(ValidationFailure::structure, "genus must be nonnegative");
  if (tv.order < 1) return fail(ValidationFailure::structure, "order must be positive");
  if (tv.quotient_genus < 0)
    return fail(ValidationFailure::structure, "quotient genus must be nonnegative");
  for (const auto& v : tv.valencies) {
    if (v.lambda < 2 || v.theta < 1 || v.theta >= v.lambda || std::gcd(v.theta, v.lambda) != 1)
      return fail(ValidationFailure::structure, "malformed valency");
    if (tv.order % v.lambda != 0)
      return fail(ValidationFailure::divisibility, "isotropy order does not divide the map order");
  }
  Rational sum{0};
  for (const auto& v : tv.valencies) sum = sum + Rational(v.theta, v.lambda);
  if (!sum.is_integer())
    return fail(ValidationFailure::integrality, "sum of valencies is not an integer");
  const auto h = rh_quotient_genus(tv.genus, tv.order, tv.valencies);
  if (!h || *h != tv.quotient_genus)
    return fail(ValidationFailure::riemann_hurwitz,
                "Riemann-Hurwitz fails for the stored quotient genus");
  return {};
}

void require_valid(const TotalValency& tv) {
  const auto r = validate_total_valency(tv);
  if (!r.ok) throw Error(Errc::validation_failed, "invalid total valency: " + r.reason);
}

bool nielsen_equal(const TotalValency& a, const TotalValency& b) {
  if (a.genus != b.genus || a.order != b.order || a.quotient_genus != b.quotient_genus) return false;
  if (a.valencies.size() != b.valencies.size()) return false;
  auto va = a.valencies;
  auto vb = b.valencies;
  auto less = [](const Valency& x, const Valency& y) {
    return std::pair(x.lambda, x.theta) < std::pair(y.lambda, y.theta);
  };
  std::sort(va.begin(), va.end(), less);
  std::sort(vb.begin(), vb.end(), less);
  return va == vb;
}

TotalValency tv_power(const TotalValency& tv, std::int64_t k) {
  return cyclic_power_tv(tv, k);
}

std::int64_t family_generator_order(Family family, std::int64_t genus) {
  switch (family) {
    case Family::F1: return 4 * genus + 2;
    case Family::F2: return 4 * genus;
    case Family::F3: return 2 * genus + 2;
    case Family::IF3: return 2 * genus + 2;  // ord(I*f3) = 2g+2
  }
  throw Error(Errc::invalid_argument, "unknown family");
}

TotalValency closed_form_tv(const FamilyTag& tag, std::int64_t genus) {
  if (genus < 2) throw Error(Errc::invalid_argument, "family models require genus >= 2");
  const std::int64_t order = family_generator_order(tag.family, genus);
  if (tag.exponent < 1 || tag.exponent > order)
    throw Error(Errc::exponent_out_of_range, "exponent must lie in 1..order of the generator");
  if (tag.family == Family::IF3) {
    const auto model = standard_model(Family::F3, genus);
    return element_tv(model, model.group.normalize({tag.exponent, 1}));
  }
  if (tag.exponent % order == 0)
    throw Error(Errc::exponent_out_of_range, "exponent names the identity map");
  TotalValency base;
  base.genus = genus;
  base.order = order;
  base.quotient_genus = 0;
  switch (tag.family) {
    case Family::F1:
      base.valencies = {Valency{1, 4 * genus + 2}, Valency{genus, 2 * genus + 1}, Valency{1, 2}};
      break;
    case Family::F2:
      base.valencies = {Valency{1, 4 * genus}, Valency{2 * genus - 1, 4 * genus}, Valency{1, 2}};
      break;
    case Family::F3:
      base.valencies = {Valency{1, 2 * genus + 2}, Valency{1, 2 * genus + 2},
                        Valency{genus, genus + 1}};
      break;
    default:
      break;
  }
  canonicalize(base);
  require_valid(base);
  return tag.exponent == 1 ? base : tv_power(base, tag.exponent);
}

std::optional<FamilyTag> classify_hyperelliptic(const TotalValency& tv) {
  require_valid(tv);
  if (tv.genus < 2)
    throw Error(Errc::invalid_argument, "classification requires genus >= 2");
  const std::int64_t g = tv.genus;
  for (Family family : {Family::F1, Family::F2, Family::F3, Family::IF3}) {
    const std::int64_t order = family_generator_order(family, g);
    const std::int64_t kmax = family == Family::IF3 ? order : order - 1;
    for (std::int64_t k = 1; k <= kmax; ++k) {
      // order prefilter keeps the scan cheap
      if (family != Family::IF3 && order / std::gcd(order, k) != tv.order) continue;
      if (nielsen_equal(tv, closed_form_tv({family, k}, g))) return FamilyTag{family, k};
    }
  }
  return std::nullopt;
}

std::string tv_to_json(const TotalValency& tv) {
  TotalValency c = tv;
  canonicalize(c);
  json out;
  out["g"] = c.genus;
  out["n"] = c.order;
  out["quotient_genus"] = c.quotient_genus;
  out["valencies"] = json::array();
  for (const auto& v : c.valencies) out["valencies"].push_back({{"theta", v.theta}, {"lambda", v.lambda}});
  return out.dump();
}

TotalValency tv_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  try {
    TotalValency tv;
    tv.genus = in.at("g").get<std::int64_t>();
    tv.order = in.at("n").get<std::int64_t>();
    for (const auto& item : in.at("valencies"))
      tv.valencies.push_back(
          make_valency(item.at("theta").get<std::int64_t>(), item.at("lambda").get<std::int64_t>()));
    if (in.contains("quotient_genus")) {
      tv.quotient_genus = in.at("quotient_genus").get<std::int64_t>();
    } else {
      const auto h = rh_quotient_genus(tv.genus, tv.order, tv.valencies);
      if (!h) throw Error(Errc::validation_failed, "no quotient genus satisfies Riemann-Hurwitz");
      tv.quotient_genus = *h;
    }
    canonicalize(tv);
    return tv;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad total valency JSON: ") + e.what());
  }
}

std::string tv_to_literal(const TotalValency& tv) {
  TotalValency c = tv;
  canonicalize(c);
  std::ostringstream out;
  out << '[' << c.genus << ',' << c.order << ';';
  for (std::size_t i = 0; i < c.valencies.size(); ++i) {
    if (i) out << '+';
    out << c.valencies[i].theta << '/' << c.valencies[i].lambda;
  }
  out << ']';
  const auto forced = rh_quotient_genus(c.genus, c.order, c.valencies);
  if (!forced || *forced != c.quotient_genus) out << '@' << c.quotient_genus;
  return out.str();
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(const std::string& text) : text_(text) {}

  TotalValency parse() {
    skip_space();
    expect('[');
    TotalValency tv;
    tv.genus = integer();
    expect(',');
    tv.order = integer();
    expect(';');
    skip_space();
    if (peek() != ']') {
      for (;;) {
        const std::int64_t theta = integer();
        expect('/');
        const std::int64_t lambda = integer();
        std::int64_t count = 1;
        skip_space();
        if (try_multiplicity()) count = integer();
        if (count < 1) throw Error(Errc::parse_error, "multiplicity must be positive");
        for (std::int64_t i = 0; i < count; ++i) tv.valencies.push_back(make_valency(theta, lambda));
        skip_space();
        if (peek() == '+') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(']');
    skip_space();
    if (peek() == '@') {
      ++pos_;
      tv.quotient_genus = integer();
      const auto h = rh_quotient_genus(tv.genus, tv.order, tv.valencies);
      if (!h || *h != tv.quotient_genus)
        throw Error(Errc::validation_failed,
                    "stated quotient genus contradicts Riemann-Hurwitz");
    } else {
      const auto h = rh_quotient_genus(tv.genus, tv.order, tv.valencies);
      if (!h)
        throw Error(Errc::validation_failed,
                    "no quotient genus satisfies Riemann-Hurwitz for this literal");
      tv.quotient_genus = *h;
    }
    skip_space();
    if (pos_ != text_.size()) throw Error(Errc::parse_error, "trailing characters in tv literal");
    canonicalize(tv);
    return tv;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c)
      throw Error(Errc::parse_error, std::string("expected '") + c + "' in tv literal");
    ++pos_;
  }

  bool try_multiplicity() {
    if (peek() == 'x' || peek() == '*') {
      ++pos_;
      return true;
    }
    // UTF-8 multiplication sign
    if (text_.compare(pos_, 2, "\xc3\x97") == 0) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw Error(Errc::parse_error, "expected integer in tv literal");
    return std::stoll(text_.substr(start, pos_ - start));
  }

  const std::string& text_;
  std::size_t pos_{0};
};

}  // namespace

TotalValency tv_from_literal(const std::string& text) { return LiteralParser(text).parse(); }

TotalValency tv_parse(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(Errc::parse_error, "empty total valency");
  return text[first] == '{' ? tv_from_json(text) : tv_from_literal(text);
}

}  // namespace hyptv
