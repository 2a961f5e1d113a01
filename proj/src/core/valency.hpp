#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace hyptv {

// Valency theta/lambda of a multiple orbit: lambda is the isotropy order and
// theta the inverse mod lambda of the local rotation amount.
struct Valency {
  std::int64_t theta{1};
  std::int64_t lambda{2};

  friend bool operator==(const Valency&, const Valency&) = default;
};

Valency make_valency(std::int64_t theta, std::int64_t lambda);

// The conjugacy invariant [g, n; theta_1/lambda_1 + ... + theta_s/lambda_s]
// together with the genus of the quotient orbifold. Valencies are kept in
// canonical order: lambda descending, theta ascending.
struct TotalValency {
  std::int64_t genus{0};
  std::int64_t order{1};
  std::int64_t quotient_genus{0};
  std::vector<Valency> valencies;

  friend bool operator==(const TotalValency&, const TotalValency&) = default;
};

enum class Family { F1, F2, F3, IF3 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// F1/F2/F3 name the powers of the three polygon rotations; IF3 names the
// composites of the hyperelliptic involution with powers of the third one.
struct FamilyTag {
  Family family{Family::F1};
  std::int64_t exponent{1};

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// theta with nu * theta == 1 (mod lambda), theta in 1..lambda-1.
std::int64_t mod_inverse(std::int64_t nu, std::int64_t lambda);

enum class ValidationFailure { none, structure, divisibility, integrality, riemann_hurwitz };

struct ValidationResult {
  bool ok{true};
  ValidationFailure failure{ValidationFailure::none};
  std::string reason;
};

void canonicalize(TotalValency& tv);

ValidationResult validate_total_valency(const TotalValency& tv);

// Throws Errc::validation_failed when the checks fail.
void require_valid(const TotalValency& tv);

// The quotient genus forced by Riemann-Hurwitz for the given genus, order and
// valency list; nullopt when no nonnegative integer solves it.
std::optional<std::int64_t> rh_quotient_genus(std::int64_t genus, std::int64_t order,
                                              const std::vector<Valency>& valencies);

bool nielsen_equal(const TotalValency& a, const TotalValency& b);

// Total valency of f^k given the total valency of f. Normative semantics:
// the cyclic-group orbit model of abelian_action (cyclic_power_tv).
TotalValency tv_power(const TotalValency& tv, std::int64_t k);

std::int64_t family_generator_order(Family family, std::int64_t genus);

TotalValency closed_form_tv(const FamilyTag& tag, std::int64_t genus);

// First Nielsen match scanning F1 > F2 > F3 > IF3, smallest exponent inside a
// family. nullopt when no family member of this order at this genus matches.
// Rejects genus < 2.
std::optional<FamilyTag> classify_hyperelliptic(const TotalValency& tv);

// Serialization. JSON schema:
//   {"g": int, "n": int, "quotient_genus": int,
//    "valencies": [{"theta": int, "lambda": int}, ...]}
// Literal syntax: [g,n;t1/l1+t2/l2+...] with optional "xN" multiplicity per
// term and optional "@h" quotient-genus suffix (defaults to the RH-forced value).
std::string tv_to_json(const TotalValency& tv);
TotalValency tv_from_json(const std::string& text);
std::string tv_to_literal(const TotalValency& tv);
TotalValency tv_from_literal(const std::string& text);
TotalValency tv_parse(const std::string& text);  // auto-detects the two formats

}  // namespace hyptv
