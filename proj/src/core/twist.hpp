#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/valency.hpp"
#include "core/word.hpp"

namespace hyptv {

// Generator tables for one family at one genus: the twist rules, the rotation
// rule and the relations used to eliminate out-of-range generators.
struct PresentationFamily {
  Family family{Family::F1};
  std::int64_t genus{2};
  Alphabet alphabet;
  std::vector<PartialEndomorphism> twists;        // A_i / B_i / D_i in index order
  std::vector<int> product_order;                 // indices into twists, leftmost factor first
  PartialEndomorphism rotation;
  std::vector<std::pair<int, Word>> eliminations; // symbol -> replacement
  std::vector<int> check_generators;              // generators the verification runs over
};

// Tables exactly as printed in the twist-action rules, parameterized in g.
// family must be F1/F2/F3; genus >= 2.
PresentationFamily make_tables(Family family, std::int64_t genus);

enum class Verdict { pass, fail, needs_extended_rules };

const char* verdict_name(Verdict v);

struct GeneratorReport {
  std::string generator;
  std::string expected;
  std::string computed;      // empty when a rule was missing
  std::string missing_rule;  // "table:symbol" when verdict is needs_extended_rules
  Verdict verdict{Verdict::pass};
};

struct VerificationReport {
  Family family{Family::F1};
  std::int64_t genus{2};
  std::vector<GeneratorReport> entries;

  bool all_pass() const;
  bool any_fail() const;
  bool needs_extensions() const;
};

// Extra table entries, keyed by twist name then generator name, words in the
// "e2 e1^-1" syntax. Loaded from the JSON rule-table file format
//   {"A4": {"b4": "b5"}, ...}
using ExtensionTables = std::map<std::string, std::map<std::string, std::string>>;

ExtensionTables extensions_from_json(const std::string& text);

// Applies the family's twist product (rightmost factor first) to each checked
// generator and compares with the rotation image, eliminating out-of-range
// generators on both sides. Missing rules become needs_extended_rules.
VerificationReport verify_family(Family family, std::int64_t genus,
                                 const std::optional<ExtensionTables>& extensions = std::nullopt);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace hyptv
