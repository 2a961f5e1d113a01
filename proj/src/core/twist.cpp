#include "core/twist.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace hyptv {

namespace {

std::string indexed(const char* stem, std::int64_t i) {
  return stem + std::to_string(i);
}

Word eliminate_all(Word w, const std::vector<std::pair<int, Word>>& eliminations) {
  for (const auto& [symbol, replacement] : eliminations) w = substitute(w, symbol, replacement);
  return w;
}

}  // namespace

PresentationFamily make_tables(Family family, std::int64_t genus) {
  if (genus < 2) throw Error(Errc::invalid_argument, "presentations require genus >= 2");
  const std::int64_t g = genus;
  PresentationFamily pf;
  pf.family = family;
  pf.genus = g;

  switch (family) {
    case Family::F1: {
      std::vector<int> b(2 * g + 2);
      for (std::int64_t i = 1; i <= 2 * g + 1; ++i)
        b[i] = pf.alphabet.add(indexed("b", i));
      // A_{i+1}(b_i) = b_{i+1}; A_j(b_i) = b_i for j <= i-1 or j >= i+2.
      // A_j(b_j) is deliberately absent.
      for (std::int64_t j = 1; j <= 2 * g + 1; ++j) {
        PartialEndomorphism tw{indexed("A", j), {}};
        for (std::int64_t i = 1; i <= 2 * g + 1; ++i) {
          if (j == i + 1 && i <= 2 * g)
            tw.table[b[i]] = {b[i + 1]};
          else if (j <= i - 1 || j >= i + 2)
            tw.table[b[i]] = {b[i]};
        }
        pf.twists.push_back(std::move(tw));
      }
      for (int j = 0; j < 2 * g; ++j) pf.product_order.push_back(j);  // A_1 A_2 ... A_{2g}
      pf.rotation.name = "f1";
      for (std::int64_t i = 1; i <= 2 * g; ++i) pf.rotation.table[b[i]] = {b[i + 1]};
      // b_{2g+1} * prod_{i=0}^{g-1} b_{2g-2i}^-1 b_{2g-2i-1} = 1
      Word tail;
      for (std::int64_t i = 0; i < g; ++i) {
        tail.push_back(-b[2 * g - 2 * i]);
        tail.push_back(b[2 * g - 2 * i - 1]);
      }
      pf.eliminations.emplace_back(b[2 * g + 1], inverse(tail));
      for (std::int64_t i = 1; i <= 2 * g; ++i) pf.check_generators.push_back(b[i]);
      break;
    }
    case Family::F2: {
      std::vector<int> c(2 * g + 1), d(2 * g + 1);
      for (std::int64_t i = 1; i <= 2 * g; ++i) c[i] = pf.alphabet.add(indexed("g", i));
      for (std::int64_t i = 1; i <= 2 * g; ++i) d[i] = pf.alphabet.add(indexed("d", i));
      // B_i(d_i) = g_i; B_i(g_i) = d_{i+1} (i < 2g); B_{2g}(g_{2g}) = d_1^-1;
      // B_j(g_i) = g_i for i != j. B_j(d_i) with j != i is absent.
      for (std::int64_t j = 1; j <= 2 * g; ++j) {
        PartialEndomorphism tw{indexed("B", j), {}};
        tw.table[d[j]] = {c[j]};
        tw.table[c[j]] = j < 2 * g ? Word{d[j + 1]} : Word{-d[1]};
        for (std::int64_t i = 1; i <= 2 * g; ++i)
          if (i != j) tw.table[c[i]] = {c[i]};
        pf.twists.push_back(std::move(tw));
      }
      pf.product_order.push_back(0);  // B_1 B_{2g} B_{2g-1} ... B_1
      for (std::int64_t j = 2 * g; j >= 1; --j)
        pf.product_order.push_back(static_cast<int>(j - 1));
      pf.rotation.name = "f2";
      for (std::int64_t i = 1; i < 2 * g; ++i) pf.rotation.table[c[i]] = {c[i + 1]};
      pf.rotation.table[c[2 * g]] = {-c[1]};
      // d_1 = prod_{i=0}^{g-1} g_{2g-2i}^-1 g_{2g-2i-1}
      Word d1;
      for (std::int64_t i = 0; i < g; ++i) {
        d1.push_back(-c[2 * g - 2 * i]);
        d1.push_back(c[2 * g - 2 * i - 1]);
      }
      pf.eliminations.emplace_back(d[1], d1);
      for (std::int64_t i = 1; i <= 2 * g; ++i) pf.check_generators.push_back(c[i]);
      break;
    }
    case Family::F3: {
      std::vector<int> e(2 * g + 3);
      for (std::int64_t i = 1; i <= 2 * g + 2; ++i)
        e[i] = pf.alphabet.add(indexed("e", i));
      // D_i(e_{i+1}) = e_{i+1} e_i^-1; D_{i+1}(e_i) = e_{i+1} e_i;
      // D_j(e_i) = e_i for |i - j| != 1.
      for (std::int64_t j = 1; j <= 2 * g + 1; ++j) {
        PartialEndomorphism tw{indexed("D", j), {}};
        for (std::int64_t i = 1; i <= 2 * g + 2; ++i) {
          if (i == j + 1)
            tw.table[e[i]] = {e[i], -e[j]};
          else if (i == j - 1)
            tw.table[e[i]] = {e[j], e[i]};
          else
            tw.table[e[i]] = {e[i]};
        }
        pf.twists.push_back(std::move(tw));
      }
      for (int j = 0; j <= 2 * g; ++j) pf.product_order.push_back(j);  // D_1 ... D_{2g+1}
      pf.rotation.name = "f3";
      for (std::int64_t i = 1; i <= 2 * g; ++i) pf.rotation.table[e[i]] = {e[i + 1]};
      // e_{2g+1} e_{2g-1} ... e_1 = 1 and e_{2g+2} e_{2g} ... e_2 = 1
      Word odd, even;
      for (std::int64_t i = 2 * g - 1; i >= 1; i -= 2) odd.push_back(e[i]);
      for (std::int64_t i = 2 * g; i >= 2; i -= 2) even.push_back(e[i]);
      pf.eliminations.emplace_back(e[2 * g + 1], inverse(odd));
      pf.eliminations.emplace_back(e[2 * g + 2], inverse(even));
      for (std::int64_t i = 1; i <= 2 * g; ++i) pf.check_generators.push_back(e[i]);
      break;
    }
    default:
      throw Error(Errc::invalid_argument, "presentations exist for F1, F2, F3 only");
  }
  return pf;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::needs_extended_rules: return "needs-extended-rules";
  }
  return "?";
}

bool VerificationReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const GeneratorReport& e) { return e.verdict == Verdict::pass; });
}

bool VerificationReport::any_fail() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const GeneratorReport& e) { return e.verdict == Verdict::fail; });
}

bool VerificationReport::needs_extensions() const {
  return std::any_of(entries.begin(), entries.end(), [](const GeneratorReport& e) {
    return e.verdict == Verdict::needs_extended_rules;
  });
}

ExtensionTables extensions_from_json(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad extension JSON: ") + e.what());
  }
  if (!in.is_object())
    throw Error(Errc::parse_error, "extension file must be an object of rule tables");
  ExtensionTables out;
  for (const auto& [table, rules] : in.items()) {
    if (!rules.is_object())
      throw Error(Errc::parse_error, "rule table '" + table + "' must be an object");
    for (const auto& [generator, word] : rules.items()) {
      if (!word.is_string())
        throw Error(Errc::parse_error, "rule image for '" + generator + "' must be a string");
      out[table][generator] = word.get<std::string>();
    }
  }
  return out;
}

VerificationReport verify_family(Family family, std::int64_t genus,
                                 const std::optional<ExtensionTables>& extensions) {
  PresentationFamily pf = make_tables(family, genus);
  if (extensions) {
    for (const auto& [table, rules] : *extensions) {
      auto it = std::find_if(pf.twists.begin(), pf.twists.end(),
                             [&](const PartialEndomorphism& tw) { return tw.name == table; });
      if (it == pf.twists.end())
        throw Error(Errc::invalid_argument, "no twist table named '" + table + "'");
      for (const auto& [generator, word] : rules)
        it->table[pf.alphabet.id(generator)] = parse_word(pf.alphabet, word);
    }
  }

  std::vector<PartialEndomorphism> product;
  for (int idx : pf.product_order) product.push_back(pf.twists[static_cast<std::size_t>(idx)]);

  VerificationReport report;
  report.family = family;
  report.genus = genus;
  for (int gen : pf.check_generators) {
    GeneratorReport entry;
    entry.generator = pf.alphabet.name(gen);
    const Word expected = eliminate_all(apply(pf.rotation, {gen}, pf.alphabet), pf.eliminations);
    entry.expected = format_word(pf.alphabet, expected);
    try {
      const Word computed = eliminate_all(apply_sequence(product, {gen}, pf.alphabet),
                                          pf.eliminations);
      entry.computed = format_word(pf.alphabet, computed);
      entry.verdict = computed == expected ? Verdict::pass : Verdict::fail;
    } catch (const MissingRuleError& e) {
      entry.missing_rule = e.table_name() + ":" + e.symbol();
      entry.verdict = Verdict::needs_extended_rules;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["family"] = family_name(report.family);
  out["genus"] = report.genus;
  out["all_pass"] = report.all_pass();
  out["needs_extended_rules"] = report.needs_extensions();
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json entry;
    entry["generator"] = e.generator;
    entry["expected"] = e.expected;
    if (e.verdict == Verdict::needs_extended_rules)
      entry["missing_rule"] = e.missing_rule;
    else
      entry["computed"] = e.computed;
    entry["verdict"] = verdict_name(e.verdict);
    out["entries"].push_back(std::move(entry));
  }
  return out.dump(2);
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << family_name(report.family) << " genus " << report.genus << "\n";
  for (const auto& e : report.entries) {
    out << "  " << e.generator << " -> expected " << e.expected << ", ";
    if (e.verdict == Verdict::needs_extended_rules)
      out << "missing rule " << e.missing_rule;
    else
      out << "computed " << e.computed;
    out << "  [" << verdict_name(e.verdict) << "]\n";
  }
  out << (report.any_fail() ? "FAIL"
          : report.needs_extensions() ? "INCOMPLETE (extended rules needed)"
                                      : "PASS")
      << "\n";
  return out.str();
}

}  // namespace hyptv
