#pragma once

#include <stdexcept>
#include <string>

namespace hyptv {

enum class Errc {
  ok = 0,
  parse_error,
  invalid_argument,
  invalid_rotation,
  overflow,
  validation_failed,
  order_mismatch,
  not_surjective,
  relation_violated,
  riemann_hurwitz_failed,
  identity_element,
  not_hyperelliptic,
  not_an_involution,
  non_orientable_gluing,
  missing_rule,
  exponent_out_of_range,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised when a rewriting table has no rule for a generator. The table is
// deliberately partial, so this is a first-class outcome, not a bug.
class MissingRuleError : public Error {
 public:
  MissingRuleError(std::string symbol, std::string table_name, int position = -1)
      : Error(Errc::missing_rule,
              "no rule for generator '" + symbol + "' in table '" + table_name + "'"),
        symbol_(std::move(symbol)),
        table_name_(std::move(table_name)),
        position_(position) {}

  const std::string& symbol() const noexcept { return symbol_; }
  const std::string& table_name() const noexcept { return table_name_; }
  int position() const noexcept { return position_; }  // index in an applied sequence, -1 if single

 private:
  std::string symbol_;
  std::string table_name_;
  int position_;
};

}  // namespace hyptv
