// Command-line front end. Everything goes through the C API on purpose: the
// binary doubles as a smoke test of the shared library surface.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyptv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct TvDeleter {
  void operator()(hyptv_tv* tv) const { hyptv_tv_free(tv); }
};
using TvHandle = std::unique_ptr<hyptv_tv, TvDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hyptv_string_free(s); }
};
using StringHandle = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(const std::string& context) {
  std::fprintf(stderr, "error: %s: %s\n", context.c_str(), hyptv_last_error());
  std::exit(kExitBadInput);
}

void check(hyptv_status status, const std::string& context) {
  if (status != HYPTV_OK) die(context);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    std::exit(kExitBadInput);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TvHandle parse_tv(const std::string& text) {
  hyptv_tv* tv = nullptr;
  check(hyptv_tv_parse(text.c_str(), &tv), "parsing total valency");
  return TvHandle(tv);
}

void print_tv(const hyptv_tv* tv, const std::string& format) {
  char* out = nullptr;
  if (format == "text")
    check(hyptv_tv_to_literal(tv, &out), "formatting");
  else
    check(hyptv_tv_to_json(tv, &out), "formatting");
  StringHandle guard(out);
  std::printf("%s\n", out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total valencies of hyperelliptic periodic diffeomorphisms"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  int family = 0;
  std::int64_t genus = 2, exponent = 1, k = 1, edges = 0, step = 2;
  std::string tv_text, pairing_path, extensions_path;

  auto* tv_cmd = app.add_subcommand("tv", "Total valency of a family generator power");
  tv_cmd->add_option("--family", family, "Family (1-3, 4 = involution-composed)")
      ->required()
      ->check(CLI::Range(1, 4));
  tv_cmd->add_option("--genus", genus, "Genus (>= 2)")->required();
  tv_cmd->add_option("--exponent", exponent, "Power of the generator");

  auto* power_cmd = app.add_subcommand("power", "Total valency of a power");
  power_cmd->add_option("tv", tv_text, "Total valency (literal or JSON)")->required();
  power_cmd->add_option("--k", k, "Exponent")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Match against the family closed forms");
  classify_cmd->add_option("--json", tv_text, "Total valency (literal or JSON)")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "All conjugacy classes at a genus");
  enum_cmd->add_option("--genus", genus, "Genus (>= 2)")->required();

  auto* poly_cmd = app.add_subcommand("polygon", "Total valency of a glued-polygon rotation");
  poly_cmd->add_option("--family", family, "Built-in model family (1-3)")->check(CLI::Range(1, 3));
  poly_cmd->add_option("--genus", genus, "Genus of the built-in model");
  poly_cmd->add_option("--edges", edges, "Polygon edge count");
  poly_cmd->add_option("--pairing", pairing_path, "Edge pairing JSON file");
  poly_cmd->add_option("--step", step, "Rotation step")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check a twist product against the rotation");
  verify_cmd->add_option("--family", family, "Family (1-3)")->required()->check(CLI::Range(1, 3));
  verify_cmd->add_option("--genus", genus, "Genus (>= 2)")->required();
  verify_cmd->add_option("--extensions", extensions_path, "Extra rule table JSON file");

  auto* table_cmd = app.add_subcommand("table", "Family table for a genus");
  table_cmd->add_option("--genus", genus, "Genus (>= 2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  if (tv_cmd->parsed()) {
    hyptv_tv* tv = nullptr;
    check(hyptv_closed_form(family, genus, exponent, &tv), "closed form");
    TvHandle guard(tv);
    print_tv(tv, format);
  } else if (power_cmd->parsed()) {
    TvHandle tv = parse_tv(tv_text);
    hyptv_tv* powered = nullptr;
    check(hyptv_tv_power(tv.get(), k, &powered), "power");
    TvHandle guard(powered);
    print_tv(powered, format);
  } else if (classify_cmd->parsed()) {
    TvHandle tv = parse_tv(tv_text);
    int matched_family = 0;
    std::int64_t matched_exponent = 0;
    check(hyptv_classify(tv.get(), &matched_family, &matched_exponent), "classify");
    static const char* names[] = {"", "F1", "F2", "F3", "IF3"};
    if (format == "text") {
      if (matched_family == 0)
        std::printf("none\n");
      else
        std::printf("(%s, k=%lld)\n", names[matched_family],
                    static_cast<long long>(matched_exponent));
    } else {
      if (matched_family == 0)
        std::printf("null\n");
      else
        std::printf("{\"family\":\"%s\",\"exponent\":%lld}\n", names[matched_family],
                    static_cast<long long>(matched_exponent));
    }
  } else if (enum_cmd->parsed()) {
    char* out = nullptr;
    check(hyptv_enumerate_json(genus, &out), "enumerate");
    StringHandle guard(out);
    std::printf("%s\n", out);
  } else if (poly_cmd->parsed()) {
    hyptv_tv* tv = nullptr;
    if (!pairing_path.empty()) {
      const std::string pairing = read_file(pairing_path);
      check(hyptv_polygon_tv(edges, pairing.c_str(), step, &tv), "polygon");
    } else if (family != 0) {
      check(hyptv_family_polygon_tv(family, genus, &tv), "polygon");
    } else {
      std::fprintf(stderr, "error: polygon needs either --pairing or --family\n");
      return kExitBadInput;
    }
    TvHandle guard(tv);
    print_tv(tv, format);
  } else if (verify_cmd->parsed()) {
    std::string extensions;
    if (!extensions_path.empty()) extensions = read_file(extensions_path);
    char* report = nullptr;
    int failed = 0;
    check(hyptv_verify(family, genus, extensions.empty() ? nullptr : extensions.c_str(), &report,
                       &failed),
          "verify");
    StringHandle guard(report);
    if (format == "text") {
      // re-render the JSON report as a plain table without another parser:
      // the C API only hands back JSON, so text mode prints it as-is plus a
      // one-line verdict summary
      std::printf("%s\n", report);
      std::printf("%s\n", failed ? "FAIL" : "OK");
    } else {
      std::printf("%s\n", report);
    }
    return failed ? kExitVerifyFailed : kExitOk;
  } else if (table_cmd->parsed()) {
    char* out = nullptr;
    check(hyptv_family_table_json(genus, &out), "table");
    StringHandle guard(out);
    std::printf("%s\n", out);
  }
  return kExitOk;
}
