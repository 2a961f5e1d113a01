#include "hyptv.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/abelian.hpp"
#include "core/polygon.hpp"
#include "core/twist.hpp"
#include "core/valency.hpp"

using namespace hyptv;

struct hyptv_tv {
  TotalValency value;
};

namespace {

thread_local std::string g_last_error;

hyptv_status status_of(Errc code) {
  switch (code) {
    case Errc::ok: return HYPTV_OK;
    case Errc::parse_error: return HYPTV_EPARSE;
    case Errc::invalid_argument:
    case Errc::invalid_rotation: return HYPTV_EINVAL;
    case Errc::overflow: return HYPTV_EOVERFLOW;
    case Errc::missing_rule: return HYPTV_EMISSING_RULE;
    case Errc::exponent_out_of_range:
    case Errc::identity_element: return HYPTV_ERANGE;
    default: return HYPTV_EVALIDATION;
  }
}

template <typename F>
hyptv_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return HYPTV_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HYPTV_EINTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HYPTV_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Family family_of(int family) {
  switch (family) {
    case 1: return Family::F1;
    case 2: return Family::F2;
    case 3: return Family::F3;
    case 4: return Family::IF3;
  }
  throw Error(Errc::invalid_argument, "family must be 1, 2, 3 or 4");
}

int family_index(Family f) {
  switch (f) {
    case Family::F1: return 1;
    case Family::F2: return 2;
    case Family::F3: return 3;
    case Family::IF3: return 4;
  }
  return 0;
}

std::int64_t family_exponent_limit(Family family, std::int64_t genus) {
  switch (family) {
    case Family::F1: return 4 * genus + 1;
    case Family::F2: return 4 * genus - 1;
    case Family::F3: return 2 * genus + 1;
    case Family::IF3: return 2 * genus + 2;
  }
  return 0;
}

void require_out(const void* p) {
  if (p == nullptr) throw Error(Errc::invalid_argument, "null output pointer");
}

const TotalValency& deref(const hyptv_tv* tv) {
  if (tv == nullptr) throw Error(Errc::invalid_argument, "null total valency handle");
  return tv->value;
}

nlohmann::ordered_json enumerate_entries(std::int64_t genus) {
  auto out = nlohmann::ordered_json::array();
  std::vector<TotalValency> seen;
  for (Family family : {Family::F1, Family::F2, Family::F3, Family::IF3}) {
    for (std::int64_t k = 1; k <= family_exponent_limit(family, genus); ++k) {
      const TotalValency tv = closed_form_tv({family, k}, genus);
      bool duplicate = false;
      for (const auto& prev : seen)
        if (nielsen_equal(prev, tv)) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
      seen.push_back(tv);
      nlohmann::ordered_json entry;
      entry["family"] = family_name(family);
      entry["exponent"] = k;
      entry["order"] = tv.order;
      entry["tv"] = nlohmann::ordered_json::parse(tv_to_json(tv));
      out.push_back(std::move(entry));
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* hyptv_last_error(void) { return g_last_error.c_str(); }

void hyptv_string_free(char* s) { delete[] s; }

void hyptv_tv_free(hyptv_tv* tv) { delete tv; }

hyptv_status hyptv_tv_parse(const char* text, hyptv_tv** out) {
  return guarded([&] {
    require_out(out);
    if (text == nullptr) throw Error(Errc::invalid_argument, "null input");
    *out = new hyptv_tv{tv_parse(text)};
  });
}

hyptv_status hyptv_tv_to_json(const hyptv_tv* tv, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup_string(tv_to_json(deref(tv)));
  });
}

hyptv_status hyptv_tv_to_literal(const hyptv_tv* tv, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup_string(tv_to_literal(deref(tv)));
  });
}

hyptv_status hyptv_closed_form(int family, int64_t genus, int64_t exponent, hyptv_tv** out) {
  return guarded([&] {
    require_out(out);
    *out = new hyptv_tv{closed_form_tv({family_of(family), exponent}, genus)};
  });
}

hyptv_status hyptv_tv_power(const hyptv_tv* tv, int64_t k, hyptv_tv** out) {
  return guarded([&] {
    require_out(out);
    *out = new hyptv_tv{tv_power(deref(tv), k)};
  });
}

hyptv_status hyptv_nielsen_equal(const hyptv_tv* a, const hyptv_tv* b, int* out) {
  return guarded([&] {
    require_out(out);
    *out = nielsen_equal(deref(a), deref(b)) ? 1 : 0;
  });
}

hyptv_status hyptv_validate(const hyptv_tv* tv) {
  return guarded([&] { require_valid(deref(tv)); });
}

hyptv_status hyptv_classify(const hyptv_tv* tv, int* family, int64_t* exponent) {
  return guarded([&] {
    require_out(family);
    require_out(exponent);
    const auto tag = classify_hyperelliptic(deref(tv));
    if (tag) {
      *family = family_index(tag->family);
      *exponent = tag->exponent;
    } else {
      *family = 0;
      *exponent = 0;
    }
  });
}

hyptv_status hyptv_enumerate_json(int64_t genus, char** out) {
  return guarded([&] {
    require_out(out);
    if (genus < 2) throw Error(Errc::invalid_argument, "enumeration requires genus >= 2");
    *out = dup_string(enumerate_entries(genus).dump(2));
  });
}

hyptv_status hyptv_polygon_tv(int64_t m, const char* pairing_json, int64_t step, hyptv_tv** out) {
  return guarded([&] {
    require_out(out);
    if (pairing_json == nullptr) throw Error(Errc::invalid_argument, "null pairing");
    const GluedPolygon surface = build_glued_polygon(m, pairing_from_json(pairing_json));
    *out = new hyptv_tv{tv_from_polygon(surface, {step})};
  });
}

hyptv_status hyptv_family_polygon_tv(int family, int64_t genus, hyptv_tv** out) {
  return guarded([&] {
    require_out(out);
    const FamilyModel model = standard_family(family_of(family), genus);
    *out = new hyptv_tv{tv_from_polygon(model.surface, model.rotation)};
  });
}

hyptv_status hyptv_verify(int family, int64_t genus, const char* extensions_json,
                          char** report_json, int* failed) {
  return guarded([&] {
    require_out(report_json);
    require_out(failed);
    std::optional<ExtensionTables> extensions;
    if (extensions_json != nullptr) extensions = extensions_from_json(extensions_json);
    const VerificationReport report = verify_family(family_of(family), genus, extensions);
    *report_json = dup_string(report_to_json(report));
    *failed = report.any_fail() ? 1 : 0;
  });
}

hyptv_status hyptv_family_table_json(int64_t genus, char** out) {
  return guarded([&] {
    require_out(out);
    if (genus < 2) throw Error(Errc::invalid_argument, "the table requires genus >= 2");
    nlohmann::ordered_json table;
    table["genus"] = genus;
    table["families"] = nlohmann::ordered_json::array();
    for (Family family : {Family::F1, Family::F2, Family::F3, Family::IF3}) {
      const TotalValency tv = closed_form_tv({family, 1}, genus);
      nlohmann::ordered_json entry;
      entry["family"] = family_name(family);
      entry["order"] = tv.order;
      entry["max_exponent"] = family_exponent_limit(family, genus);
      entry["tv"] = nlohmann::ordered_json::parse(tv_to_json(tv));
      entry["literal"] = tv_to_literal(tv);
      table["families"].push_back(std::move(entry));
    }
    *out = dup_string(table.dump(2));
  });
}

}  // extern "C"
