#include "core/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

namespace hyptv {

GluedPolygon build_glued_polygon(std::int64_t m, const std::vector<EdgePair>& pairs) {
  if (m < 2 || m % 2 != 0)
    throw Error(Errc::invalid_argument, "polygon needs an even number of edges");
  if (static_cast<std::int64_t>(pairs.size()) != m / 2)
    throw Error(Errc::not_an_involution, "pairing must cover every edge exactly once");
  std::vector<std::int64_t> pairing(m, -1);
  for (const auto& p : pairs) {
    if (!p.reversed)
      throw Error(Errc::non_orientable_gluing,
                  "same-orientation gluing does not yield an oriented surface");
    if (p.a < 0 || p.a >= m || p.b < 0 || p.b >= m)
      throw Error(Errc::invalid_argument, "edge index out of range");
    if (p.a == p.b) throw Error(Errc::not_an_involution, "an edge cannot be glued to itself");
    if (pairing[p.a] != -1 || pairing[p.b] != -1)
      throw Error(Errc::not_an_involution, "an edge appears in two pairs");
    pairing[p.a] = p.b;
    pairing[p.b] = p.a;
  }

  GluedPolygon surface;
  surface.edge_count = m;
  surface.pairing = std::move(pairing);
  // corner j sits between edges j-1 and j; crossing edge j-1 counterclockwise
  // moves the wedge to corner pairing[j-1]
  surface.corner_class.assign(m, -1);
  surface.corner_position.assign(m, -1);
  for (std::int64_t j = 0; j < m; ++j) {
    if (surface.corner_class[j] != -1) continue;
    std::vector<std::int64_t> cycle;
    std::int64_t k = j;
    while (surface.corner_class[k] == -1) {
      surface.corner_class[k] = static_cast<std::int64_t>(surface.corner_cycles.size());
      surface.corner_position[k] = static_cast<std::int64_t>(cycle.size());
      cycle.push_back(k);
      k = surface.pairing[(k - 1 + m) % m];
    }
    surface.corner_cycles.push_back(std::move(cycle));
  }
  const std::int64_t vertex_classes = static_cast<std::int64_t>(surface.corner_cycles.size());
  const std::int64_t chi = vertex_classes - m / 2 + 1;
  if ((2 - chi) % 2 != 0 || chi > 2)
    throw Error(Errc::non_orientable_gluing, "gluing does not produce a closed oriented surface");
  surface.genus = (2 - chi) / 2;
  return surface;
}

std::int64_t rotation_order(const GluedPolygon& surface, const RotationAction& rot) {
  const std::int64_t m = surface.edge_count;
  const std::int64_t s = ((rot.step % m) + m) % m;
  return s == 0 ? 1 : m / std::gcd(m, s);
}

namespace {

void check_equivariant(const GluedPolygon& surface, std::int64_t s) {
  const std::int64_t m = surface.edge_count;
  for (std::int64_t e = 0; e < m; ++e)
    if (surface.pairing[(e + s) % m] != (surface.pairing[e] + s) % m)
      throw Error(Errc::invalid_rotation, "pairing is not equivariant for this rotation step");
}

MultipleOrbit orbit_entry(std::int64_t d, std::int64_t lambda, std::int64_t shift,
                          std::int64_t wedges) {
  // the isotropy generator shifts the link cycle of W wedges by `shift`
  if (wedges % lambda != 0 || shift % (wedges / lambda) != 0 ||
      wedges / std::gcd(shift, wedges) != lambda)
    throw Error(Errc::invalid_argument, "inconsistent link rotation data");
  const std::int64_t nu = (shift / (wedges / lambda)) % lambda;
  return MultipleOrbit{d, lambda, nu, make_valency(mod_inverse(nu, lambda), lambda)};
}

}  // namespace

std::vector<MultipleOrbit> multiple_orbits(const GluedPolygon& surface, const RotationAction& rot) {
  const std::int64_t m = surface.edge_count;
  const std::int64_t s = ((rot.step % m) + m) % m;
  std::vector<MultipleOrbit> orbits;
  if (s == 0) return orbits;
  check_equivariant(surface, s);
  const std::int64_t n = m / std::gcd(m, s);

  // barycenter: always fixed, link is the polygon boundary of m wedges
  orbits.push_back(orbit_entry(1, n, s, m));

  // corner classes
  std::vector<bool> corner_done(surface.corner_cycles.size(), false);
  for (std::size_t ci = 0; ci < surface.corner_cycles.size(); ++ci) {
    if (corner_done[ci]) continue;
    const std::int64_t j0 = surface.corner_cycles[ci][0];
    std::int64_t d = 0;
    std::int64_t cj = static_cast<std::int64_t>(ci);
    do {
      corner_done[cj] = true;
      cj = surface.corner_class[(surface.corner_cycles[cj][0] + s) % m];
      ++d;
    } while (!corner_done[cj]);
    const std::int64_t lambda = n / d;
    if (lambda < 2) continue;
    const std::int64_t target = (j0 + d * s) % m;
    if (surface.corner_class[target] != static_cast<std::int64_t>(ci))
      throw Error(Errc::invalid_rotation, "rotation does not stabilize the vertex class");
    const std::int64_t wedges = static_cast<std::int64_t>(surface.corner_cycles[ci].size());
    orbits.push_back(orbit_entry(d, lambda, surface.corner_position[target], wedges));
  }

  // edge midpoints: the only nontrivial isotropy swaps the two glued sides
  std::vector<bool> edge_done(m, false);
  for (std::int64_t e = 0; e < m; ++e) {
    if (edge_done[e]) continue;
    std::int64_t d = 0;
    std::int64_t cur = e;
    do {
      edge_done[cur] = true;
      edge_done[surface.pairing[cur]] = true;
      cur = (cur + s) % m;
      ++d;
    } while (!edge_done[cur]);
    const std::int64_t lambda = n / d;
    if (lambda < 2) continue;
    if (lambda != 2 || (e + d * s) % m != surface.pairing[e])
      throw Error(Errc::invalid_rotation, "rotation does not stabilize the midpoint class");
    orbits.push_back(orbit_entry(d, 2, 2, 4));
  }
  return orbits;
}

TotalValency tv_from_polygon(const GluedPolygon& surface, const RotationAction& rot) {
  TotalValency tv;
  tv.genus = surface.genus;
  tv.order = rotation_order(surface, rot);
  for (const auto& orbit : multiple_orbits(surface, rot)) tv.valencies.push_back(orbit.valency);
  const auto h = rh_quotient_genus(tv.genus, tv.order, tv.valencies);
  if (!h)
    throw Error(Errc::validation_failed,
                "orbit data violates Riemann-Hurwitz (bad pairing or rotation)");
  tv.quotient_genus = *h;
  canonicalize(tv);
  require_valid(tv);
  return tv;
}

std::vector<EdgePair> equivariant_pairing(std::int64_t m, std::int64_t p0, std::int64_t p1) {
  std::vector<std::int64_t> p(m);
  for (std::int64_t e = 0; e < m; ++e)
    p[e] = e % 2 == 0 ? (p0 + e) % m : (p1 + e - 1) % m;
  for (std::int64_t e = 0; e < m; ++e)
    if (p[e] == e || p[p[e]] != e)
      throw Error(Errc::not_an_involution, "parameters do not define an equivariant involution");
  std::vector<EdgePair> pairs;
  std::vector<bool> seen(m, false);
  for (std::int64_t e = 0; e < m; ++e) {
    if (seen[e]) continue;
    seen[e] = seen[p[e]] = true;
    pairs.push_back({e, p[e], true});
  }
  return pairs;
}

namespace {

std::int64_t family_polygon_edges(Family family, std::int64_t genus) {
  switch (family) {
    case Family::F1: return 8 * genus + 4;
    case Family::F2: return 8 * genus;
    case Family::F3: return 4 * genus + 4;
    default:
      throw Error(Errc::invalid_argument, "polygon models exist for F1, F2, F3 only");
  }
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> search_equivariant_pairings(Family family,
                                                                               std::int64_t genus) {
  const std::int64_t m = family_polygon_edges(family, genus);
  const TotalValency target = closed_form_tv({family, 1}, genus);
  std::vector<std::pair<std::int64_t, std::int64_t>> matches;
  for (std::int64_t p0 = 0; p0 < m; ++p0)
    for (std::int64_t p1 = 0; p1 < m; ++p1) {
      try {
        const auto pairs = equivariant_pairing(m, p0, p1);
        const GluedPolygon surface = build_glued_polygon(m, pairs);
        if (surface.genus != genus) continue;
        if (nielsen_equal(tv_from_polygon(surface, {2}), target)) matches.emplace_back(p0, p1);
      } catch (const Error&) {
        continue;
      }
    }
  return matches;
}

FamilyModel standard_family(Family family, std::int64_t genus) {
  if (genus < 2) throw Error(Errc::invalid_argument, "polygon models require genus >= 2");
  const std::int64_t m = family_polygon_edges(family, genus);
  // constants found by search_equivariant_pairings (lexicographically smallest
  // of the two mirror-image solutions per family)
  const auto [p0, p1] =
      family == Family::F3 ? std::pair{std::int64_t{3}, m - 2} : std::pair{m / 2 - 1, m / 2 + 2};
  return FamilyModel{build_glued_polygon(m, equivariant_pairing(m, p0, p1)), RotationAction{2}};
}

std::vector<EdgePair> pairing_from_json(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad pairing JSON: ") + e.what());
  }
  if (!in.is_array()) throw Error(Errc::parse_error, "pairing must be a JSON array of pairs");
  std::vector<EdgePair> pairs;
  for (const auto& item : in) {
    if (!item.is_array() || item.size() < 2 || item.size() > 3)
      throw Error(Errc::parse_error, "each pairing entry must be [a, b] or [a, b, reversed]");
    EdgePair p;
    p.a = item[0].get<std::int64_t>();
    p.b = item[1].get<std::int64_t>();
    if (item.size() == 3) p.reversed = item[2].get<bool>();
    pairs.push_back(p);
  }
  return pairs;
}

}  // namespace hyptv
