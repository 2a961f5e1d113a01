#include "core/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "core/rational.hpp"

namespace hyptv {

Element AbelianGroup::normalize(Element e) const {
  e[0] = ((e[0] % n) + n) % n;
  e[1] = rank == 2 ? (((e[1] % 2) + 2) % 2) : 0;
  return e;
}

Element AbelianGroup::add(Element a, Element b) const {
  return normalize({checked_add(a[0], b[0]), a[1] + b[1]});
}

Element AbelianGroup::power(Element a, std::int64_t k) const {
  a = normalize(a);
  const std::int64_t kk = ((k % n) + n) % n;  // component-wise reduction is fine mod each modulus
  return normalize({checked_mul(a[0], kk) % n, rank == 2 ? a[1] * (((k % 2) + 2) % 2) : 0});
}

std::int64_t AbelianGroup::element_order(Element a) const {
  a = normalize(a);
  const std::int64_t o1 = n / std::gcd(a[0], n);
  const std::int64_t o2 = (rank == 2 && a[1] != 0) ? 2 : 1;
  return std::lcm(o1, o2);
}

std::vector<Element> AbelianGroup::cyclic_subgroup(Element a) const {
  a = normalize(a);
  std::vector<Element> out;
  Element e{0, 0};
  do {
    out.push_back(e);
    e = add(e, a);
  } while (!(e == Element{0, 0}));
  return out;
}

bool AbelianGroup::subgroup_contains(const std::vector<Element>& sub, Element e) const {
  e = normalize(e);
  return std::find(sub.begin(), sub.end(), e) != sub.end();
}

std::vector<Element> AbelianGroup::elements() const {
  std::vector<Element> out;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < (rank == 2 ? 2 : 1); ++b) out.push_back({a, b});
  return out;
}

OrbifoldAction make_action(AbelianGroup group, std::int64_t genus,
                           std::vector<std::int64_t> cone_orders, std::vector<Element> images) {
  if (group.n < 1 || (group.rank != 1 && group.rank != 2))
    throw Error(Errc::invalid_argument, "group must be Z/n or Z/n + Z/2");
  if (cone_orders.size() != images.size())
    throw Error(Errc::invalid_argument, "one image per cone point required");
  for (auto& e : images) e = group.normalize(e);
  for (std::size_t i = 0; i < cone_orders.size(); ++i) {
    if (cone_orders[i] < 2)
      throw Error(Errc::invalid_argument, "cone orders must be >= 2");
    if (group.element_order(images[i]) != cone_orders[i])
      throw Error(Errc::order_mismatch, "image order does not match its cone order");
  }
  Element sum{0, 0};
  for (const auto& e : images) sum = group.add(sum, e);
  if (!group.is_identity(sum))
    throw Error(Errc::relation_violated, "elliptic images do not satisfy the long relation");
  // surjectivity: close the generated subgroup
  std::vector<Element> gen{{0, 0}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& img : images)
      for (std::size_t i = 0; i < gen.size(); ++i) {
        const Element e = group.add(gen[i], img);
        if (!group.subgroup_contains(gen, e)) {
          gen.push_back(e);
          grew = true;
        }
      }
  }
  if (static_cast<std::int64_t>(gen.size()) != group.size())
    throw Error(Errc::not_surjective, "elliptic images do not generate the group");
  // Riemann-Hurwitz over the genus-0 base: 2 - 2g = |G| (2 - sum(1 - 1/m_i))
  // cleared to: (2 - 2g) = |G|(2 - s) + sum |G|/m_i
  const std::int64_t size = group.size();
  std::int64_t rhs = size * (2 - static_cast<std::int64_t>(cone_orders.size()));
  for (const auto m : cone_orders) rhs += size / m;
  if (2 - 2 * genus != rhs)
    throw Error(Errc::riemann_hurwitz_failed, "Riemann-Hurwitz fails for the stated genus");
  return OrbifoldAction{group, genus, std::move(cone_orders), std::move(images)};
}

namespace {

struct ConeOrbitData {
  std::int64_t orbit_count;  // orbits of <h> above this cone with nontrivial isotropy
  Valency valency;
};

// Orbit data of h above one cone with isotropy image a of order m;
// nullopt when the isotropy of h there is trivial.
std::optional<ConeOrbitData> cone_orbits(const AbelianGroup& group, Element h, Element a,
                                         std::int64_t m, std::int64_t points_above) {
  const auto sub = group.cyclic_subgroup(a);
  const std::int64_t ord_h = group.element_order(h);
  std::int64_t d = 0;
  for (std::int64_t t = 1; t <= ord_h; ++t)
    if (group.subgroup_contains(sub, group.power(h, t))) {
      d = t;
      break;
    }
  const std::int64_t lambda = ord_h / d;
  if (lambda < 2) return std::nullopt;
  const Element hd = group.power(h, d);
  std::int64_t c = -1;
  for (std::int64_t j = 0; j < m; ++j)
    if (group.power(a, j) == hd) {
      c = j;
      break;
    }
  if (c < 0 || c % (m / lambda) != 0)
    throw Error(Errc::invalid_argument, "inconsistent isotropy data");  // unreachable for valid actions
  const std::int64_t nu = (c / (m / lambda)) % lambda;
  return ConeOrbitData{points_above / d, make_valency(mod_inverse(nu, lambda), lambda)};
}

TotalValency assemble_tv(std::int64_t genus, std::int64_t order, std::vector<Valency> valencies) {
  TotalValency tv;
  tv.genus = genus;
  tv.order = order;
  tv.valencies = std::move(valencies);
  const auto h = rh_quotient_genus(genus, order, tv.valencies);
  if (!h)
    throw Error(Errc::riemann_hurwitz_failed,
                "no quotient genus satisfies Riemann-Hurwitz for the computed orbit data");
  tv.quotient_genus = *h;
  canonicalize(tv);
  require_valid(tv);
  return tv;
}

}  // namespace

TotalValency element_tv(const OrbifoldAction& action, Element h) {
  h = action.group.normalize(h);
  if (action.group.is_identity(h))
    throw Error(Errc::identity_element, "the identity has no total valency");
  const std::int64_t ord_h = action.group.element_order(h);
  std::vector<Valency> valencies;
  for (std::size_t i = 0; i < action.cone_orders.size(); ++i) {
    const std::int64_t m = action.cone_orders[i];
    const std::int64_t points_above = action.group.size() / m;
    if (const auto data = cone_orbits(action.group, h, action.images[i], m, points_above))
      for (std::int64_t j = 0; j < data->orbit_count; ++j) valencies.push_back(data->valency);
  }
  return assemble_tv(action.genus, ord_h, std::move(valencies));
}

std::int64_t fixed_point_count(const OrbifoldAction& action, Element h) {
  h = action.group.normalize(h);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < action.cone_orders.size(); ++i) {
    const auto sub = action.group.cyclic_subgroup(action.images[i]);
    if (action.group.subgroup_contains(sub, h))
      count += action.group.size() / action.cone_orders[i];
  }
  return count;
}

PairCaseResult pair_case(const OrbifoldAction& action, Element f, Element involution) {
  f = action.group.normalize(f);
  involution = action.group.normalize(involution);
  if (action.group.element_order(involution) != 2 ||
      fixed_point_count(action, involution) != 2 * action.genus + 2)
    throw Error(Errc::not_hyperelliptic,
                "second element is not a hyperelliptic involution of this action");
  const std::int64_t n = action.group.element_order(f);
  std::int64_t n_bar = 0;
  for (std::int64_t t = 1; t <= n; ++t) {
    const Element ft = action.group.power(f, t);
    if (action.group.is_identity(ft) || ft == involution) {
      n_bar = t;
      break;
    }
  }
  // cone points of the sphere quotient by I fixed by the induced rotation:
  // fixed points x of I with f in Stab(x)
  std::int64_t fixed_cones = 0;
  for (std::size_t i = 0; i < action.cone_orders.size(); ++i) {
    const auto sub = action.group.cyclic_subgroup(action.images[i]);
    if (action.group.subgroup_contains(sub, involution) && action.group.subgroup_contains(sub, f))
      fixed_cones += action.group.size() / action.cone_orders[i];
  }
  PairCase which;
  switch (fixed_cones) {
    case 2: which = PairCase::case_i; break;
    case 1: which = PairCase::case_ii; break;
    case 0: which = PairCase::case_iii; break;
    default:
      throw Error(Errc::invalid_argument, "induced sphere rotation fixes more than two cone points");
  }
  return PairCaseResult{which, n, n_bar, fixed_cones};
}

OrbifoldSignature quotient_signature(const OrbifoldAction& action, Element h) {
  h = action.group.normalize(h);
  if (action.group.is_identity(h)) return OrbifoldSignature{action.genus, {}};
  const TotalValency tv = element_tv(action, h);
  OrbifoldSignature sig;
  sig.genus = tv.quotient_genus;
  for (const auto& v : tv.valencies) sig.cone_orders.push_back(v.lambda);
  std::sort(sig.cone_orders.begin(), sig.cone_orders.end());
  return sig;
}

OrbifoldAction standard_model(Family family, std::int64_t genus) {
  if (genus < 2) throw Error(Errc::invalid_argument, "standard models require genus >= 2");
  const std::int64_t g = genus;
  switch (family) {
    case Family::F1:
      return make_action({4 * g + 2, 1}, g, {4 * g + 2, 2 * g + 1, 2},
                         {{1, 0}, {2 * g, 0}, {2 * g + 1, 0}});
    case Family::F2:
      return make_action({4 * g, 1}, g, {4 * g, 4 * g, 2}, {{1, 0}, {2 * g - 1, 0}, {2 * g, 0}});
    case Family::F3:
      return make_action({2 * g + 2, 2}, g, {2 * g + 2, 2 * g + 2, 2},
                         {{1, 0}, {2 * g + 1, 1}, {0, 1}});
    default:
      throw Error(Errc::invalid_argument, "standard models exist for F1, F2, F3 only");
  }
}

Element model_involution(Family family, std::int64_t genus) {
  switch (family) {
    case Family::F1: return {2 * genus + 1, 0};
    case Family::F2: return {2 * genus, 0};
    case Family::F3: return {0, 1};
    default: throw Error(Errc::invalid_argument, "no model involution for this tag");
  }
}

std::optional<PairClassification> classify_pair(std::int64_t genus, const TotalValency& f_tv,
                                                const std::optional<TotalValency>& composed_tv) {
  require_valid(f_tv);
  if (genus < 2 || f_tv.genus != genus)
    throw Error(Errc::invalid_argument, "pair classification requires matching genus >= 2");
  const std::pair<StandardGroup, Family> models[] = {
      {StandardGroup::G1, Family::F1}, {StandardGroup::G2, Family::F2}, {StandardGroup::G3, Family::F3}};
  for (const auto& [which, family] : models) {
    const OrbifoldAction model = standard_model(family, genus);
    const Element involution = model_involution(family, genus);
    for (const Element& e : model.group.elements()) {
      if (model.group.is_identity(e)) continue;
      if (!nielsen_equal(element_tv(model, e), f_tv)) continue;
      if (composed_tv) {
        const Element composed = model.group.add(e, involution);
        if (model.group.is_identity(composed)) continue;
        if (!nielsen_equal(element_tv(model, composed), *composed_tv)) continue;
      }
      PairClassification result{which, e, ""};
      if (family == Family::F3 && e[1] == 1) {
        // an I-coset element may coincide with a rotation power up to conjugacy
        for (std::int64_t k = 1; k <= 2 * genus + 1; ++k)
          if (nielsen_equal(element_tv(model, e), element_tv(model, {k, 0}))) {
            std::ostringstream note;
            note << "Nielsen-equal to f3^" << k;
            result.note = note.str();
            break;
          }
      }
      return result;
    }
  }
  return std::nullopt;
}

TotalValency cyclic_power_tv(const TotalValency& tv, std::int64_t k) {
  require_valid(tv);
  if (k < 1) throw Error(Errc::invalid_argument, "power exponent must be positive");
  const std::int64_t n = tv.order;
  const AbelianGroup cyclic{n, 1};
  const Element h = cyclic.normalize({k, 0});
  if (cyclic.is_identity(h))
    return assemble_tv(tv.genus, 1, {});
  const std::int64_t ord_h = cyclic.element_order(h);
  std::vector<Valency> valencies;
  for (const auto& v : tv.valencies) {
    // one input entry is one orbit of f: n/lambda points whose isotropy
    // generator f^(n/lambda) acts locally as the clockwise 2*pi*nu/lambda
    // rotation, so the element acting as 2*pi/lambda is f^((n/lambda)*theta)
    const std::int64_t orbit_points = n / v.lambda;
    const Element a = cyclic.normalize({checked_mul(orbit_points, v.theta), 0});
    if (const auto data = cone_orbits(cyclic, h, a, v.lambda, orbit_points))
      for (std::int64_t j = 0; j < data->orbit_count; ++j) valencies.push_back(data->valency);
  }
  return assemble_tv(tv.genus, ord_h, std::move(valencies));
}

}  // namespace hyptv
