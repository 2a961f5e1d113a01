#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/valency.hpp"

namespace hyptv {

// Group element of Z/n or Z/n + Z/2, stored as residues. The second
// component is identically zero for rank-1 groups.
using Element = std::array<std::int64_t, 2>;

struct AbelianGroup {
  std::int64_t n{1};   // modulus of the first factor
  int rank{1};         // 1: Z/n, 2: Z/n + Z/2

  std::int64_t size() const { return rank == 1 ? n : 2 * n; }
  Element normalize(Element e) const;
  Element add(Element a, Element b) const;
  Element power(Element a, std::int64_t k) const;
  std::int64_t element_order(Element a) const;
  bool is_identity(Element a) const { return normalize(a) == Element{0, 0}; }
  std::vector<Element> cyclic_subgroup(Element a) const;
  bool subgroup_contains(const std::vector<Element>& sub, Element e) const;
  std::vector<Element> elements() const;  // deterministic (lexicographic) order
};

// A finite abelian action on a genus-g surface with genus-0 quotient,
// given by cone orders and the images of the elliptic generators.
// Convention: images[i] acts at each point above cone i as the clockwise
// 2*pi/cone_orders[i] rotation.
struct OrbifoldAction {
  AbelianGroup group;
  std::int64_t genus{0};
  std::vector<std::int64_t> cone_orders;
  std::vector<Element> images;
};

// Validates order-per-cone, the abelianized long relation (images sum to 0),
// surjectivity and Riemann-Hurwitz. Throws Errc::order_mismatch,
// relation_violated, not_surjective or riemann_hurwitz_failed.
OrbifoldAction make_action(AbelianGroup group, std::int64_t genus,
                           std::vector<std::int64_t> cone_orders,
                           std::vector<Element> images);

// Total valency of a nonidentity element of the action.
TotalValency element_tv(const OrbifoldAction& action, Element h);

// Number of fixed points of h (points whose isotropy contains h).
std::int64_t fixed_point_count(const OrbifoldAction& action, Element h);

enum class PairCase { case_i, case_ii, case_iii };

struct PairCaseResult {
  PairCase pair_case;
  std::int64_t n;           // ord(f)
  std::int64_t n_bar;       // ord of f in G/<I>
  std::int64_t fixed_cones; // |Fix(f-bar) meet B_I|, in {0,1,2}
};

// Requires I to be a hyperelliptic involution inside the action (order 2 with
// 2g+2 fixed points); throws Errc::not_hyperelliptic otherwise.
PairCaseResult pair_case(const OrbifoldAction& action, Element f, Element involution);

struct OrbifoldSignature {
  std::int64_t genus{0};
  std::vector<std::int64_t> cone_orders;  // ascending

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

// Quotient orbifold of the surface by the cyclic subgroup generated by h
// (identity gives the surface itself).
OrbifoldSignature quotient_signature(const OrbifoldAction& action, Element h);

// The standard models G1, G2, G3 (family must be F1/F2/F3).
OrbifoldAction standard_model(Family family, std::int64_t genus);

// The hyperelliptic involution of a standard model.
Element model_involution(Family family, std::int64_t genus);

enum class StandardGroup { G1, G2, G3 };

struct PairClassification {
  StandardGroup group;
  Element matched;      // element whose tv Nielsen-matches the input
  std::string note;     // optional remark, e.g. coincidence with a rotation power
};

// Which standard group contains a pair Nielsen-matching the input total
// valency (and, when supplied, the total valency of I*f). nullopt when the
// input is not realizable by a hyperelliptic pair.
std::optional<PairClassification> classify_pair(std::int64_t genus, const TotalValency& f_tv,
                                                const std::optional<TotalValency>& composed_tv);

// Normative semantics of tv_power: model the cyclic action Z/n with the given
// fixed-point data and read off the orbit data of element k.
TotalValency cyclic_power_tv(const TotalValency& tv, std::int64_t k);

}  // namespace hyptv
