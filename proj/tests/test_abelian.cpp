#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "core/abelian.hpp"

using namespace hyptv;

namespace {

std::int64_t theta_at(const TotalValency& tv, std::int64_t lambda, bool second = false) {
  bool skipped = false;
  for (const auto& v : tv.valencies)
    if (v.lambda == lambda) {
      if (second && !skipped) {
        skipped = true;
        continue;
      }
      return v.theta;
    }
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("group arithmetic") {
  AbelianGroup cyclic{10, 1};
  CHECK(cyclic.size() == 10);
  CHECK(cyclic.element_order({1, 0}) == 10);
  CHECK(cyclic.element_order({4, 0}) == 5);
  CHECK(cyclic.element_order({5, 0}) == 2);
  CHECK(cyclic.is_identity(cyclic.power({3, 0}, 10)));
  CHECK(cyclic.add({7, 0}, {5, 0}) == Element{2, 0});
  CHECK(cyclic.normalize({-1, 0}) == Element{9, 0});

  AbelianGroup split{6, 2};
  CHECK(split.size() == 12);
  CHECK(split.element_order({1, 1}) == 6);
  CHECK(split.element_order({0, 1}) == 2);
  CHECK(split.element_order({3, 1}) == 2);
  const auto sub = split.cyclic_subgroup({1, 0});
  CHECK(sub.size() == 6);
  CHECK(split.subgroup_contains(sub, {4, 0}));
  CHECK_FALSE(split.subgroup_contains(sub, {0, 1}));
  CHECK(split.elements().size() == 12);
}

TEST_CASE("action validation") {
  // Z/10 on genus 2 over the sphere with cones (10, 5, 2)
  CHECK_NOTHROW(make_action({10, 1}, 2, {10, 5, 2}, {{1, 0}, {4, 0}, {5, 0}}));
  // image order must match the cone order
  CHECK_THROWS_AS(make_action({10, 1}, 2, {10, 5, 2}, {{2, 0}, {4, 0}, {5, 0}}), Error);
  // images must multiply to the identity
  CHECK_THROWS_AS(make_action({10, 1}, 2, {10, 5, 2}, {{1, 0}, {2, 0}, {5, 0}}), Error);
  // images must generate the whole group
  CHECK_THROWS_AS(make_action({12, 2}, 5, {12, 12, 2}, {{1, 0}, {11, 0}, {0, 1}}), Error);
  // genus must satisfy Riemann-Hurwitz
  CHECK_THROWS_AS(make_action({10, 1}, 3, {10, 5, 2}, {{1, 0}, {4, 0}, {5, 0}}), Error);
}

TEST_CASE("standard models realize the closed forms") {
  for (std::int64_t g = 2; g <= 10; ++g) {
    const auto m1 = standard_model(Family::F1, g);
    CHECK(m1.group.size() == 4 * g + 2);
    CHECK(element_tv(m1, {1, 0}) == closed_form_tv({Family::F1, 1}, g));
    const auto m2 = standard_model(Family::F2, g);
    CHECK(m2.group.size() == 4 * g);
    CHECK(element_tv(m2, {1, 0}) == closed_form_tv({Family::F2, 1}, g));
    const auto m3 = standard_model(Family::F3, g);
    CHECK(m3.group.size() == 2 * (2 * g + 2));
    CHECK(element_tv(m3, {1, 0}) == closed_form_tv({Family::F3, 1}, g));
    CHECK(element_tv(m3, m3.group.add({1, 0}, model_involution(Family::F3, g))) ==
          closed_form_tv({Family::IF3, 1}, g));
  }
  CHECK_THROWS_AS(element_tv(standard_model(Family::F1, 2), {0, 0}), Error);
}

TEST_CASE("every element tv is a valid invariant with integral valency sum") {
  for (std::int64_t g = 2; g <= 10; ++g)
    for (Family family : {Family::F1, Family::F2, Family::F3}) {
      const auto model = standard_model(family, g);
      for (const auto& h : model.group.elements()) {
        if (model.group.is_identity(h)) continue;
        const auto tv = element_tv(model, h);
        CHECK(validate_total_valency(tv).ok);  // includes integrality and RH
        if (model.group.element_order(h) == model.group.size())
          CHECK(tv.quotient_genus == 0);
      }
    }
}

TEST_CASE("full-order congruences in the cyclic models") {
  for (std::int64_t g = 2; g <= 10; ++g) {
    const auto m2 = standard_model(Family::F2, g);
    for (const auto& h : m2.group.elements()) {
      if (m2.group.element_order(h) != 4 * g) continue;
      const auto tv = element_tv(m2, h);
      const auto t1 = theta_at(tv, 4 * g);
      const auto t2 = theta_at(tv, 4 * g, true);
      CHECK(((2 * g - 1) * t1 - t2) % (4 * g) == 0);
    }
    const auto m1 = standard_model(Family::F1, g);
    for (const auto& h : m1.group.elements()) {
      if (m1.group.element_order(h) != 4 * g + 2) continue;
      const auto tv = element_tv(m1, h);
      const auto t1 = theta_at(tv, 4 * g + 2);
      const auto t2 = theta_at(tv, 2 * g + 1);
      CHECK((g * t1 - t2) % (2 * g + 1) == 0);
    }
  }
}

TEST_CASE("split-model congruence for elements fixing both large cones") {
  for (std::int64_t g = 2; g <= 10; ++g) {
    const auto m3 = standard_model(Family::F3, g);
    for (std::int64_t k = 1; k <= 2 * g + 1; ++k) {
      if (std::gcd(k, 2 * g + 2) != 1) continue;  // full order, fixes both large cones
      const auto tv = element_tv(m3, {k, 0});
      const auto t1 = theta_at(tv, 2 * g + 2);
      const auto t2 = theta_at(tv, 2 * g + 2, true);
      const auto t3 = theta_at(tv, g + 1);
      CHECK(t1 == t2);
      CHECK((t3 - t1 * g) % (g + 1) == 0);
    }
  }
}

TEST_CASE("hyperelliptic involution counts") {
  for (std::int64_t g = 2; g <= 10; ++g) {
    TotalValency hyper;
    hyper.genus = g;
    hyper.order = 2;
    hyper.quotient_genus = 0;
    hyper.valencies.assign(static_cast<std::size_t>(2 * g + 2), make_valency(1, 2));

    for (Family family : {Family::F1, Family::F2}) {
      const auto model = standard_model(family, g);
      const auto I = model_involution(family, g);
      CHECK(fixed_point_count(model, I) == 2 * g + 2);
      int hits = 0;
      for (const auto& h : model.group.elements()) {
        if (model.group.is_identity(h)) continue;
        if (nielsen_equal(element_tv(model, h), hyper)) {
          ++hits;
          CHECK(h == model.group.power({1, 0}, model.group.size() / 2));
        }
      }
      CHECK(hits == 1);  // f^{n/2} is the only hyperelliptic involution
    }

    // in the split model the I-coset holds two involutions, I and I*f3^{g+1},
    // but only I has the full 2g+2 fixed points
    const auto m3 = standard_model(Family::F3, g);
    int hits = 0;
    for (const auto& h : m3.group.elements()) {
      if (m3.group.is_identity(h)) continue;
      if (!nielsen_equal(element_tv(m3, h), hyper)) continue;
      ++hits;
      CHECK(h == model_involution(Family::F3, g));
      CHECK(fixed_point_count(m3, h) == 2 * g + 2);
    }
    CHECK(hits == 1);
    const Element other = m3.group.add(model_involution(Family::F3, g), {g + 1, 0});
    CHECK(m3.group.element_order(other) == 2);
    CHECK(fixed_point_count(m3, other) == (g % 2 == 0 ? 2 : 0));
  }
}

TEST_CASE("pair trichotomy") {
  for (std::int64_t g = 2; g <= 10; ++g) {
    const auto m1 = standard_model(Family::F1, g);
    const auto r1 = pair_case(m1, {1, 0}, model_involution(Family::F1, g));
    CHECK(r1.pair_case == PairCase::case_ii);
    CHECK(r1.n == 2 * r1.n_bar);
    CHECK(r1.fixed_cones == 1);

    const auto m2 = standard_model(Family::F2, g);
    const auto r2 = pair_case(m2, {1, 0}, model_involution(Family::F2, g));
    CHECK(r2.pair_case == PairCase::case_i);
    CHECK(r2.n == 2 * r2.n_bar);
    CHECK(r2.fixed_cones == 2);

    const auto m3 = standard_model(Family::F3, g);
    const auto r3 = pair_case(m3, {1, 0}, model_involution(Family::F3, g));
    CHECK(r3.pair_case == PairCase::case_iii);
    CHECK(r3.n == r3.n_bar);
    CHECK(r3.fixed_cones == 0);

    // the second argument must actually be a hyperelliptic involution
    CHECK_THROWS_AS(pair_case(m1, {1, 0}, {1, 0}), Error);
    CHECK_THROWS_AS(pair_case(m3, {1, 0}, {g + 1, 0}), Error);
  }
}

TEST_CASE("quotient orbifold signatures") {
  for (std::int64_t g = 2; g <= 10; ++g) {
    const auto m3 = standard_model(Family::F3, g);
    // quotient by <f3> is the sphere with cones (2g+2, 2g+2, g+1)
    const auto sig = quotient_signature(m3, {1, 0});
    CHECK(sig.genus == 0);
    CHECK(sig.cone_orders == std::vector<std::int64_t>{g + 1, 2 * g + 2, 2 * g + 2});
    // quotient by the full involution-extended group
    const auto m1 = standard_model(Family::F1, g);
    const auto full = quotient_signature(m1, {1, 0});
    CHECK(full.genus == 0);
    CHECK(full.cone_orders == std::vector<std::int64_t>{2, 2 * g + 1, 4 * g + 2});
    // quotient by the hyperelliptic involution: sphere with 2g+2 half points
    const auto by_inv = quotient_signature(m1, model_involution(Family::F1, g));
    CHECK(by_inv.genus == 0);
    CHECK(by_inv.cone_orders == std::vector<std::int64_t>(2 * g + 2, 2));
    // quotient by the identity is the surface itself
    const auto trivial = quotient_signature(m1, {0, 0});
    CHECK(trivial.genus == g);
    CHECK(trivial.cone_orders.empty());
  }
}

TEST_CASE("cyclic power oracle agrees with the group models") {
  for (std::int64_t g = 2; g <= 6; ++g)
    for (Family family : {Family::F1, Family::F2}) {
      const auto model = standard_model(family, g);
      const auto base = element_tv(model, {1, 0});
      for (std::int64_t k = 2; k < model.group.size(); ++k)
        CHECK(cyclic_power_tv(base, k) == element_tv(model, {k, 0}));
    }
  // in the split model, powers of f3 run through the cyclic factor
  for (std::int64_t g = 2; g <= 6; ++g) {
    const auto m3 = standard_model(Family::F3, g);
    const auto base = element_tv(m3, {1, 0});
    for (std::int64_t k = 2; k <= 2 * g + 1; ++k)
      CHECK(cyclic_power_tv(base, k) == element_tv(m3, {k, 0}));
  }
}

TEST_CASE("pair classification by total valency") {
  for (std::int64_t g = 2; g <= 6; ++g) {
    const auto c1 = classify_pair(g, closed_form_tv({Family::F1, 1}, g), std::nullopt);
    REQUIRE(c1.has_value());
    CHECK(c1->group == StandardGroup::G1);
    const auto c2 = classify_pair(g, closed_form_tv({Family::F2, 1}, g), std::nullopt);
    REQUIRE(c2.has_value());
    CHECK(c2->group == StandardGroup::G2);
    const auto c3 = classify_pair(g, closed_form_tv({Family::F3, 1}, g), std::nullopt);
    REQUIRE(c3.has_value());
    CHECK(c3->group == StandardGroup::G3);
    // order-7 genus-3 style probes have no hyperelliptic pair
    if (g == 3)
      CHECK_FALSE(classify_pair(3, tv_from_literal("[3,7;1/7+2/7+4/7]"), std::nullopt).has_value());
  }
  // supplying the composed valency pins the I-coset element
  const auto composed = classify_pair(2, closed_form_tv({Family::IF3, 1}, 2),
                                      closed_form_tv({Family::F3, 1}, 2));
  REQUIRE(composed.has_value());
  CHECK(composed->group == StandardGroup::G3);
  CHECK(composed->note.find("f3") != std::string::npos);
}
