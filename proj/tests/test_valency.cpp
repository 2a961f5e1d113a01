#include <doctest.h>

#include <numeric>

#include "core/valency.hpp"

using namespace hyptv;

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(1, 2) == 1);
  CHECK(mod_inverse(3, 10) == 7);
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(9, 10) == 9);
  CHECK_THROWS_AS(mod_inverse(2, 10), Error);  // not coprime
  for (std::int64_t lambda = 2; lambda <= 40; ++lambda)
    for (std::int64_t nu = 1; nu < lambda; ++nu) {
      if (std::gcd(nu, lambda) != 1) continue;
      const auto theta = mod_inverse(nu, lambda);
      CHECK(theta >= 1);
      CHECK(theta < lambda);
      CHECK((nu * theta) % lambda == 1);
    }
}

TEST_CASE("valency construction rejects bad fractions") {
  CHECK_THROWS_AS(make_valency(0, 5), Error);
  CHECK_THROWS_AS(make_valency(5, 5), Error);
  CHECK_THROWS_AS(make_valency(2, 4), Error);  // not coprime
  CHECK_THROWS_AS(make_valency(1, 1), Error);
  CHECK(make_valency(3, 7).theta == 3);
}

TEST_CASE("canonical ordering: lambda descending, theta ascending") {
  TotalValency tv;
  tv.genus = 2;
  tv.order = 10;
  tv.quotient_genus = 0;
  tv.valencies = {make_valency(1, 2), make_valency(2, 5), make_valency(1, 10)};
  canonicalize(tv);
  CHECK(tv.valencies[0] == make_valency(1, 10));
  CHECK(tv.valencies[1] == make_valency(2, 5));
  CHECK(tv.valencies[2] == make_valency(1, 2));
}

TEST_CASE("validation failure kinds") {
  auto tv = tv_from_literal("[2,10;1/10+2/5+1/2]");
  CHECK(validate_total_valency(tv).ok);

  tv.valencies[0].lambda = 7;  // 7 does not divide 10
  CHECK(validate_total_valency(tv).failure == ValidationFailure::divisibility);

  tv = tv_from_literal("[2,10;1/10+2/5+1/2]");
  tv.valencies[2] = {1, 5};  // sum 1/10+2/5+1/5 is not an integer
  CHECK(validate_total_valency(tv).failure == ValidationFailure::integrality);

  tv = tv_from_literal("[2,10;1/10+2/5+1/2]");
  tv.quotient_genus = 1;
  CHECK(validate_total_valency(tv).failure == ValidationFailure::riemann_hurwitz);

  tv = tv_from_literal("[2,10;1/10+2/5+1/2]");
  tv.order = 0;
  CHECK(validate_total_valency(tv).failure == ValidationFailure::structure);
  CHECK_THROWS_AS(require_valid(tv), Error);
}

TEST_CASE("Riemann-Hurwitz forced quotient genus") {
  // involution with 2g+2 fixed points has a sphere quotient
  for (std::int64_t g = 2; g <= 8; ++g) {
    std::vector<Valency> v(static_cast<std::size_t>(2 * g + 2), make_valency(1, 2));
    const auto h = rh_quotient_genus(g, 2, v);
    REQUIRE(h.has_value());
    CHECK(*h == 0);
  }
  // free involution on genus 3 over genus 2
  CHECK(rh_quotient_genus(3, 2, {}) == 2);
  // no integer solution
  CHECK_FALSE(rh_quotient_genus(2, 4, {make_valency(1, 4), make_valency(1, 4)}).has_value());
  // probe with two fixed points: forced genus g/2 for even g only
  std::vector<Valency> two = {make_valency(1, 2), make_valency(1, 2)};
  CHECK(rh_quotient_genus(2, 2, two) == 1);
  CHECK(rh_quotient_genus(4, 2, two) == 2);
  CHECK_FALSE(rh_quotient_genus(3, 2, two).has_value());
}

TEST_CASE("nielsen_equal ignores ordering, nothing else") {
  const auto a = tv_from_literal("[2,10;1/10+2/5+1/2]");
  auto b = a;
  std::swap(b.valencies[0], b.valencies[2]);
  CHECK(nielsen_equal(a, b));
  b = a;
  b.order = 5;
  CHECK_FALSE(nielsen_equal(a, b));
  b = a;
  b.valencies[1] = make_valency(3, 5);
  CHECK_FALSE(nielsen_equal(a, b));
}

TEST_CASE("closed forms of the three families") {
  CHECK(tv_to_literal(closed_form_tv({Family::F1, 1}, 2)) == "[2,10;1/10+2/5+1/2]");
  CHECK(tv_to_literal(closed_form_tv({Family::F2, 1}, 2)) == "[2,8;1/8+3/8+1/2]");
  CHECK(tv_to_literal(closed_form_tv({Family::F3, 1}, 2)) == "[2,6;1/6+1/6+2/3]");
  for (std::int64_t g = 2; g <= 10; ++g) {
    const auto f1 = closed_form_tv({Family::F1, 1}, g);
    CHECK(f1.order == 4 * g + 2);
    CHECK(f1.valencies == std::vector<Valency>{make_valency(1, 4 * g + 2),
                                               make_valency(g, 2 * g + 1), make_valency(1, 2)});
    const auto f2 = closed_form_tv({Family::F2, 1}, g);
    CHECK(f2.order == 4 * g);
    CHECK(f2.valencies == std::vector<Valency>{make_valency(1, 4 * g),
                                               make_valency(2 * g - 1, 4 * g),
                                               make_valency(1, 2)});
    const auto f3 = closed_form_tv({Family::F3, 1}, g);
    CHECK(f3.order == 2 * g + 2);
    CHECK(f3.valencies == std::vector<Valency>{make_valency(1, 2 * g + 2),
                                               make_valency(1, 2 * g + 2),
                                               make_valency(g, g + 1)});
    for (const auto& tv : {f1, f2, f3}) {
      CHECK(tv.quotient_genus == 0);
      CHECK(validate_total_valency(tv).ok);
    }
  }
}

TEST_CASE("involution-composed closed forms") {
  CHECK(tv_to_literal(closed_form_tv({Family::IF3, 1}, 2)) == "[2,6;5/6+5/6+1/3]");
  CHECK(tv_to_literal(closed_form_tv({Family::IF3, 2}, 2)) == "[2,6;1/3+2/3+1/2+1/2]");
  for (std::int64_t g = 2; g <= 10; ++g) {
    // If3 is conjugate to f3^{2g+1}; If3^2 is conjugate to no power of f3
    CHECK(nielsen_equal(closed_form_tv({Family::IF3, 1}, g),
                        closed_form_tv({Family::F3, 2 * g + 1}, g)));
    const auto composed_sq = closed_form_tv({Family::IF3, 2}, g);
    for (std::int64_t k = 1; k <= 2 * g + 1; ++k)
      CHECK_FALSE(nielsen_equal(composed_sq, closed_form_tv({Family::F3, k}, g)));
  }
}

TEST_CASE("tv_power") {
  const auto f1 = tv_from_literal("[2,10;1/10+2/5+1/2]");
  CHECK(tv_power(f1, 1) == f1);
  CHECK(tv_to_literal(tv_power(f1, 2)) == "[2,5;1/5+2/5+2/5]");
  CHECK(tv_to_literal(tv_power(f1, 5)) == "[2,2;1/2+1/2+1/2+1/2+1/2+1/2]");
  CHECK(tv_to_literal(tv_power(f1, 4)) == "[2,5;1/5+1/5+3/5]");
  // exponent taken mod the order; the order-th power is the identity
  CHECK(tv_power(f1, 13) == tv_power(f1, 3));
  CHECK(tv_to_literal(tv_power(f1, 10)) == "[2,1;]");
  CHECK(tv_power(f1, 10).quotient_genus == 2);
  CHECK_THROWS_AS(tv_power(f1, 0), Error);
  // power of a power composes
  for (std::int64_t g = 2; g <= 6; ++g) {
    const auto tv = closed_form_tv({Family::F2, 1}, g);
    for (std::int64_t k = 2; k < tv.order; ++k)
      if ((2 * k) % tv.order != 0) CHECK(tv_power(tv_power(tv, k), 2) == tv_power(tv, 2 * k));
  }
}

TEST_CASE("classification round-trips every family element") {
  for (std::int64_t g = 2; g <= 6; ++g) {
    const std::vector<std::pair<Family, std::int64_t>> limits = {
        {Family::F1, 4 * g + 1}, {Family::F2, 4 * g - 1},
        {Family::F3, 2 * g + 1}, {Family::IF3, 2 * g + 2}};
    for (const auto& [family, limit] : limits)
      for (std::int64_t k = 1; k <= limit; ++k) {
        const auto tv = closed_form_tv({family, k}, g);
        const auto tag = classify_hyperelliptic(tv);
        REQUIRE(tag.has_value());
        CHECK(nielsen_equal(closed_form_tv(*tag, g), tv));
      }
  }
}

TEST_CASE("classification scan order and misses") {
  // the hyperelliptic involution itself comes back as the F1 half-order power
  const auto tag = classify_hyperelliptic(tv_from_literal("[2,2;1/2 x6]"));
  REQUIRE(tag.has_value());
  CHECK(*tag == FamilyTag{Family::F1, 5});
  // order-7 action on genus 3 commuting with no involution
  CHECK_FALSE(classify_hyperelliptic(tv_from_literal("[3,7;1/7+2/7+4/7]")).has_value());
  // two-fixed-point involution on even genus coincides with an odd f3 power
  const auto probe = classify_hyperelliptic(tv_from_literal("[2,2;1/2+1/2]"));
  REQUIRE(probe.has_value());
  CHECK(*probe == FamilyTag{Family::F3, 3});
  CHECK_THROWS_AS(classify_hyperelliptic(tv_from_literal("[1,4;1/4+1/4+1/2]")), Error);
}

TEST_CASE("JSON round-trip with stable key order") {
  const auto tv = closed_form_tv({Family::F1, 1}, 2);
  const std::string json = tv_to_json(tv);
  CHECK(json ==
        R"({"g":2,"n":10,"quotient_genus":0,"valencies":[{"theta":1,"lambda":10},{"theta":2,"lambda":5},{"theta":1,"lambda":2}]})");
  CHECK(tv_from_json(json) == tv);
  CHECK(tv_parse(json) == tv);
  CHECK_THROWS_AS(tv_from_json("{"), Error);
  CHECK_THROWS_AS(tv_from_json(R"({"g":2})"), Error);
}

TEST_CASE("literal syntax") {
  CHECK(tv_parse("[2,10;1/10+2/5+1/2]") == closed_form_tv({Family::F1, 1}, 2));
  // multiplicity markers: x, *, and the multiplication sign
  const auto involution = tv_from_literal("[2,2;1/2 x6]");
  CHECK(involution.valencies.size() == 6);
  CHECK(tv_from_literal("[2,2;1/2*6]") == involution);
  CHECK(tv_from_literal("[2,2; 1/2 \xc3\x97 6]") == involution);
  CHECK(involution.quotient_genus == 0);
  // explicit quotient genus must match Riemann-Hurwitz
  CHECK(tv_from_literal("[2,2;1/2x6]@0") == involution);
  CHECK_THROWS_AS(tv_from_literal("[2,2;1/2x6]@1"), Error);
  CHECK(tv_from_literal("[3,2;]@2").quotient_genus == 2);  // free action
  CHECK_THROWS_AS(tv_from_literal("[2,10;1/10+2/5"), Error);
  CHECK_THROWS_AS(tv_from_literal("[2,10;1/0]"), Error);
  CHECK_THROWS_AS(tv_from_literal("nonsense"), Error);
  // round-trip through the printer
  for (std::int64_t g = 2; g <= 5; ++g)
    for (Family family : {Family::F1, Family::F2, Family::F3, Family::IF3}) {
      const auto tv = closed_form_tv({family, 1}, g);
      CHECK(tv_from_literal(tv_to_literal(tv)) == tv);
    }
}

TEST_CASE("family names") {
  CHECK(family_from_name("F1") == Family::F1);
  CHECK(family_from_name("IF3") == Family::IF3);
  CHECK_FALSE(family_from_name("F4").has_value());
  CHECK(family_generator_order(Family::F1, 3) == 14);
  CHECK(family_generator_order(Family::F2, 3) == 12);
  CHECK(family_generator_order(Family::F3, 3) == 8);
}
