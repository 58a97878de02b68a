#include <cmath>
#include <numbers>
#include <random>

#include "crown/hermitian.hpp"
#include "doctest.h"

using namespace crown::hermitian;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rank criterion is equivalent to the rank relation") {
  const auto pairs = enumerate_pairs(6);
  CHECK(pairs.size() > 30);
  for (const auto& c : pairs) {
    CAPTURE(c.g);
    CHECK(classify_xi0(c) == (2 * c.rank_g == c.rank_s));
    CHECK(c.rank_g >= 1);
    CHECK(c.rank_s >= c.rank_g);
  }
}

TEST_CASE("spot rows of the equal-crown list") {
  for (long p = 1; p <= 3; ++p)
    for (long q = 1; q <= 3; ++q) {
      const auto c = instantiate("sp_pq", {{"p", p}, {"q", q}});
      CHECK(classify_xi0(c));
      CHECK(c.published);
    }
  for (long n = 1; n <= 5; ++n) CHECK(classify_xi0(instantiate("sp_nc", {{"n", n}})));
  for (long p = 3; p <= 7; ++p) {
    const auto c = instantiate("so_1p", {{"p", p}});
    CHECK(classify_xi0(c));
    CHECK(c.rank_g == 1);
    CHECK(c.rank_s == 2);
  }
  // so(p, q) with p, q >= 2 has rank min(p,q) against rank min(p,q) of su(p,q)
  CHECK_FALSE(classify_xi0(instantiate("so_pq", {{"p", 2}, {"q", 3}})));
}

TEST_CASE("label matching") {
  const auto m = match_pair("so(1,5)");
  REQUIRE_FALSE(m.empty());
  bool found = false;
  for (const auto& c : m) found = found || (c.row_id == "so_1p" && c.params.at("p") == 5);
  CHECK(found);
  CHECK_NOTHROW(match_pair("sp(2,1)/su(4,2)"));
  CHECK_THROWS_AS(match_pair("g2(2)"), std::invalid_argument);
  CHECK_THROWS_AS(match_pair("so(1"), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("so_1p", {{"p", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("sp_pq", {{"p", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(classification_json({}), std::invalid_argument);
  CHECK(classification_json(m).find("\"row\"") != std::string::npos);
}

TEST_CASE("Omega equality of the restricted root systems agrees with the rank criterion") {
  int encoded = 0;
  for (const auto& c : enumerate_pairs(4)) {
    const auto s = sigma_cross_check(c);
    if (!s.encoded) continue;
    ++encoded;
    CAPTURE(c.g);
    CAPTURE(s.detail);
    CHECK(s.omega_equal == classify_xi0(c));
  }
  CHECK(encoded > 10);
}

TEST_CASE("box polytope") {
  for (int s = 1; s <= 4; ++s) {
    CHECK(crown::enumerate_vertices(omega0_box(s)).vertices.size() == (std::size_t{1} << s));
    CHECK(omega0_box_matches(s, "C"));
    CHECK(omega0_box_matches(s, "BC"));
  }
  CHECK_THROWS_AS(omega0_box(0), std::invalid_argument);
  CHECK_THROWS_AS(omega0_box_matches(2, "A"), std::invalid_argument);
}

TEST_CASE("strip and disk points") {
  CHECK_THROWS_AS(StripPoint::make({cplx(0, kPi / 4)}), std::domain_error);
  CHECK_THROWS_AS(DiskPoint::make({cplx(1, 0)}), std::domain_error);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> re(-3, 3), im(-kPi / 4 * 0.99, kPi / 4 * 0.99);
  for (int it = 0; it < 100; ++it) {
    const auto p = StripPoint::make({cplx(re(rng), im(rng)), cplx(re(rng), im(rng))});
    const auto d = tanh_map(p);
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(std::abs(d.w[j]) < 1);
      CHECK(std::abs(d.w[j] - std::tanh(p.z[j])) <= 1e-15);
    }
    const auto back = artanh_map(d);
    for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(back.z[j] - p.z[j]) <= 1e-9 * (1 + std::abs(p.z[j])));
  }
}

TEST_CASE("Mobius action is a group action preserving the ball") {
  std::mt19937_64 rng(7);
  struct G {
    MatrixGroup group;
    int p, q;
  };
  for (const G g : {G{MatrixGroup::kSUpq, 2, 3}, G{MatrixGroup::kSUpq, 1, 1}, G{MatrixGroup::kSOstar, 4, 4}}) {
    for (int it = 0; it < 20; ++it) {
      const CMat a = random_group_element(g.group, g.p, g.q, rng, 0.4);
      const CMat b = random_group_element(g.group, g.p, g.q, rng, 0.4);
      CHECK(group_residual(a, g.group, g.p) <= 1e-10);
      const CMat Z = random_ball_point(g.group, g.p, g.q, rng, 0.8);
      REQUIRE(in_ball(Z, g.group));
      const CMat lhs = mobius(a * b, Z, g.group);
      const CMat rhs = mobius(a, mobius(b, Z, g.group), g.group);
      CHECK((lhs - rhs).norm() <= 1e-9 * (1 + lhs.norm()));
      CHECK(in_ball(lhs, g.group));
      const CMat id = CMat::Identity(g.p + g.q, g.p + g.q);
      CHECK((mobius(id, Z, g.group) - Z).norm() <= 1e-14);
    }
  }
  CMat bad = CMat::Identity(5, 5);
  bad(0, 0) = 2;
  CHECK(group_residual(bad, MatrixGroup::kSUpq, 2) > 0.5);
  CHECK_THROWS_AS(mobius(bad, CMat::Zero(2, 3), MatrixGroup::kSUpq), std::invalid_argument);
  CHECK_THROWS_AS(mobius(CMat::Identity(4, 4), CMat::Zero(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(random_group_element(MatrixGroup::kNone, 1, 1, rng), std::invalid_argument);
  CHECK_FALSE(in_ball(CMat::Identity(2, 2)));
}

TEST_CASE("flat orbit of the origin matches the tanh form") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> re(-2, 2), im(-0.75, 0.75);
  for (int p = 1; p <= 3; ++p) {
    std::vector<cplx> z;
    for (int j = 0; j < p; ++j) z.emplace_back(re(rng), im(rng));
    const auto r = appendix_orbit_check(AppendixCase::kSOpq, p, 4, z);
    CHECK(r.residual <= 1e-10);
    CHECK(r.gram_residual <= 1e-10);
    CHECK(r.in_ball);
  }
  for (int n : {4, 5, 6}) {
    std::vector<cplx> z;
    for (int j = 0; j < n / 2; ++j) z.emplace_back(re(rng), im(rng));
    const auto r = appendix_orbit_check(AppendixCase::kSOnC, n, 0, z);
    CHECK(r.residual <= 1e-10);
    CHECK(r.in_ball);
  }
  CHECK_THROWS_AS(appendix_orbit_check(AppendixCase::kSOpq, 1, 3, {cplx(0, 0.8)}), std::domain_error);
  CHECK_THROWS_AS(appendix_orbit_check(AppendixCase::kSOpq, 2, 3, {cplx(0, 0.1)}), std::invalid_argument);
  CHECK_THROWS_AS(appendix_orbit_check(AppendixCase::kSOpq, 4, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_appendix_case("so_xx"), std::invalid_argument);
  CHECK(parse_appendix_case(to_string(AppendixCase::kSOnC)) == AppendixCase::kSOnC);
}
