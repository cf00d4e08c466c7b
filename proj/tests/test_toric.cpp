#include <gtest/gtest.h>

#include "okounkov/errors.hpp"
#include "okounkov/json_io.hpp"
#include "okounkov/toric.hpp"
#include "oracles.hpp"

using namespace okounkov;

namespace {

RatVec v(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.push_back(Rat(x));
  return out;
}

ToricDivisor div(std::initializer_list<long> xs) { return ToricDivisor{v(xs)}; }

Fan p2_fan() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }
Fan bl1_fan() { return Fan(2, {{1, 0}, {0, 1}, {1, 1}, {-1, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}); }
Fan bl2_fan() {
  return Fan(2, {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {-1, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 4}, {4, 0}});
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  for (const char* name : {"p2", "bl1", "bl2", "bl3", "p1xp1"}) out.push_back(load_fixture(oracle::fixture_path(name)));
  return out;
}

// Linearly equivalent representative vanishing on every ray of the cone.
ToricDivisor normalized_on(const Fan& fan, const ToricDivisor& d, const std::vector<std::size_t>& cone) {
  RatMat a;
  RatVec b;
  for (auto idx : cone) {
    a.push_back(fan.ray(idx));
    b.push_back(-d.coeffs[idx]);
  }
  auto m = solve(a, b);
  EXPECT_TRUE(m.has_value());
  return add_principal(fan, d, *m);
}

// Brute force: every lattice point of P_{kD} in a box, valued by hand, divided by k.
Polytope brute_force_body(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags, long k, long box) {
  const std::size_t n = fan.dim();
  std::vector<RatVec> pts;
  std::vector<long> u(n, -box);
  for (;;) {
    bool inside = true;
    for (std::size_t r = 0; r < fan.rays().size(); ++r) {
      long pair = 0;
      for (std::size_t j = 0; j < n; ++j) pair += u[j] * fan.rays()[r][j];
      if (Rat(pair) < -k * d.coeffs[r]) inside = false;
    }
    if (inside) {
      RatVec val;
      for (const auto& flag : flags.flags)
        for (auto idx : flag) {
          long pair = 0;
          for (std::size_t j = 0; j < n; ++j) pair += u[j] * fan.rays()[idx][j];
          val.push_back((Rat(pair) + k * d.coeffs[idx]) / k);
        }
      pts.push_back(val);
    }
    std::size_t j = 0;
    while (j < n && ++u[j] > box) u[j++] = -box;
    if (j == n) break;
  }
  return hull(pts, n * flags.r());
}

}  // namespace

TEST(Fan, RejectsInvalidFans) {
  EXPECT_THROW(Fan(2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}), InvalidInput);  // not primitive
  EXPECT_THROW(Fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}), InvalidInput);  // det 2
  EXPECT_THROW(Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}), InvalidInput);          // incomplete
  EXPECT_THROW(Fan(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, {{0, 1}, {1, 2}, {2, 0}}), InvalidInput);  // unused ray
  EXPECT_THROW(Fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}}),
               InvalidInput);  // a cone listed twice
  EXPECT_NO_THROW(p2_fan());
  EXPECT_NO_THROW(bl2_fan());
}

TEST(Fan, ThreeDimensionalProjectiveSpace) {
  Fan p3(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
         {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  Polytope body = extended_body_toric(p3, div({0, 0, 0, 1}), ToricFlagSpec{{{0, 1, 2}}});
  EXPECT_EQ(body, hull({v({0, 0, 0}), v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})}, 3));
  EXPECT_EQ(volume(body), RadVal(Rat(1, 6)));
  EXPECT_EQ(semigroup_body_approx(p3, div({0, 0, 0, 1}), ToricFlagSpec{{{0, 1, 2}}}, 1), body);
}

TEST(Flags, Validation) {
  Fan f = bl2_fan();
  EXPECT_NO_THROW(validate_flags(f, ToricFlagSpec{{{2, 0}, {3, 1}}}));
  EXPECT_THROW(validate_flags(f, ToricFlagSpec{{{2, 0}, {0, 4}}}), InvalidInput);  // shared ray
  EXPECT_THROW(validate_flags(f, ToricFlagSpec{{{0, 1}}}), InvalidInput);          // not a max cone
  EXPECT_THROW(validate_flags(f, ToricFlagSpec{{}}), InvalidInput);
  // (e1+e2, e2) and (-e1-e2, e1): no shared ray, but the cones span a line; the intersection is still {0}
  EXPECT_NO_THROW(validate_flags(f, ToricFlagSpec{{{2, 1}, {4, 0}}}));
}

TEST(DivisorPolytope, Examples) {
  EXPECT_EQ(divisor_polytope(p2_fan(), div({0, 0, 1})), hull({v({0, 0}), v({1, 0}), v({0, 1})}, 2));
  EXPECT_EQ(divisor_polytope(p2_fan(), div({0, 0, 0})), hull({v({0, 0})}, 2));
  EXPECT_EQ(divisor_polytope(bl1_fan(), div({0, 0, 0, 1})), hull({v({0, 0}), v({1, 0}), v({0, 1})}, 2));
  // -H has no sections
  EXPECT_TRUE(divisor_polytope(p2_fan(), div({0, 0, -1})).empty());
}

TEST(FlagMatrix, Examples) {
  EXPECT_EQ(flag_matrix(p2_fan(), ToricFlagSpec{{{0, 1}}}), identity(2));
  EXPECT_EQ(flag_matrix(bl1_fan(), ToricFlagSpec{{{2, 0}}}), (RatMat{v({1, 1}), v({1, 0})}));
  EXPECT_EQ(flag_matrix(bl2_fan(), ToricFlagSpec{{{2, 0}, {3, 1}}}),
            (RatMat{v({1, 1}), v({1, 0}), v({-1, 0}), v({0, 1})}));
}

TEST(ExtendedBody, SingleFlagExamples) {
  EXPECT_EQ(extended_body_toric(p2_fan(), div({0, 0, 1}), ToricFlagSpec{{{0, 1}}}),
            hull({v({0, 0}), v({1, 0}), v({0, 1})}, 2));
  EXPECT_EQ(extended_body_toric(bl1_fan(), div({0, 0, 0, 1}), ToricFlagSpec{{{2, 0}}}),
            hull({v({0, 0}), v({1, 1}), v({1, 0})}, 2));
}

TEST(ExtendedBody, TwoPointBlowupNeedsARepresentative) {
  // pi^*O(1) on Bl2 has no representative vanishing on both flag cones
  EXPECT_THROW(extended_body_toric(bl2_fan(), div({0, 0, 0, 1, 1}), ToricFlagSpec{{{2, 0}, {3, 1}}}),
               UnrepresentedDivisor);
  try {
    extended_body_toric(bl2_fan(), div({0, 0, 0, 1, 1}), ToricFlagSpec{{{2, 0}, {3, 1}}});
  } catch (const UnrepresentedDivisor& e) {
    EXPECT_NE(std::string(e.what()).find("linearly equivalent"), std::string::npos);
  }
  ToricDivisor half{RatVec{Rat(0), Rat(0), Rat(1, 2)}};
  EXPECT_THROW(extended_body_toric(p2_fan(), half, ToricFlagSpec{{{0, 1}}}), InvalidInput);
}

TEST(ExtendedBody, MonomialBodyOnTwoPointBlowup) {
  // the limit of the sampler: phi(P_D) shifted by the flag-ray coefficients
  Polytope body = monomial_body(bl2_fan(), div({0, 0, 0, 1, 1}), ToricFlagSpec{{{2, 0}, {3, 1}}});
  // P_D = conv{(0,0),(1,0),(0,1)}; rows (1,1),(1,0),(-1,0),(0,1); offsets (0,0,1,0)
  EXPECT_EQ(body, hull({v({0, 0, 1, 0}), v({1, 1, 0, 0}), v({1, 0, 1, 1})}, 4));
  EXPECT_EQ(body, brute_force_body(bl2_fan(), div({0, 0, 0, 1, 1}), ToricFlagSpec{{{2, 0}, {3, 1}}}, 1, 3));
}

TEST(MonomialValuation, Examples) {
  Fan f = bl1_fan();
  ToricFlagSpec flag{{{2, 0}}};
  auto val = monomial_valuation(f, div({0, 0, 0, 1}), flag, {Int(1), Int(0)});
  EXPECT_EQ(val.entries, (std::vector<Int>{1, 1}));
  val = monomial_valuation(f, div({0, 0, 0, 1}), flag, {Int(0), Int(1)});
  EXPECT_EQ(val.entries, (std::vector<Int>{1, 0}));
  val = monomial_valuation(f, div({0, 0, 0, 1}), flag, {Int(0), Int(0)});
  EXPECT_EQ(val.entries, (std::vector<Int>{0, 0}));
  EXPECT_THROW(monomial_valuation(f, div({0, 0, 0, 1}), flag, {Int(2), Int(0)}), InvalidInput);
}

TEST(MonomialValuation, BlocksDependOnlyOnTheirFlag) {
  for (const auto& fx : all_fixtures()) {
    if (fx.flags.r() < 2) continue;
    for (const auto& u : lattice_points(divisor_polytope(fx.fan, fx.divisor))) {
      auto full = monomial_valuation(fx.fan, fx.divisor, fx.flags, u);
      for (std::size_t i = 0; i < fx.flags.r(); ++i) {
        auto single = monomial_valuation(fx.fan, fx.divisor, ToricFlagSpec{{fx.flags.flags[i]}}, u);
        for (std::size_t j = 0; j < fx.fan.dim(); ++j) EXPECT_EQ(full.entries[i * fx.fan.dim() + j], single.entries[j]);
      }
    }
  }
}

TEST(LatticePoints, SortedAndComplete) {
  auto pts = lattice_points(divisor_polytope(p2_fan(), div({0, 0, 2})));
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  auto cube = lattice_points(hull({v({0, 0}), v({2, 0}), v({0, 2}), v({2, 2})}, 2));
  EXPECT_EQ(cube.size(), 9u);
}

TEST(Sampler, MatchesExactBodyAtSaturation) {
  for (const auto& fx : all_fixtures()) {
    Polytope limit = monomial_body(fx.fan, fx.divisor, fx.flags);
    Polytope prev(limit.ambient_dim());
    for (long m = 1; m <= fx.saturation_degree + 1; ++m) {
      Polytope approx = semigroup_body_approx(fx.fan, fx.divisor, fx.flags, m);
      EXPECT_TRUE(contains(limit, approx)) << fx.name;
      if (!prev.empty()) {
        EXPECT_TRUE(contains(approx, prev)) << fx.name;
      }
      if (m >= fx.saturation_degree) {
        EXPECT_EQ(approx, limit) << fx.name << " m=" << m;
      }
      prev = approx;
    }
  }
}

TEST(Sampler, TrivialDivisorGivesOrigin) {
  for (long m = 1; m <= 3; ++m)
    EXPECT_EQ(semigroup_body_approx(p2_fan(), div({0, 0, 0}), ToricFlagSpec{{{0, 1}}}, m), hull({v({0, 0})}, 2));
}

TEST(ExtendedBody, AgreesWithBruteForceEnumeration) {
  for (const auto& fx : all_fixtures()) {
    for (long k : {1, 2}) {
      Polytope brute = brute_force_body(fx.fan, fx.divisor, fx.flags, k, 4);
      EXPECT_EQ(monomial_body(fx.fan, fx.divisor, fx.flags), brute) << fx.name;
    }
  }
}

TEST(ExtendedBody, Homogeneity) {
  for (const auto& fx : all_fixtures()) {
    Polytope base = monomial_body(fx.fan, fx.divisor, fx.flags);
    for (long m : {1, 2, 3}) {
      EXPECT_EQ(monomial_body(fx.fan, Rat(m) * fx.divisor, fx.flags), scale(base, Rat(m))) << fx.name;
      if (fx.flags.r() == 1) {
        EXPECT_EQ(extended_body_toric(fx.fan, Rat(m) * fx.divisor, fx.flags), scale(base, Rat(m))) << fx.name;
      }
    }
  }
}

TEST(ExtendedBody, Superadditivity) {
  Fan p2 = p2_fan();
  ToricFlagSpec flag{{{0, 1}}};
  Polytope one = extended_body_toric(p2, div({0, 0, 1}), flag);
  EXPECT_EQ(minkowski_sum(one, one), extended_body_toric(p2, div({0, 0, 2}), flag));
  for (const auto& fx : all_fixtures()) {
    // pairs of effective divisors supported away from the flag rays
    std::vector<ToricDivisor> ds{fx.divisor};
    for (std::size_t r = 0; r < fx.fan.rays().size(); ++r) {
      bool on_flag = false;
      for (const auto& f : fx.flags.flags)
        on_flag = on_flag || std::find(f.begin(), f.end(), r) != f.end();
      if (!on_flag) ds.push_back(ToricDivisor{unit_vector(fx.fan.rays().size(), r)});
    }
    for (const auto& a : ds)
      for (const auto& b : ds) {
        Polytope lhs = minkowski_sum(monomial_body(fx.fan, a, fx.flags), monomial_body(fx.fan, b, fx.flags));
        EXPECT_TRUE(contains(monomial_body(fx.fan, a + b, fx.flags), lhs)) << fx.name;
      }
  }
}

TEST(ExtendedBody, ProjectionIdentity) {
  for (const auto& fx : all_fixtures()) {
    Polytope body = monomial_body(fx.fan, fx.divisor, fx.flags);
    for (std::size_t i = 0; i < fx.flags.r(); ++i) {
      const auto& cone = fx.flags.flags[i];
      ToricDivisor rep = normalized_on(fx.fan, fx.divisor, cone);
      Polytope single = extended_body_toric(fx.fan, rep, ToricFlagSpec{{cone}});
      EXPECT_EQ(project_block(body, fx.fan.dim(), i), single) << fx.name << " block " << i;
    }
  }
}

TEST(ExtendedBody, ProjectionIdentityOnRepresentableTwoFlagInput) {
  // opposite cones of P1 x P1; only D = 0 vanishes on all four rays
  Fan f(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  ToricFlagSpec flags{{{0, 1}, {2, 3}}};
  Polytope body = extended_body_toric(f, div({0, 0, 0, 0}), flags);
  EXPECT_EQ(body, hull({zeros(4)}, 4));
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(project_block(body, 2, i), extended_body_toric(f, div({0, 0, 0, 0}), ToricFlagSpec{{flags.flags[i]}}));
}

TEST(ExtendedBody, SliceLemmaSingleFlag) {
  // Delta(D) cut at nu_1 >= a equals Delta(D - a Y_1) + (a, 0), with Y_1 the first flag divisor
  for (const auto& fx : all_fixtures()) {
    const auto& cone = fx.flags.flags[0];
    ToricDivisor d = normalized_on(fx.fan, fx.divisor, cone);
    Polytope body = extended_body_toric(fx.fan, d, ToricFlagSpec{{cone}});
    const std::size_t n = fx.fan.dim();
    for (Rat a : {Rat(0), Rat(1, 4), Rat(1, 2)}) {
      RatVec cut = zeros(n);
      cut[0] = -1;
      Polytope lhs = intersect(body, {Halfspace{cut, -a}});
      // 4 (D - a Y_1) is integral; normalize, take the body, rescale by 1/4
      ToricDivisor four = Rat(4) * d;
      four.coeffs[cone[0]] -= 4 * a;
      ToricDivisor rep = normalized_on(fx.fan, four, cone);
      Polytope rhs = scale(extended_body_toric(fx.fan, rep, ToricFlagSpec{{cone}}), Rat(1, 4));
      RatVec shift = zeros(n);
      shift[0] = a;
      EXPECT_EQ(lhs, translate(rhs, shift)) << fx.name << " a=" << a;
    }
  }
}
