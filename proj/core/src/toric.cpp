#include "okounkov/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "okounkov/errors.hpp"
#include "okounkov/lp.hpp"

namespace okounkov {

namespace {

RatMat cone_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
  RatMat m;
  for (auto idx : cone) m.push_back(fan.ray(idx));
  return m;
}

// Coordinates of v in the basis given by the cone's rays.
RatVec cone_coordinates(const Fan& fan, const std::vector<std::size_t>& cone, const RatVec& v) {
  auto coords = solve(transpose(cone_matrix(fan, cone)), v);
  if (!coords) throw InvalidInput("fan: singular maximal cone");
  return *coords;
}

// a_{v} + <u, v> for every flag ray v.
ValuationVector valuation_at(const RatMat& phi, const RatVec& offsets, const RatVec& u, long level) {
  RatVec val = mat_vec(phi, u) + offsets;
  ValuationVector out;
  out.level = level;
  for (const auto& x : val) {
    if (!is_integral(x)) throw InvalidInput("monomial_valuation: divisor must be integral on flag rays");
    out.entries.push_back(x.get_num());
  }
  return out;
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<std::vector<long>> rays, std::vector<std::vector<std::size_t>> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (dim_ == 0) throw InvalidInput("fan: dimension must be positive");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].size() != dim_) throw InvalidInput("fan: ray " + std::to_string(i) + " has wrong length");
    long g = 0;
    for (long x : rays_[i]) g = std::gcd(g, x);
    if (g != 1) throw InvalidInput("fan: ray " + std::to_string(i) + " is not primitive");
  }
  std::vector<bool> used(rays_.size(), false);
  for (std::size_t c = 0; c < max_cones_.size(); ++c) {
    auto& cone = max_cones_[c];
    std::set<std::size_t> distinct(cone.begin(), cone.end());
    if (cone.size() != dim_ || distinct.size() != dim_)
      throw InvalidInput("fan: max cone " + std::to_string(c) + " must list " + std::to_string(dim_) +
                         " distinct rays");
    for (auto idx : cone) {
      if (idx >= rays_.size()) throw InvalidInput("fan: max cone " + std::to_string(c) + " has bad ray index");
      used[idx] = true;
    }
    Rat det = determinant(cone_matrix(*this, cone));
    if (det != 1 && det != -1) throw InvalidInput("fan: max cone " + std::to_string(c) + " is not smooth");
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw InvalidInput("fan: ray " + std::to_string(i) + " lies in no maximal cone");
  if (max_cones_.empty()) throw InvalidInput("fan: no maximal cones");

  // Completeness: every ridge bounds exactly two cones lying on opposite sides, and a point
  // interior to the first cone is covered once.
  for (const auto& cone : max_cones_) {
    for (std::size_t drop = 0; drop < dim_; ++drop) {
      std::vector<std::size_t> ridge;
      for (std::size_t k = 0; k < dim_; ++k)
        if (k != drop) ridge.push_back(cone[k]);
      std::vector<std::size_t> opposite;
      for (const auto& other : max_cones_) {
        bool has_all = std::all_of(ridge.begin(), ridge.end(), [&](std::size_t r) {
          return std::find(other.begin(), other.end(), r) != other.end();
        });
        if (!has_all) continue;
        for (auto r : other)
          if (std::find(ridge.begin(), ridge.end(), r) == ridge.end()) opposite.push_back(r);
      }
      if (opposite.size() != 2) throw InvalidInput("fan: not complete (a ridge bounds " +
                                                   std::to_string(opposite.size()) + " cones)");
      RatMat rm = cone_matrix(*this, ridge);
      RatVec normal = nullspace(rm, dim_).front();
      Rat s1 = dot(normal, ray(opposite[0])), s2 = dot(normal, ray(opposite[1]));
      if (s1 * s2 >= 0) throw InvalidInput("fan: adjacent cones overlap");
    }
  }
  RatVec probe = zeros(dim_);
  for (auto idx : max_cones_.front()) probe = probe + ray(idx);
  std::size_t cover = 0;
  for (const auto& cone : max_cones_) {
    auto coords = cone_coordinates(*this, cone, probe);
    if (std::all_of(coords.begin(), coords.end(), [](const Rat& x) { return x >= 0; })) ++cover;
  }
  if (cover != 1) throw InvalidInput("fan: cones overlap (cover count " + std::to_string(cover) + ")");
}

RatVec Fan::ray(std::size_t i) const {
  RatVec v;
  for (long x : rays_.at(i)) v.emplace_back(x);
  return v;
}

bool Fan::is_max_cone(std::vector<std::size_t> cone) const {
  std::sort(cone.begin(), cone.end());
  for (auto c : max_cones_) {
    std::sort(c.begin(), c.end());
    if (c == cone) return true;
  }
  return false;
}

void validate_flags(const Fan& fan, const ToricFlagSpec& flags) {
  if (flags.flags.empty()) throw InvalidInput("flags: at least one flag cone required");
  for (std::size_t i = 0; i < flags.r(); ++i) {
    const auto& f = flags.flags[i];
    if (f.size() != fan.dim()) throw InvalidInput("flags: flag " + std::to_string(i) + " has wrong length");
    for (auto idx : f)
      if (idx >= fan.rays().size()) throw InvalidInput("flags: flag " + std::to_string(i) + " has bad ray index");
    if (!fan.is_max_cone(f)) throw InvalidInput("flags: flag " + std::to_string(i) + " is not a maximal cone");
  }
  for (std::size_t i = 0; i < flags.r(); ++i) {
    for (std::size_t k = i + 1; k < flags.r(); ++k) {
      const auto& a = flags.flags[i];
      const auto& b = flags.flags[k];
      for (auto x : a)
        if (std::find(b.begin(), b.end(), x) != b.end())
          throw InvalidInput("flags: cones " + std::to_string(i) + " and " + std::to_string(k) + " share a ray");
      // sum lambda v - sum mu w = 0, sum lambda = 1, lambda, mu >= 0 has a solution iff the cones meet off 0
      const std::size_t n = fan.dim();
      RatMat m(n + 1, zeros(2 * n));
      RatVec rhs = zeros(n + 1);
      for (std::size_t j = 0; j < n; ++j) {
        RatVec v = fan.ray(a[j]), w = fan.ray(b[j]);
        for (std::size_t row = 0; row < n; ++row) {
          m[row][j] = v[row];
          m[row][n + j] = -w[row];
        }
        m[n][j] = 1;
      }
      rhs[n] = 1;
      if (lp_minimize(m, rhs, zeros(2 * n)).status != LpStatus::Infeasible)
        throw InvalidInput("flags: cones " + std::to_string(i) + " and " + std::to_string(k) +
                           " intersect nontrivially");
    }
  }
}

Polytope divisor_polytope(const Fan& fan, const ToricDivisor& d) {
  if (d.coeffs.size() != fan.rays().size()) throw DimensionMismatch("divisor: one coefficient per ray required");
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) hs.push_back(Halfspace{Rat(-1) * fan.ray(i), d.coeffs[i]});
  return from_halfspaces(hs, fan.dim());
}

RatMat flag_matrix(const Fan& fan, const ToricFlagSpec& flags) {
  validate_flags(fan, flags);
  RatMat m;
  for (const auto& f : flags.flags)
    for (auto idx : f) m.push_back(fan.ray(idx));
  return m;
}

RatVec flag_offsets(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags) {
  if (d.coeffs.size() != fan.rays().size()) throw DimensionMismatch("divisor: one coefficient per ray required");
  RatVec t;
  for (const auto& f : flags.flags)
    for (auto idx : f) t.push_back(d.coeffs.at(idx));
  return t;
}

Polytope monomial_body(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags) {
  return affine_image(divisor_polytope(fan, d), flag_matrix(fan, flags), flag_offsets(fan, d, flags));
}

Polytope extended_body_toric(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags) {
  RatMat phi = flag_matrix(fan, flags);
  if (d.coeffs.size() != fan.rays().size()) throw DimensionMismatch("divisor: one coefficient per ray required");
  for (std::size_t i = 0; i < d.coeffs.size(); ++i)
    if (!is_integral(d.coeffs[i]))
      throw InvalidInput("divisor: coefficient " + std::to_string(i) +
                         " is not integral; pass an integral multiple and rescale");
  for (std::size_t i = 0; i < flags.r(); ++i)
    for (auto idx : flags.flags[i])
      if (d.coeffs[idx] != 0)
        throw UnrepresentedDivisor("unrepresented divisor: ray " + std::to_string(idx) + " of flag cone " +
                                   std::to_string(i) + " has coefficient " + to_string(d.coeffs[idx]) +
                                   "; choose a linearly equivalent divisor vanishing on every flag ray");
  Polytope pd = divisor_polytope(fan, d);
  if (pd.empty()) throw InvalidInput("divisor has no global sections (empty polytope)");
  return affine_image(pd, phi, zeros(phi.size()));
}

ValuationVector monomial_valuation(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags,
                                   const std::vector<Int>& u, long level) {
  if (u.size() != fan.dim()) throw DimensionMismatch("monomial_valuation: lattice point has wrong length");
  RatVec uq;
  for (const auto& x : u) uq.emplace_back(x);
  if (!contains(divisor_polytope(fan, d), uq)) throw InvalidInput("monomial_valuation: point outside P_D");
  return valuation_at(flag_matrix(fan, flags), flag_offsets(fan, d, flags), uq, level);
}

std::vector<std::vector<Int>> lattice_points(const Polytope& p) {
  std::vector<std::vector<Int>> out;
  if (p.empty()) return out;
  const std::size_t n = p.ambient_dim();
  std::vector<Int> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat mn = p.vertices().front()[j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    mpz_fdiv_q(lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
  }
  std::vector<Int> cur = lo;
  for (;;) {
    RatVec q;
    for (const auto& x : cur) q.emplace_back(x);
    if (contains(p, q)) out.push_back(cur);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (cur[j] < hi[j]) {
        ++cur[j];
        for (std::size_t k = j + 1; k < n; ++k) cur[k] = lo[k];
        break;
      }
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

Polytope semigroup_body_approx(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags, long m_max) {
  if (m_max < 1) throw InvalidInput("semigroup_body_approx: m_max must be at least 1");
  RatMat phi = flag_matrix(fan, flags);
  std::vector<GradedPoint> graded;
  for (long m = 1; m <= m_max; ++m) {
    ToricDivisor dm = Rat(m) * d;
    RatVec offsets = flag_offsets(fan, dm, flags);
    for (const auto& u : lattice_points(divisor_polytope(fan, dm))) {
      RatVec uq;
      for (const auto& x : u) uq.emplace_back(x);
      auto val = valuation_at(phi, offsets, uq, m);
      RatVec p;
      for (const auto& x : val.entries) p.emplace_back(x);
      graded.push_back(GradedPoint{std::move(p), m});
    }
  }
  if (graded.empty()) return Polytope(fan.dim() * flags.r());
  return cone_base(graded);
}

ToricDivisor operator*(const Rat& c, const ToricDivisor& d) { return ToricDivisor{c * d.coeffs}; }

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b) { return ToricDivisor{a.coeffs + b.coeffs}; }

ToricDivisor add_principal(const Fan& fan, const ToricDivisor& d, const RatVec& m) {
  if (m.size() != fan.dim()) throw DimensionMismatch("add_principal: character has wrong length");
  ToricDivisor out = d;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) out.coeffs[i] += dot(m, fan.ray(i));
  return out;
}

}  // namespace okounkov
