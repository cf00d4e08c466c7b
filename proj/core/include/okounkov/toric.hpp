// Smooth complete fans, torus-invariant divisors and monomial valuations.
#pragma once

#include <vector>

#include "okounkov/polytope.hpp"
#include "okounkov/rational.hpp"

namespace okounkov {

class Fan {
 public:
  /// Validates smoothness (|det| = 1 on every maximal cone) and completeness; throws InvalidInput.
  Fan(std::size_t dim, std::vector<std::vector<long>> rays, std::vector<std::vector<std::size_t>> max_cones);

  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<long>>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return max_cones_; }
  RatVec ray(std::size_t i) const;
  bool is_max_cone(std::vector<std::size_t> cone) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<long>> rays_;
  std::vector<std::vector<std::size_t>> max_cones_;
};

struct ToricDivisor {
  RatVec coeffs;  // a_rho, one per ray
};

struct ToricFlagSpec {
  std::vector<std::vector<std::size_t>> flags;  // ordered ray indices per flag cone
  std::size_t r() const { return flags.size(); }
};

struct ValuationVector {
  std::vector<Int> entries;  // block i holds nu_1^(i) .. nu_n^(i)
  long level = 1;
};

/// Throws InvalidInput unless every flag is an ordered maximal cone and the cones meet only in 0.
void validate_flags(const Fan& fan, const ToricFlagSpec& flags);

/// {m : <m, u_rho> >= -a_rho}.
Polytope divisor_polytope(const Fan& fan, const ToricDivisor& d);

/// nr x n integer matrix; row (i n + j) is u -> <u, v_j^(i)>.
RatMat flag_matrix(const Fan& fan, const ToricFlagSpec& flags);

/// (a_{v_j^(i)}) in flag-matrix row order.
RatVec flag_offsets(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags);

/// Hull of all monomial valuation vectors: flag_matrix * P_D + flag_offsets.
Polytope monomial_body(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags);

/// flag_matrix * P_D for integral D vanishing on every flag ray.
/// Throws UnrepresentedDivisor when a flag ray carries a nonzero coefficient.
Polytope extended_body_toric(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags);

ValuationVector monomial_valuation(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags,
                                   const std::vector<Int>& u, long level = 1);

/// Lattice points of a polytope by bounding-box scan, lexicographically sorted.
std::vector<std::vector<Int>> lattice_points(const Polytope& p);

/// cone_base over monomial valuations of m D for m = 1 .. m_max.
Polytope semigroup_body_approx(const Fan& fan, const ToricDivisor& d, const ToricFlagSpec& flags, long m_max);

ToricDivisor operator*(const Rat& c, const ToricDivisor& d);
ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);

/// D + div(chi^m): a_rho + <m, u_rho>.
ToricDivisor add_principal(const Fan& fan, const ToricDivisor& d, const RatVec& m);

}  // namespace okounkov
