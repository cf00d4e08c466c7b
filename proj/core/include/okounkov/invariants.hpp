// Local positivity invariants on the supported models, plus conditional certificates
// for classes on blow-ups at nine or more general points.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "okounkov/polytope.hpp"
#include "okounkov/radval.hpp"
#include "okounkov/rational.hpp"
#include "okounkov/surface.hpp"

namespace okounkov {

/// Positive integer weights (m_1, ..., m_r).
using WeightVec = std::vector<long>;

void validate_weights(const WeightVec& w);

inline constexpr const char* kUnconditional = "unconditional";
inline constexpr const char* kConditionalNonEffectivity = "conditional:standard-form-noneffectivity";
inline constexpr const char* kConditionalQuasiHomogeneous =
    "conditional:standard-form-noneffectivity-quasi-homogeneous";

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct InvariantReport {
  std::optional<RadVal> epsilon;
  std::optional<QuadVal> mu;
  std::optional<Rat> xi;
  std::optional<QuadVal> lower_bound;
  std::optional<RadVal> upper_bound;
  std::string assumption = kUnconditional;
  std::vector<Check> checks;

  bool all_pass() const;
};

/// Nef threshold of L - a sum w_i E_i over the model's test classes; L must be nef.
Rat seshadri_eps(const SurfaceModel& model, const PicClass& l, const WeightVec& w);

/// sup{t : L - t sum E_i big}; L must be big.
QuadVal nakayama_mu(const SurfaceModel& model, const PicClass& l);

/// Largest a with the inverted slice simplex of size (w_1 a, ..., w_r a) inside the body; 0 when the
/// origin is outside.
Rat xi_constant(const Polytope& body, const WeightVec& w, std::size_t n, std::size_t r);

/// Both sides of eps = xi on a model and a body of the same class.
InvariantReport check_eps_eq_xi(const SurfaceModel& model, const PicClass& l, const Polytope& body,
                                const WeightVec& w, std::size_t n);

struct SliceVolumeReport {
  RadVal slice_volume;  // induced metric
  RadVal target;        // (sqrt r)^(n-2) / n! * vol_X, or vol_X / 2 in inequality mode
  std::string mode;     // "equality", "at-most" or "no-claim"
  bool pass = true;
};

/// Equality mode when all weights agree; on surfaces other weights give the at-most mode.
SliceVolumeReport slice_volume_check(const Polytope& body, const WeightVec& w, std::size_t n, std::size_t r,
                                     const Rat& vol_x);

/// eps and mu with equal weights on all s points, the two bounds, and the equality clause.
/// L = d H with d > 0; throws InvalidInput for classes with nonzero multiplicities.
InvariantReport bounds_sandwich(const SurfaceModel& model, const PicClass& l);

/// r d^2 >= (sum m)^2 with d >= 0; entries of m nonnegative.
bool nagata_check(long r, const Rat& d, const RatVec& m);

/// m non-increasing and nonnegative, d >= m_1 + m_2 + m_3 (missing entries are 0).
bool is_standard_form(const Rat& d, const RatVec& m);

struct ConditionalVerdict {
  std::string verdict;  // "not-effective (conditional)" or "unknown"
  std::string assumption;
};

ConditionalVerdict conditional_non_effectivity(const Rat& d, const RatVec& m);

struct IrrationalityCertificate {
  bool certified = false;
  std::optional<RadVal> eps;
  bool irrational = false;
  std::string assumption = kConditionalNonEffectivity;
  std::vector<Check> conditions;
};

IrrationalityCertificate irrationality_certificate(std::size_t s, const Rat& d, const RatVec& m);

struct HomogeneousResult {
  int branch = 0;          // 1: eps = sqrt(L^2); 2: eps >= d - 2c
  RadVal value;            // eps for branch 1, lower bound for branch 2
  std::string assumption = kConditionalQuasiHomogeneous;
  std::vector<Check> checks;
};

/// L = d H - c sum_{i<=s} E_i, s >= 9, caller asserts ampleness.
HomogeneousResult homogeneous_eps(std::size_t s, const Rat& d, const Rat& c);

struct NefBoundaryReport {
  std::vector<Check> conditions;  // (1) .. (4); (4) holds one entry per t
  bool criterion_pass = false;
  bool on_boundary = false;  // L^2 == 0
  bool nef = false;
  std::string verdict;       // "nef", "not-nef-by-criterion", "off-boundary"
};

/// m sorted non-increasing; padded with zeros to length 8.
NefBoundaryReport nef_boundary_check(const Rat& d, const RatVec& m);

/// Whether E_{flag_curves[i]} lies in Supp N(D).
std::vector<bool> points_in_bminus(const SurfaceModel& model, const PicClass& d,
                                   const std::vector<std::size_t>& flag_curves);

/// B_- membership, or E_i entering the negative part of D - t sum w_j E_j as t -> 0+.
std::vector<bool> points_in_bplus(const SurfaceModel& model, const PicClass& d,
                                  const std::vector<std::size_t>& flag_curves, const WeightVec& w);

}  // namespace okounkov
