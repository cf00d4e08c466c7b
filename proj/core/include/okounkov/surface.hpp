// Picard lattice of Bl_s(P^2): intersection form, curve lists, Zariski decomposition.
#pragma once

#include <string>
#include <vector>

#include "okounkov/polytope.hpp"
#include "okounkov/radval.hpp"
#include "okounkov/rational.hpp"

namespace okounkov {

/// d H - sum m_i E_i
struct PicClass {
  Rat d;
  RatVec m;

  std::size_t s() const { return m.size(); }
  static PicClass hyperplane(std::size_t s);
  static PicClass exceptional(std::size_t s, std::size_t i);
  /// -3H + sum E_i
  static PicClass canonical(std::size_t s);
  std::string to_string() const;
};

bool operator==(const PicClass& a, const PicClass& b);
bool operator!=(const PicClass& a, const PicClass& b);
bool operator<(const PicClass& a, const PicClass& b);
PicClass operator+(const PicClass& a, const PicClass& b);
PicClass operator-(const PicClass& a, const PicClass& b);
PicClass operator*(const Rat& c, const PicClass& a);

Rat intersect(const PicClass& a, const PicClass& b);

enum class ModelMode { DelPezzoGeneral, UserSupplied };

struct SurfaceModel {
  std::size_t s = 0;
  std::vector<PicClass> neg_curves;
  ModelMode mode = ModelMode::DelPezzoGeneral;

  /// Built-in general-position model; throws UnsupportedGenerality for s >= 9.
  static SurfaceModel delpezzo(std::size_t s);
  static SurfaceModel user(std::size_t s, std::vector<PicClass> curves);

  /// neg_curves, then H - E_i, then H.
  std::vector<PicClass> test_classes() const;
  /// Generators of the pseudo-effective cone used for membership tests.
  std::vector<PicClass> effective_generators() const;
};

/// (-1)-classes of Bl_s(P^2) at general points, 1 <= s <= 8, in a fixed order.
std::vector<PicClass> neg_curve_classes(std::size_t s);

struct ZariskiDecomp {
  PicClass positive;
  std::vector<std::pair<PicClass, Rat>> negative_support;

  PicClass negative() const;
};

bool is_nef(const SurfaceModel& model, const PicClass& d);
bool is_psef(const SurfaceModel& model, const PicClass& d);
bool is_big(const SurfaceModel& model, const PicClass& d);

/// Throws PositivityError for non-psef input, SingularSupport when the support matrix degenerates.
ZariskiDecomp zariski(const SurfaceModel& model, const PicClass& d);

/// Throws std::logic_error when a decomposition invariant fails.
void check_zariski_invariants(const SurfaceModel& model, const PicClass& d, const ZariskiDecomp& z);

struct BaseLoci {
  std::vector<PicClass> bminus;
  std::vector<PicClass> bplus;
};

BaseLoci base_loci(const SurfaceModel& model, const PicClass& d);

/// P^2 of the positive part; 0 off the pseudo-effective cone.
Rat vol(const SurfaceModel& model, const PicClass& d);

/// Linear piece of t -> Zariski(D - t F) on a chamber [t_lo, t_hi].
struct Chamber {
  Rat t_lo;
  std::optional<Rat> t_hi;               // nullopt when the walk ended inside this chamber
  std::vector<PicClass> support;
  PicClass p0, p1;                       // P(t) = p0 + t p1
};

/// Support of the negative part of D - t F for t -> t0+ (F effective direction).
std::vector<PicClass> right_support(const SurfaceModel& model, const PicClass& d, const PicClass& f,
                                    const Rat& t0);

struct BigThreshold {
  QuadVal t;                      // sup{t : D - t F big}
  std::vector<Chamber> chambers;  // walked chambers, last one contains t
};

/// Exact chamber walk along D - t F from t = 0; D must be big.
BigThreshold big_threshold(const SurfaceModel& model, const PicClass& d, const PicClass& f);

struct SurfaceBody {
  Polytope body;        // in R^{2r}, blocks (nu_1^(i), nu_2^(i))
  RatVec shift;         // ord_{E_i} N(D)
  Rat grid_step;
  Rat t_max;
  std::size_t grid_points = 0;
  std::string alpha_rule = "general-flag-points";
};

/// Outer body over the grid of nu_1 values, flags on E_{flag_curves[i]} at general points.
SurfaceBody surface_body_outer(const SurfaceModel& model, const PicClass& d,
                               const std::vector<std::size_t>& flag_curves, const Rat& grid_step,
                               const Rat& t_max);

}  // namespace okounkov
