// Bounded rational polytopes with paired vertex and halfspace descriptions.
#pragma once

#include <memory>
#include <vector>

#include "okounkov/radval.hpp"
#include "okounkov/rational.hpp"

namespace okounkov {

/// <normal, x> <= offset
struct Halfspace {
  RatVec normal;
  Rat offset;
};

bool operator==(const Halfspace& a, const Halfspace& b);

class Polytope {
 public:
  /// Empty polytope in R^ambient_dim.
  explicit Polytope(std::size_t ambient_dim = 0);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Extreme points, lexicographically sorted.
  const std::vector<RatVec>& vertices() const { return vertices_; }
  /// Irredundant inequalities; an equality of the affine hull appears as a pair.
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  /// Equations <normal, x> = offset cutting out the affine hull, in reduced echelon form.
  const std::vector<Halfspace>& equations() const { return equations_; }
  /// Facet inequalities only (no equation pairs).
  const std::vector<Halfspace>& facets() const { return facets_; }
  int lineality_dim() const { return 0; }

  bool empty() const { return vertices_.empty(); }
  /// Dimension of the affine hull; -1 when empty.
  int dim() const;
  bool contains(const RatVec& point) const;

  friend Polytope hull(const std::vector<RatVec>& points, std::size_t ambient_dim);

 private:
  std::size_t ambient_dim_;
  std::vector<RatVec> vertices_;
  std::vector<Halfspace> equations_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> halfspaces_;
};

/// Vertex-set equality.
bool operator==(const Polytope& a, const Polytope& b);
bool operator!=(const Polytope& a, const Polytope& b);

struct SliceSpec {
  std::size_t n = 0;
  std::size_t r = 0;
  RatVec weights;  // r positive rationals
};

Polytope hull(const std::vector<RatVec>& points, std::size_t ambient_dim);

/// Solution set of the inequalities; throws InvalidInput when unbounded.
Polytope from_halfspaces(const std::vector<Halfspace>& halfspaces, std::size_t ambient_dim);

struct GradedPoint {
  RatVec point;
  long level = 1;
};

/// hull{p / level}.
Polytope cone_base(const std::vector<GradedPoint>& graded_points);

Polytope affine_image(const Polytope& p, const RatMat& m, const RatVec& t);
Polytope scale(const Polytope& p, const Rat& c);
Polytope translate(const Polytope& p, const RatVec& t);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope intersect(const Polytope& p, const std::vector<Halfspace>& extra);

bool contains(const Polytope& outer, const Polytope& inner);
bool contains(const Polytope& outer, const RatVec& point);

/// Coordinate projection onto block `block` (coordinates block*n .. block*n+n-1).
Polytope project_block(const Polytope& p, std::size_t n, std::size_t block);

struct SliceResult {
  Polytope slice;      // in coordinates of the basis b_j
  RadVal gram_scale;   // sqrt(det Gram(b)) = (sum m_i^2)^(n/2)
};

/// P intersected with span{b_j = sum_i m_i e_{(i-1)n+j}}, in b-coordinates.
SliceResult intersect_subspace(const Polytope& p, const SliceSpec& s);

/// Simplices (as vertex lists) triangulating p, each of dimension dim(p).
std::vector<std::vector<RatVec>> triangulate(const Polytope& p);

/// Volume within the affine hull, in the metric induced from the ambient space.
RadVal volume(const Polytope& p);

/// conv{0, v_1, v_1+v_2, ..., v_1+v_n} with v_j = sum_i xi_i e_{(i-1)n+j}.
Polytope inverted_slice_simplex(const RatVec& xi, std::size_t n);

/// Squared Euclidean Hausdorff distance between the vertex sets.
Rat hausdorff_sq(const Polytope& a, const Polytope& b);

}  // namespace okounkov
