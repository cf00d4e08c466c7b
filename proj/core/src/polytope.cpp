#include "okounkov/polytope.hpp"

#include <algorithm>

#include "cone.hpp"
#include "okounkov/errors.hpp"

namespace okounkov {

namespace {

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

void check_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(want) + ", got " +
                            std::to_string(got));
  }
}

Rat factorial(std::size_t d) {
  Rat f = 1;
  for (std::size_t i = 2; i <= d; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace

bool operator==(const Halfspace& a, const Halfspace& b) { return a.normal == b.normal && a.offset == b.offset; }

Polytope::Polytope(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

int Polytope::dim() const {
  if (vertices_.empty()) return -1;
  return static_cast<int>(ambient_dim_) - static_cast<int>(equations_.size());
}

bool Polytope::contains(const RatVec& point) const { return okounkov::contains(*this, point); }

bool operator==(const Polytope& a, const Polytope& b) {
  return a.ambient_dim() == b.ambient_dim() && a.vertices() == b.vertices();
}
bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }

Polytope hull(const std::vector<RatVec>& points, std::size_t ambient_dim) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    check_dim(p.size(), ambient_dim, "hull");
    pts.push_back(p);
    for (auto& x : pts.back()) x.canonicalize();  // callers may build mpq values by hand
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope out(ambient_dim);
  if (pts.empty()) return out;

  const std::size_t n = ambient_dim;
  RatMat rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    RatVec row = p;
    row.push_back(1);
    rows.push_back(std::move(row));
  }
  auto gens = detail::extreme_rays(rows, n + 1);

  // Equations of the affine hull: lineality vectors (h, c) with <h, x> + c = 0.
  RatMat eq = gens.lineality;
  auto eq_pivots = rref(eq);
  for (const auto& row : eq) {
    if (is_zero(row)) continue;
    Halfspace h;
    h.normal.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    h.offset = -row[n];
    out.equations_.push_back(std::move(h));
  }

  for (auto ray : gens.rays) {
    // canonical representative modulo the equations: zero on their pivot columns
    for (std::size_t e = 0; e < eq_pivots.size(); ++e) {
      Rat f = ray[eq_pivots[e]];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= n; ++j) ray[j] -= f * eq[e][j];
    }
    bool tight_somewhere = false;
    for (const auto& row : rows) {
      if (dot(row, ray) == 0) {
        tight_somewhere = true;
        break;
      }
    }
    if (!tight_somewhere) continue;
    RatVec hc(n + 1);
    for (std::size_t j = 0; j < n; ++j) hc[j] = -ray[j];
    hc[n] = ray[n];
    hc = primitive(hc);
    Halfspace h;
    h.normal.assign(hc.begin(), hc.begin() + static_cast<std::ptrdiff_t>(n));
    h.offset = hc[n];
    out.facets_.push_back(std::move(h));
  }
  std::sort(out.facets_.begin(), out.facets_.end(), halfspace_less);
  out.facets_.erase(std::unique(out.facets_.begin(), out.facets_.end()), out.facets_.end());

  for (const auto& p : pts) {
    RatMat tight;
    for (const auto& e : out.equations_) tight.push_back(e.normal);
    for (const auto& f : out.facets_)
      if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    if (rank(tight) == n) out.vertices_.push_back(p);
  }

  out.halfspaces_ = out.facets_;
  for (const auto& e : out.equations_) {
    out.halfspaces_.push_back(e);
    out.halfspaces_.push_back(Halfspace{Rat(-1) * e.normal, -e.offset});
  }
  return out;
}

Polytope from_halfspaces(const std::vector<Halfspace>& halfspaces, std::size_t ambient_dim) {
  const std::size_t n = ambient_dim;
  RatMat rows;
  for (const auto& h : halfspaces) {
    check_dim(h.normal.size(), n, "from_halfspaces");
    RatVec row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = -h.normal[j];
    row[n] = h.offset;
    for (auto& x : row) x.canonicalize();
    rows.push_back(std::move(row));
  }
  rows.push_back(unit_vector(n + 1, n));
  auto gens = detail::extreme_rays(rows, n + 1);
  std::vector<RatVec> pts;
  bool recession = !gens.lineality.empty();
  for (const auto& ray : gens.rays) {
    if (ray[n] > 0) {
      RatVec p(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(n));
      pts.push_back(Rat(1 / ray[n]) * p);
    } else {
      recession = true;
    }
  }
  if (!pts.empty() && recession) throw InvalidInput("halfspace system is unbounded");
  return hull(pts, n);
}

Polytope cone_base(const std::vector<GradedPoint>& graded_points) {
  if (graded_points.empty()) throw InvalidInput("cone_base: empty input");
  const std::size_t n = graded_points.front().point.size();
  std::vector<RatVec> pts;
  for (const auto& g : graded_points) {
    if (g.level <= 0) throw InvalidInput("cone_base: level must be positive");
    check_dim(g.point.size(), n, "cone_base");
    pts.push_back(Rat(1, g.level) * g.point);
  }
  return hull(pts, n);
}

Polytope affine_image(const Polytope& p, const RatMat& m, const RatVec& t) {
  if (m.size() != t.size()) throw DimensionMismatch("affine_image: matrix rows and translation differ");
  for (const auto& row : m) check_dim(row.size(), p.ambient_dim(), "affine_image");
  std::vector<RatVec> pts;
  for (const auto& v : p.vertices()) pts.push_back(mat_vec(m, v) + t);
  return hull(pts, t.size());
}

Polytope scale(const Polytope& p, const Rat& c) {
  std::vector<RatVec> pts;
  for (const auto& v : p.vertices()) pts.push_back(c * v);
  return hull(pts, p.ambient_dim());
}

Polytope translate(const Polytope& p, const RatVec& t) {
  check_dim(t.size(), p.ambient_dim(), "translate");
  std::vector<RatVec> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return hull(pts, p.ambient_dim());
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  check_dim(q.ambient_dim(), p.ambient_dim(), "minkowski_sum");
  std::vector<RatVec> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  return hull(pts, p.ambient_dim());
}

Polytope intersect(const Polytope& p, const std::vector<Halfspace>& extra) {
  if (p.empty()) return p;
  std::vector<Halfspace> hs = p.halfspaces();
  hs.insert(hs.end(), extra.begin(), extra.end());
  return from_halfspaces(hs, p.ambient_dim());
}

bool contains(const Polytope& outer, const RatVec& point) {
  check_dim(point.size(), outer.ambient_dim(), "contains");
  if (outer.empty()) return false;
  for (const auto& h : outer.halfspaces())
    if (dot(h.normal, point) > h.offset) return false;
  return true;
}

bool contains(const Polytope& outer, const Polytope& inner) {
  check_dim(inner.ambient_dim(), outer.ambient_dim(), "contains");
  for (const auto& v : inner.vertices())
    if (!contains(outer, v)) return false;
  return true;
}

Polytope project_block(const Polytope& p, std::size_t n, std::size_t block) {
  if ((block + 1) * n > p.ambient_dim()) throw DimensionMismatch("project_block: block out of range");
  RatMat m(n, zeros(p.ambient_dim()));
  for (std::size_t j = 0; j < n; ++j) m[j][block * n + j] = 1;
  return affine_image(p, m, zeros(n));
}

SliceResult intersect_subspace(const Polytope& p, const SliceSpec& s) {
  check_dim(p.ambient_dim(), s.n * s.r, "intersect_subspace");
  if (s.weights.size() != s.r) throw DimensionMismatch("intersect_subspace: weight count differs from r");
  for (const auto& w : s.weights)
    if (w <= 0) throw InvalidInput("intersect_subspace: weights must be positive");
  Rat norm_sq = 0;
  for (const auto& w : s.weights) norm_sq += w * w;
  RadVal gram(1);
  for (std::size_t k = 0; k + 1 < s.n; k += 2) gram = gram * norm_sq;
  if (s.n % 2 == 1) gram = gram * RadVal::sqrt_of(norm_sq);

  if (p.empty()) return {Polytope(s.n), gram};
  std::vector<Halfspace> hs;
  for (const auto& h : p.halfspaces()) {
    RatVec nb(s.n);
    for (std::size_t j = 0; j < s.n; ++j) {
      Rat acc = 0;
      for (std::size_t i = 0; i < s.r; ++i) acc += s.weights[i] * h.normal[i * s.n + j];
      nb[j] = acc;
    }
    hs.push_back(Halfspace{std::move(nb), h.offset});
  }
  return {from_halfspaces(hs, s.n), gram};
}

std::vector<std::vector<RatVec>> triangulate(const Polytope& p) {
  if (p.empty()) return {};
  if (p.dim() == 0) return {{p.vertices().front()}};
  const RatVec& v0 = p.vertices().front();
  std::vector<std::vector<RatVec>> out;
  for (const auto& f : p.facets()) {
    if (dot(f.normal, v0) == f.offset) continue;
    std::vector<RatVec> face;
    for (const auto& v : p.vertices())
      if (dot(f.normal, v) == f.offset) face.push_back(v);
    for (auto simplex : triangulate(hull(face, p.ambient_dim()))) {
      simplex.insert(simplex.begin(), v0);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

RadVal volume(const Polytope& p) {
  const int d = p.dim();
  if (d <= 0) return RadVal();
  RatMat eqn;
  for (const auto& e : p.equations()) eqn.push_back(e.normal);
  RatMat basis = nullspace(eqn, p.ambient_dim());
  Rat gram_basis = determinant(mat_mul(basis, transpose(basis)));
  Rat total = 0;
  for (const auto& simplex : triangulate(p)) {
    RatMat w;
    for (std::size_t k = 1; k < simplex.size(); ++k) w.push_back(simplex[k] - simplex[0]);
    Rat g = determinant(mat_mul(w, transpose(w)));
    auto q = exact_sqrt(g / gram_basis);
    if (!q) throw Error("volume: simplex Gram determinant off the affine-hull lattice");
    total += *q;
  }
  return RadVal::sqrt_of(gram_basis) * (total / factorial(static_cast<std::size_t>(d)));
}

Polytope inverted_slice_simplex(const RatVec& xi, std::size_t n) {
  if (n == 0 || xi.empty()) throw InvalidInput("inverted_slice_simplex: n and r must be positive");
  for (const auto& x : xi)
    if (x < 0) throw InvalidInput("inverted_slice_simplex: negative size " + to_string(x));
  const std::size_t r = xi.size();
  auto v = [&](std::size_t j) {
    RatVec out = zeros(n * r);
    for (std::size_t i = 0; i < r; ++i) out[i * n + j] = xi[i];
    return out;
  };
  std::vector<RatVec> pts{zeros(n * r), v(0)};
  for (std::size_t j = 1; j < n; ++j) pts.push_back(v(0) + v(j));
  return hull(pts, n * r);
}

Rat hausdorff_sq(const Polytope& a, const Polytope& b) {
  auto directed = [](const Polytope& x, const Polytope& y) {
    Rat worst = 0;
    for (const auto& p : x.vertices()) {
      bool first = true;
      Rat best;
      for (const auto& q : y.vertices()) {
        RatVec d = p - q;
        Rat dd = dot(d, d);
        if (first || dd < best) {
          best = dd;
          first = false;
        }
      }
      if (!first && best > worst) worst = best;
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace okounkov
