#include "okounkov/surface.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "okounkov/errors.hpp"
#include "okounkov/lp.hpp"

namespace okounkov {

namespace {

void check_shape(const PicClass& a, const PicClass& b) {
  if (a.s() != b.s()) throw DimensionMismatch("classes live on different blow-ups");
}

RatVec coords(const PicClass& c) {
  RatVec v{c.d};
  v.insert(v.end(), c.m.begin(), c.m.end());
  return v;
}

RatMat gram(const std::vector<PicClass>& support) {
  RatMat g(support.size(), zeros(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = 0; j < support.size(); ++j) g[i][j] = intersect(support[i], support[j]);
  return g;
}

bool negative_definite(RatMat g) {
  // Gaussian elimination on -g: all pivots must be positive.
  const std::size_t n = g.size();
  for (auto& row : g)
    for (auto& x : row) x = -x;
  for (std::size_t c = 0; c < n; ++c) {
    if (g[c][c] <= 0) return false;
    for (std::size_t i = c + 1; i < n; ++i) {
      Rat f = g[i][c] / g[c][c];
      for (std::size_t j = c; j < n; ++j) g[i][j] -= f * g[c][j];
    }
  }
  return true;
}

bool contains_class(const std::vector<PicClass>& list, const PicClass& c) {
  return std::find(list.begin(), list.end(), c) != list.end();
}

// Coefficients a solving sum_G a_G (G . G') = rhs_{G'} on the support.
RatVec support_solve(const std::vector<PicClass>& support, const RatVec& rhs) {
  RatMat g = gram(support);
  if (!negative_definite(g)) throw SingularSupport("negative-part support is not negative definite");
  auto a = solve(g, rhs);
  if (!a) throw SingularSupport("negative-part support system is singular");
  return *a;
}

struct LinearPart {
  std::vector<PicClass> support;
  RatVec a0, a1;  // coefficients a(t) = a0 + t a1
  PicClass p0, p1;
};

LinearPart linear_part(const PicClass& d, const PicClass& f, std::vector<PicClass> support) {
  std::sort(support.begin(), support.end());
  LinearPart lp;
  lp.support = support;
  RatVec rd, rf;
  for (const auto& g : support) {
    rd.push_back(intersect(d, g));
    rf.push_back(intersect(f, g));
  }
  lp.a0 = support.empty() ? RatVec{} : support_solve(support, rd);
  RatVec af = support.empty() ? RatVec{} : support_solve(support, rf);
  lp.a1 = Rat(-1) * af;
  lp.p0 = d;
  lp.p1 = Rat(-1) * f;
  for (std::size_t k = 0; k < support.size(); ++k) {
    lp.p0 = lp.p0 - lp.a0[k] * support[k];
    lp.p1 = lp.p1 - lp.a1[k] * support[k];
  }
  return lp;
}

LinearPart right_part(const SurfaceModel& model, const PicClass& d, const PicClass& f, const Rat& t0) {
  auto z = zariski(model, d - t0 * f);
  std::vector<PicClass> support;
  for (const auto& [c, a] : z.negative_support) support.push_back(c);
  for (std::size_t guard = 0; guard <= 2 * model.neg_curves.size() + 2; ++guard) {
    LinearPart lp = linear_part(d, f, support);
    PicClass pt = lp.p0 + t0 * lp.p1;
    std::vector<PicClass> next;
    bool changed = false;
    for (std::size_t k = 0; k < lp.support.size(); ++k) {
      Rat at = lp.a0[k] + t0 * lp.a1[k];
      if (at == 0 && lp.a1[k] <= 0) {
        changed = true;
        continue;
      }
      next.push_back(lp.support[k]);
    }
    for (const auto& c : model.neg_curves) {
      if (contains_class(lp.support, c)) continue;
      Rat val = intersect(pt, c);
      Rat slope = intersect(lp.p1, c);
      if (val < 0 || (val == 0 && slope < 0)) {
        next.push_back(c);
        changed = true;
      }
    }
    if (!changed) return lp;
    support = std::move(next);
  }
  throw SingularSupport("chamber support did not stabilize");
}

// Smallest root > t0 of c t^2 + 2 b t + a.
std::optional<QuadVal> first_root_after(const Rat& a, const Rat& b, const Rat& c, const Rat& t0) {
  std::vector<QuadVal> roots;
  if (c == 0) {
    if (b == 0) return std::nullopt;
    roots.emplace_back(Rat(-a / (2 * b)));
  } else {
    Rat disc = b * b - a * c;
    if (disc < 0) return std::nullopt;
    RadVal sq = RadVal::sqrt_of(disc) * Rat(1 / c);
    roots.emplace_back(Rat(-b / c), sq);
    roots.emplace_back(Rat(-b / c), -sq);
  }
  std::optional<QuadVal> best;
  for (const auto& r : roots) {
    if (compare(r, t0) <= 0) continue;
    if (!best || compare(r, *best) < 0) best = r;
  }
  return best;
}

}  // namespace

PicClass PicClass::hyperplane(std::size_t s) { return PicClass{Rat(1), zeros(s)}; }

PicClass PicClass::exceptional(std::size_t s, std::size_t i) {
  if (i >= s) throw InvalidInput("exceptional curve index out of range");
  PicClass e{Rat(0), zeros(s)};
  e.m[i] = -1;
  return e;
}

PicClass PicClass::canonical(std::size_t s) {
  PicClass k{Rat(-3), zeros(s)};
  for (auto& x : k.m) x = -1;
  return k;
}

std::string PicClass::to_string() const {
  std::string out = "(" + okounkov::to_string(d) + ";";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + okounkov::to_string(m[i]);
  return out + ")";
}

bool operator==(const PicClass& a, const PicClass& b) { return a.d == b.d && a.m == b.m; }
bool operator!=(const PicClass& a, const PicClass& b) { return !(a == b); }
bool operator<(const PicClass& a, const PicClass& b) {
  if (a.d != b.d) return a.d < b.d;
  return lex_less(a.m, b.m);
}

PicClass operator+(const PicClass& a, const PicClass& b) {
  check_shape(a, b);
  return PicClass{a.d + b.d, a.m + b.m};
}

PicClass operator-(const PicClass& a, const PicClass& b) {
  check_shape(a, b);
  return PicClass{a.d - b.d, a.m - b.m};
}

PicClass operator*(const Rat& c, const PicClass& a) { return PicClass{c * a.d, c * a.m}; }

Rat intersect(const PicClass& a, const PicClass& b) {
  check_shape(a, b);
  Rat v = a.d * b.d;
  for (std::size_t i = 0; i < a.m.size(); ++i) v -= a.m[i] * b.m[i];
  return v;
}

std::vector<PicClass> neg_curve_classes(std::size_t s) {
  if (s >= 9) throw UnsupportedGenerality("unsupported generality: no built-in curve list for s >= 9 points");
  if (s == 0) throw InvalidInput("neg_curve_classes: s must be at least 1");
  std::vector<PicClass> out;
  std::vector<long> m(s);
  // d^2 - sum m^2 = -1 and 3d - sum m = 1; for s <= 8 every solution has d <= 6 and -1 <= m_i <= 3.
  for (long d = 0; d <= 6; ++d) {
    const long want_sq = d * d + 1, want_sum = 3 * d - 1;
    std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long sum, long sq) {
      if (sq > want_sq) return;
      if (i == s) {
        if (sum == want_sum && sq == want_sq) {
          PicClass c{Rat(d), zeros(s)};
          for (std::size_t k = 0; k < s; ++k) c.m[k] = m[k];
          out.push_back(std::move(c));
        }
        return;
      }
      for (long v = -1; v <= std::min(d, 3L); ++v) {
        if (d > 0 && v < 0) continue;
        m[i] = v;
        rec(i + 1, sum + v, sq + v * v);
      }
    };
    rec(0, 0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SurfaceModel SurfaceModel::delpezzo(std::size_t s) {
  SurfaceModel model;
  model.s = s;
  model.neg_curves = neg_curve_classes(s);
  model.mode = ModelMode::DelPezzoGeneral;
  return model;
}

SurfaceModel SurfaceModel::user(std::size_t s, std::vector<PicClass> curves) {
  for (const auto& c : curves)
    if (c.s() != s) throw DimensionMismatch("user curve " + c.to_string() + " has the wrong number of points");
  SurfaceModel model;
  model.s = s;
  model.neg_curves = std::move(curves);
  std::sort(model.neg_curves.begin(), model.neg_curves.end());
  model.mode = ModelMode::UserSupplied;
  return model;
}

std::vector<PicClass> SurfaceModel::test_classes() const {
  std::vector<PicClass> out = neg_curves;
  for (std::size_t i = 0; i < s; ++i) out.push_back(PicClass::hyperplane(s) - PicClass::exceptional(s, i));
  out.push_back(PicClass::hyperplane(s));
  return out;
}

std::vector<PicClass> SurfaceModel::effective_generators() const { return test_classes(); }

PicClass ZariskiDecomp::negative() const {
  PicClass n{Rat(0), zeros(positive.s())};
  for (const auto& [c, a] : negative_support) n = n + a * c;
  return n;
}

bool is_nef(const SurfaceModel& model, const PicClass& d) {
  if (d.s() != model.s) throw DimensionMismatch("class and model disagree on the number of points");
  for (const auto& c : model.test_classes())
    if (intersect(d, c) < 0) return false;
  return true;
}

bool is_psef(const SurfaceModel& model, const PicClass& d) {
  if (d.s() != model.s) throw DimensionMismatch("class and model disagree on the number of points");
  std::vector<RatVec> gens;
  for (const auto& g : model.effective_generators()) gens.push_back(coords(g));
  return cone_contains(gens, coords(d));
}

bool is_big(const SurfaceModel& model, const PicClass& d) {
  if (!is_psef(model, d)) return false;
  const auto z = zariski(model, d);
  return intersect(z.positive, z.positive) > 0;
}

ZariskiDecomp zariski(const SurfaceModel& model, const PicClass& d) {
  if (!is_psef(model, d)) throw PositivityError("zariski: class " + d.to_string() + " is not pseudo-effective");
  std::vector<PicClass> support;
  RatVec a;
  PicClass p = d;
  for (;;) {
    std::vector<PicClass> added;
    for (const auto& c : model.neg_curves)
      if (!contains_class(support, c) && intersect(p, c) < 0) added.push_back(c);
    if (added.empty()) break;
    support.insert(support.end(), added.begin(), added.end());
    std::sort(support.begin(), support.end());
    RatVec rhs;
    for (const auto& g : support) rhs.push_back(intersect(d, g));
    a = support_solve(support, rhs);
    p = d;
    for (std::size_t k = 0; k < support.size(); ++k) p = p - a[k] * support[k];
  }
  ZariskiDecomp z{p, {}};
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (a[k] < 0) throw SingularSupport("zariski: negative coefficient on " + support[k].to_string());
    if (a[k] > 0) z.negative_support.emplace_back(support[k], a[k]);
  }
  return z;
}

void check_zariski_invariants(const SurfaceModel& model, const PicClass& d, const ZariskiDecomp& z) {
  if (z.positive + z.negative() != d) throw std::logic_error("zariski: P + N does not reconstruct D");
  if (!is_nef(model, z.positive)) throw std::logic_error("zariski: positive part is not nef");
  std::vector<PicClass> support;
  for (const auto& [c, a] : z.negative_support) {
    if (a <= 0) throw std::logic_error("zariski: nonpositive multiplicity");
    if (intersect(z.positive, c) != 0) throw std::logic_error("zariski: P does not annihilate the support");
    support.push_back(c);
  }
  if (!negative_definite(gram(support))) throw std::logic_error("zariski: support not negative definite");
}

BaseLoci base_loci(const SurfaceModel& model, const PicClass& d) {
  if (!is_big(model, d)) throw PositivityError("base_loci: class " + d.to_string() + " is not big");
  auto z = zariski(model, d);
  BaseLoci b;
  for (const auto& [c, a] : z.negative_support) b.bminus.push_back(c);
  b.bplus = b.bminus;
  for (const auto& c : model.neg_curves)
    if (intersect(z.positive, c) == 0 && !contains_class(b.bplus, c)) b.bplus.push_back(c);
  std::sort(b.bminus.begin(), b.bminus.end());
  std::sort(b.bplus.begin(), b.bplus.end());
  return b;
}

Rat vol(const SurfaceModel& model, const PicClass& d) {
  if (!is_psef(model, d)) return 0;
  auto z = zariski(model, d);
  return intersect(z.positive, z.positive);
}

std::vector<PicClass> right_support(const SurfaceModel& model, const PicClass& d, const PicClass& f,
                                    const Rat& t0) {
  return right_part(model, d, f, t0).support;
}

BigThreshold big_threshold(const SurfaceModel& model, const PicClass& d, const PicClass& f) {
  if (!is_big(model, d)) throw PositivityError("big_threshold: class " + d.to_string() + " is not big");
  BigThreshold out;
  Rat t = 0;
  for (std::size_t step = 0; step < 4 * model.neg_curves.size() + 8; ++step) {
    LinearPart lp = right_part(model, d, f, t);
    Chamber ch{t, std::nullopt, lp.support, lp.p0, lp.p1};

    std::optional<Rat> t_end;
    auto consider = [&](const Rat& root) {
      if (root > t && (!t_end || root < *t_end)) t_end = root;
    };
    for (const auto& c : model.neg_curves) {
      if (contains_class(lp.support, c)) continue;
      Rat slope = intersect(lp.p1, c);
      if (slope < 0) consider(-intersect(lp.p0, c) / slope);
    }
    for (std::size_t k = 0; k < lp.support.size(); ++k)
      if (lp.a1[k] < 0) consider(-lp.a0[k] / lp.a1[k]);

    auto root = first_root_after(intersect(lp.p0, lp.p0), intersect(lp.p0, lp.p1), intersect(lp.p1, lp.p1), t);
    if (root && (!t_end || compare(*root, *t_end) <= 0)) {
      out.t = *root;
      out.chambers.push_back(std::move(ch));
      return out;
    }
    if (!t_end) throw PositivityError("big_threshold: class stays big along the whole ray");
    ch.t_hi = *t_end;
    out.chambers.push_back(std::move(ch));
    t = *t_end;
  }
  throw SingularSupport("big_threshold: chamber walk did not terminate");
}

SurfaceBody surface_body_outer(const SurfaceModel& model, const PicClass& d,
                               const std::vector<std::size_t>& flag_curves, const Rat& grid_step,
                               const Rat& t_max) {
  if (grid_step <= 0) throw InvalidInput("surface_body_outer: grid step must be positive");
  if (t_max < 0) throw InvalidInput("surface_body_outer: t_max must be nonnegative");
  if (flag_curves.empty()) throw InvalidInput("surface_body_outer: at least one flag required");
  for (auto k : flag_curves)
    if (k >= model.s) throw InvalidInput("surface_body_outer: flag curve index out of range");
  for (std::size_t i = 0; i < flag_curves.size(); ++i)
    for (std::size_t j = i + 1; j < flag_curves.size(); ++j)
      if (flag_curves[i] == flag_curves[j])
        throw InvalidInput("surface_body_outer: flags must sit over distinct points");
  if (!is_big(model, d)) throw PositivityError("surface_body_outer: class " + d.to_string() + " is not big");

  const std::size_t r = flag_curves.size();
  SurfaceBody out;
  out.grid_step = grid_step;
  out.t_max = t_max;
  out.shift = zeros(r);
  auto z0 = zariski(model, d);
  PicClass base = d;
  for (std::size_t i = 0; i < r; ++i) {
    PicClass e = PicClass::exceptional(model.s, flag_curves[i]);
    for (const auto& [c, a] : z0.negative_support)
      if (c == e) out.shift[i] = a;
    base = base - out.shift[i] * e;
  }

  Rat steps_q = t_max / grid_step;
  Int steps;
  mpz_fdiv_q(steps.get_mpz_t(), steps_q.get_num_mpz_t(), steps_q.get_den_mpz_t());
  const long per_axis = steps.get_si() + 1;

  std::vector<RatVec> pts;
  std::vector<long> idx(r, 0);
  for (;;) {
    PicClass cls = base;
    RatVec t(r);
    for (std::size_t i = 0; i < r; ++i) {
      t[i] = grid_step * idx[i];
      cls = cls - t[i] * PicClass::exceptional(model.s, flag_curves[i]);
    }
    if (is_psef(model, cls)) {
      ++out.grid_points;
      auto z = zariski(model, cls);
      RatVec beta(r);
      for (std::size_t i = 0; i < r; ++i)
        beta[i] = intersect(z.positive, PicClass::exceptional(model.s, flag_curves[i]));
      for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        RatVec p(2 * r);
        for (std::size_t i = 0; i < r; ++i) {
          p[2 * i] = out.shift[i] + t[i];
          p[2 * i + 1] = (mask >> i) & 1 ? beta[i] : Rat(0);
        }
        pts.push_back(std::move(p));
      }
    }
    std::size_t i = 0;
    while (i < r && ++idx[i] == per_axis) idx[i++] = 0;
    if (i == r) break;
  }
  out.body = hull(pts, 2 * r);
  return out;
}

}  // namespace okounkov
