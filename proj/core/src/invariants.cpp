#include "okounkov/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "okounkov/errors.hpp"

namespace okounkov {

namespace {

Rat sum(const RatVec& v) { return std::accumulate(v.begin(), v.end(), Rat(0)); }

Rat sum_sq(const RatVec& v) {
  Rat s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

bool non_increasing_nonneg(const RatVec& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) return false;
    if (i && m[i] > m[i - 1]) return false;
  }
  return true;
}

RatVec padded(RatVec m, std::size_t len) {
  if (m.size() < len) m.resize(len, Rat(0));
  return m;
}

PicClass weighted_exceptional(std::size_t s, const WeightVec& w) {
  PicClass f{Rat(0), zeros(s)};
  for (std::size_t i = 0; i < s; ++i) f.m[i] = -w[i];
  return f;
}

Rat factorial(std::size_t n) {
  Rat f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long>(k);
  return f;
}

}  // namespace

void validate_weights(const WeightVec& w) {
  if (w.empty()) throw InvalidInput("weights: at least one weight required");
  for (long x : w)
    if (x < 1) throw InvalidInput("weights: every weight must be a positive integer");
}

bool InvariantReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Rat seshadri_eps(const SurfaceModel& model, const PicClass& l, const WeightVec& w) {
  validate_weights(w);
  if (w.size() != model.s) throw DimensionMismatch("seshadri_eps: need one weight per blown-up point");
  if (!is_nef(model, l)) throw PositivityError("seshadri_eps: class " + l.to_string() + " is not nef");
  PicClass f = weighted_exceptional(model.s, w);
  std::optional<Rat> best;
  for (const auto& c : model.test_classes()) {
    Rat den = intersect(f, c);  // sum w_i (E_i . C)
    if (den <= 0) continue;
    Rat q = intersect(l, c) / den;
    if (!best || q < *best) best = q;
  }
  if (!best) throw UnsupportedGenerality("seshadri_eps: no test class bounds the threshold");
  return *best < 0 ? Rat(0) : *best;
}

QuadVal nakayama_mu(const SurfaceModel& model, const PicClass& l) {
  if (!is_big(model, l)) throw PositivityError("nakayama_mu: class " + l.to_string() + " is not big");
  return big_threshold(model, l, weighted_exceptional(model.s, WeightVec(model.s, 1))).t;
}

Rat xi_constant(const Polytope& body, const WeightVec& w, std::size_t n, std::size_t r) {
  validate_weights(w);
  if (w.size() != r) throw DimensionMismatch("xi_constant: need r weights");
  if (n == 0 || body.ambient_dim() != n * r) throw DimensionMismatch("xi_constant: body is not in R^{nr}");
  if (body.empty() || !body.contains(zeros(n * r))) return 0;

  auto v = [&](std::size_t j) {
    RatVec out = zeros(n * r);
    for (std::size_t i = 0; i < r; ++i) out[i * n + j] = w[i];
    return out;
  };
  std::vector<RatVec> gens{v(0)};
  for (std::size_t j = 1; j < n; ++j) gens.push_back(v(0) + v(j));

  std::optional<Rat> best;
  for (const auto& h : body.halfspaces()) {
    for (const auto& g : gens) {
      Rat den = dot(h.normal, g);
      if (den <= 0) continue;
      Rat q = h.offset / den;
      if (!best || q < *best) best = q;
    }
  }
  if (!best) throw InvalidInput("xi_constant: body is unbounded along the simplex directions");
  return *best;
}

InvariantReport check_eps_eq_xi(const SurfaceModel& model, const PicClass& l, const Polytope& body,
                                const WeightVec& w, std::size_t n) {
  InvariantReport rep;
  Rat eps = seshadri_eps(model, l, w);
  Rat xi = xi_constant(body, w, n, w.size());
  rep.epsilon = RadVal(eps);
  rep.xi = xi;
  Check c{"eps-equals-xi", eps == xi, "eps=" + to_string(eps) + " xi=" + to_string(xi)};
  if (!c.pass) {
    auto simplex_w = RatVec(w.begin(), w.end());
    Polytope s = inverted_slice_simplex(eps * simplex_w, n);
    c.detail += contains(body, s) ? "; simplex at eps lies in the body" : "; simplex at eps leaves the body";
  }
  rep.checks.push_back(std::move(c));
  return rep;
}

SliceVolumeReport slice_volume_check(const Polytope& body, const WeightVec& w, std::size_t n, std::size_t r,
                                     const Rat& vol_x) {
  validate_weights(w);
  if (w.size() != r) throw DimensionMismatch("slice_volume_check: need r weights");
  SliceSpec spec{n, r, RatVec(w.begin(), w.end())};
  SliceResult sr = intersect_subspace(body, spec);
  SliceVolumeReport rep;
  rep.slice_volume = volume(sr.slice) * sr.gram_scale;
  const bool uniform = std::all_of(w.begin(), w.end(), [&](long x) { return x == w.front(); });
  if (uniform) {
    Rat rr = static_cast<long>(r);
    Rat pow = 1;
    for (std::size_t k = 2; k < n; ++k) pow *= rr;
    RadVal sqrt_pow = n >= 2 ? RadVal::sqrt_of(pow) : RadVal::sqrt_of(1 / rr);
    rep.target = sqrt_pow * (vol_x / factorial(n));
    rep.mode = "equality";
    rep.pass = rep.slice_volume == rep.target;
  } else if (n == 2) {
    rep.target = RadVal(vol_x / 2);
    rep.mode = "at-most";
    rep.pass = rep.slice_volume <= rep.target;
  } else {
    rep.target = RadVal();
    rep.mode = "no-claim";
    rep.pass = true;
  }
  return rep;
}

InvariantReport bounds_sandwich(const SurfaceModel& model, const PicClass& l) {
  // the s blown-up points are the r points, so L has to come from the plane
  if (!is_zero(l.m)) throw InvalidInput("bounds_sandwich: class " + l.to_string() + " is not a multiple of H");
  if (!is_nef(model, l) || !is_big(model, l))
    throw PositivityError("bounds_sandwich: class " + l.to_string() + " must be nef and big");
  const std::size_t r = model.s;
  InvariantReport rep;
  Rat eps = seshadri_eps(model, l, WeightVec(r, 1));
  QuadVal mu = nakayama_mu(model, l);
  rep.epsilon = RadVal(eps);
  rep.mu = mu;

  const Rat l2 = intersect(l, l);
  const Rat l2r = l2 / static_cast<long>(r);
  RadVal mu_rad = mu.as_radval();  // mu is a pure surd or rational here
  // l2r / (q sqrt k) = l2r / (q k) * sqrt k
  RadVal upper(l2r / (mu_rad.coeff() * mu_rad.radicand()), mu_rad.radicand());
  rep.upper_bound = upper;

  const Rat mu2 = mu_rad.square();
  if (mu2 < l2r) {
    rep.checks.push_back({"lower-bound-defined", false, "mu^2 < L^2/r"});
  } else if (mu_rad.is_rational()) {
    rep.lower_bound = QuadVal(mu_rad.coeff(), -RadVal::sqrt_of(mu2 - l2r));
  } else {
    throw DegreeOverflow("bounds_sandwich: lower bound needs a rational Nakayama constant");
  }

  const QuadVal eps_q(eps);
  if (rep.lower_bound)
    rep.checks.push_back({"lower-bound", compare(*rep.lower_bound, eps) <= 0,
                          rep.lower_bound->to_string() + " <= " + to_string(eps)});
  rep.checks.push_back({"upper-bound", compare(eps_q, upper) <= 0, to_string(eps) + " <= " + upper.to_string()});

  const RadVal root = RadVal::sqrt_of(l2r);
  const bool eps_at_root = compare(eps_q, root) == 0;
  const bool mu_at_root = compare(mu, root) == 0;
  rep.checks.push_back({"equality-clause", eps_at_root == mu_at_root,
                        std::string("eps=sqrt(L^2/r) ") + (eps_at_root ? "true" : "false") +
                            ", mu=sqrt(L^2/r) " + (mu_at_root ? "true" : "false")});
  return rep;
}

bool nagata_check(long r, const Rat& d, const RatVec& m) {
  if (r < 1) throw InvalidInput("nagata_check: r must be positive");
  for (const auto& x : m)
    if (x < 0) throw InvalidInput("nagata_check: multiplicities must be nonnegative");
  const Rat total = sum(m);
  if (total == 0) return true;
  if (d <= 0) return false;
  return Rat(r) * d * d >= total * total;
}

bool is_standard_form(const Rat& d, const RatVec& m) {
  RatVec p = padded(m, 3);
  return non_increasing_nonneg(p) && d >= p[0] + p[1] + p[2];
}

ConditionalVerdict conditional_non_effectivity(const Rat& d, const RatVec& m) {
  RatVec sorted = m;
  std::sort(sorted.begin(), sorted.end(), [](const Rat& a, const Rat& b) { return a > b; });
  if (is_standard_form(d, sorted) && d * d - sum_sq(sorted) < 0)
    return {"not-effective (conditional)", kConditionalNonEffectivity};
  return {"unknown", kUnconditional};
}

IrrationalityCertificate irrationality_certificate(std::size_t s, const Rat& d, const RatVec& m) {
  if (m.size() != s) throw DimensionMismatch("irrationality_certificate: need s multiplicities");
  IrrationalityCertificate cert;
  auto add = [&](std::string name, bool ok, std::string detail) {
    cert.conditions.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };
  bool ok = add("at-least-nine-points", s >= 9, "s=" + std::to_string(s));
  ok = add("sorted-nonnegative", non_increasing_nonneg(m), "m non-increasing and >= 0") && ok;
  RatVec p = padded(m, 3);
  Rat m123 = p[0] + p[1] + p[2];
  ok = add("standard-form", m123 <= d, to_string(m123) + " <= " + to_string(d)) && ok;
  Rat m12 = p[0] + p[1];
  if (m12 > 0) {
    Rat upper = (m12 * m12 + sum_sq(m)) / (2 * m12);
    ok = add("upper-inequality", d < upper, to_string(d) + " < " + to_string(upper)) && ok;
  } else {
    ok = add("upper-inequality", false, "m_1 + m_2 = 0") && ok;
  }
  Rat l2 = d * d - sum_sq(m);
  ok = add("positive-square", l2 > 0, "L^2=" + to_string(l2)) && ok;
  if (ok) {
    cert.certified = true;
    cert.eps = RadVal::sqrt_of(l2);
    cert.irrational = !cert.eps->is_rational();
  }
  return cert;
}

HomogeneousResult homogeneous_eps(std::size_t s, const Rat& d, const Rat& c) {
  if (s < 9) throw UnsupportedGenerality("homogeneous_eps: requires s >= 9 points");
  if (d <= 0 || c < 0) throw InvalidInput("homogeneous_eps: need d > 0 and c >= 0");
  HomogeneousResult res;
  const Rat ss = static_cast<long>(s);
  const Rat l2 = d * d - ss * c * c;
  if (c * (ss + 4) >= 4 * d) {
    if (l2 <= 0) throw InvalidInput("homogeneous_eps: L^2 <= 0, class is not ample");
    res.branch = 1;
    res.value = RadVal::sqrt_of(l2);
    if (c * (ss + 4) == 4 * d) {
      bool same = res.value == RadVal(d - 2 * c);
      res.checks.push_back({"boundary-identity", same, "sqrt(L^2)=" + res.value.to_string() +
                                                           " d-2c=" + to_string(d - 2 * c)});
    }
  } else {
    res.branch = 2;
    res.value = RadVal(d - 2 * c);
  }
  return res;
}

NefBoundaryReport nef_boundary_check(const Rat& d, const RatVec& m) {
  if (!non_increasing_nonneg(m)) throw InvalidInput("nef_boundary_check: m must be non-increasing and >= 0");
  NefBoundaryReport rep;
  const RatVec p = padded(m, 8);
  const std::size_t s = p.size();
  auto mi = [&](std::size_t i) -> const Rat& { return p[i - 1]; };

  rep.conditions.push_back({"(1)", d >= mi(2) + mi(3), to_string(d) + " >= " + to_string(mi(2) + mi(3))});
  Rat s26 = 0;
  for (std::size_t i = 2; i <= 6; ++i) s26 += mi(i);
  rep.conditions.push_back({"(2)", 2 * d >= s26, to_string(2 * d) + " >= " + to_string(s26)});
  // both sides are nonnegative, so compare squares
  Rat rhs = 2 * mi(2);
  for (std::size_t i = 3; i <= 8; ++i) rhs += mi(i);
  Rat lhs_sq = 9 * sum_sq(p);
  bool c3 = lhs_sq > rhs * rhs;
  rep.conditions.push_back({"(3)", c3, to_string(lhs_sq) + " > " + to_string(rhs * rhs)});
  for (std::size_t t = 2; t + 1 <= s; ++t) {
    Rat part = 0;
    for (std::size_t i = 2; i <= t + 1; ++i) part += mi(i) * mi(i);
    Rat val = d * d - Rat(static_cast<long>(t + 3), static_cast<long>(t + 2)) * part;
    rep.conditions.push_back({"(4) t=" + std::to_string(t), val > 0, to_string(val) + " > 0"});
  }
  rep.criterion_pass = std::all_of(rep.conditions.begin(), rep.conditions.end(), [](const Check& c) { return c.pass; });
  rep.on_boundary = d * d - sum_sq(p) == 0;
  rep.nef = rep.criterion_pass && rep.on_boundary;
  if (!rep.on_boundary)
    rep.verdict = "off-boundary";
  else
    rep.verdict = rep.criterion_pass ? "nef" : "not-nef-by-criterion";
  return rep;
}

std::vector<bool> points_in_bminus(const SurfaceModel& model, const PicClass& d,
                                   const std::vector<std::size_t>& flag_curves) {
  auto z = zariski(model, d);
  std::vector<bool> out;
  for (auto k : flag_curves) {
    if (k >= model.s) throw InvalidInput("points_in_bminus: flag curve index out of range");
    PicClass e = PicClass::exceptional(model.s, k);
    bool in = false;
    for (const auto& [c, a] : z.negative_support) in = in || c == e;
    out.push_back(in);
  }
  return out;
}

std::vector<bool> points_in_bplus(const SurfaceModel& model, const PicClass& d,
                                  const std::vector<std::size_t>& flag_curves, const WeightVec& w) {
  validate_weights(w);
  if (w.size() != flag_curves.size()) throw DimensionMismatch("points_in_bplus: need one weight per flag");
  std::vector<bool> out = points_in_bminus(model, d, flag_curves);
  PicClass f{Rat(0), zeros(model.s)};
  for (std::size_t i = 0; i < flag_curves.size(); ++i) f.m[flag_curves[i]] = -w[i];
  auto support = right_support(model, d, f, Rat(0));
  for (std::size_t i = 0; i < flag_curves.size(); ++i) {
    PicClass e = PicClass::exceptional(model.s, flag_curves[i]);
    if (std::find(support.begin(), support.end(), e) != support.end()) out[i] = true;
  }
  return out;
}

}  // namespace okounkov
