#include "okounkov/json_io.hpp"

#include <fstream>
#include <limits>

namespace okounkov {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& path, const char* key) { return path + "." + key; }

const json* member(const json& j, const char* key, const std::string& path, SchemaErrors& errs,
                   bool required = true) {
  if (!j.is_object()) {
    errs.add(path, "expected an object");
    return nullptr;
  }
  auto it = j.find(key);
  if (it == j.end()) {
    if (required) errs.add(at(path, key), "missing");
    return nullptr;
  }
  return &*it;
}

}  // namespace

SchemaError::SchemaError(std::vector<std::string> problems)
    : InvalidInput("schema: " + join(problems)), problems_(std::move(problems)) {}

void SchemaErrors::add(const std::string& path, const std::string& message) {
  problems_.push_back(path + ": " + message);
}

void SchemaErrors::raise_if_any() const {
  if (!problems_.empty()) throw SchemaError(problems_);
}

json to_json(const Rat& q) { return to_string(q); }

json to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const RadVal& v) { return {{"coeff", to_string(v.coeff())}, {"radicand", v.radicand().get_str()}}; }

json to_json(const QuadVal& v) {
  json j = to_json(v.rad);
  if (v.shift != 0) j["shift"] = to_string(v.shift);
  return j;
}

json to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  json hs = json::array();
  for (const auto& h : p.halfspaces()) hs.push_back({{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
  return {{"ambient_dim", p.ambient_dim()}, {"vertices", verts}, {"halfspaces", hs}};
}

json to_json(const PicClass& c) { return {{"d", to_json(c.d)}, {"m", to_json(c.m)}}; }

json to_json(const Check& c) { return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

json to_json(const InvariantReport& r) {
  json j = json::object();
  if (r.epsilon) j["epsilon"] = to_json(*r.epsilon);
  if (r.mu) j["mu"] = to_json(*r.mu);
  if (r.xi) j["xi"] = to_json(*r.xi);
  if (r.lower_bound || r.upper_bound) {
    j["bounds"] = json::array({r.lower_bound ? to_json(*r.lower_bound) : json(nullptr),
                               r.upper_bound ? to_json(*r.upper_bound) : json(nullptr)});
  }
  j["assumption"] = r.assumption;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  return j;
}

std::optional<Rat> read_rat(const json& j, const std::string& path, SchemaErrors& errs) {
  try {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const InvalidInput& e) {
    errs.add(path, e.what());
    return std::nullopt;
  }
  errs.add(path, "expected a rational as \"p/q\" or an integer");
  return std::nullopt;
}

std::optional<RatVec> read_rat_vec(const json& j, const std::string& path, SchemaErrors& errs) {
  if (!j.is_array()) {
    errs.add(path, "expected an array of rationals");
    return std::nullopt;
  }
  RatVec out;
  bool ok = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto q = read_rat(j[i], at(path, i), errs);
    if (q)
      out.push_back(*q);
    else
      ok = false;
  }
  if (!ok) return std::nullopt;
  return out;
}

std::optional<long> read_long(const json& j, const std::string& path, SchemaErrors& errs, long min_value) {
  if (!j.is_number_integer()) {
    errs.add(path, "expected an integer");
    return std::nullopt;
  }
  long v = j.get<long>();
  if (v < min_value) {
    errs.add(path, "must be at least " + std::to_string(min_value));
    return std::nullopt;
  }
  return v;
}

std::optional<std::vector<long>> read_long_vec(const json& j, const std::string& path, SchemaErrors& errs,
                                               long min_value) {
  if (!j.is_array()) {
    errs.add(path, "expected an array of integers");
    return std::nullopt;
  }
  std::vector<long> out;
  bool ok = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto v = read_long(j[i], at(path, i), errs, min_value);
    if (v)
      out.push_back(*v);
    else
      ok = false;
  }
  if (!ok) return std::nullopt;
  return out;
}

std::optional<Polytope> read_polytope(const json& j, const std::string& path, SchemaErrors& errs) {
  const std::size_t before = errs.problems().size();
  const json* dim = member(j, "ambient_dim", path, errs);
  const json* verts = member(j, "vertices", path, errs);
  std::optional<long> n;
  if (dim) n = read_long(*dim, at(path, "ambient_dim"), errs, 0);
  std::vector<RatVec> pts;
  if (verts) {
    if (!verts->is_array()) {
      errs.add(at(path, "vertices"), "expected an array");
    } else {
      for (std::size_t i = 0; i < verts->size(); ++i) {
        auto v = read_rat_vec((*verts)[i], at(at(path, "vertices"), i), errs);
        if (!v) continue;
        if (n && v->size() != static_cast<std::size_t>(*n))
          errs.add(at(at(path, "vertices"), i), "length differs from ambient_dim");
        else
          pts.push_back(std::move(*v));
      }
    }
  }
  if (errs.problems().size() != before || !n) return std::nullopt;
  return hull(pts, static_cast<std::size_t>(*n));
}

std::optional<PicClass> read_pic_class(const json& j, const std::string& path, SchemaErrors& errs) {
  const json* d = member(j, "d", path, errs);
  const json* m = member(j, "m", path, errs);
  std::optional<Rat> dv;
  std::optional<RatVec> mv;
  if (d) dv = read_rat(*d, at(path, "d"), errs);
  if (m) mv = read_rat_vec(*m, at(path, "m"), errs);
  if (!dv || !mv) return std::nullopt;
  return PicClass{*dv, *mv};
}

std::optional<SurfaceModel> read_model(const json& j, const std::string& path, SchemaErrors& errs) {
  const json* sj = member(j, "s", path, errs);
  if (!sj) return std::nullopt;
  auto s = read_long(*sj, at(path, "s"), errs, 1);
  if (!s) return std::nullopt;
  const json* curves = member(j, "curves", path, errs, false);
  if (!curves) return SurfaceModel::delpezzo(static_cast<std::size_t>(*s));
  if (!curves->is_array()) {
    errs.add(at(path, "curves"), "expected an array of classes");
    return std::nullopt;
  }
  std::vector<PicClass> list;
  bool ok = true;
  for (std::size_t i = 0; i < curves->size(); ++i) {
    auto c = read_pic_class((*curves)[i], at(at(path, "curves"), i), errs);
    if (!c) {
      ok = false;
    } else if (c->s() != static_cast<std::size_t>(*s)) {
      errs.add(at(at(path, "curves"), i), "expected " + std::to_string(*s) + " multiplicities");
      ok = false;
    } else {
      list.push_back(*c);
    }
  }
  if (!ok) return std::nullopt;
  return SurfaceModel::user(static_cast<std::size_t>(*s), std::move(list));
}

Polytope polytope_from_json(const json& j) {
  SchemaErrors errs;
  auto p = read_polytope(j, "$", errs);
  errs.raise_if_any();
  return *p;
}

RadVal radval_from_json(const json& j) {
  SchemaErrors errs;
  std::optional<Rat> c;
  std::optional<Int> k;
  if (const json* cj = member(j, "coeff", "$", errs)) c = read_rat(*cj, "$.coeff", errs);
  if (const json* kj = member(j, "radicand", "$", errs)) {
    if (kj->is_string()) {
      try {
        k = Int(kj->get<std::string>());
      } catch (const std::invalid_argument&) {
        errs.add("$.radicand", "expected a nonnegative integer string");
      }
    } else if (auto v = read_long(*kj, "$.radicand", errs, 0)) {
      k = Int(*v);
    }
    if (k && *k < 0) errs.add("$.radicand", "must be nonnegative");
  }
  errs.raise_if_any();
  return RadVal(*c, *k);
}

Fixture fixture_from_json(const json& j) {
  SchemaErrors errs;
  const std::string root = "$";
  if (const json* schema = member(j, "schema", root, errs)) {
    if (!schema->is_number_integer() || schema->get<long>() != 1) errs.add("$.schema", "expected 1");
  }
  std::string name;
  if (const json* nj = member(j, "name", root, errs)) {
    if (nj->is_string())
      name = nj->get<std::string>();
    else
      errs.add("$.name", "expected a string");
  }

  std::optional<long> dim;
  std::vector<std::vector<long>> rays;
  std::vector<std::vector<std::size_t>> cones;
  if (const json* fan = member(j, "fan", root, errs)) {
    if (const json* dj = member(*fan, "dim", "$.fan", errs)) dim = read_long(*dj, "$.fan.dim", errs, 1);
    if (const json* rj = member(*fan, "rays", "$.fan", errs)) {
      if (!rj->is_array()) errs.add("$.fan.rays", "expected an array");
      for (std::size_t i = 0; rj->is_array() && i < rj->size(); ++i) {
        auto r = read_long_vec((*rj)[i], at("$.fan.rays", i), errs, std::numeric_limits<long>::min());
        if (r) rays.push_back(*r);
      }
    }
    if (const json* cj = member(*fan, "max_cones", "$.fan", errs)) {
      if (!cj->is_array()) errs.add("$.fan.max_cones", "expected an array");
      for (std::size_t i = 0; cj->is_array() && i < cj->size(); ++i) {
        auto c = read_long_vec((*cj)[i], at("$.fan.max_cones", i), errs, 0);
        if (c) cones.emplace_back(c->begin(), c->end());
      }
    }
  }
  std::optional<RatVec> coeffs;
  if (const json* dj = member(j, "divisor", root, errs)) {
    // {"coeffs": [...]} or the bare list
    if (dj->is_object()) {
      if (const json* cj = member(*dj, "coeffs", "$.divisor", errs)) coeffs = read_rat_vec(*cj, "$.divisor.coeffs", errs);
    } else {
      coeffs = read_rat_vec(*dj, "$.divisor", errs);
    }
  }
  std::vector<std::vector<std::size_t>> flags;
  if (const json* fj0 = member(j, "flags", root, errs)) {
    // {"flags": [...]} or the bare list
    std::string fpath = "$.flags";
    const json* fj = fj0;
    if (fj0->is_object()) {
      fpath = "$.flags.flags";
      fj = member(*fj0, "flags", "$.flags", errs);
    }
    if (fj && !fj->is_array()) errs.add(fpath, "expected an array");
    for (std::size_t i = 0; fj && fj->is_array() && i < fj->size(); ++i) {
      auto f = read_long_vec((*fj)[i], at(fpath, i), errs, 0);
      if (f) flags.emplace_back(f->begin(), f->end());
    }
  }
  long saturation = 1;
  if (const json* sj = member(j, "saturation_degree", root, errs, false)) {
    if (auto v = read_long(*sj, "$.saturation_degree", errs, 1)) saturation = *v;
  }

  std::optional<FixtureSurface> surface;
  if (const json* sj = member(j, "surface", root, errs, false)) {
    FixtureSurface fs;
    bool ok = true;
    if (const json* s = member(*sj, "s", "$.surface", errs)) {
      auto v = read_long(*s, "$.surface.s", errs, 1);
      ok = ok && v;
      if (v) fs.s = static_cast<std::size_t>(*v);
    } else {
      ok = false;
    }
    if (const json* c = member(*sj, "class", "$.surface", errs)) {
      auto cls = read_pic_class(*c, "$.surface.class", errs);
      ok = ok && cls;
      if (cls) fs.cls = *cls;
    } else {
      ok = false;
    }
    if (const json* f = member(*sj, "flag_curves", "$.surface", errs)) {
      auto v = read_long_vec(*f, "$.surface.flag_curves", errs, 0);
      ok = ok && v;
      if (v) fs.flag_curves.assign(v->begin(), v->end());
    } else {
      ok = false;
    }
    if (const json* b = member(*sj, "body", "$.surface", errs, false)) {
      if (b->is_string() && (*b == "toric" || *b == "surface"))
        fs.body_source = b->get<std::string>();
      else
        errs.add("$.surface.body", "expected \"toric\" or \"surface\"");
    }
    if (const json* g = member(*sj, "grid_step", "$.surface", errs, false)) {
      if (auto v = read_rat(*g, "$.surface.grid_step", errs)) fs.grid_step = *v;
    }
    if (const json* t = member(*sj, "t_max", "$.surface", errs, false)) {
      if (auto v = read_rat(*t, "$.surface.t_max", errs)) fs.t_max = *v;
    }
    if (ok) surface = fs;
  }

  std::vector<PicClass> ray_classes;
  if (const json* rc = member(j, "ray_classes", root, errs, false)) {
    if (!rc->is_array()) errs.add("$.ray_classes", "expected an array");
    for (std::size_t i = 0; rc->is_array() && i < rc->size(); ++i) {
      if (auto c = read_pic_class((*rc)[i], at("$.ray_classes", i), errs)) ray_classes.push_back(*c);
    }
  }
  errs.raise_if_any();

  Fan fan(static_cast<std::size_t>(*dim), rays, cones);
  if (coeffs->size() != fan.rays().size()) throw SchemaError({"$.divisor: one coefficient per ray required"});
  if (!ray_classes.empty() && ray_classes.size() != fan.rays().size())
    throw SchemaError({"$.ray_classes: one class per ray required"});
  ToricFlagSpec spec{flags};
  validate_flags(fan, spec);
  return Fixture{name, std::move(fan), ToricDivisor{*coeffs}, spec, saturation, surface, ray_classes};
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open fixture " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("fixture " + path + ": " + e.what());
  }
  return fixture_from_json(j);
}

}  // namespace okounkov
