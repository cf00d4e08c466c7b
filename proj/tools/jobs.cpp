#include "jobs.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "okounkov/invariants.hpp"
#include "okounkov/surface.hpp"
#include "okounkov/toric.hpp"
#include "render_svg.hpp"

#ifndef OKOUNKOV_DEFAULT_FIXTURE_DIR
#define OKOUNKOV_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace okounkov::tools {

namespace fs = std::filesystem;

namespace {

const std::string kIn = "$.input";

std::string in_path(const char* key) { return kIn + "." + key; }

const json* field(const json& in, const char* key, SchemaErrors& errs, bool required = true) {
  auto it = in.find(key);
  if (it == in.end()) {
    if (required) errs.add(in_path(key), "missing");
    return nullptr;
  }
  return &*it;
}

std::optional<Rat> rat_field(const json& in, const char* key, SchemaErrors& errs, bool required = true) {
  const json* j = field(in, key, errs, required);
  return j ? read_rat(*j, in_path(key), errs) : std::nullopt;
}

std::optional<RatVec> rat_vec_field(const json& in, const char* key, SchemaErrors& errs) {
  const json* j = field(in, key, errs);
  return j ? read_rat_vec(*j, in_path(key), errs) : std::nullopt;
}

std::optional<long> long_field(const json& in, const char* key, SchemaErrors& errs, long min_value,
                               bool required = true) {
  const json* j = field(in, key, errs, required);
  return j ? read_long(*j, in_path(key), errs, min_value) : std::nullopt;
}

std::optional<WeightVec> weights_field(const json& in, SchemaErrors& errs) {
  const json* j = field(in, "weights", errs);
  if (!j) return std::nullopt;
  auto w = read_long_vec(*j, in_path("weights"), errs, 1);
  if (w && w->empty()) {
    errs.add(in_path("weights"), "at least one weight required");
    return std::nullopt;
  }
  return w;
}

std::optional<SurfaceModel> model_field(const json& in, SchemaErrors& errs) {
  const json* j = field(in, "model", errs);
  return j ? read_model(*j, in_path("model"), errs) : std::nullopt;
}

std::optional<PicClass> class_field(const json& in, SchemaErrors& errs) {
  const json* j = field(in, "class", errs);
  return j ? read_pic_class(*j, in_path("class"), errs) : std::nullopt;
}

std::string fixture_dir(const RunOptions& opts) {
  return opts.fixture_dir.empty() ? default_fixture_dir() : opts.fixture_dir;
}

Fixture named_fixture(const std::string& name, const RunOptions& opts) {
  if (name.empty() || name.find_first_not_of("abcdefghijklmnopqrstuvwxyz0123456789_-") != std::string::npos)
    throw SchemaError({in_path("fixture") + ": invalid fixture name \"" + name + "\""});
  fs::path p = fs::path(fixture_dir(opts)) / "toric" / (name + ".json");
  if (!fs::exists(p)) throw SchemaError({in_path("fixture") + ": no fixture " + p.string()});
  return load_fixture(p.string());
}

/// "fixture": name, or inline "fan", "divisor", "flags".
Fixture toric_source(const json& in, const RunOptions& opts) {
  if (auto it = in.find("fixture"); it != in.end()) {
    if (!it->is_string()) throw SchemaError({in_path("fixture") + ": expected a string"});
    return named_fixture(it->get<std::string>(), opts);
  }
  json doc = {{"schema", 1}, {"name", "inline"}};
  for (const char* key : {"fan", "divisor", "flags"})
    if (auto it = in.find(key); it != in.end()) doc[key] = *it;
  try {
    return fixture_from_json(doc);
  } catch (const SchemaError& e) {
    std::vector<std::string> moved;
    for (auto p : e.problems()) moved.push_back(p.rfind("$.", 0) == 0 ? kIn + p.substr(1) : p);
    throw SchemaError(moved);
  }
}

Rat effective_grid_step(const Rat& own, const RunOptions& opts) { return opts.grid_step ? *opts.grid_step : own; }

struct ResolvedBody {
  Polytope body;
  std::size_t n = 0;
  std::size_t r = 0;
  std::optional<FixtureSurface> surface;
};

ResolvedBody fixture_body(const Fixture& f, const RunOptions& opts) {
  ResolvedBody rb;
  rb.surface = f.surface;
  if (f.surface && f.surface->body_source == "surface") {
    const auto& s = *f.surface;
    auto model = SurfaceModel::delpezzo(s.s);
    rb.body = surface_body_outer(model, s.cls, s.flag_curves, effective_grid_step(s.grid_step, opts), s.t_max).body;
    rb.n = 2;
    rb.r = s.flag_curves.size();
  } else {
    rb.body = f.flags.r() == 1 ? extended_body_toric(f.fan, f.divisor, f.flags)
                               : monomial_body(f.fan, f.divisor, f.flags);
    rb.n = f.fan.dim();
    rb.r = f.flags.r();
  }
  return rb;
}

json chamber_json(const Chamber& c) {
  json support = json::array();
  for (const auto& g : c.support) support.push_back(to_json(g));
  return {{"t_lo", to_json(c.t_lo)},
          {"t_hi", c.t_hi ? to_json(*c.t_hi) : json(nullptr)},
          {"support", support},
          {"p0", to_json(c.p0)},
          {"p1", to_json(c.p1)}};
}

json classes_json(const std::vector<PicClass>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

json checks_json(const std::vector<Check>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

bool all_pass(const std::vector<Check>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.pass; });
}

using Handler = std::function<JobResult(const json&, const RunOptions&)>;

JobResult toric_body(const json& in, const RunOptions& opts) {
  SchemaErrors errs;
  std::string mode = "extended";
  if (const json* m = field(in, "body", errs, false)) {
    if (m->is_string() && (*m == "extended" || *m == "monomial"))
      mode = m->get<std::string>();
    else
      errs.add(in_path("body"), "expected \"extended\" or \"monomial\"");
  }
  errs.raise_if_any();
  Fixture f = toric_source(in, opts);
  Polytope p = mode == "extended" ? extended_body_toric(f.fan, f.divisor, f.flags) : monomial_body(f.fan, f.divisor, f.flags);
  JobResult res;
  res.document = {{"polytope", to_json(p)}, {"body", mode}, {"n", f.fan.dim()}, {"r", f.flags.r()}};
  res.figure = p;
  return res;
}

JobResult semigroup_sample(const json& in, const RunOptions& opts) {
  SchemaErrors errs;
  auto m_own = long_field(in, "m_max", errs, 1, false);
  errs.raise_if_any();
  Fixture f = toric_source(in, opts);
  long m_max = opts.m_max ? *opts.m_max : m_own ? *m_own : f.saturation_degree;
  if (m_max < 1) throw InvalidInput("m_max must be positive");
  Polytope p = semigroup_body_approx(f.fan, f.divisor, f.flags, m_max);
  Polytope limit = monomial_body(f.fan, f.divisor, f.flags);
  JobResult res;
  res.document = {{"polytope", to_json(p)}, {"m_max", m_max}, {"equals_limit_body", p == limit}};
  res.figure = p;
  return res;
}

JobResult surface_zariski(const json& in, const RunOptions&) {
  SchemaErrors errs;
  auto model = model_field(in, errs);
  auto cls = class_field(in, errs);
  errs.raise_if_any();
  auto z = zariski(*model, *cls);
  std::vector<Check> checks;
  try {
    check_zariski_invariants(*model, *cls, z);
    checks.push_back({"zariski-invariants", true, ""});
  } catch (const std::logic_error& e) {
    checks.push_back({"zariski-invariants", false, e.what()});
  }
  json neg = json::array();
  for (const auto& [c, a] : z.negative_support) neg.push_back({{"curve", to_json(c)}, {"mult", to_json(a)}});
  bool big = intersect(z.positive, z.positive) > 0;
  json doc = {{"positive", to_json(z.positive)},
              {"negative", neg},
              {"vol", to_json(intersect(z.positive, z.positive))},
              {"nef", is_nef(*model, *cls)},
              {"big", big},
              {"checks", checks_json(checks)}};
  if (big) {
    auto b = base_loci(*model, *cls);
    doc["base_loci"] = {{"bminus", classes_json(b.bminus)}, {"bplus", classes_json(b.bplus)}};
  }
  JobResult res;
  res.document = doc;
  res.checks_pass = all_pass(checks);
  return res;
}

JobResult surface_body(const json& in, const RunOptions& opts) {
  SchemaErrors errs;
  auto model = model_field(in, errs);
  auto cls = class_field(in, errs);
  std::optional<std::vector<long>> flags;
  if (const json* j = field(in, "flag_curves", errs)) flags = read_long_vec(*j, in_path("flag_curves"), errs, 0);
  auto step = rat_field(in, "grid_step", errs, false);
  auto t_max = rat_field(in, "t_max", errs, false);
  errs.raise_if_any();
  Rat g = effective_grid_step(step ? *step : Rat(1, 8), opts);
  std::vector<std::size_t> fc(flags->begin(), flags->end());
  auto sb = surface_body_outer(*model, *cls, fc, g, t_max ? *t_max : Rat(1));
  JobResult res;
  res.document = {{"polytope", to_json(sb.body)}, {"shift", to_json(sb.shift)},     {"grid_step", to_json(sb.grid_step)},
                  {"t_max", to_json(sb.t_max)},   {"grid_points", sb.grid_points}, {"alpha_rule", sb.alpha_rule}};
  res.figure = sb.body;
  return res;
}

JobResult seshadri(const json& in, const RunOptions&) {
  SchemaErrors errs;
  auto model = model_field(in, errs);
  auto cls = class_field(in, errs);
  auto w = weights_field(in, errs);
  errs.raise_if_any();
  JobResult res;
  res.document = {{"epsilon", to_json(RadVal(seshadri_eps(*model, *cls, *w)))},
                  {"scope", "model-exact, not variety-general"}};
  return res;
}

JobResult nakayama(const json& in, const RunOptions&) {
  SchemaErrors errs;
  auto model = model_field(in, errs);
  auto cls = class_field(in, errs);
  errs.raise_if_any();
  PicClass f{Rat(0), zeros(model->s)};
  for (auto& x : f.m) x = -1;
  if (!is_big(*model, *cls)) throw PositivityError("nakayama: class " + cls->to_string() + " is not big");
  auto bt = big_threshold(*model, *cls, f);
  json chambers = json::array();
  for (const auto& c : bt.chambers) chambers.push_back(chamber_json(c));
  JobResult res;
  res.document = {{"mu", to_json(bt.t)}, {"chambers", chambers}};
  return res;
}

/// "fixture": name, or inline "body" polytope with "n".
ResolvedBody body_input(const json& in, const RunOptions& opts, SchemaErrors& errs) {
  if (in.contains("fixture")) {
    errs.raise_if_any();
    return fixture_body(toric_source(in, opts), opts);
  }
  ResolvedBody rb;
  std::optional<Polytope> p;
  if (const json* j = field(in, "body", errs)) p = read_polytope(*j, in_path("body"), errs);
  auto n = long_field(in, "n", errs, 1);
  errs.raise_if_any();
  if (p->ambient_dim() % static_cast<std::size_t>(*n) != 0)
    throw SchemaError({in_path("n") + ": does not divide the body's ambient dimension"});
  rb.body = *p;
  rb.n = static_cast<std::size_t>(*n);
  rb.r = p->ambient_dim() / rb.n;
  return rb;
}

JobResult xi(const json& in, const RunOptions& opts) {
  SchemaErrors errs;
  auto w = weights_field(in, errs);
  ResolvedBody rb = body_input(in, opts, errs);
  errs.raise_if_any();
  JobResult res;
  res.document = {{"xi", to_json(xi_constant(rb.body, *w, rb.n, rb.r))}, {"n", rb.n}, {"r", rb.r}};
  return res;
}

JobResult eps_xi_check(const json& in, const RunOptions& opts) {
  SchemaErrors errs;
  auto w = weights_field(in, errs);
  std::optional<SurfaceModel> model;
  std::optional<PicClass> cls;
  ResolvedBody rb;
  if (in.contains("fixture")) {
    errs.raise_if_any();
    Fixture f = toric_source(in, opts);
    if (!f.surface) throw SchemaError({in_path("fixture") + ": fixture has no surface model"});
    rb = fixture_body(f, opts);
    model = SurfaceModel::delpezzo(f.surface->s);
    cls = f.surface->cls;
  } else {
    model = model_field(in, errs);
    cls = class_field(in, errs);
    rb = body_input(in, opts, errs);
  }
  if (w->size() != rb.r)
    throw SchemaError({in_path("weights") + ": expected " + std::to_string(rb.r) + " weights"});
  auto rep = check_eps_eq_xi(*model, *cls, rb.body, *w, rb.n);
  JobResult res;
  res.document = to_json(rep);
  res.document["scope"] = "model-exact, not variety-general";
  res.checks_pass = rep.all_pass();
  return res;
}

JobResult slice_volume(const json& in, const RunOptions& opts) {
  SchemaErrors errs;
  auto w = weights_field(in, errs);
  auto vol_own = rat_field(in, "vol_x", errs, !in.contains("fixture"));
  ResolvedBody rb = body_input(in, opts, errs);
  Rat vol_x;
  if (vol_own) {
    vol_x = *vol_own;
  } else if (rb.surface) {
    vol_x = intersect(rb.surface->cls, rb.surface->cls);
  } else {
    throw SchemaError({in_path("vol_x") + ": missing and the fixture has no surface class"});
  }
  if (w->size() != rb.r)
    throw SchemaError({in_path("weights") + ": expected " + std::to_string(rb.r) + " weights"});
  auto rep = slice_volume_check(rb.body, *w, rb.n, rb.r, vol_x);
  auto slice = intersect_subspace(rb.body, SliceSpec{rb.n, rb.r, RatVec(w->begin(), w->end())});
  JobResult res;
  res.document = {{"slice_volume", to_json(rep.slice_volume)},
                  {"target", to_json(rep.target)},
                  {"mode", rep.mode},
                  {"pass", rep.pass},
                  {"slice", to_json(slice.slice)},
                  {"gram_scale", to_json(slice.gram_scale)}};
  res.checks_pass = rep.pass;
  res.figure = slice.slice;
  return res;
}

JobResult nagata(const json& in, const RunOptions&) {
  SchemaErrors errs;
  auto r = long_field(in, "r", errs, 1);
  auto d = rat_field(in, "d", errs);
  auto m = rat_vec_field(in, "m", errs);
  errs.raise_if_any();
  JobResult res;
  res.document = {{"holds", nagata_check(*r, *d, *m)}};
  return res;
}

JobResult standard_form(const json& in, const RunOptions&) {
  SchemaErrors errs;
  auto d = rat_field(in, "d", errs);
  auto m = rat_vec_field(in, "m", errs);
  errs.raise_if_any();
  auto v = conditional_non_effectivity(*d, *m);
  JobResult res;
  res.document = {{"standard", is_standard_form(*d, *m)}, {"verdict", v.verdict}, {"assumption", v.assumption}};
  return res;
}

JobResult irrationality(const json& in, const RunOptions&) {
  SchemaErrors errs;
  auto s = long_field(in, "s", errs, 1);
  auto d = rat_field(in, "d", errs);
  auto m = rat_vec_field(in, "m", errs);
  errs.raise_if_any();
  auto c = irrationality_certificate(static_cast<std::size_t>(*s), *d, *m);
  JobResult res;
  res.document = {{"certified", c.certified},
                  {"epsilon", c.eps ? to_json(*c.eps) : json(nullptr)},
                  {"irrational", c.irrational},
                  {"assumption", c.assumption},
                  {"conditions", checks_json(c.conditions)}};
  return res;
}

JobResult homogeneous(const json& in, const RunOptions&) {
  SchemaErrors errs;
  auto s = long_field(in, "s", errs, 1);
  auto d = rat_field(in, "d", errs);
  auto c = rat_field(in, "c", errs);
  errs.raise_if_any();
  auto h = homogeneous_eps(static_cast<std::size_t>(*s), *d, *c);
  JobResult res;
  res.document = {{"branch", h.branch},
                  {h.branch == 1 ? "epsilon" : "epsilon_lower_bound", to_json(h.value)},
                  {"assumption", h.assumption},
                  {"ample_asserted_by_caller", true},
                  {"checks", checks_json(h.checks)}};
  res.checks_pass = all_pass(h.checks);
  return res;
}

JobResult nef_boundary(const json& in, const RunOptions&) {
  SchemaErrors errs;
  auto d = rat_field(in, "d", errs);
  auto m = rat_vec_field(in, "m", errs);
  errs.raise_if_any();
  auto rep = nef_boundary_check(*d, *m);
  JobResult res;
  res.document = {{"verdict", rep.verdict},
                  {"nef", rep.nef},
                  {"criterion_pass", rep.criterion_pass},
                  {"on_boundary", rep.on_boundary},
                  {"conditions", checks_json(rep.conditions)}};
  return res;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"toric-body", toric_body},     {"semigroup-sample", semigroup_sample},
      {"surface-zariski", surface_zariski}, {"surface-body", surface_body},
      {"seshadri", seshadri},         {"nakayama", nakayama},
      {"xi", xi},                     {"eps-xi-check", eps_xi_check},
      {"slice-volume", slice_volume}, {"nagata", nagata},
      {"standard-form", standard_form}, {"irrationality", irrationality},
      {"homogeneous", homogeneous},   {"nef-boundary", nef_boundary},
  };
  return table;
}

struct JobHeader {
  std::string kind;
  std::string output;
  bool render = false;
};

JobHeader read_header(const json& job, const std::string& default_output) {
  SchemaErrors errs;
  JobHeader h;
  h.output = default_output;
  if (!job.is_object()) {
    errs.add("$", "expected an object");
    errs.raise_if_any();
  }
  auto schema = job.find("schema");
  if (schema == job.end())
    errs.add("$.schema", "missing");
  else if (!schema->is_number_integer() || schema->get<long>() != 1)
    errs.add("$.schema", "expected 1");
  auto kind = job.find("kind");
  if (kind == job.end()) {
    errs.add("$.kind", "missing");
  } else if (!kind->is_string() || !handlers().count(kind->get<std::string>())) {
    errs.add("$.kind", "unknown job kind " + kind->dump());
  } else {
    h.kind = kind->get<std::string>();
  }
  auto input = job.find("input");
  if (input == job.end())
    errs.add("$.input", "missing");
  else if (!input->is_object())
    errs.add("$.input", "expected an object");
  if (auto r = job.find("render"); r != job.end()) {
    if (r->is_boolean())
      h.render = r->get<bool>();
    else
      errs.add("$.render", "expected a boolean");
  }
  if (auto o = job.find("output"); o != job.end()) {
    if (!o->is_string() || o->get<std::string>().empty() || o->get<std::string>().find('/') != std::string::npos)
      errs.add("$.output", "expected a plain file name");
    else
      h.output = o->get<std::string>();
  }
  errs.raise_if_any();
  return h;
}

}  // namespace

std::string default_fixture_dir() {
  if (const char* env = std::getenv("OKOUNKOV_FIXTURES"); env && *env) return env;
  return OKOUNKOV_DEFAULT_FIXTURE_DIR;
}

JobResult evaluate_job(const json& job, const RunOptions& opts) {
  JobHeader h = read_header(job, "result.json");
  JobResult res = handlers().at(h.kind)(job.at("input"), opts);
  res.document = {{"schema", 1}, {"kind", h.kind}, {"result", res.document}, {"status", res.checks_pass ? "ok" : "check-failed"}};
  return res;
}

int run_job_file(const std::string& job_path, const RunOptions& opts, std::ostream& err) {
  try {
    std::ifstream in(job_path);
    if (!in) throw InvalidInput("cannot read job file " + job_path);
    json job;
    try {
      job = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("job file is not valid JSON: ") + e.what());
    }
    const std::string stem = fs::path(job_path).stem().string();
    JobHeader h = read_header(job, stem + ".json");
    JobResult res = evaluate_job(job, opts);

    fs::create_directories(opts.out_dir);
    fs::path out = fs::path(opts.out_dir) / h.output;
    std::ofstream os(out);
    if (!os) throw InvalidInput("cannot write " + out.string());
    os << res.document.dump(2) << "\n";
    os.close();

    if ((opts.render || h.render) && res.figure) {
      fs::path svg = out;
      svg.replace_extension(".svg");
      if (res.figure->ambient_dim() <= 2)
        write_svg(*res.figure, svg.string());
      else
        err << "note: body lives in R^" << res.figure->ambient_dim() << ", no figure written\n";
    }
    if (!res.checks_pass) {
      err << "check failed; see " << out.string() << "\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const SchemaError& e) {
    err << "error: invalid job\n";
    for (const auto& p : e.problems()) err << "  " << p << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace okounkov::tools
