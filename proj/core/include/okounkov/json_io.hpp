// JSON encodings. Rationals are canonical "p/q" strings ("p" when q = 1).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "okounkov/errors.hpp"
#include "okounkov/invariants.hpp"
#include "okounkov/polytope.hpp"
#include "okounkov/radval.hpp"
#include "okounkov/surface.hpp"
#include "okounkov/toric.hpp"

namespace okounkov {

using json = nlohmann::json;

/// Schema violations, one entry per offending path.
class SchemaError : public InvalidInput {
 public:
  explicit SchemaError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Collects problems while a document is read, so every bad path is reported at once.
class SchemaErrors {
 public:
  void add(const std::string& path, const std::string& message);
  bool empty() const { return problems_.empty(); }
  const std::vector<std::string>& problems() const { return problems_; }
  /// Throws SchemaError when any problem was recorded.
  void raise_if_any() const;

 private:
  std::vector<std::string> problems_;
};

json to_json(const Rat& q);
json to_json(const RatVec& v);
json to_json(const RadVal& v);
json to_json(const QuadVal& v);
json to_json(const Polytope& p);
json to_json(const PicClass& c);
json to_json(const Check& c);
json to_json(const InvariantReport& r);

// Readers return nullopt after recording a problem at `path`.
std::optional<Rat> read_rat(const json& j, const std::string& path, SchemaErrors& errs);
std::optional<RatVec> read_rat_vec(const json& j, const std::string& path, SchemaErrors& errs);
std::optional<long> read_long(const json& j, const std::string& path, SchemaErrors& errs, long min_value);
std::optional<std::vector<long>> read_long_vec(const json& j, const std::string& path, SchemaErrors& errs,
                                               long min_value);
std::optional<Polytope> read_polytope(const json& j, const std::string& path, SchemaErrors& errs);
std::optional<PicClass> read_pic_class(const json& j, const std::string& path, SchemaErrors& errs);
/// {"s": k} for the built-in model, or {"s": k, "curves": [...]} for a user list.
std::optional<SurfaceModel> read_model(const json& j, const std::string& path, SchemaErrors& errs);

/// Throwing convenience wrappers.
Polytope polytope_from_json(const json& j);
RadVal radval_from_json(const json& j);

/// Surface-side description of a fixture: which model class the toric divisor represents.
struct FixtureSurface {
  std::size_t s = 0;
  PicClass cls;
  std::vector<std::size_t> flag_curves;
  std::string body_source = "toric";  // "toric" or "surface"
  Rat grid_step = Rat(1, 8);
  Rat t_max = 1;
};

struct Fixture {
  std::string name;
  Fan fan;
  ToricDivisor divisor;
  ToricFlagSpec flags;
  long saturation_degree = 1;
  std::optional<FixtureSurface> surface;
  std::vector<PicClass> ray_classes;  // empty when not recorded
};

Fixture fixture_from_json(const json& j);
Fixture load_fixture(const std::string& path);

}  // namespace okounkov
