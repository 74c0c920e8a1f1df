#pragma once
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rollfac/obstruct.hpp"
#include "rollfac/polyparse.hpp"

namespace rf::app {

using json = nlohmann::json;

// Malformed input: exit code 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Module precondition failure: exit code 1.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::filesystem::path& file);

json to_json(const Rat& q);
Rat rat_from_json(const json& j, const std::string& where = "value");
json to_json(const BinaryForm& f);
BinaryForm form_from_json(const json& j, const std::string& where = "form");
// {"vars": [...], "terms": [{"exponents": [...], "coeff": "p/q"}]}
json to_json(const MultiPoly& f);
MultiPoly poly_from_json(const json& j, const AlphabetPtr& alphabet);

using Params = std::map<std::string, Rat>;
using Names = std::map<std::string, std::string>;

// Resolves canonical names, their aliases (x3, eta1, rho1_x0), entries of `names` and numeric params.
NameResolver alias_resolver(const AlphabetPtr& alphabet, const Names& names = {}, const Params& params = {});
MultiPoly parse_text(const std::string& text, const AlphabetPtr& alphabet, const Names& names = {},
                     const Params& params = {});
std::string pretty(const MultiPoly& f);
// Rewrites canonical variable names inside free text to their aliases.
std::string alias_text(const std::string& text);

// Text over {s,t,x,y,z,w} (or z.i) into a form of class aH - bR.
BihomForm bihom_from_text(const ScrollType& S, DivisorClass cls, const std::string& text, const Params& params = {});
// {"b": 7, "a": 2, "poly": "..."} or {"b": 7, "terms": [{"I": [...], "coeffs": [...]}]}
BihomForm bihom_from_json(const ScrollType& S, const json& j, const Params& params = {});
json to_json(const BihomForm& P);

// {"terms": [{"I": [...], "j": 0, "path": [[...], ...]}]}; terms not listed keep the canonical path.
RollingScheme scheme_from_json(const json& j, const BihomForm& P);
json to_json(const RollingScheme& sch);

json to_json(const LiftingSystem& L);
json to_json(const BaseSystem& B);

struct EquationBundle {
  ScrollType scroll;
  std::vector<BihomForm> equations;
  std::vector<std::optional<RollingScheme>> schemes;
  bool composed = false;
  std::string b2_zero_kind;
  Params params;
};
EquationBundle bundle_from_json(const json& j);
RollingScheme scheme_for(const EquationBundle& b, size_t i, const std::string& kind);

}  // namespace rf::app
