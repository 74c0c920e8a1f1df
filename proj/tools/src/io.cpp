#include "rollfac_app/io.hpp"

#include <fstream>
#include <numeric>
#include <regex>

namespace rf::app {

json load_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const std::exception&) {
  }
  throw InputError(where + ": expected a rational as integer or \"p/q\" string");
}

json to_json(const BinaryForm& f) {
  json a = json::array();
  for (auto& c : f.coeffs()) a.push_back(to_json(c));
  return a;
}

BinaryForm form_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of coefficients");
  std::vector<Rat> c;
  for (size_t i = 0; i < j.size(); ++i) c.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  if (c.empty()) return BinaryForm();
  return BinaryForm(static_cast<int>(c.size()) - 1, c);
}

json to_json(const MultiPoly& f) {
  json out;
  out["vars"] = f.alphabet() ? f.alphabet()->names : std::vector<std::string>{};
  json terms = json::array();
  for (auto& [e, c] : f.terms()) terms.push_back({{"exponents", e}, {"coeff", to_json(c)}});
  out["terms"] = terms;
  return out;
}

MultiPoly poly_from_json(const json& j, const AlphabetPtr& A) {
  if (!j.contains("vars") || !j.contains("terms")) throw InputError("polynomial: expected {vars, terms}");
  auto src = make_alphabet(j["vars"].get<std::vector<std::string>>());
  MultiPoly f(src);
  for (auto& t : j["terms"]) {
    auto e = t.at("exponents").get<Exponent>();
    if (e.size() != src->size()) throw InputError("polynomial: exponent length");
    f.add_term(e, rat_from_json(t.at("coeff"), "coeff"));
  }
  return f.rebase(A);
}

NameResolver alias_resolver(const AlphabetPtr& A, const Names& names, const Params& params) {
  std::map<std::string, int> table;
  for (size_t i = 0; i < A->size(); ++i) table.emplace(alias(A->names[i]), static_cast<int>(i));
  for (auto& [k, v] : names) {
    int i = A->index_of(v);
    if (i >= 0) table[k] = i;
  }
  return [A, table, params](const std::string& name) -> std::optional<MultiPoly> {
    if (auto p = params.find(name); p != params.end()) return MultiPoly(A, p->second);
    if (A->index_of(name) >= 0) return MultiPoly::var(A, name);
    if (auto it = table.find(name); it != table.end()) return MultiPoly::var(A, it->second);
    return std::nullopt;
  };
}

MultiPoly parse_text(const std::string& text, const AlphabetPtr& A, const Names& names, const Params& params) {
  try {
    return parse_poly(text, A, alias_resolver(A, names, params));
  } catch (const ParseError& e) {
    throw InputError(std::string("cannot parse '") + text + "': " + e.what());
  }
}

std::string pretty(const MultiPoly& f) { return f.str(alias); }

std::string alias_text(const std::string& text) {
  static const std::regex name(R"((?:zeta|rho|z)(?:\.\d+)+)");
  std::string out;
  auto it = std::sregex_iterator(text.begin(), text.end(), name);
  size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    out += text.substr(last, it->position() - last) + alias(it->str());
    last = it->position() + it->length();
  }
  return out + text.substr(last);
}

BihomForm bihom_from_text(const ScrollType& S, DivisorClass cls, const std::string& text, const Params& params) {
  const auto& F = S.fiber();
  MultiPoly f = parse_text(text, F, {}, params);
  BihomForm P(S, cls);
  std::map<MultiIndex, std::map<int, Rat>> coeffs;
  for (auto& [e, c] : f.terms()) {
    MultiIndex I(e.begin() + 2, e.end());
    if (std::accumulate(I.begin(), I.end(), 0) != cls.a)
      throw PreconditionError("'" + text + "' is not homogeneous of degree " + std::to_string(cls.a) + " in the fibre");
    if (e[0] + e[1] != P.weight(I) - cls.b)
      throw PreconditionError("'" + text + "': (s,t)-degree of a coefficient differs from <e,I> - b");
    coeffs[I][e[1]] = c;
  }
  for (auto& [I, m] : coeffs) {
    BinaryForm g(P.weight(I) - cls.b);
    for (auto& [j, c] : m) g.coeff(j) = c;
    P.set(I, g);
  }
  return P;
}

BihomForm bihom_from_json(const ScrollType& S, const json& j, const Params& params) {
  if (!j.is_object() || !j.contains("b")) throw InputError("equation: expected an object with field 'b'");
  DivisorClass cls{j.value("a", 2), j["b"].get<int>()};
  if (j.contains("poly")) return bihom_from_text(S, cls, j["poly"].get<std::string>(), params);
  BihomForm P(S, cls);
  if (!j.contains("terms")) throw InputError("equation: expected 'poly' or 'terms'");
  for (auto& t : j["terms"]) {
    auto I = t.at("I").get<MultiIndex>();
    try {
      P.set(I, form_from_json(t.at("coeffs"), "terms.coeffs"));
    } catch (const std::invalid_argument& e) {
      throw PreconditionError(e.what());
    }
  }
  return P;
}

json to_json(const BihomForm& P) {
  json terms = json::array();
  for (auto& [I, f] : P.terms) terms.push_back({{"I", I}, {"coeffs", to_json(f)}});
  return {{"a", P.cls.a}, {"b", P.cls.b}, {"terms", terms}, {"text", P.as_fiber_poly().str()}};
}

RollingScheme scheme_from_json(const json& j, const BihomForm& P) {
  RollingScheme sch = canonical_scheme(P);
  if (!j.contains("terms")) throw InputError("scheme: expected 'terms'");
  for (auto& t : j["terms"]) {
    TermKey key{t.at("I").get<MultiIndex>(), t.at("j").get<int>()};
    if (!sch.levels.count(key)) throw InputError("scheme: no such term in the equation");
    sch.levels[key] = t.at("path").get<std::vector<std::vector<int>>>();
  }
  try {
    validate_scheme(P, sch);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(std::string("scheme: ") + e.what());
  }
  return sch;
}

json to_json(const RollingScheme& sch) {
  json terms = json::array();
  for (auto& [k, path] : sch.levels) terms.push_back({{"I", k.I}, {"j", k.j}, {"path", path}});
  return {{"terms", terms}};
}

json to_json(const LiftingSystem& L) {
  json rows = json::array();
  for (auto& r : L.rows) {
    json c = json::array();
    for (auto& x : r.coeffs) c.push_back(to_json(x));
    rows.push_back({{"equation", r.eq}, {"I", r.I}, {"n", r.n}, {"coeffs", c}});
  }
  return {{"cols", L.cols}, {"rows", rows}, {"rank", L.rank()}, {"nullity", L.nullity()}};
}

json to_json(const BaseSystem& B) {
  // pi[i] = [m, polynomial]; pi_equation[i] says which scroll equation it comes from
  json pis = json::array(), fam = json::array();
  for (size_t n = 0; n < B.pi.size(); ++n)
    for (size_t m = 0; m < B.pi[n].size(); ++m) {
      pis.push_back({m + 1, to_json(B.pi[n][m])});
      fam.push_back(n);
    }
  json rows = json::array();
  for (auto& r : B.lifting.rows) rows.push_back(to_json(row_form(r, B.vars)));
  return {{"variables", B.vars.alphabet->names}, {"lifting_rows", rows}, {"pi", pis}, {"pi_equation", fam}};
}

EquationBundle bundle_from_json(const json& j) {
  if (!j.is_object()) throw InputError("bundle: expected a JSON object");
  if (!j.contains("scroll") || !j["scroll"].is_array()) throw InputError("bundle: field 'scroll' must be an array");
  EquationBundle b;
  auto e = j["scroll"].get<std::vector<int>>();
  if (!std::is_sorted(e.rbegin(), e.rend()) || e.empty() || e.back() < 0)
    throw PreconditionError("bundle: scroll degrees must be non-increasing and non-negative");
  b.scroll = ScrollType(e);
  if (j.contains("params"))
    for (auto& [k, v] : j["params"].items()) b.params[k] = rat_from_json(v, "params." + k);
  if (!j.contains("equations") || !j["equations"].is_array()) throw InputError("bundle: field 'equations' must be an array");
  for (size_t i = 0; i < j["equations"].size(); ++i) {
    const auto& eq = j["equations"][i];
    b.equations.push_back(bihom_from_json(b.scroll, eq, b.params));
    if (eq.contains("scheme"))
      b.schemes.push_back(scheme_from_json(eq["scheme"], b.equations.back()));
    else
      b.schemes.push_back(std::nullopt);
  }
  if (j.contains("flags")) {
    b.composed = j["flags"].value("composed", false);
    b.b2_zero_kind = j["flags"].value("b2_zero_kind", "");
  }
  return b;
}

RollingScheme scheme_for(const EquationBundle& b, size_t i, const std::string& kind) {
  if (b.schemes.at(i)) return *b.schemes[i];
  if (kind == "balanced") return balanced_scheme(b.equations[i]);
  if (kind.empty() || kind == "canonical") return canonical_scheme(b.equations[i]);
  throw InputError("unknown scheme '" + kind + "'");
}

}  // namespace rf::app
