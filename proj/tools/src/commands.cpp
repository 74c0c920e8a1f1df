#include "rollfac_app/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rollfac/gbengine.hpp"
#include "rollfac/hyperell.hpp"
#include "rollfac/k3class.hpp"

#include "checks_util.hpp"

namespace rf::app {

namespace {

json poly_json(const MultiPoly& f) { return {{"polynomial", to_json(f)}, {"text", f.str()}}; }

json poly_texts(const std::vector<MultiPoly>& fs) {
  json a = json::array();
  for (auto& f : fs) a.push_back(f.str());
  return a;
}

EquationBundle load_bundle(const json& in, const Options& opt) {
  EquationBundle b = bundle_from_json(in);
  if (opt.scheme != "canonical" && opt.scheme != "balanced") {
    json sj = load_json(opt.scheme);
    if (!sj.contains("schemes") || !sj["schemes"].is_array()) throw InputError("scheme file: expected 'schemes' array");
    for (size_t i = 0; i < sj["schemes"].size() && i < b.equations.size(); ++i)
      if (!sj["schemes"][i].is_null()) b.schemes[i] = scheme_from_json(sj["schemes"][i], b.equations[i]);
  }
  return b;
}

std::string scheme_kind(const Options& opt) { return opt.scheme == "balanced" ? "balanced" : "canonical"; }

std::vector<int> bs_of(const EquationBundle& b) {
  std::vector<int> bs;
  for (auto& P : b.equations) bs.push_back(P.cls.b);
  return bs;
}

TetraInvariants inv_from(const json& j) {
  auto a = j.get<std::vector<int>>();
  if (a.size() != 5) throw InputError("inv: expected [e1, e2, e3, b1, b2]");
  return {a[0], a[1], a[2], a[3], a[4]};
}

std::vector<Rat> rats(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<Rat> out;
  for (auto& x : j) out.push_back(rat_from_json(x, where));
  return out;
}

json rats_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(to_json(x));
  return a;
}

BaseSystem base_of(const EquationBundle& b, const Options& opt) {
  for (auto& P : b.equations)
    if (P.cls.a != 2) throw PreconditionError("obstruct: quadrics only");
  if (b.equations.size() == 1) {
    auto v = make_deform_vars(b.scroll, bs_of(b));
    return base_equations(b.equations[0], scheme_for(b, 0, scheme_kind(opt)), v);
  }
  if (b.equations.size() == 2)
    return tetragonal_base_system(b.equations[0], b.equations[1], scheme_for(b, 0, scheme_kind(opt)),
                                  scheme_for(b, 1, scheme_kind(opt)));
  throw PreconditionError("obstruct: one or two equations expected");
}

// Variables forced to zero by a lifting row with a single nonzero entry.
std::vector<std::string> forced_zero(const BaseSystem& B) {
  std::vector<std::string> out;
  for (auto& row : B.lifting.rows) {
    int nz = 0, at = -1;
    for (size_t i = 0; i < row.coeffs.size(); ++i)
      if (row.coeffs[i] != 0) ++nz, at = static_cast<int>(i);
    if (nz == 1 && std::find(out.begin(), out.end(), B.vars.alphabet->names[at]) == out.end())
      out.push_back(B.vars.alphabet->names[at]);
  }
  return out;
}

// dim is the Krull dimension of R/I; for homogeneous ideals projective_dim = dim - 1.
json prime_json(const gb::PrimeReport& r) {
  return {{"prime", r.prime},   {"ok", r.ok}, {"dim", r.krull_dim}, {"projective_dim", r.krull_dim - 1},
          {"degree", r.degree}, {"basis_size", r.basis_size}, {"ms", r.ms}};
}

json certificate_json(const gb::Certificate& c) {
  json reps = json::array();
  for (auto& r : c.reports)
    reps.push_back(prime_json(r));
  return {{"verdict", gb::to_string(c.verdict)}, {"primes", reps}};
}


}  // namespace

json cmd_roll(const json& in, const Options& opt) {
  auto b = load_bundle(in, opt);
  json out = json::array();
  for (size_t i = 0; i < b.equations.size(); ++i) {
    auto sch = scheme_for(b, i, scheme_kind(opt));
    auto rolled = roll_equations(b.equations[i], sch);
    json levels = json::array();
    for (size_t m = 0; m < rolled.size(); ++m) {
      json l = poly_json(rolled[m]);
      l["m"] = m;
      levels.push_back(l);
    }
    out.push_back({{"equation", to_json(b.equations[i])}, {"scheme", to_json(sch)}, {"rolled", levels}});
  }
  return {{"command", "roll"}, {"equations", out}};
}

json cmd_lift(const json& in, const Options& opt) {
  auto b = load_bundle(in, opt);
  auto v = make_deform_vars(b.scroll, bs_of(b));
  auto M = lifting_matrix(b.equations, v);
  std::vector<int> e = b.scroll.e();
  int rh = pure_rolling_count(e, bs_of(b));
  json rep = {{"command", "lift"},  {"rows", M.rows.size()}, {"cols", M.cols.size()}, {"rank", M.rank()},
              {"nullity", M.nullity()}, {"rho", rh},         {"t1_minus1", rh + M.nullity()},
              {"t1_minus2", nullptr}, {"t2_minus2", nullptr}, {"matrix", to_json(M)}};
  bool quadrics = std::all_of(b.equations.begin(), b.equations.end(), [](auto& P) { return P.cls.a == 2; });
  if (quadrics) {
    int t2 = 0;
    for (auto& P : b.equations) t2 += P.cls.b - 1;
    rep["t2_minus2"] = t2;
  }
  if (quadrics && b.equations.size() == 2 && e.size() == 3) {
    TetraInvariants inv{e[0], e[1], e[2], b.equations[0].cls.b, b.equations[1].cls.b};
    if (validate_tetragonal(inv, b.composed).verdict != TetraVerdict::Invalid) {
      auto t = t1_t2_table(inv, &M);
      rep["t1_minus2"] = t.t1_m2;
      if (t.t1_m1) rep["t1_minus1"] = *t.t1_m1;
      if (t.t2_m2) rep["t2_minus2"] = *t.t2_m2;
    }
  }
  json split = json::array();
  for (size_t i = 0; i < b.equations.size(); ++i) {
    if (b.equations[i].cls.a != 2) continue;
    auto L = lifting_from_S(b.equations[i], scheme_for(b, i, scheme_kind(opt)), v, static_cast<int>(i));
    std::vector<LiftRow> closed;
    for (auto& r : M.rows)
      if (r.eq == static_cast<int>(i)) closed.push_back(r);
    split.push_back({{"equation", i}, {"agrees_with_closed_formula", L.rows == closed}});
  }
  rep["splitting"] = split;
  return rep;
}

json cmd_t1(const json& in, const Options& opt) {
  TetraInvariants inv{};
  std::optional<LiftingSystem> M;
  if (in.contains("equations")) {
    auto b = load_bundle(in, opt);
    if (b.equations.size() != 2 || b.scroll.k() != 3) throw PreconditionError("t1: two equations on S(e1,e2,e3)");
    inv = {b.scroll.e(0), b.scroll.e(1), b.scroll.e(2), b.equations[0].cls.b, b.equations[1].cls.b};
    M = lifting_matrix(b.equations, make_deform_vars(b.scroll, bs_of(b)));
  } else if (in.contains("inv")) {
    inv = inv_from(in["inv"]);
  } else {
    throw InputError("t1: expected 'inv' or a bundle");
  }
  bool composed = in.value("composed", false);
  auto val = validate_tetragonal(inv, composed);
  if (val.verdict == TetraVerdict::Invalid) throw PreconditionError("t1: invalid invariants (" + val.reason + ")");
  auto t = t1_t2_table(inv, M ? &*M : nullptr);
  json rep = {{"command", "t1"}, {"inv", {inv.e1, inv.e2, inv.e3, inv.b1, inv.b2}}, {"g", inv.g()},
              {"verdict", to_string(val.verdict)}, {"rho", rho(inv)},
              {"t1", {{"-2", t.t1_m2}, {"0", t.t1_0}, {"1", t.t1_1}, {"2", t.t1_2}}}};
  if (composed && M && inv.b2 == 2 * inv.e3) {
    LiftingSystem Mxy;
    std::vector<size_t> keep;
    for (size_t i = 0; i < M->cols.size(); ++i)
      if (M->cols[i].rfind("zeta.3.", 0) != 0) keep.push_back(i), Mxy.cols.push_back(M->cols[i]);
    for (auto& r : M->rows) {
      if (r.I[2] > 0) continue;
      LiftRow x{r.eq, r.I, r.n, {}};
      for (auto i : keep) x.coeffs.push_back(r.coeffs[i]);
      Mxy.rows.push_back(x);
    }
    rep["t1"]["-1"] = t1_minus1_composed(inv, Mxy);
  } else if (t.t1_m1) {
    rep["t1"]["-1"] = *t.t1_m1;
  } else if (!M && inv.b2 > 0 && !composed) {
    std::mt19937_64 rng(in.value("seed", 20240611u));
    ScrollType S({inv.e1, inv.e2, inv.e3});
    auto P = detail::random_bihom(rng, S, 2, inv.b1, true), Q = detail::random_bihom(rng, S, 2, inv.b2, true);
    rep["t1_minus1_generic"] = t1_minus1(inv, lifting_matrix({P, Q}, make_deform_vars(S, {inv.b1, inv.b2})));
  }
  if (t.t2_m2) rep["t2"] = {{"-2", *t.t2_m2}};
  if (M) rep["lifting"] = {{"rows", M->rows.size()}, {"cols", M->cols.size()}, {"rank", M->rank()}, {"cork", cork(*M)}};
  return rep;
}

json cmd_obstruct(const json& in, const Options& opt) {
  auto b = load_bundle(in, opt);
  BaseSystem B = base_of(b, opt);
  json rep = to_json(B);
  rep["command"] = "obstruct";
  rep["num_quadrics"] = B.num_quadrics();
  rep["diagnostics"] = {{"pi_0", poly_texts(B.pi0)}, {"pi_b", poly_texts(B.pib)}};
  auto zero = forced_zero(B);
  rep["forced_zero"] = zero;
  json elims = json::array();
  for (size_t n = 0; n < B.pi.size(); ++n) {
    bool has = std::any_of(B.vars.rhos.begin(), B.vars.rhos.end(), [&](auto& r) { return r.eq == static_cast<int>(n); });
    if (!has) continue;
    auto E = rho_elimination(B, static_cast<int>(n), zero);
    json rows = json::array();
    for (auto& row : E.matrix) rows.push_back(poly_texts(row));
    elims.push_back({{"family", n},
                     {"matrix", rows},
                     {"condition", "rank <= " + std::to_string(E.matrix.size() - 1)},
                     {"minors", poly_texts(E.minors)}});
  }
  rep["rho_elimination"] = elims;
  if (in.contains("display")) {
    auto texts = in["display"].get<std::vector<std::vector<std::string>>>();
    Names names;
    if (in.contains("names")) names = in["names"].get<Names>();
    BaseSystem shown = display_system(B, texts, names, b.params);
    rep["display_equivalent"] = equivalent_base(B, shown);
  }
  return rep;
}

json cmd_hyperell(const json& in, const Options&) {
  json rep = {{"command", "hyperell"}};
  if (in.contains("roots")) {
    auto d = RootData::from_roots(rats(in["roots"], "roots"));
    auto sys = root_system(d);
    rep["p"] = to_json(d.p);
    rep["system"] = poly_texts(sys.pi[0]);
    json pts = json::array();
    int e = d.p.degree();
    auto point = [&](const RootPoint& pt, json label) {
      bool rank = verify_rank(pt.xi, pi_values(sys, pt.xi));
      json j = {{"at", label}, {"xi", rats_json(pt.xi)}, {"rank_le_1", rank}};
      if (pt.rho) j["rho"] = to_json(*pt.rho);
      pts.push_back(j);
    };
    for (int i = 0; i < e; ++i) point(root_solution(d, i), {i});
    for (int i = 0; i < e; ++i)
      for (int j = i + 1; j < e; ++j) point(pair_solution(d, {i, j}), {i, j});
    rep["solutions"] = pts;
    if (e == 5) {
      json ids = json::array();
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) ids.push_back({{"pair", {i, j}}, {"identity", l_form_identity(d, i, j)}});
      rep["l_identity"] = ids;
      rep["display"] = poly_texts(e5_display(d));
    }
    return rep;
  }
  if (!in.contains("p")) throw InputError("hyperell: expected 'p' or 'roots'");
  BinaryForm p = form_from_json(in["p"], "p");
  if (in.contains("g")) {
    int g = in["g"], n = in.value("n", 2 * g + 3);
    auto H = hyperell_system(g, n, p);
    rep["variables"] = H.vars->names;
    rep["equations"] = poly_texts(H.eqs);
    rep["scale"] = to_json(H.scale);
    return rep;
  }
  auto L = lemma_system(p);
  rep["squarefree"] = is_squarefree(p);
  rep["equations"] = poly_texts(L.pi[0]);
  if (auto sc = parametric_pi(p)) rep["parametric_scale"] = to_json(*sc);
  return rep;
}

json cmd_classify(const json& in, const Options&) {
  json rep = {{"command", "classify"}};
  if (in.contains("inv")) {
    auto v = validate_tetragonal(inv_from(in["inv"]), in.value("composed", false));
    rep["verdict"] = to_string(v.verdict);
    rep["reason"] = v.reason;
  }
  if (in.contains("trigonal")) {
    auto e = in["trigonal"].get<std::vector<int>>();
    if (e.size() != 3) throw InputError("trigonal: expected [e1, e2, e3]");
    auto s = trigonal_singularity(e[0], e[1], e[2]);
    rep["trigonal"] = {{"fibration", elliptic_fibration_ok_trigonal(e[0], e[1], e[2], e[0] + e[1] + e[2] - 2)},
                       {"section_in_base", s.section_in_base}, {"singular", s.singular}, {"type", s.type}};
  }
  if (in.contains("k3")) {
    auto e = in["k3"].at("e").get<std::array<int, 4>>();
    auto bb = in["k3"].at("b").get<std::array<int, 2>>();
    auto f = make_k3_family(e, bb[0], bb[1]);
    rep["k3"] = {{"fibration", to_string(f.fibration)},
                 {"base", f.base ? json(*f.base) : json(nullptr)},
                 {"singular_on_section", f.sing_on_section},
                 {"singular_off_section", f.sing_off_section}};
  }
  if (in.contains("census")) {
    std::string kind = in["census"];
    int e = in.value("e", 20);
    if (kind == "trigonal") {
      json chains = json::array();
      for (auto& ch : trigonal_k3_enumerate(e, in.value("range", 6))) {
        json c = json::array();
        for (auto& t : ch) c.push_back(t.offset);
        chains.push_back(c);
      }
      rep["chains"] = chains;
    } else if (kind == "tetragonal") {
      json shapes = json::array();
      for (auto& sh : tetragonal_k3_enumerate(e, in.value("range", 7))) {
        json rows = json::array();
        for (auto& o : sh.rows) rows.push_back({{"de", o.de}, {"base", base_label(o.dbase)}, {"singular", o.sing}});
        shapes.push_back({{"db1", sh.db1}, {"db2", sh.db2}, {"rows", rows}});
      }
      rep["shapes"] = shapes;
    } else {
      throw InputError("census: expected 'trigonal' or 'tetragonal'");
    }
  }
  if (rep.size() == 1) throw InputError("classify: expected 'inv', 'trigonal', 'k3' or 'census'");
  return rep;
}

json cmd_gb(const json& in, const Options& opt) {
  std::vector<MultiPoly> gens;
  if (in.contains("polys")) {
    if (!in.contains("vars")) throw InputError("gb: 'polys' needs 'vars'");
    auto A = make_alphabet(in["vars"].get<std::vector<std::string>>());
    for (auto& t : in["polys"]) gens.push_back(parse_text(t.get<std::string>(), A));
  } else {
    auto B = base_of(load_bundle(in, opt), opt);
    for (auto& row : B.lifting.rows)
      if (auto f = row_form(row, B.vars); !f.is_zero()) gens.push_back(f);
    for (auto& fam : B.pi) gens.insert(gens.end(), fam.begin(), fam.end());
  }
  if (gens.empty()) throw PreconditionError("gb: no generators");
  json rep = {{"command", "gb"}, {"generators", gens.size()}, {"variables", gens[0].alphabet()->size()}};
  if (gens[0].alphabet()->size() > static_cast<size_t>(gb::kMaxVars))
    throw PreconditionError("gb: at most " + std::to_string(gb::kMaxVars) + " variables");
  if (opt.prime) {
    rep["report"] = prime_json(gb::run_prime(gens, *opt.prime));
    if (in.contains("expect"))
      rep["matches_expectation"] = rep["report"]["ok"].get<bool>() &&
                                   rep["report"]["dim"] == in["expect"].at("dim") &&
                                   rep["report"]["degree"] == in["expect"].at("degree");
  } else if (in.contains("expect")) {
    auto c = gb::two_prime_certify(gens, in["expect"].at("dim"), in["expect"].at("degree"));
    rep["certificate"] = certificate_json(c);
  } else {
    rep["reports"] = {prime_json(gb::run_prime(gens, 31991)), prime_json(gb::run_prime(gens, 32003))};
  }
  return rep;
}

json run_fixtures(const CheckContext& c, const std::string& anchor) {
  json results = json::array();
  bool all = true, found = anchor.empty();
  for (auto& f : fixture_checks()) {
    if (!anchor.empty() && f.anchor != anchor) continue;
    found = true;
    auto r = f.run(c);
    all = all && r.passed;
    results.push_back(r.to_json());
  }
  if (!found) throw InputError("unknown fixture anchor '" + anchor + "'");
  return {{"command", "fixtures"}, {"passed", all}, {"results", results}};
}

json run_criteria(const CheckContext& c, int only) {
  json results = json::array();
  bool all = true;
  for (auto& cr : criteria()) {
    if (only && cr.id != only) continue;
    auto r = cr.run(c);
    all = all && r.passed;
    json j = r.to_json();
    j["id"] = cr.id;
    j["title"] = cr.title;
    results.push_back(j);
  }
  return {{"command", "criteria"}, {"passed", all}, {"results", results}};
}

int run_cli(int argc, char** argv) {
  CLI::App app{"rolling factors deformations of scroll equations"};
  app.require_subcommand(1);
  std::string input, output, fixture_dir, anchor;
  bool indent = false, text = false;
  Options opt;
  uint32_t prime = 0;
  int criterion = 0;
  std::optional<int> genus, shift, expect_dim;
  std::optional<long> expect_deg;
  std::string p_list, root_list, mode, inv_list;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "input JSON file (default stdin)");
    sub->add_option("--output", output, "write the report to this file");
    sub->add_flag("--pretty", indent, "indent the JSON report");
    sub->add_flag("--text", text, "print a text report with variable aliases instead of JSON");
    sub->add_option("--scheme", opt.scheme, "canonical, balanced, or a JSON file with scheme overrides");
    sub->add_option("--prime", prime, "single prime for gb");
  };
  std::map<std::string, json (*)(const json&, const Options&)> table = {
      {"roll", cmd_roll},         {"lift", cmd_lift},         {"t1", cmd_t1}, {"obstruct", cmd_obstruct},
      {"hyperell", cmd_hyperell}, {"classify", cmd_classify}, {"gb", cmd_gb}};
  std::map<std::string, CLI::App*> subs;
  for (auto& [name, fn] : table) common(subs[name] = app.add_subcommand(name, "run " + name));
  for (const char* name : {"fixtures", "criteria"}) {
    auto* s = app.add_subcommand(name, std::string("replay ") + name);
    common(s);
    s->add_option("--fixtures-dir", fixture_dir, "directory with the fixture files");
    subs[name] = s;
  }
  subs["hyperell"]->add_option("--genus", genus, "genus g of the hyperelliptic curve");
  subs["hyperell"]->add_option("--degree-shift", shift, "scroll parameter n (default 2g+3)");
  subs["hyperell"]->add_option("--p", p_list, "coefficients of p, comma separated");
  subs["hyperell"]->add_option("--roots", root_list, "rational roots of p, comma separated");
  subs["classify"]
      ->add_option("--mode", mode, "trigonal-k3, tetragonal-k3 or tetragonal-curve")
      ->check(CLI::IsMember({"trigonal-k3", "tetragonal-k3", "tetragonal-curve"}));
  subs["classify"]->add_option("--inv", inv_list, "e1,e2,e3,b1,b2 for tetragonal-curve");
  subs["gb"]->add_option("--expect-dim", expect_dim, "expected Krull dimension of R/I");
  subs["gb"]->add_option("--expect-deg", expect_deg, "expected degree");
  subs["fixtures"]->add_option("--anchor", anchor, "run one fixture");
  subs["criteria"]->add_option("--id", criterion, "run one criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }
  if (prime) opt.prime = prime;

  auto emit = [&](const json& rep) {
    std::string s = text ? render_text(rep) : rep.dump(indent ? 2 : -1) + "\n";
    if (output.empty()) {
      std::cout << s;
    } else {
      std::ofstream out(output);
      if (!out) throw InputError("cannot write " + output);
      out << s;
    }
  };
  auto split = [](const std::string& list) {
    json a = json::array();
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
      item.erase(0, item.find_first_not_of(' '));
      item.erase(item.find_last_not_of(' ') + 1);
      if (item.empty()) throw InputError("empty entry in '" + list + "'");
      a.push_back(item);
    }
    return a;
  };
  try {
    for (auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      if (name == "fixtures" || name == "criteria") {
        CheckContext c{fixture_dir.empty() ? default_fixture_dir() : std::filesystem::path(fixture_dir)};
        if (opt.prime) c.prime1 = *opt.prime;
        json rep = name == "fixtures" ? run_fixtures(c, anchor) : run_criteria(c, criterion);
        emit(rep);
        return rep["passed"].get<bool>() ? kOk : kFixtureFailure;
      }
      json in = json::object();
      if (name == "hyperell") {
        if (genus) in["g"] = *genus;
        if (shift) in["n"] = *shift;
        if (!p_list.empty()) in["p"] = split(p_list);
        if (!root_list.empty()) in["roots"] = split(root_list);
      } else if (name == "classify") {
        if (mode == "trigonal-k3") in["census"] = "trigonal";
        if (mode == "tetragonal-k3") in["census"] = "tetragonal";
        if (!inv_list.empty()) {
          json a = json::array();
          for (auto& x : split(inv_list)) a.push_back(std::stoi(x.get<std::string>()));
          in["inv"] = a;
        }
      }
      bool from_flags = (name == "hyperell" && (in.contains("p") || in.contains("roots"))) ||
                        (name == "classify" && !mode.empty());
      if (!input.empty() && input != "-") {
        in.update(load_json(input));
      } else if (!from_flags) {
        try {
          in.update(json::parse(std::cin));
        } catch (const json::parse_error& e) {
          throw InputError(std::string("stdin: ") + e.what());
        }
      }
      if (name == "gb" && (expect_dim || expect_deg)) {
        if (!expect_dim || !expect_deg) throw InputError("--expect-dim and --expect-deg go together");
        in["expect"] = {{"dim", *expect_dim}, {"degree", *expect_deg}};
      }
      if (mode == "tetragonal-curve" && !in.contains("inv")) throw InputError("tetragonal-curve needs --inv or 'inv'");
      emit(table.at(name)(in, opt));
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParseError;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::logic_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}

}  // namespace rf::app
