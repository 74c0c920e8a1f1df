#include <chrono>
#include <cstdlib>

#include "rollfac_app/checks.hpp"

#ifndef ROLLFAC_FIXTURE_DIR
#define ROLLFAC_FIXTURE_DIR "fixtures"
#endif

namespace rf::app {

void CheckResult::expect(bool cond, const std::string& what) {
  notes.push_back((cond ? "ok   " : "FAIL ") + what);
  passed = passed && cond;
}

void CheckResult::merge(const CheckResult& sub) {
  for (auto& n : sub.notes) notes.push_back(n.substr(0, 5) + sub.name + ": " + n.substr(5));
  passed = passed && sub.passed;
}

json CheckResult::to_json() const {
  return {{"name", name}, {"passed", passed}, {"notes", notes}, {"seconds", seconds}};
}

json CheckContext::fixture(const std::string& file) const { return load_json(fixture_dir / file); }

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("ROLLFAC_FIXTURES")) return env;
  return ROLLFAC_FIXTURE_DIR;
}

ScrollType scroll_of(const json& j) { return ScrollType(j.at("scroll").get<std::vector<int>>()); }

Params params_of(const json& j) {
  Params p;
  if (j.contains("params"))
    for (auto& [k, v] : j["params"].items()) p[k] = rat_from_json(v, k);
  return p;
}

Names names_of(const json& j) {
  Names n;
  if (j.contains("names")) n = j["names"].get<Names>();
  return n;
}

BaseSystem display_system(const BaseSystem& like, const std::vector<std::vector<std::string>>& texts,
                          const Names& names, const Params& params) {
  BaseSystem d = like;
  const auto& A = like.vars.alphabet;
  for (size_t n = 0; n < texts.size() && n < d.pi.size(); ++n) {
    d.pi[n].clear();
    for (auto& t : texts[n]) d.pi[n].push_back(parse_text(t, A, names, params));
  }
  return d;
}

namespace {

template <class F>
CheckResult timed(const std::string& name, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r.expect(false, std::string("exception: ") + e.what());
  }
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

template <class... Fs>
CheckResult combine(const std::string& name, const CheckContext& c, Fs&&... parts) {
  return timed(name, [&] {
    CheckResult r;
    auto one = [&](auto&& part) {
      CheckResult sub;
      try {
        sub = part(c);
      } catch (const std::exception& e) {
        sub.expect(false, std::string("exception: ") + e.what());
      }
      r.merge(sub);
    };
    (one(parts), ...);
    return r;
  });
}

}  // namespace

const std::vector<FixtureCheck>& fixture_checks() {
  static const std::vector<FixtureCheck> list = {
      {"points-example", [](auto& c) { return timed("points-example", [&] { return check_points_example(c); }); }},
      {"rhs-S", [](auto& c) { return timed("rhs-S", [&] { return check_rhs_S(c); }); }},
      {"lifting-6-5-5-7-7", [](auto& c) { return timed("lifting-6-5-5-7-7", [&] { return check_lifting_65577(c); }); }},
      {"t1-t2", [](auto& c) { return timed("t1-t2", [&] { return check_t1t2_table(c); }); }},
      {"shear-2-2-2-3-1", [](auto& c) { return timed("shear-2-2-2-3-1", [&] { return check_shear(c); }); }},
      {"running-example", [](auto& c) { return timed("running-example", [&] { return check_running_example(c); }); }},
      {"case-I", [](auto& c) { return timed("case-I", [&] { return check_case_I(c); }); }},
      {"case-II", [](auto& c) { return timed("case-II", [&] { return check_case_II(c); }); }},
      {"e5-display", [](auto& c) { return timed("e5-display", [&] { return check_e5_display(c); }); }},
      {"g15", [](auto& c) { return timed("g15", [&] { return check_g15(c); }); }},
      {"g16", [](auto& c) { return timed("g16", [&] { return check_g16(c); }); }},
      {"b84", [](auto& c) { return timed("b84", [&] { return check_b84(c); }); }},
      {"k3-table", [](auto& c) { return timed("k3-table", [&] { return check_k3_table(c); }); }},
      {"trigonal-k3", [](auto& c) { return timed("trigonal-k3", [&] { return check_trigonal_k3(c); }); }},
  };
  return list;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "rolling reproduction and path independence",
       [](auto& c) {
         return combine("rolling", c, check_points_example,
                        [](auto& x) { return check_path_independence(x, 200); });
       }},
      {2, "splitting-equation right-hand sides", [](auto& c) { return combine("rhs-S", c, check_rhs_S); }},
      {3, "lifting matrix",
       [](auto& c) {
         return combine("lifting", c, [](auto& x) { return check_lifting_closed_vs_split(x, 200); },
                        check_trigonal_banded, check_lifting_65577, check_hyperell_y_block);
       }},
      {4, "T1/T2 dimensions",
       [](auto& c) {
         return combine("t1-t2", c, [](auto& x) { return check_row_count_identity(x, 40); },
                        [](auto& x) { return check_rho_maximum(x, 40); }, check_t1t2_table);
       }},
      {5, "base equations",
       [](auto& c) {
         return combine("base", c, check_running_example, check_case_I, check_case_II,
                        [](auto& x) { return check_linear_relations_random(x, 100); });
       }},
      {6, "hyperelliptic systems",
       [](auto& c) {
         return combine("hyperell", c, [](auto& x) { return check_hyperell_n_independence(x, 3); },
                        [](auto& x) { return check_squarefree_dimension(x, 20); }, check_root_pair_solutions,
                        check_l_identity);
       }},
      {7, "g=15 certification", [](auto& c) { return combine("g15", c, check_g15); }},
      {8, "g=16 bundle", [](auto& c) { return combine("g16", c, check_g16); }},
      {9, "K3 census", [](auto& c) { return combine("k3", c, check_k3_table, check_trigonal_k3, check_k3_constraints); }},
      {10, "trigonal non-scrollar deformations", [](auto& c) { return combine("nonscrollar", c, check_nonscrollar); }},
  };
  return list;
}

}  // namespace rf::app
