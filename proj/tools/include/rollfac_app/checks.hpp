#pragma once
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "rollfac_app/io.hpp"

namespace rf::app {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> notes;  // one line per sub-check, prefixed "ok" or "FAIL"
  double seconds = 0;

  void expect(bool cond, const std::string& what);
  void merge(const CheckResult& sub);
  json to_json() const;
};

struct CheckContext {
  std::filesystem::path fixture_dir;
  uint64_t seed = 20240611;
  uint32_t prime1 = 31991, prime2 = 32003;

  json fixture(const std::string& file) const;
};

std::filesystem::path default_fixture_dir();

// Fixture replays, one per anchor.
struct FixtureCheck {
  std::string anchor;
  std::function<CheckResult(const CheckContext&)> run;
};
const std::vector<FixtureCheck>& fixture_checks();

// Acceptance criteria 1..10.
struct Criterion {
  int id;
  std::string title;
  std::function<CheckResult(const CheckContext&)> run;
};
const std::vector<Criterion>& criteria();

// Individual fixture checks, shared by the criteria.
CheckResult check_points_example(const CheckContext& c);
CheckResult check_rhs_S(const CheckContext& c);
CheckResult check_lifting_65577(const CheckContext& c);
CheckResult check_running_example(const CheckContext& c);
CheckResult check_case_I(const CheckContext& c);
CheckResult check_case_II(const CheckContext& c);
CheckResult check_g15(const CheckContext& c);
CheckResult check_g16(const CheckContext& c);
CheckResult check_b84(const CheckContext& c);
CheckResult check_shear(const CheckContext& c);
CheckResult check_e5_display(const CheckContext& c);
CheckResult check_k3_table(const CheckContext& c);
CheckResult check_trigonal_k3(const CheckContext& c);
CheckResult check_t1t2_table(const CheckContext& c);

// Property checks used by the criteria.
CheckResult check_path_independence(const CheckContext& c, int samples);
CheckResult check_lifting_closed_vs_split(const CheckContext& c, int samples);
CheckResult check_trigonal_banded(const CheckContext& c);
CheckResult check_hyperell_y_block(const CheckContext& c);
CheckResult check_row_count_identity(const CheckContext& c, int max_genus);
CheckResult check_rho_maximum(const CheckContext& c, int max_genus);
CheckResult check_linear_relations_random(const CheckContext& c, int samples);
CheckResult check_hyperell_n_independence(const CheckContext& c, int max_genus);
CheckResult check_squarefree_dimension(const CheckContext& c, int per_degree);
CheckResult check_root_pair_solutions(const CheckContext& c);
CheckResult check_l_identity(const CheckContext& c);
CheckResult check_k3_constraints(const CheckContext& c);
CheckResult check_nonscrollar(const CheckContext& c);

// Shared helpers.
ScrollType scroll_of(const json& j);
Params params_of(const json& j);
Names names_of(const json& j);
// Copy of `like` with pi replaced by parsed display texts (one list per equation).
BaseSystem display_system(const BaseSystem& like, const std::vector<std::vector<std::string>>& texts,
                          const Names& names, const Params& params);

}  // namespace rf::app
