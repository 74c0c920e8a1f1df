#include <set>
#include <tuple>

#include "checks_util.hpp"

namespace rf::app {

namespace {

std::string e_label(const int* de, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + offset_label("e", de[i]);
  return s;
}

std::string shape_label(int db1, int db2) {
  return "(" + offset_label("2e", db1) + "," + offset_label("2e", db2) + ")";
}

using Row = std::tuple<std::string, std::string, bool>;  // e offsets, base, singular

}  // namespace

CheckResult check_k3_table(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("k3_table.json");
  std::map<std::string, std::set<Row>> want, got;
  for (auto& sh : fx.at("shapes"))
    for (auto& row : sh.at("rows"))
      want[sh.at("shape")].insert({row.at("e"), row.at("base"), row.at("sings").get<std::string>() != "-"});
  for (auto& sh : tetragonal_k3_enumerate()) {
    auto& rows = got[shape_label(sh.db1, sh.db2)];
    for (auto& o : sh.rows) rows.insert({e_label(o.de.data(), 4), base_label(o.dbase), o.sing});
  }
  std::set<std::string> ws, gs;
  for (auto& [k, v] : want) ws.insert(k);
  for (auto& [k, v] : got) gs.insert(k);
  r.expect(ws == gs, std::to_string(gs.size()) + " (b1,b2) shapes");
  for (auto& [shape, rows] : want) {
    auto it = got.find(shape);
    bool same = it != got.end() && it->second == rows;
    std::string detail;
    if (it != got.end() && !same) {
      for (auto& x : rows)
        if (!it->second.count(x)) detail += " missing " + std::get<0>(x);
      for (auto& x : it->second)
        if (!rows.count(x)) detail += " extra " + std::get<0>(x) + "/" + std::get<1>(x) + (std::get<2>(x) ? "/sing" : "");
    }
    r.expect(same, shape + ": " + std::to_string(rows.size()) + " families with base locus and singularity flags" +
                       detail);
  }
  return r;
}

CheckResult check_trigonal_k3(const CheckContext& c) {
  CheckResult r;
  json fx = c.fixture("trigonal_k3.json");
  auto want = fx.at("chains").get<std::vector<std::vector<std::string>>>();
  auto chains = trigonal_k3_enumerate();
  std::vector<std::vector<std::string>> got;
  size_t total = 0;
  for (auto& ch : chains) {
    got.emplace_back();
    for (auto& t : ch) got.back().push_back(e_label(t.offset.data(), 3));
    total += ch.size();
  }
  r.expect(total == 12 && got == want, std::to_string(total) + " triples in 3 chains as displayed");
  auto sing = fx.at("singular").get<std::map<std::string, std::string>>();
  int e = 20;
  bool ok = true;
  std::string found;
  for (auto& ch : chains)
    for (auto& t : ch) {
      auto s = trigonal_singularity(e + t.offset[0], e + t.offset[1], e + t.offset[2]);
      std::string label = e_label(t.offset.data(), 3);
      auto it = sing.find(label);
      std::string expect = it == sing.end() ? "" : it->second;
      expect.erase(std::remove(expect.begin(), expect.end(), '_'), expect.end());
      ok = ok && s.singular == !expect.empty() && s.type == expect;
      if (s.singular) found += " " + label + ":" + s.type;
    }
  r.expect(ok, "singular members" + found);
  return r;
}

CheckResult check_k3_constraints(const CheckContext&) {
  CheckResult r;
  int families = 0, bad_b = 0, bad_e = 0, pure = 0;
  for (int e = 3; e <= 20; ++e)
    for (auto& f : tetragonal_k3_concrete(e)) {
      ++families;
      if (f.b1 > f.b2 + 4) ++bad_b;
      if (f.e[0] >= f.b1) {
        ++pure;
        if (f.e[0] > f.b1 + 2) ++bad_e;
      }
    }
  r.expect(bad_b == 0, std::to_string(families) + " families for e = 3..20: b1 <= b2 + 4");
  r.expect(bad_e == 0, std::to_string(pure) + " families with e1 >= b1: e1 <= b1 + 2");
  return r;
}

CheckResult check_nonscrollar(const CheckContext& c) {
  CheckResult r;
  std::mt19937_64 rng(c.seed + 9);
  for (auto [e1, e2] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {3, 2}, {4, 1}, {3, 3}, {4, 2}}) {
    int g = e1 + e2 + 2;
    ScrollType S({e1, e2});
    BihomForm F;
    do F = detail::random_bihom(rng, S, 3, g - 4);
    while (F.terms.size() < 4);
    auto gens = trigonal_nonscrollar_all(F);
    int verified = 0;
    std::string why;
    for (auto& gen : gens) {
      std::string w;
      if (verify_nonscrollar(F, gen, &w)) ++verified;
      else if (why.empty()) why = w;
    }
    r.expect(verified == static_cast<int>(gens.size()) && static_cast<int>(gens.size()) == g - 4,
             "g=" + std::to_string(g) + " " + detail::show(S) + ": " + std::to_string(verified) + "/" +
                 std::to_string(gens.size()) + " generators verified, g-4 = " + std::to_string(g - 4) +
                 (why.empty() ? "" : " (" + why + ")"));
  }
  return r;
}

}  // namespace rf::app
