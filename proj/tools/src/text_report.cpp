#include <iomanip>
#include <sstream>

#include "rollfac_app/commands.hpp"

namespace rf::app {

namespace {

bool is_poly(const json& j) { return j.is_object() && j.size() == 2 && j.contains("vars") && j.contains("terms"); }

std::string scalar(const json& j) {
  if (is_poly(j)) {
    auto A = make_alphabet(j["vars"].get<std::vector<std::string>>());
    return pretty(poly_from_json(j, A));
  }
  if (j.is_string()) return alias_text(j.get<std::string>());
  if (j.is_array()) {
    std::string s = "[";
    for (size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar(j[i]);
    return s + "]";
  }
  return j.dump();
}

bool flat(const json& j) {
  if (is_poly(j) || j.is_primitive()) return true;
  if (!j.is_array()) return false;
  return std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive() || is_poly(x); });
}

void render(const json& j, const std::string& pad, std::ostream& o) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (flat(v)) {
        o << pad << k << ": " << scalar(v) << "\n";
      } else {
        o << pad << k << ":\n";
        render(v, pad + "  ", o);
      }
    }
  } else if (j.is_array()) {
    for (auto& x : j) {
      if (flat(x)) {
        o << pad << "- " << scalar(x) << "\n";
      } else {
        o << pad << "-\n";
        render(x, pad + "  ", o);
      }
    }
  } else {
    o << pad << scalar(j) << "\n";
  }
}

// pi_m = ... with the equals signs aligned
void render_base(const json& rep, std::ostream& o) {
  const auto& pis = rep.at("pi");
  const auto& fam = rep.at("pi_equation");
  bool several = !fam.empty() && fam.back().get<int>() > 0;
  std::vector<std::string> labels;
  size_t w = 0;
  for (size_t i = 0; i < pis.size(); ++i) {
    std::string l = "pi" + (several ? "(" + std::to_string(fam[i].get<int>() + 1) + ")" : std::string()) + "_" +
                    std::to_string(pis[i][0].get<int>());
    w = std::max(w, l.size());
    labels.push_back(l);
  }
  o << "lifting conditions:\n";
  for (auto& r : rep.at("lifting_rows")) o << "  " << scalar(r) << " = 0\n";
  o << "base equations:\n";
  for (size_t i = 0; i < pis.size(); ++i) o << "  " << std::setw(static_cast<int>(w)) << labels[i] << " = " << scalar(pis[i][1]) << "\n";
}

}  // namespace

std::string render_text(const json& rep) {
  std::ostringstream o;
  json rest = rep;
  if (rep.value("command", "") == "obstruct") {
    render_base(rep, o);
    for (auto k : {"pi", "pi_equation", "lifting_rows", "variables"}) rest.erase(k);
  }
  render(rest, "", o);
  return o.str();
}

}  // namespace rf::app
