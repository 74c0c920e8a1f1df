#include <cstdio>

#include "rollfac_app/checks.hpp"

int main(int argc, char** argv) {
  rf::app::CheckContext c{argc > 1 ? std::filesystem::path(argv[1]) : rf::app::default_fixture_dir()};
  int failed = 0;
  for (auto& cr : rf::app::criteria()) {
    auto r = cr.run(c);
    std::printf("criterion %2d: %s  %s (%.1fs)\n", cr.id, r.passed ? "PASS" : "FAIL", cr.title.c_str(), r.seconds);
    if (!r.passed) {
      ++failed;
      for (auto& line : r.notes)
        if (line.rfind("FAIL", 0) == 0) std::printf("    %s\n", line.c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(rf::app::criteria().size()) - failed,
              rf::app::criteria().size());
  return failed ? 1 : 0;
}
