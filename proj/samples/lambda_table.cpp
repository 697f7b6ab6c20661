// Prints lambda, c and the cover kernel for a few catalog families.
#include <grpcov/grpcov.hpp>

#include <cstdio>
#include <string>

int main(int argc, char** argv) {
  using namespace grpcov;
  std::vector<std::string> specs;
  for (int i = 1; i < argc; ++i) {
    specs.emplace_back(argv[i]);
  }
  if (specs.empty()) {
    for (int n = 3; n <= 8; ++n) {
      specs.push_back("D:" + std::to_string(n));
    }
    for (int n = 3; n <= 6; ++n) {
      specs.push_back("Q:" + std::to_string(n));
    }
    specs.insert(specs.end(), {"A:4", "SL23", "R:3", "T:5", "U36", "A:5", "PSL3:2"});
  }
  std::printf("%-24s %6s %6s %6s %8s\n", "group", "order", "lambda", "c", "|N|");
  for (auto const& s : specs) {
    try {
      auto spec = parse_spec(s);
      auto g    = build_group(spec);
      auto fam  = maximal_cyclic_subgroups(g);
      std::printf("%-24s %6zu %6zu %6zu %8zu\n", to_string(spec).c_str(), g.order(),
                  fam.members.size(), cyclic_count(g), fam.kernel.order());
    } catch (Error const& e) {
      std::printf("%-24s error: %s\n", s.c_str(), e.what());
    }
  }
}
