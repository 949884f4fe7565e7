// String functions of a few level one and level two modules.

#include <iostream>

#include "liekit/liekit.hpp"

using namespace liekit;

int main() {
  RootSystem a1 = affine_extension(RootSystem::simple('A', 1));
  for (const auto& labels : std::vector<std::vector<long long>>{{1, 0}, {2, 0}, {1, 1}}) {
    std::cout << "A1^ [" << labels[0] << "," << labels[1] << "]\n";
    for (const auto& s : string_functions(a1, labels, 8)) std::cout << "  " << format_series(s) << "\n";
  }
}
