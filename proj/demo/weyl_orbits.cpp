// Orbits of the Weyl vector and reduced words to the dominant chamber.

#include <iostream>

#include "liekit/liekit.hpp"

using namespace liekit;

int main() {
  for (char s : {'A', 'B', 'C', 'D', 'G'}) {
    int rank = s == 'D' ? 4 : (s == 'G' ? 2 : 3);
    RootSystem g = RootSystem::simple(s, rank);
    std::cout << s << rank << ": rho = " << to_string(g.rho()) << ", |W rho| = " << orbit(g, g.rho()).size()
              << "\n";
  }
  RootSystem b2 = RootSystem::simple('B', 2);
  DominantResult r = to_dominant(b2, Weight::finite({-1, 0}));
  std::cout << "B2: (-1,0) -> " << to_string(r.dominant) << " in " << r.word.size() << " reflections\n";
}
