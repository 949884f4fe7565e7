// Decomposes tensor powers of the B2 vector module.

#include <iostream>

#include "liekit/liekit.hpp"

using namespace liekit;

int main() {
  RootSystem b2 = RootSystem::simple('B', 2);
  Weight v = b2.weight_from_labels(std::vector<long long>{1, 0});
  std::vector<Weight> factors;
  for (int k = 1; k <= 4; ++k) {
    factors.push_back(v);
    TensorDecomposition t = tensor_decompose(b2, factors);
    std::cout << "V^" << k << ":";
    for (const auto& l : t.labels) {
      if (t.coefficients.at(l) == 0) continue;
      std::cout << " " << t.coefficients.at(l) << "x[" << l[0] << "," << l[1] << "]";
    }
    std::cout << "\n";
  }
}
