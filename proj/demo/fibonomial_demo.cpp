// Prints a few rows of the Fibonomial triangle, the chain counts that explain
// them, and one tiling of the chains above <1,2> by copies of P_3.

#include <iostream>

#include "cobweb/format.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/seqcore.hpp"
#include "cobweb/tiling.hpp"

int main() {
  using namespace cobweb;

  std::cout << "Fibonomial triangle\n";
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; ++k) std::cout << (k ? " " : "") << fibonomial(n, k);
    std::cout << '\n';
  }

  const auto p = CobwebPoset::build(6);
  std::cout << "\nP_6 has " << p.vertex_count() << " vertices\n";
  for (std::size_t n = 1; n <= 6; ++n)
    std::cout << "chains from the root to level " << n << ": " << count_max_chains_from_root(p, n) << '\n';

  std::cout << '\n';
  if (const auto t = find_tiling(2, 1, 3, CopyModel::level_permuted)) {
    write_tiling_text(std::cout, *t);
    std::cout << (verify_tiling(*t) ? "VALID" : "INVALID") << '\n';
  }
}
