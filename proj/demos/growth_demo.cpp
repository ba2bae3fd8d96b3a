// Compute the growth series of G(2,3,7), expand a few coefficients and
// cross-check them against the brute-force sphere counts.
#include "amal/amal.hpp"

#include <iostream>

int main() {
  const amal::Presentation pres({2, 3, 7});
  const amal::RatFun series = amal::growth_series(pres);
  std::cout << "S(t) = " << series.str() << "\n\n";

  const int depth = 8;
  const auto coeffs = series.taylor_int(depth);
  const auto table = amal::bfs_spheres(pres, depth);
  std::cout << "l  series  bfs\n";
  for (int l = 0; l <= depth; ++l)
    std::cout << l << "  " << coeffs[l] << "  " << table.counts[l] << "\n";
}
