#include "rghw/fixtures.hpp"

#include "rghw/semigroup.hpp"

namespace rghw::fixtures {

std::vector<long> ex3_hstar() {
  NumericalSemigroup h({4, 5});
  std::vector<long> out;
  for (long x = 0; x <= 60; ++x)
    if (h.contains(x)) out.push_back(x);
  out.insert(out.end(), kEx3Tail.begin(), kEx3Tail.end());
  return out;
}

}  // namespace rghw::fixtures
