// Quick timings of the polynomial kernel on the real workload: the generic
// constructions and the products that dominate the identity suites.

#include <chrono>
#include <cstdio>

#include "bertini/bundle.hpp"
#include "bertini/poly_sliced.hpp"

using namespace bertini;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class F>
void bench(const char* label, std::size_t products, F&& body) {
  auto t0 = Clock::now();
  std::size_t out_terms = body();
  double s = seconds(t0, Clock::now());
  std::printf("%-28s %12zu products %10.3f s %8.1f M/s %10zu terms\n", label, products, s,
              products / s / 1e6, out_terms);
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  auto b = build_bundle(generic_pencil());
  std::printf("%-28s %37.3f s\n", "build generic bundle", seconds(t0, Clock::now()));

  bench("K * K (flat)", b.K.size() * b.K.size(), [&] { return (b.K * b.K).size(); });
  bench("K * K (sliced)", b.K.size() * b.K.size(), [&] { return mul_big(b.K, b.K).size(); });

  PolyQ phi2 = b.phi6 * b.phi6;
  bench("phi6^2 * phi6 (sliced)", phi2.size() * b.phi6.size(),
        [&] { return mul_big(phi2, b.phi6).size(); });

  bench("phi6 * z1 (sliced)", b.phi6.size() * b.z1.size(),
        [&] { return mul_big(b.phi6, b.z1).size(); });

  bench("rp1 * rp1 (sliced)", b.rp1.size() * b.rp1.size(),
        [&] { return mul_big(b.rp1, b.rp1).size(); });

  return 0;
}
