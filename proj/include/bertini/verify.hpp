#ifndef BERTINI_VERIFY_HPP
#define BERTINI_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bertini/bundle.hpp"
#include "bertini/fp.hpp"

namespace bertini {

enum class Suite { bertini, sigma2, geiser, all };
enum class Mode { symbolic, modular };

struct VerifyOptions {
  Suite suite = Suite::all;
  Mode mode = Mode::symbolic;
  unsigned trials = 20;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::uint64_t mem_budget = 8ull << 30;
  Corrupt corrupt = Corrupt::none;  // negative-control hook used by the tests
};

struct CheckResult {
  std::string name;
  bool pass = false;
  unsigned trials = 0;  // 0 means the check ran symbolically
  std::map<std::string, std::string> witness;  // populated on failure
  double ms = 0;  // stderr diagnostics only; the JSON report omits timings
};

struct Report {
  std::string suite;
  std::string mode;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Executes the fixed catalogue for the selected suite.  Construction errors
// (NotDivisible and friends) become check failures, never exceptions.
Report run_suite(const VerifyOptions& opts);

// Serialized per the stable schema; byte-identical for identical inputs.
std::string report_to_json(const Report& r);

// ---- randomized numeric checks over F_p ----

struct RoundtripStats {
  unsigned requested = 0;
  unsigned degenerate = 0;
  unsigned verified = 0;
};

// Applies the involution twice to n random points; skips degenerate samples
// and throws ExcessiveDegeneracy when they exceed 20%.
RoundtripStats involution_roundtrip(const PencilSpec<Fp>& spec, unsigned n, std::uint64_t seed);
RoundtripStats involution_roundtrip_geiser(const PencilSpec<Fp>& spec, unsigned n,
                                           std::uint64_t seed);

struct FixedLocusStats {
  unsigned verified = 0;
  unsigned lines_tried = 0;
};

// Samples points of {K = 0} along random lines, asserts each is fixed by the
// involution and its Sigma_2 image satisfies the trigonal equation.
FixedLocusStats fixed_locus_sample(const PencilSpec<Fp>& spec, unsigned n, std::uint64_t seed);
// Geiser variant: fixed by geiser_apply, plane image on the branch quartic.
FixedLocusStats fixed_locus_sample_geiser(const PencilSpec<Fp>& spec, unsigned n,
                                          std::uint64_t seed);

// Deterministic pencil generator for tests: coefficients drawn from the
// seeded stream, a1 = a2 = 0 when geiser is set.
PencilSpec<Fp> random_pencil(std::uint64_t prime, std::uint64_t seed, bool geiser);

}  // namespace bertini

#endif
