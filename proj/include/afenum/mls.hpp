#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "afenum/framework.hpp"
#include "afenum/search.hpp"

namespace afenum {

enum class FamilyKind { Exhaustive, Random };

/// q-subsets of {0..n-1} such that every p-subset lies inside one of them.
struct SetContainingFamily {
  std::size_t n = 0, p = 0, q = 0;
  std::vector<VertexSet> members;
  // True when coverage was checked exhaustively (always for exhaustive
  // families, and for random ones with n <= kFamilyVerifyLimit).
  bool verified = false;
};

inline constexpr std::size_t kFamilyVerifyLimit = 20;

// C(n,k). Throws InputError when the value does not fit in 64 bits.
std::uint64_t binomial(std::size_t n, std::size_t k);

SetContainingFamily build_family_exhaustive(std::size_t n, std::size_t p, std::size_t q);

// m = ceil(C(n,p)/C(q,p) * ln(C(n,p)/delta)) uniform q-subsets (a single one
// when C(n,p) = 1), deduplicated. Up to kFamilyVerifyLimit the coverage is
// verified and the draw repeated until it holds.
SetContainingFamily build_family_random(std::size_t n, std::size_t p, std::size_t q, double delta, std::uint64_t seed);

// Exhaustive coverage check. Requires n <= kFamilyVerifyLimit.
bool verify_family(const SetContainingFamily& family);

// Number of members build_family_* would produce before deduplication.
double family_size_estimate(FamilyKind kind, std::size_t n, std::size_t p, std::size_t q, double delta);

/// The t in [s, universe] minimising |family(universe, s, t)| * 2^(cost*(t-s)) * 2^(extra*t);
/// the smallest such t on ties.
std::size_t determine_budget(std::size_t universe, std::size_t s, double cost_per_extra, double extra_per_member,
                             FamilyKind kind = FamilyKind::Exhaustive, double delta = 0.01);

struct MlsOptions {
  FamilyKind family = FamilyKind::Exhaustive;
  double delta = 0.01;
  std::uint64_t seed = 0;
};

struct MlsResult {
  std::vector<Extension> extensions;  // inclusion-maximal: the preferred extensions
  std::vector<Extension> unfiltered;  // every distinct set any sampled MASE call returned
  SearchStats stats;                  // summed over all MASE calls
  std::uint64_t mase_calls = 0;
  // Random families above kFamilyVerifyLimit are only complete with high probability.
  bool probabilistic = false;
};

// Requires a loop-free framework (PreconditionError otherwise).
MlsResult mls_enumerate(const Framework& af, const MlsOptions& mls = {}, const EnumOptions& opts = {});

}  // namespace afenum
