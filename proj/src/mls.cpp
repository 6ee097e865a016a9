#include "afenum/mls.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "afenum/collation.hpp"
#include "afenum/errors.hpp"
#include "afenum/mase.hpp"

namespace afenum {
namespace {

constexpr double kMaxFamily = double{1 << 26};

double binomial_d(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

void check_bounds(std::size_t n, std::size_t p, std::size_t q) {
  if (p > q || q > n)
    throw InputError("set-containing family needs p <= q <= n, got (" + std::to_string(n) + "," + std::to_string(p) +
                     "," + std::to_string(q) + ")");
}

std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](Vertex v) { m |= std::uint32_t{1} << v; });
  return m;
}

// Next mask with the same popcount (Gosper).
std::uint32_t next_combination(std::uint32_t x) {
  const std::uint32_t c = x & -x;
  const std::uint32_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is exact; divide out the common factor first.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(r / g, factor, &r))
      throw InputError("C(" + std::to_string(n) + "," + std::to_string(k) +
                       ") overflows 64 bits; use the exhaustive family mode");
  }
  return r;
}

SetContainingFamily build_family_exhaustive(std::size_t n, std::size_t p, std::size_t q) {
  check_bounds(n, p, q);
  if (binomial_d(n, q) > kMaxFamily)
    throw ResourceLimitError("exhaustive family C(" + std::to_string(n) + "," + std::to_string(q) + ") is too large");
  SetContainingFamily f{n, p, q, {}, true};
  std::vector<Vertex> idx(q);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f.members.emplace_back(n, std::span<const Vertex>(idx));
    // Advance to the next q-combination in lexicographic order.
    std::size_t i = q;
    while (i > 0 && static_cast<std::size_t>(idx[i - 1]) == n - q + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < q; ++j) idx[j] = idx[j - 1] + 1;
  }
  return f;
}

double family_size_estimate(FamilyKind kind, std::size_t n, std::size_t p, std::size_t q, double delta) {
  if (kind == FamilyKind::Exhaustive) return binomial_d(n, q);
  const double cnp = static_cast<double>(binomial(n, p));
  if (cnp <= 1) return 1;
  const double cqp = static_cast<double>(binomial(q, p));
  return std::ceil(cnp / cqp * std::log(cnp / delta));
}

SetContainingFamily build_family_random(std::size_t n, std::size_t p, std::size_t q, double delta, std::uint64_t seed) {
  check_bounds(n, p, q);
  if (!(delta > 0 && delta < 1)) throw InputError("failure budget delta must lie in (0,1)");
  const double m = family_size_estimate(FamilyKind::Random, n, p, q, delta);
  if (m > kMaxFamily) throw ResourceLimitError("random family would need " + std::to_string(m) + " members");

  std::mt19937_64 rng(seed);
  std::vector<Vertex> pool(n);
  SetContainingFamily f{n, p, q, {}, false};
  for (int attempt = 0; attempt < 64; ++attempt) {
    f.members.clear();
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
      std::iota(pool.begin(), pool.end(), 0);
      for (std::size_t j = 0; j < q; ++j) {
        std::uniform_int_distribution<std::size_t> pick(j, n - 1);
        std::swap(pool[j], pool[pick(rng)]);
      }
      f.members.emplace_back(n, std::span<const Vertex>(pool.data(), q));
    }
    canonicalize(f.members);
    if (n > kFamilyVerifyLimit) return f;
    if (verify_family(f)) {
      f.verified = true;
      return f;
    }
  }
  throw InternalError("random family failed coverage 64 times in a row");
}

bool verify_family(const SetContainingFamily& family) {
  if (family.n > kFamilyVerifyLimit) throw InputError("exhaustive coverage check limited to 20 elements");
  std::vector<std::uint32_t> masks;
  masks.reserve(family.members.size());
  for (const auto& m : family.members) {
    if (m.universe() != family.n || m.size() != family.q) return false;
    masks.push_back(to_mask(m));
  }
  const std::uint32_t limit = std::uint32_t{1} << family.n;
  auto covered = [&](std::uint32_t s) {
    for (auto m : masks)
      if ((m & s) == s) return true;
    return false;
  };
  if (family.p == 0) return !masks.empty();
  for (std::uint32_t s = (std::uint32_t{1} << family.p) - 1; s < limit; s = next_combination(s))
    if (!covered(s)) return false;
  return true;
}

std::size_t determine_budget(std::size_t universe, std::size_t s, double cost_per_extra, double extra_per_member,
                             FamilyKind kind, double delta) {
  if (s > universe) throw InputError("determine_budget: s exceeds the universe size");
  std::size_t best_t = s;
  double best = 0;
  for (std::size_t t = s; t <= universe; ++t) {
    const double size = family_size_estimate(kind, universe, s, t, delta);
    const double cost = std::log2(size) + cost_per_extra * static_cast<double>(t - s) +
                        extra_per_member * static_cast<double>(t);
    if (t == s || cost < best - 1e-12) {
      best = cost;
      best_t = t;
    }
  }
  return best_t;
}

MlsResult mls_enumerate(const Framework& af, const MlsOptions& mls, const EnumOptions& opts) {
  if (af.has_self_loops()) throw PreconditionError("local search needs a loop-free framework; apply loopless_translate");
  const std::vector<Vertex> B = af.two_cycle_members().members();
  const std::vector<Vertex> D = (af.all() - af.two_cycle_members()).members();
  MlsResult out;

  auto family = [&](std::size_t n, std::size_t p, std::size_t q, std::uint64_t tag) {
    if (mls.family == FamilyKind::Exhaustive) return build_family_exhaustive(n, p, q);
    std::seed_seq seq{mls.seed, std::uint64_t{tag}, std::uint64_t{n}, std::uint64_t{p}, std::uint64_t{q}};
    std::uint64_t derived;
    seq.generate(reinterpret_cast<std::uint32_t*>(&derived), reinterpret_cast<std::uint32_t*>(&derived) + 2);
    auto f = build_family_random(n, p, q, mls.delta, derived);
    if (!f.verified) out.probabilistic = true;
    return f;
  };
  auto lift = [&](const VertexSet& local, const std::vector<Vertex>& ground, VertexSet& into) {
    local.for_each([&](Vertex i) { into.insert(ground[static_cast<std::size_t>(i)]); });
  };

  struct Phase {
    std::size_t budget;
    SetContainingFamily family;
  };
  std::vector<Phase> d_phases;
  for (std::size_t d = 0; d <= D.size(); ++d) {
    const std::size_t dp = determine_budget(D.size(), d, 0.5, 0.0, mls.family, mls.delta);
    d_phases.push_back({dp, family(D.size(), d, dp, 2)});
  }

  std::unordered_set<Extension, VertexSetHash> seen;
  for (std::size_t b = 0; b <= B.size(); ++b) {
    const std::size_t bp = determine_budget(B.size(), b, 0.5, 0.25, mls.family, mls.delta);
    const SetContainingFamily fb = family(B.size(), b, bp, 1);
    for (std::size_t d = 0; d <= D.size(); ++d) {
      const auto& [dp, fd] = d_phases[d];
      const int k = static_cast<int>((bp - b) + (dp - d));
      for (const VertexSet& s : fb.members) {
        for (const VertexSet& t : fd.members) {
          opts.limits.check();
          VertexSet x(af.size());
          lift(s, B, x);
          lift(t, D, x);
          EnumResult r = mase_enumerate(MaseInstance(af, std::move(x), k), opts);
          ++out.mase_calls;
          out.stats += r.stats;
          for (auto& e : r.extensions)
            if (seen.insert(e).second) out.unfiltered.push_back(std::move(e));
        }
      }
    }
  }
  canonicalize(out.unfiltered);
  out.extensions = inclusion_maximal(out.unfiltered);
  return out;
}

}  // namespace afenum
