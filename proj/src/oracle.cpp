#include "afenum/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "afenum/errors.hpp"

namespace afenum {
namespace {

// Subsets of `ground` (given as parent indices) encoded as bitmasks over the
// ground positions.
struct Ground {
  std::vector<Vertex> vertices;

  VertexSet decode(std::uint32_t mask, std::size_t n) const {
    VertexSet s(n);
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (mask >> i & 1u) s.insert(vertices[i]);
    return s;
  }
};

// Decodes masks, ordered by size and then lexicographically.
std::vector<Extension> decode_all(const std::vector<std::uint32_t>& masks, const Ground& g, std::size_t n) {
  std::vector<Extension> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(g.decode(m, n));
  std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) {
    const auto sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

void check_limit(std::size_t n, std::size_t limit) {
  if (limit > 30) limit = 30;
  if (n > limit)
    throw ResourceLimitError("oracle limited to " + std::to_string(limit) + " vertices, got " + std::to_string(n));
}

// admissible[m] for every submask m of the ground set.
std::vector<char> admissible_table(const Framework& af, const Ground& g) {
  const std::size_t count = std::size_t{1} << g.vertices.size();
  std::vector<char> adm(count, 0);
  for (std::size_t m = 0; m < count; ++m)
    adm[m] = is_admissible(af, g.decode(static_cast<std::uint32_t>(m), af.size())) ? 1 : 0;
  return adm;
}

// Maximal admissible masks: admissible and no admissible strict supermask
// within the ground set. has_above[m] is filled from the top down.
std::vector<std::uint32_t> maximal_masks(const std::vector<char>& adm, std::size_t bits) {
  const std::size_t count = adm.size();
  std::vector<char> has_above(count, 0);
  std::vector<std::uint32_t> out;
  for (std::size_t m = count; m-- > 0;) {
    for (std::size_t i = 0; i < bits && !has_above[m]; ++i) {
      const std::size_t up = m | (std::size_t{1} << i);
      if (up != m && (adm[up] || has_above[up])) has_above[m] = 1;
    }
    if (adm[m] && !has_above[m]) out.push_back(static_cast<std::uint32_t>(m));
  }
  return out;
}

}  // namespace

std::vector<Extension> oracle_admissible_sets(const Framework& af, std::size_t limit) {
  check_limit(af.size(), limit);
  Ground g{af.all().members()};
  const auto adm = admissible_table(af, g);
  std::vector<std::uint32_t> masks;
  for (std::size_t m = 0; m < adm.size(); ++m)
    if (adm[m]) masks.push_back(static_cast<std::uint32_t>(m));
  return decode_all(masks, g, af.size());
}

std::vector<Extension> oracle_preferred_extensions(const Framework& af, std::size_t limit) {
  check_limit(af.size(), limit);
  Ground g{af.all().members()};
  const auto adm = admissible_table(af, g);
  return decode_all(maximal_masks(adm, g.vertices.size()), g, af.size());
}

std::vector<Extension> oracle_mase(const Framework& af, const VertexSet& s, int k, std::size_t limit) {
  af.require_valid(s);
  check_limit(s.size(), limit);
  if (k < 0) return {};
  Ground g{s.members()};
  const auto adm = admissible_table(af, g);
  const auto bits = g.vertices.size();
  std::vector<std::uint32_t> kept;
  for (auto m : maximal_masks(adm, bits))
    if (static_cast<int>(bits) - std::popcount(m) <= k) kept.push_back(m);
  return decode_all(kept, g, af.size());
}

}  // namespace afenum
