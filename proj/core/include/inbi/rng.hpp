#ifndef INBI_RNG_HPP
#define INBI_RNG_HPP

#include <cstdint>

namespace inbi {

/// splitmix64 step, used to derive independent stream seeds so that stage
/// and subproblem RNGs never overlap.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  return splitmix64(base ^ splitmix64(tag));
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag1,
                                    std::uint64_t tag2) {
  return derive_seed(derive_seed(base, tag1), tag2);
}

}  // namespace inbi

#endif  // INBI_RNG_HPP
