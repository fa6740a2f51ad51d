#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace coxeter {

/// Index of a generator s in S. Ranks are small, so a byte suffices.
using Generator = std::uint8_t;

/// Hard upper bound on the rank; the configurable maximum is lower.
inline constexpr unsigned kRankLimit = 32;

/// A subset of S stored as a bitmask.
class GeneratorSet {
public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<unsigned> members) {
    for (unsigned s : members) insert(s);
  }

  static constexpr GeneratorSet all(unsigned rank) {
    return GeneratorSet(rank >= 32 ? ~0u : ((1u << rank) - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(unsigned s) const { return (bits_ >> s) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return std::popcount(bits_); }
  constexpr void insert(unsigned s) { bits_ |= 1u << s; }
  constexpr void erase(unsigned s) { bits_ &= ~(1u << s); }

  // Least member; undefined on the empty set.
  constexpr unsigned min() const { return std::countr_zero(bits_); }
  // One past the largest member (0 for the empty set).
  constexpr unsigned extent() const { return 32 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(GeneratorSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr GeneratorSet operator|(GeneratorSet o) const { return GeneratorSet(bits_ | o.bits_); }
  constexpr GeneratorSet operator&(GeneratorSet o) const { return GeneratorSet(bits_ & o.bits_); }
  constexpr GeneratorSet minus(GeneratorSet o) const { return GeneratorSet(bits_ & ~o.bits_); }

  std::vector<Generator> members() const {
    std::vector<Generator> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Generator>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;
  friend constexpr auto operator<=>(GeneratorSet, GeneratorSet) = default;

private:
  std::uint32_t bits_ = 0;
};

}  // namespace coxeter
