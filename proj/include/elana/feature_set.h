#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace elana {

inline constexpr int kMaxFeatures = 64;
inline constexpr int kMaxDomains = 64;

// A subset of the feature universe, one bit per feature index.
class FeatureSet {
 public:
  constexpr FeatureSet() = default;
  constexpr explicit FeatureSet(uint64_t bits) : bits_(bits) {}

  static constexpr FeatureSet Singleton(int feature) {
    return FeatureSet(uint64_t{1} << feature);
  }
  static constexpr FeatureSet FirstN(int n) {
    return FeatureSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int feature) const {
    return (bits_ >> feature) & 1;
  }
  constexpr bool subset_of(FeatureSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(FeatureSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr FeatureSet operator|(FeatureSet o) const {
    return FeatureSet(bits_ | o.bits_);
  }
  constexpr FeatureSet operator&(FeatureSet o) const {
    return FeatureSet(bits_ & o.bits_);
  }
  constexpr FeatureSet operator-(FeatureSet o) const {
    return FeatureSet(bits_ & ~o.bits_);
  }
  FeatureSet& operator|=(FeatureSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  FeatureSet& operator&=(FeatureSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  FeatureSet& operator-=(FeatureSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const FeatureSet&) const = default;
  constexpr auto operator<=>(const FeatureSet&) const = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for_each([&](int f) { out.push_back(f); });
    return out;
  }

 private:
  uint64_t bits_ = 0;
};

// Set of domain indices; same representation, different role.
using DomainSet = FeatureSet;

}  // namespace elana

template <>
struct std::hash<elana::FeatureSet> {
  size_t operator()(elana::FeatureSet s) const noexcept {
    return std::hash<uint64_t>{}(s.bits());
  }
};
