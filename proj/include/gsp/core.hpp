#ifndef GSP_CORE_HPP
#define GSP_CORE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad type label, bad automorphism, bad weight, bad piece ID.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested group is larger than the configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug, never a user error.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Outcome of one named verification check. `counterexample` holds
/// field/value pairs describing the first failure, empty on success.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> counterexample;
};

/// Maximum rank representable by IndexSet.
inline constexpr int kMaxRank = 31;

/// A subset of the simple-root index set I, stored as a bitmask over 0-based
/// indices. Text forms (IDs, JSON) use 1-based indices.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t mask) : mask_(mask) {}

  static constexpr IndexSet full(int rank) {
    return IndexSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }

  static IndexSet from_indices(const std::vector<int>& zero_based) {
    std::uint32_t m = 0;
    for (int i : zero_based) m |= (1u << i);
    return IndexSet(m);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1u; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool subset_of(IndexSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (mask_ & other.mask_) != 0; }

  constexpr IndexSet with(int i) const { return IndexSet(mask_ | (1u << i)); }
  constexpr IndexSet without(int i) const { return IndexSet(mask_ & ~(1u << i)); }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(mask_ | o.mask_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(mask_ & o.mask_); }

  /// Members in ascending order, 0-based.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// "{1,3}" with 1-based indices, "{}" when empty.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

}  // namespace gsp

#endif  // GSP_CORE_HPP
