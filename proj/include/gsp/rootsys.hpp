#ifndef GSP_ROOTSYS_HPP
#define GSP_ROOTSYS_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "gsp/core.hpp"

namespace gsp {

/// Default bound on the Weyl group order accepted by build_root_system.
inline constexpr std::uint64_t kDefaultGroupGuard = 2'000'000;

using RootVector = std::vector<int>;

/// Letter + rank, e.g. {'D', 4}.
struct TypeSpec {
  char letter = 'A';
  int rank = 1;

  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r = saturating_mul(r, static_cast<std::uint64_t>(k));
  return r;
}

inline bool valid_rank(char letter, int n) {
  switch (letter) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

}  // namespace detail

/// Parses "A3", "D4", "G2". Validates the letter and the rank range.
inline TypeSpec parse_type_spec(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("type spec '" + std::string(text) + "' is too short");
  const char letter = text.front();
  if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos)
    throw InvalidArgument("unknown type letter '" + std::string(1, letter) + "'");
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidArgument("bad rank in type spec '" + std::string(text) + "'");
  if (!detail::valid_rank(letter, rank) || rank > kMaxRank)
    throw InvalidArgument("rank " + std::to_string(rank) + " is not valid for type " +
                          std::string(1, letter));
  return {letter, rank};
}

/// Order of the Weyl group of a simple type, saturating at 2^64-1.
inline std::uint64_t weyl_group_order(const TypeSpec& t) {
  const int n = t.rank;
  switch (t.letter) {
    case 'A': return detail::factorial(n + 1);
    case 'B':
    case 'C': return detail::saturating_mul(std::uint64_t{1} << std::min(n, 63), detail::factorial(n));
    case 'D': return detail::saturating_mul(std::uint64_t{1} << std::min(n - 1, 63), detail::factorial(n));
    case 'E': return n == 6 ? 51'840 : n == 7 ? 2'903'040 : 696'729'600;
    case 'F': return 1'152;
    case 'G': return 12;
  }
  throw InvalidArgument("unknown type");
}

/// Cartan matrix with entries a[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering.
inline std::vector<std::vector<int>> cartan_matrix(const TypeSpec& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j, int ij = -1, int ji = -1) {
    a[i][j] = ij;
    a[j][i] = ji;
  };
  switch (t.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 2);
      bond(n - 3, n - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1);
      bond(1, 2, -1, -2);
      bond(2, 3);
      break;
    case 'G':
      bond(0, 1, -3, -1);  // alpha_1 short
      break;
  }
  return a;
}

/// A reduced irreducible root system with its full root table.
///
/// Table layout: indices [0, P) hold the positive roots ordered by height and
/// then lexicographically descending, so the first `rank` entries are the
/// simple roots alpha_1..alpha_rank; index P + k holds the negative of root k.
class RootSystem {
 public:
  RootSystem(TypeSpec type, std::vector<std::vector<int>> cartan, std::vector<RootVector> roots)
      : type_(type), cartan_(std::move(cartan)), roots_(std::move(roots)) {
    positive_count_ = static_cast<int>(roots_.size() / 2);
    for (int b = 0; b < root_count(); ++b) index_.emplace(roots_[b], b);
    reflect_.assign(static_cast<std::size_t>(rank()) * root_count(), 0);
    for (int i = 0; i < rank(); ++i)
      for (int b = 0; b < root_count(); ++b) {
        RootVector v = roots_[b];
        const int p = pairing(v, i);
        v[i] -= p;
        const int image = find(v);
        if (image < 0) throw ConsistencyError("root table not closed under reflection");
        reflect_[static_cast<std::size_t>(i) * root_count() + b] = image;
      }
  }

  const TypeSpec& type() const { return type_; }
  std::string type_label() const { return type_.label(); }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<RootVector>& roots() const { return roots_; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return positive_count_; }
  IndexSet index_set() const { return IndexSet::full(rank()); }

  const RootVector& root(int b) const { return roots_.at(b); }
  bool is_positive(int b) const { return b < positive_count_; }
  int negate(int b) const { return b < positive_count_ ? b + positive_count_ : b - positive_count_; }
  /// Table index of the simple root alpha_i (0-based i).
  int simple(int i) const { return i; }
  bool is_simple(int b) const { return b < rank(); }

  /// <beta, alpha_i^vee> from the Cartan matrix.
  int pairing(const RootVector& beta, int i) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += cartan_[i][j] * beta[j];
    return s;
  }

  /// Table index of v, or -1 when v is not a root.
  int find(const RootVector& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
  }

  /// s_i applied to the root with table index b.
  int reflect(int i, int b) const {
    return reflect_[static_cast<std::size_t>(i) * root_count() + b];
  }

  /// s_i applied to a root vector; throws when beta is not a root.
  RootVector reflect(int i, const RootVector& beta) const {
    if (i < 0 || i >= rank()) throw InvalidArgument("simple index out of range");
    const int b = find(beta);
    if (b < 0) throw InvalidArgument("vector is not a root");
    return roots_[reflect(i, b)];
  }

 private:
  TypeSpec type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVector> roots_;
  int positive_count_ = 0;
  std::map<RootVector, int> index_;
  std::vector<int> reflect_;
};

struct BuildOptions {
  std::uint64_t group_guard = kDefaultGroupGuard;
};

/// Generates the root table by reflection closure from the simple roots.
inline RootSystem build_root_system(const TypeSpec& type, const BuildOptions& options = {}) {
  if (!detail::valid_rank(type.letter, type.rank) || type.rank > kMaxRank)
    throw InvalidArgument("invalid type " + type.label());
  const std::uint64_t order = weyl_group_order(type);
  if (order > options.group_guard)
    throw GuardExceeded("Weyl group of " + type.label() + " has order " + std::to_string(order) +
                        ", above the guard " + std::to_string(options.group_guard));

  const int n = type.rank;
  auto cartan = cartan_matrix(type);

  // Positive roots: s_i(beta) for positive beta != alpha_i is again positive.
  std::vector<RootVector> positive;
  std::map<RootVector, bool> seen;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    positive.push_back(e);
    seen[e] = true;
  }
  for (std::size_t k = 0; k < positive.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      RootVector v = positive[k];
      int p = 0;
      for (int j = 0; j < n; ++j) p += cartan[i][j] * v[j];
      if (p == 0) continue;
      v[i] -= p;
      if (std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; }) &&
          std::any_of(v.begin(), v.end(), [](int c) { return c > 0; }) && !seen.count(v)) {
        seen[v] = true;
        positive.push_back(v);
      }
    }
  }
  std::sort(positive.begin(), positive.end(), [](const RootVector& a, const RootVector& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  std::vector<RootVector> roots = positive;
  for (const auto& r : positive) {
    RootVector neg(r.size());
    std::transform(r.begin(), r.end(), neg.begin(), [](int c) { return -c; });
    roots.push_back(std::move(neg));
  }
  return RootSystem(type, std::move(cartan), std::move(roots));
}

inline RootSystem build_root_system(std::string_view type_spec, const BuildOptions& options = {}) {
  return build_root_system(parse_type_spec(type_spec), options);
}

class DiagramAutomorphism;
inline DiagramAutomorphism make_automorphism(const RootSystem& rs, std::vector<int> perm);

/// A permutation of I preserving the Cartan matrix. Internally 0-based.
class DiagramAutomorphism {
 public:
  DiagramAutomorphism() = default;

  int rank() const { return static_cast<int>(perm_.size()); }
  int order() const { return order_; }
  const std::vector<int>& perm() const { return perm_; }
  bool is_identity() const { return order_ == 1; }

  int operator()(int i) const { return perm_[i]; }

  IndexSet operator()(IndexSet s) const {
    std::uint32_t m = 0;
    for (int i : s.indices()) m |= 1u << perm_[i];
    return IndexSet(m);
  }

  /// sigma(beta) = sum_i beta_i alpha_{sigma(i)}.
  RootVector operator()(const RootVector& beta) const {
    RootVector out(beta.size(), 0);
    for (int i = 0; i < rank(); ++i) out[perm_[i]] = beta[i];
    return out;
  }

  /// Orbits of the permutation on I, each as a subset, ordered by least element.
  std::vector<IndexSet> orbits() const {
    std::vector<IndexSet> out;
    IndexSet done;
    for (int i = 0; i < rank(); ++i) {
      if (done.contains(i)) continue;
      IndexSet orbit;
      for (int j = i; !orbit.contains(j); j = perm_[j]) orbit = orbit.with(j);
      done = done | orbit;
      out.push_back(orbit);
    }
    return out;
  }

  /// "id" or "1:2,2:1".
  std::string to_string() const {
    if (is_identity()) return "id";
    std::string s;
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ',';
      s += std::to_string(i + 1) + ":" + std::to_string(perm_[i] + 1);
    }
    return s;
  }

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;

 private:
  friend DiagramAutomorphism make_automorphism(const RootSystem&, std::vector<int>);
  std::vector<int> perm_;
  int order_ = 1;
};

/// Validates a 0-based permutation of I against the Cartan matrix.
inline DiagramAutomorphism make_automorphism(const RootSystem& rs, std::vector<int> perm) {
  const int n = rs.rank();
  if (static_cast<int>(perm.size()) != n)
    throw InvalidArgument("automorphism has " + std::to_string(perm.size()) + " entries, rank is " +
                          std::to_string(n));
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) throw InvalidArgument("automorphism is not a permutation of I");
    hit[p] = true;
  }
  const auto& c = rs.cartan();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c[perm[i]][perm[j]] != c[i][j])
        throw InvalidArgument("permutation does not preserve the Cartan matrix of " + rs.type_label());

  DiagramAutomorphism sigma;
  sigma.perm_ = std::move(perm);
  int order = 1;
  for (std::vector<int> p = sigma.perm_;; ++order) {
    bool identity = true;
    for (int i = 0; i < n; ++i) identity = identity && p[i] == i;
    if (identity) break;
    for (int i = 0; i < n; ++i) p[i] = sigma.perm_[p[i]];
  }
  sigma.order_ = order;
  return sigma;
}

inline DiagramAutomorphism identity_automorphism(const RootSystem& rs) {
  std::vector<int> perm(rs.rank());
  std::iota(perm.begin(), perm.end(), 0);
  return make_automorphism(rs, std::move(perm));
}

/// Parses "id" or "1:3,2:2,3:1". Unlisted indices map to themselves.
inline DiagramAutomorphism parse_automorphism(const RootSystem& rs, std::string_view text) {
  if (text == "id") return identity_automorphism(rs);
  const int n = rs.rank();
  std::vector<int> perm(n, -1);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("bad automorphism entry '" + std::string(item) + "'");
    int from = 0, to = 0;
    auto r1 = std::from_chars(item.data(), item.data() + colon, from);
    auto r2 = std::from_chars(item.data() + colon + 1, item.data() + item.size(), to);
    if (r1.ec != std::errc() || r1.ptr != item.data() + colon || r2.ec != std::errc() ||
        r2.ptr != item.data() + item.size())
      throw InvalidArgument("bad automorphism entry '" + std::string(item) + "'");
    if (from < 1 || from > n || to < 1 || to > n)
      throw InvalidArgument("automorphism index out of range in '" + std::string(item) + "'");
    if (perm[from - 1] != -1) throw InvalidArgument("automorphism index listed twice");
    perm[from - 1] = to - 1;
    pos = comma + 1;
  }
  for (int i = 0; i < n; ++i)
    if (perm[i] == -1) perm[i] = i;
  return make_automorphism(rs, std::move(perm));
}

/// Dominant-weight coefficients in the fundamental-weight basis.
struct Weight {
  std::vector<int> coeffs;

  /// "1,2,1"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coeffs[i]);
    }
    return s;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline Weight parse_weight(std::string_view text) {
  Weight w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InvalidArgument("bad weight coefficient '" + std::string(item) + "'");
    w.coeffs.push_back(v);
    pos = comma + 1;
  }
  return w;
}

struct WeightPredicates {
  bool dominant = false;
  bool regular = false;
  bool sigma_stable = false;
  IndexSet support;
};

inline WeightPredicates weight_predicates(const RootSystem& rs, const DiagramAutomorphism& sigma,
                                          const Weight& lambda) {
  if (static_cast<int>(lambda.coeffs.size()) != rs.rank())
    throw InvalidArgument("weight has " + std::to_string(lambda.coeffs.size()) +
                          " coefficients, rank is " + std::to_string(rs.rank()));
  WeightPredicates p;
  p.dominant = std::all_of(lambda.coeffs.begin(), lambda.coeffs.end(), [](int a) { return a >= 0; });
  p.regular = std::all_of(lambda.coeffs.begin(), lambda.coeffs.end(), [](int a) { return a > 0; });
  p.sigma_stable = true;
  for (int i = 0; i < rs.rank(); ++i) {
    if (lambda.coeffs[sigma(i)] != lambda.coeffs[i]) p.sigma_stable = false;
    if (lambda.coeffs[i] != 0) p.support = p.support.with(i);
  }
  return p;
}

}  // namespace gsp

#endif  // GSP_ROOTSYS_HPP
