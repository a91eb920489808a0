#ifndef GSP_WEYL_HPP
#define GSP_WEYL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gsp/core.hpp"
#include "gsp/rootsys.hpp"

namespace gsp {

class WeylGroup;

/// Handle to an interned element of a WeylGroup. Cheap to copy; valid as long
/// as the owning group is alive.
class Element {
 public:
  Element() = default;
  Element(const WeylGroup* group, std::uint32_t id) : group_(group), id_(id) {}

  std::uint32_t id() const { return id_; }
  const WeylGroup& group() const { return *group_; }
  const WeylGroup* group_ptr() const { return group_; }
  bool is_identity() const { return id_ == 0; }

  inline int length() const;
  inline std::span<const std::uint16_t> perm() const;
  inline std::vector<int> reduced_word() const;
  inline std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.group_ == b.group_ && a.id_ == b.id_;
  }
  friend auto operator<=>(const Element& a, const Element& b) { return a.id_ <=> b.id_; }

 private:
  const WeylGroup* group_ = nullptr;
  std::uint32_t id_ = 0;
};

/// The finite Weyl group of a root system, fully enumerated. Each element is
/// stored as the permutation it induces on the root table. Element IDs follow
/// (length, lexicographically least reduced word); ID 0 is the identity.
class WeylGroup {
 public:
  /// Dense Bruhat memo is used up to this group order.
  static constexpr std::size_t kDenseMemoLimit = 1024;

  explicit WeylGroup(RootSystem rs) : rs_(std::move(rs)) { generate(); }
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return length_.size(); }

  Element identity() const { return {this, 0}; }
  Element element(std::uint32_t id) const {
    if (id >= size()) throw InvalidArgument("element id out of range");
    return {this, id};
  }
  Element simple_reflection(int i) const { return {this, right_[idx(0, i)]}; }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint32_t k = 0; k < size(); ++k) out.emplace_back(this, k);
    return out;
  }

  int length(Element w) const { return length_[own(w)]; }
  std::span<const std::uint16_t> perm(Element w) const {
    return {perms_.data() + static_cast<std::size_t>(own(w)) * nroots_, static_cast<std::size_t>(nroots_)};
  }

  /// w * s_i
  Element right_multiply(Element w, int i) const { return {this, right_[idx(own(w), i)]}; }
  /// s_i * w
  Element left_multiply(int i, Element w) const { return {this, left_[idx(own(w), i)]}; }

  Element multiply(Element a, Element b) const {
    std::uint32_t x = own(a);
    for (int i : reduced_word(b)) x = right_[idx(x, i)];
    return {this, x};
  }
  Element inverse(Element a) const { return {this, inverse_[own(a)]}; }
  /// Table index of w(beta).
  int apply(Element w, int root_index) const {
    if (root_index < 0 || root_index >= nroots_) throw InvalidArgument("root index out of range");
    return perm(w)[root_index];
  }
  RootVector apply(Element w, const RootVector& beta) const {
    const int b = rs_.find(beta);
    if (b < 0) throw InvalidArgument("vector is not a root");
    return rs_.root(apply(w, b));
  }

  /// Canonical reduced word (0-based letters): repeatedly peel the smallest
  /// left descent.
  std::vector<int> reduced_word(Element w) const {
    std::vector<int> word;
    for (std::uint32_t x = own(w); x != 0; x = rest_[x]) word.push_back(first_[x]);
    return word;
  }

  /// "e" or "s1.s2.s1".
  std::string to_string(Element w) const {
    if (w.is_identity()) return "e";
    std::string s;
    for (int i : reduced_word(w)) {
      if (!s.empty()) s += '.';
      s += 's' + std::to_string(i + 1);
    }
    return s;
  }

  /// Product of a word of 0-based letters; the word need not be reduced.
  Element from_word(std::span<const int> word) const {
    std::uint32_t x = 0;
    for (int i : word) {
      if (i < 0 || i >= rank()) throw InvalidArgument("letter out of range");
      x = right_[idx(x, i)];
    }
    return {this, x};
  }

  /// Inverse of to_string; also accepts non-reduced words.
  Element parse(std::string_view text) const {
    if (text == "e") return identity();
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t dot = std::min(text.find('.', pos), text.size());
      const std::string_view item = text.substr(pos, dot - pos);
      if (item.size() < 2 || item[0] != 's') throw InvalidArgument("bad letter '" + std::string(item) + "'");
      int k = 0;
      for (char c : item.substr(1)) {
        if (c < '0' || c > '9') throw InvalidArgument("bad letter '" + std::string(item) + "'");
        k = k * 10 + (c - '0');
        if (k > rank()) break;
      }
      if (k < 1 || k > rank()) throw InvalidArgument("letter '" + std::string(item) + "' out of range");
      word.push_back(k - 1);
      pos = dot + 1;
    }
    return from_word(word);
  }

  /// Element acting on roots by the given permutation, if any.
  std::optional<Element> find(std::span<const std::uint16_t> root_perm) const {
    if (static_cast<int>(root_perm.size()) != nroots_) return std::nullopt;
    auto it = by_perm_.find(key(root_perm.data()));
    if (it == by_perm_.end()) return std::nullopt;
    return Element(this, it->second);
  }

  /// Simple reflections occurring in a reduced word of w.
  IndexSet support(Element w) const { return support_[own(w)]; }
  /// {i : l(s_i w) < l(w)}
  IndexSet left_descents(Element w) const { return left_desc_[own(w)]; }
  /// {i : l(w s_i) < l(w)}
  IndexSet right_descents(Element w) const { return right_desc_[own(w)]; }

  /// Bruhat order via the lifting property: take a left descent s of y; if s
  /// is a left descent of x then x <= y iff sx <= sy, otherwise x <= y iff
  /// x <= sy. Every pair on the chain shares the answer, so all are memoized.
  bool bruhat_leq(Element x, Element y) const {
    std::uint32_t a = own(x), b = own(y);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> path;
    bool result = false;
    for (;;) {
      if (auto cached = memo_get(a, b)) {
        result = *cached;
        break;
      }
      if (a == 0) {
        result = true;
        break;
      }
      if (length_[a] >= length_[b]) {
        result = a == b;
        break;
      }
      path.emplace_back(a, b);
      const int s = std::countr_zero(left_desc_[b].mask());
      if (left_desc_[a].contains(s)) a = left_[idx(a, s)];
      b = left_[idx(b, s)];
    }
    for (auto [p, q] : path) memo_put(p, q, result);
    memo_put(own(x), own(y), result);
    return result;
  }

  /// W_J, in ID order.
  std::vector<Element> parabolic_elements(IndexSet J) const {
    check_subset(J);
    std::vector<std::uint32_t> found{0};
    std::unordered_set<std::uint32_t> seen{0};
    for (std::size_t k = 0; k < found.size(); ++k)
      for (int j : J.indices()) {
        const std::uint32_t next = right_[idx(found[k], j)];
        if (seen.insert(next).second) found.push_back(next);
      }
    std::sort(found.begin(), found.end());
    std::vector<Element> out;
    for (auto id : found) out.emplace_back(this, id);
    return out;
  }

  /// w in W^J, i.e. w(alpha_j) > 0 for all j in J.
  bool is_minimal_coset_rep(Element w, IndexSet J) const { return !right_desc_[own(w)].intersects(J); }

  /// W^J, in ID order.
  std::vector<Element> minimal_coset_reps(IndexSet J) const {
    check_subset(J);
    std::vector<Element> out;
    for (std::uint32_t k = 0; k < size(); ++k)
      if (!right_desc_[k].intersects(J)) out.emplace_back(this, k);
    return out;
  }

  /// The minimal-length element of the coset w W_J.
  Element minimal_coset_rep(Element w, IndexSet J) const {
    std::uint32_t x = own(w);
    for (IndexSet d = right_desc_[x] & J; !d.empty(); d = right_desc_[x] & J)
      x = right_[idx(x, std::countr_zero(d.mask()))];
    return {this, x};
  }

  /// sigma(w): sigma applied letterwise to a reduced word of w.
  Element twist(const DiagramAutomorphism& sigma, Element w) const {
    if (sigma.rank() != rank()) throw InvalidArgument("automorphism rank does not match the group");
    std::uint32_t x = 0;
    for (int i : reduced_word(w)) x = right_[idx(x, sigma(i))];
    return {this, x};
  }

 private:
  std::size_t idx(std::uint32_t id, int i) const { return static_cast<std::size_t>(id) * rank() + i; }

  std::uint32_t own(Element w) const {
    if (w.group_ptr() != this) throw InvalidArgument("element belongs to a different group table");
    return w.id();
  }

  void check_subset(IndexSet J) const {
    if (!J.subset_of(rs_.index_set())) throw InvalidArgument("index set is not a subset of I");
  }

  std::string_view key(const std::uint16_t* p) const {
    return {reinterpret_cast<const char*>(p), static_cast<std::size_t>(nroots_) * sizeof(std::uint16_t)};
  }

  void generate() {
    nroots_ = rs_.root_count();
    const int n = rank();
    const int P = rs_.positive_count();

    // Temporary numbering in BFS order; keys view into `raw`, so reserve up front.
    const std::size_t expected = static_cast<std::size_t>(weyl_group_order(rs_.type()));
    std::vector<std::uint16_t> raw;
    raw.reserve(expected * nroots_);
    std::unordered_map<std::string_view, std::uint32_t> index;
    index.reserve(expected);
    auto at = [&](std::uint32_t id) { return raw.data() + static_cast<std::size_t>(id) * nroots_; };

    for (int b = 0; b < nroots_; ++b) raw.push_back(static_cast<std::uint16_t>(b));
    index.emplace(key(at(0)), 0);

    std::vector<std::uint16_t> cand(nroots_);
    auto intern = [&](bool may_insert) -> std::uint32_t {
      auto it = index.find(key(cand.data()));
      if (it != index.end()) return it->second;
      if (!may_insert || raw.size() + nroots_ > raw.capacity())
        throw ConsistencyError("Weyl group generation produced an unexpected element");
      const auto id = static_cast<std::uint32_t>(raw.size() / nroots_);
      raw.insert(raw.end(), cand.begin(), cand.end());
      index.emplace(key(at(id)), id);
      return id;
    };

    std::vector<std::uint32_t> right;
    for (std::uint32_t w = 0; w < raw.size() / nroots_; ++w) {
      for (int i = 0; i < n; ++i) {
        const std::uint16_t* p = at(w);
        for (int b = 0; b < nroots_; ++b) cand[b] = p[rs_.reflect(i, b)];
        right.push_back(intern(true));
      }
    }
    const std::size_t count = raw.size() / nroots_;
    if (count != expected)
      throw ConsistencyError("generated " + std::to_string(count) + " elements, expected " +
                             std::to_string(expected));

    std::vector<int> len(count);
    std::vector<std::uint32_t> left(count * n), inv(count);
    for (std::uint32_t w = 0; w < count; ++w) {
      const std::uint16_t* p = at(w);
      len[w] = static_cast<int>(std::count_if(p, p + P, [P](std::uint16_t v) { return v >= P; }));
      for (int i = 0; i < n; ++i) {
        for (int b = 0; b < nroots_; ++b) cand[b] = static_cast<std::uint16_t>(rs_.reflect(i, p[b]));
        left[static_cast<std::size_t>(w) * n + i] = intern(false);
      }
      for (int b = 0; b < nroots_; ++b) cand[p[b]] = static_cast<std::uint16_t>(b);
      inv[w] = intern(false);
    }

    // First letter of the canonical word is the smallest left descent:
    // w^{-1}(alpha_i) < 0.
    std::vector<int> first(count, -1);
    std::vector<std::uint32_t> rest(count, 0);
    for (std::uint32_t w = 1; w < count; ++w) {
      const std::uint16_t* q = at(inv[w]);
      for (int i = 0; i < n; ++i)
        if (q[i] >= P) {
          first[w] = i;
          rest[w] = left[static_cast<std::size_t>(w) * n + i];
          break;
        }
    }

    // BFS order is already graded by length; sort each grade by canonical word.
    std::vector<std::uint32_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (len[a] != len[b]) return len[a] < len[b];
      while (a != b && a != 0 && b != 0) {
        if (first[a] != first[b]) return first[a] < first[b];
        a = rest[a];
        b = rest[b];
      }
      return false;
    });
    std::vector<std::uint32_t> rename(count);
    for (std::uint32_t k = 0; k < count; ++k) rename[order[k]] = k;

    perms_.resize(count * nroots_);
    length_.resize(count);
    right_.resize(count * n);
    left_.resize(count * n);
    inverse_.resize(count);
    first_.resize(count);
    rest_.resize(count);
    support_.resize(count);
    left_desc_.resize(count);
    right_desc_.resize(count);
    for (std::uint32_t k = 0; k < count; ++k) {
      const std::uint32_t old = order[k];
      std::copy(at(old), at(old) + nroots_, perms_.data() + static_cast<std::size_t>(k) * nroots_);
      length_[k] = len[old];
      for (int i = 0; i < n; ++i) {
        right_[idx(k, i)] = rename[right[static_cast<std::size_t>(old) * n + i]];
        left_[idx(k, i)] = rename[left[static_cast<std::size_t>(old) * n + i]];
      }
      inverse_[k] = rename[inv[old]];
      first_[k] = first[old];
      rest_[k] = rename[rest[old]];
    }
    for (std::uint32_t k = 0; k < count; ++k) {
      const std::uint16_t* p = perms_.data() + static_cast<std::size_t>(k) * nroots_;
      const std::uint16_t* q = perms_.data() + static_cast<std::size_t>(inverse_[k]) * nroots_;
      for (int i = 0; i < n; ++i) {
        if (p[i] >= P) right_desc_[k] = right_desc_[k].with(i);
        if (q[i] >= P) left_desc_[k] = left_desc_[k].with(i);
      }
      // rest_[k] has a smaller ID than k.
      if (k != 0) support_[k] = support_[rest_[k]].with(first_[k]);
    }
    by_perm_.reserve(count);
    for (std::uint32_t k = 0; k < count; ++k)
      by_perm_.emplace(key(perms_.data() + static_cast<std::size_t>(k) * nroots_), k);

    if (count <= kDenseMemoLimit) dense_memo_ = std::vector<std::atomic<std::uint8_t>>(count * count);
  }

  std::optional<bool> memo_get(std::uint32_t a, std::uint32_t b) const {
    if (!dense_memo_.empty()) {
      const std::uint8_t v = dense_memo_[static_cast<std::size_t>(a) * size() + b].load(std::memory_order_relaxed);
      if (v == 0) return std::nullopt;
      return v == 2;
    }
    std::lock_guard lock(sparse_mutex_);
    auto it = sparse_memo_.find((static_cast<std::uint64_t>(a) << 32) | b);
    if (it == sparse_memo_.end()) return std::nullopt;
    return it->second;
  }

  void memo_put(std::uint32_t a, std::uint32_t b, bool v) const {
    if (!dense_memo_.empty()) {
      dense_memo_[static_cast<std::size_t>(a) * size() + b].store(v ? 2 : 1, std::memory_order_relaxed);
      return;
    }
    std::lock_guard lock(sparse_mutex_);
    sparse_memo_[(static_cast<std::uint64_t>(a) << 32) | b] = v;
  }

  RootSystem rs_;
  int nroots_ = 0;
  std::vector<std::uint16_t> perms_;
  std::vector<int> length_;
  std::vector<std::uint32_t> right_, left_, inverse_, rest_;
  std::vector<int> first_;
  std::vector<IndexSet> support_, left_desc_, right_desc_;
  std::unordered_map<std::string_view, std::uint32_t> by_perm_;

  mutable std::vector<std::atomic<std::uint8_t>> dense_memo_;
  mutable std::mutex sparse_mutex_;
  mutable std::unordered_map<std::uint64_t, bool> sparse_memo_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

inline WeylGroupPtr generate_group(RootSystem rs, std::uint64_t group_guard = kDefaultGroupGuard) {
  const std::uint64_t order = weyl_group_order(rs.type());
  if (order > group_guard)
    throw GuardExceeded("Weyl group of " + rs.type_label() + " has order " + std::to_string(order) +
                        ", above the guard " + std::to_string(group_guard));
  return std::make_shared<const WeylGroup>(std::move(rs));
}

inline int Element::length() const { return group_->length(*this); }
inline std::span<const std::uint16_t> Element::perm() const { return group_->perm(*this); }
inline std::vector<int> Element::reduced_word() const { return group_->reduced_word(*this); }
inline std::string Element::to_string() const { return group_->to_string(*this); }

inline Element multiply(Element a, Element b) {
  if (a.group_ptr() != b.group_ptr()) throw InvalidArgument("elements belong to different group tables");
  return a.group().multiply(a, b);
}
inline Element operator*(Element a, Element b) { return multiply(a, b); }
inline Element inverse(Element a) { return a.group().inverse(a); }
inline IndexSet support(Element w) { return w.group().support(w); }
inline bool bruhat_leq(Element x, Element y) {
  if (x.group_ptr() != y.group_ptr()) throw InvalidArgument("elements belong to different group tables");
  return x.group().bruhat_leq(x, y);
}
inline Element twist(const DiagramAutomorphism& sigma, Element w) { return w.group().twist(sigma, w); }

}  // namespace gsp

#endif  // GSP_WEYL_HPP
