#ifndef GSP_PIECES_HPP
#define GSP_PIECES_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gsp/core.hpp"
#include "gsp/rootsys.hpp"
#include "gsp/weyl.hpp"

namespace gsp {

/// "J={1,3};w=s2.s1"
inline std::string piece_id(IndexSet J, Element w) { return "J=" + J.to_string() + ";w=" + w.to_string(); }

/// I(J, sigma; w): the largest K within J with w(sigma(K)) = K as sets of
/// simple roots. Computed as the decreasing fixpoint K_0 = J,
/// K_{n+1} = {k in K_n : w(alpha_{sigma(k)}) is alpha_m for some m in K_n}.
inline IndexSet core(IndexSet J, const DiagramAutomorphism& sigma, Element w) {
  const WeylGroup& W = w.group();
  if (!W.is_minimal_coset_rep(w, sigma(J)))
    throw InvalidArgument(w.to_string() + " is not a minimal coset representative for sigma(" + J.to_string() + ")");
  const RootSystem& rs = W.root_system();
  IndexSet K = J;
  for (;;) {
    IndexSet next;
    for (int k : K.indices()) {
      const int image = W.apply(w, rs.simple(sigma(k)));
      if (rs.is_simple(image) && K.contains(image)) next = next.with(k);
    }
    if (next == K) return K;
    K = next;
  }
}

/// w' <=_{J,sigma} w: some u in W_J has u w sigma(u)^{-1} <= w' in Bruhat order.
inline bool closure_leq(IndexSet J, const DiagramAutomorphism& sigma, Element w, Element w_prime) {
  const WeylGroup& W = w.group();
  if (!W.is_minimal_coset_rep(w, sigma(J)))
    throw InvalidArgument(w.to_string() + " is not a minimal coset representative for sigma(" + J.to_string() + ")");
  for (Element u : W.parabolic_elements(J)) {
    const Element conj = W.multiply(W.multiply(u, w), W.inverse(W.twist(sigma, u)));
    if (bruhat_leq(conj, w_prime)) return true;
  }
  return false;
}

/// The G-stable piece Z_{J, sigma; w}.
struct TwistedPiece {
  IndexSet J;
  Element w;
  IndexSet core;
  std::string id;
};

/// All pieces of one (group, sigma) context, in canonical order: J by bitmask
/// ascending, then w by element ID. Piece indices are positions in this order.
class PieceSet {
 public:
  PieceSet(WeylGroupPtr group, DiagramAutomorphism sigma) : group_(std::move(group)), sigma_(std::move(sigma)) {
    if (sigma_.rank() != group_->rank()) throw InvalidArgument("automorphism rank does not match the group");
    const IndexSet I = group_->root_system().index_set();
    for (std::uint32_t m = 0; m <= I.mask(); ++m) {
      const IndexSet J(m);
      for (Element w : group_->minimal_coset_reps(sigma_(J))) {
        by_id_.emplace(piece_id(J, w), pieces_.size());
        pieces_.push_back({J, w, gsp::core(J, sigma_, w), piece_id(J, w)});
      }
    }
  }

  const WeylGroup& group() const { return *group_; }
  const WeylGroupPtr& group_ptr() const { return group_; }
  const DiagramAutomorphism& sigma() const { return sigma_; }
  const std::vector<TwistedPiece>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  const TwistedPiece& operator[](std::size_t k) const { return pieces_[k]; }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
  }

  /// Parses a piece ID, accepting any word for w (reduced to canonical form).
  std::size_t parse(std::string_view text) const {
    const std::string bad = "bad piece ID '" + std::string(text) + "'";
    if (text.substr(0, 3) != "J={") throw InvalidArgument(bad);
    const std::size_t close = text.find('}');
    if (close == std::string_view::npos || text.substr(close, 4) != "};w=") throw InvalidArgument(bad);
    const std::string_view inner = text.substr(3, close - 3);
    IndexSet J;
    if (!inner.empty()) {
      std::size_t pos = 0;
      while (pos <= inner.size()) {
        const std::size_t comma = std::min(inner.find(',', pos), inner.size());
        const std::string_view item = inner.substr(pos, comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v < 1 || v > group_->rank())
          throw InvalidArgument(bad);
        J = J.with(v - 1);
        pos = comma + 1;
      }
    }
    const Element w = group_->parse(text.substr(close + 4));
    if (auto k = find(piece_id(J, w))) return *k;
    throw InvalidArgument(w.to_string() + " is not a minimal coset representative for sigma(" + J.to_string() +
                          "), so " + std::string(text) + " names no piece");
  }

  /// Throws when `other` was enumerated for a different group or automorphism.
  void check_same_context(const PieceSet& other) const {
    if (group_ != other.group_ || !(sigma_ == other.sigma_))
      throw InvalidArgument("pieces from different (root system, automorphism) contexts");
  }

 private:
  WeylGroupPtr group_;
  DiagramAutomorphism sigma_;
  std::vector<TwistedPiece> pieces_;
  std::map<std::string, std::size_t> by_id_;
};

inline PieceSet enumerate_pieces(WeylGroupPtr group, const DiagramAutomorphism& sigma) {
  return PieceSet(std::move(group), sigma);
}

/// Indices of the pieces in the closure of piece p, in canonical order.
inline std::vector<std::size_t> closure(const PieceSet& all, std::size_t p) {
  const TwistedPiece& top = all[p];
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < all.size(); ++q)
    if (all[q].J.subset_of(top.J) && closure_leq(top.J, all.sigma(), top.w, all[q].w)) out.push_back(q);
  return out;
}

/// The full containment relation: row p holds closure(p) as a bitset over
/// piece indices. Equivalent to calling closure() for every piece, but each
/// Bruhat up-set is computed once.
class ClosureRelation {
 public:
  explicit ClosureRelation(const PieceSet& all) : rows_(all.size(), boost::dynamic_bitset<>(all.size())) {
    const WeylGroup& W = all.group();
    std::vector<std::optional<boost::dynamic_bitset<>>> up(W.size());
    auto upset = [&](Element x) -> const boost::dynamic_bitset<>& {
      auto& slot = up[x.id()];
      if (!slot) {
        slot.emplace(W.size());
        for (std::uint32_t y = 0; y < W.size(); ++y)
          if (W.bruhat_leq(x, W.element(y))) slot->set(y);
      }
      return *slot;
    };
    std::map<std::uint32_t, std::vector<Element>> parabolic;
    for (std::size_t p = 0; p < all.size(); ++p) {
      const TwistedPiece& top = all[p];
      auto [it, fresh] = parabolic.try_emplace(top.J.mask());
      if (fresh) it->second = W.parabolic_elements(top.J);
      boost::dynamic_bitset<> reach(W.size());
      for (Element u : it->second) {
        const Element conj = W.multiply(W.multiply(u, top.w), W.inverse(W.twist(all.sigma(), u)));
        reach |= upset(conj);
      }
      for (std::size_t q = 0; q < all.size(); ++q)
        if (all[q].J.subset_of(top.J) && reach.test(all[q].w.id())) rows_[p].set(q);
    }
  }

  std::size_t size() const { return rows_.size(); }
  /// q lies in the closure of p.
  bool contains(std::size_t p, std::size_t q) const { return rows_[p].test(q); }
  const boost::dynamic_bitset<>& row(std::size_t p) const { return rows_[p]; }

 private:
  std::vector<boost::dynamic_bitset<>> rows_;
};

/// Hasse diagram of "q <= p iff q in closure(p)". Covers are (lower, upper)
/// pairs of piece indices, sorted.
struct ClosurePoset {
  std::vector<std::size_t> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Transitive reduction of the containment relation restricted to `members`.
/// Throws ConsistencyError if the relation is not antisymmetric or the cover
/// graph has a cycle.
inline ClosurePoset closure_poset(const PieceSet& all, const ClosureRelation& rel, std::span<const std::size_t> members) {
  ClosurePoset poset;
  poset.nodes.assign(members.begin(), members.end());
  std::sort(poset.nodes.begin(), poset.nodes.end());
  poset.nodes.erase(std::unique(poset.nodes.begin(), poset.nodes.end()), poset.nodes.end());
  const std::size_t n = poset.nodes.size();

  std::vector<boost::dynamic_bitset<>> strict(n, boost::dynamic_bitset<>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !rel.contains(poset.nodes[a], poset.nodes[b])) continue;
      if (rel.contains(poset.nodes[b], poset.nodes[a]))
        throw ConsistencyError("closure relation is not antisymmetric: " + all[poset.nodes[a]].id + " and " +
                               all[poset.nodes[b]].id);
      strict[a].set(b);
    }

  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> lower(n);
  for (std::size_t a = 0; a < n; ++a) {
    boost::dynamic_bitset<> below(n);
    for (auto r = strict[a].find_first(); r != boost::dynamic_bitset<>::npos; r = strict[a].find_next(r))
      below |= strict[r];
    const boost::dynamic_bitset<> covers = strict[a] - below;
    for (auto b = covers.find_first(); b != boost::dynamic_bitset<>::npos; b = covers.find_next(b)) {
      poset.covers.emplace_back(poset.nodes[b], poset.nodes[a]);
      lower[a].push_back(b);
      ++indegree[b];
    }
  }

  // Kahn's algorithm from the maximal elements.
  std::vector<std::size_t> ready;
  for (std::size_t a = 0; a < n; ++a)
    if (indegree[a] == 0) ready.push_back(a);
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t a = ready.back();
    ready.pop_back();
    ++visited;
    for (std::size_t b : lower[a])
      if (--indegree[b] == 0) ready.push_back(b);
  }
  if (visited != n) throw ConsistencyError("closure poset has a cycle");

  std::sort(poset.covers.begin(), poset.covers.end());
  return poset;
}

inline ClosurePoset closure_poset(const PieceSet& all, const ClosureRelation& rel) {
  std::vector<std::size_t> every(all.size());
  std::iota(every.begin(), every.end(), 0);
  return closure_poset(all, rel, every);
}

inline ClosurePoset closure_poset(const PieceSet& all) { return closure_poset(all, ClosureRelation(all)); }

struct OpennessReport {
  std::size_t pieces_checked = 0;
  /// IDs of pieces with e <=_{J,sigma} w but w != e.
  std::vector<std::string> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

/// Checks that e <=_{J,sigma} w forces w = e over every piece.
inline OpennessReport verify_openness(const PieceSet& all) {
  OpennessReport report;
  const Element e = all.group().identity();
  for (const TwistedPiece& p : all.pieces()) {
    ++report.pieces_checked;
    if (closure_leq(p.J, all.sigma(), p.w, e) && !p.w.is_identity()) report.counterexamples.push_back(p.id);
  }
  return report;
}

}  // namespace gsp

#endif  // GSP_PIECES_HPP
