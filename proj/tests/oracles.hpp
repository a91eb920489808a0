// Brute-force reference implementations used only by the tests. They work
// with integer reflection matrices on simple-root coordinates and never touch
// the library's root-permutation tables.
#ifndef GSP_TESTS_ORACLES_HPP
#define GSP_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gsp/rootsys.hpp"
#include "gsp/weyl.hpp"

namespace gsp::oracle {

using Matrix = std::vector<std::vector<int>>;
using Vec = std::vector<int>;

inline Matrix identity(int n) {
  Matrix m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Vec act(const Matrix& m, const Vec& v) {
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/// Matrix of s_i on simple-root coordinates, from a[i][j] = <alpha_j, alpha_i^vee>.
inline Matrix reflection(const Matrix& cartan, int i) {
  const int n = static_cast<int>(cartan.size());
  Matrix m = identity(n);
  for (int j = 0; j < n; ++j) m[i][j] -= cartan[i][j];
  return m;
}

/// Coxeter-group model by matrices: elements, lengths, and all reduced words.
struct MatrixGroup {
  int rank = 0;
  std::vector<Matrix> gens;
  std::vector<Vec> positive_roots;
  std::map<Matrix, int> length;
  std::map<Matrix, std::vector<std::vector<int>>> reduced_words;

  explicit MatrixGroup(const Matrix& cartan, bool collect_words = true) : rank(static_cast<int>(cartan.size())) {
    for (int i = 0; i < rank; ++i) gens.push_back(reflection(cartan, i));
    // Orbit of the simple roots under the reflections.
    std::set<Vec> roots;
    std::vector<Vec> frontier;
    for (int i = 0; i < rank; ++i) {
      Vec e(rank, 0);
      e[i] = 1;
      frontier.push_back(e);
      roots.insert(e);
    }
    while (!frontier.empty()) {
      Vec v = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens) {
        Vec u = act(g, v);
        if (roots.insert(u).second) frontier.push_back(u);
      }
    }
    for (const auto& r : roots)
      if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive_roots.push_back(r);

    // Grade by length: words extended by a letter that raises the length.
    std::map<Matrix, std::vector<std::vector<int>>> level{{identity(rank), {{}}}};
    length[identity(rank)] = 0;
    if (collect_words) reduced_words[identity(rank)] = {{}};
    for (int l = 0; !level.empty(); ++l) {
      std::map<Matrix, std::vector<std::vector<int>>> next;
      for (const auto& [m, words] : level)
        for (int i = 0; i < rank; ++i) {
          Matrix p = mul(m, gens[i]);
          if (length.count(p) && length[p] <= l) continue;
          length[p] = l + 1;
          auto& dst = next[p];
          for (const auto& w : words) {
            auto ext = w;
            ext.push_back(i);
            dst.push_back(std::move(ext));
            if (!collect_words) break;
          }
        }
      for (auto& [m, words] : next) {
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        if (collect_words) reduced_words[m] = words;
      }
      level = std::move(next);
    }
  }

  std::size_t size() const { return length.size(); }

  Matrix of_word(const std::vector<int>& word) const {
    Matrix m = identity(rank);
    for (int i : word) m = mul(m, gens[i]);
    return m;
  }

  Matrix of(Element w) const { return of_word(w.reduced_word()); }

  /// Number of positive roots sent to negative roots.
  int inversions(const Matrix& m) const {
    int count = 0;
    for (const auto& r : positive_roots) {
      const Vec img = act(m, r);
      if (std::any_of(img.begin(), img.end(), [](int c) { return c < 0; })) ++count;
    }
    return count;
  }

  /// x <= y iff some reduced word of x is a subword of some reduced word of y.
  bool subword_leq(const Matrix& x, const Matrix& y) const {
    const int lx = length.at(x);
    for (const auto& word : reduced_words.at(y)) {
      const int l = static_cast<int>(word.size());
      for (unsigned mask = 0; mask < (1u << l); ++mask) {
        if (std::popcount(mask) != lx) continue;
        std::vector<int> sub;
        for (int k = 0; k < l; ++k)
          if (mask >> k & 1u) sub.push_back(word[k]);
        const Matrix m = of_word(sub);
        if (m == x && length.at(m) == lx) return true;
      }
    }
    return false;
  }
};

/// Every K within J with w(sigma(K)) = K, checked directly on root vectors.
inline std::vector<IndexSet> twist_stable_subsets(const MatrixGroup& G, const Matrix& w, IndexSet J,
                                                  const std::vector<int>& sigma) {
  std::vector<IndexSet> out;
  for (std::uint32_t k = 0; k <= J.mask(); ++k) {
    if ((k & ~J.mask()) != 0) continue;
    const IndexSet K(k);
    std::set<Vec> lhs, rhs;
    for (int i : K.indices()) {
      Vec e(G.rank, 0);
      e[sigma[i]] = 1;
      lhs.insert(act(w, e));
      Vec f(G.rank, 0);
      f[i] = 1;
      rhs.insert(f);
    }
    if (lhs == rhs) out.push_back(K);
  }
  return out;
}

}  // namespace gsp::oracle

#endif  // GSP_TESTS_ORACLES_HPP
