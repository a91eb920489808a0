#ifndef GSP_GIT_LOCUS_HPP
#define GSP_GIT_LOCUS_HPP

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gsp/core.hpp"
#include "gsp/pieces.hpp"
#include "gsp/rootsys.hpp"

namespace gsp {

using PieceIndices = std::vector<std::size_t>;

/// Pieces with supp(w) meeting the given support set. This is the nilpotent
/// cone formula with the weight reduced to its support I(lambda).
inline PieceIndices pieces_meeting_support(const PieceSet& all, IndexSet support) {
  PieceIndices out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all.group().support(all[k].w).intersects(support)) out.push_back(k);
  return out;
}

/// N(lambda)_sigma as a set of pieces. lambda must be dominant and sigma-stable.
inline PieceIndices nilcone_pieces(const PieceSet& all, const Weight& lambda) {
  const auto pred = weight_predicates(all.group().root_system(), all.sigma(), lambda);
  if (!pred.dominant) throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  if (!pred.sigma_stable)
    throw InvalidArgument("weight " + lambda.to_string() + " is not stable under " + all.sigma().to_string());
  return pieces_meeting_support(all, pred.support);
}

/// The pieces with w = e, one per subset J.
inline PieceIndices semistable_pieces(const PieceSet& all) {
  PieceIndices out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k].w.is_identity()) out.push_back(k);
  return out;
}

/// The intersection of all nilpotent cones: pieces with supp(w) = I.
inline PieceIndices common_nilcone(const PieceSet& all) {
  const IndexSet I = all.group().root_system().index_set();
  PieceIndices out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all.group().support(all[k].w) == I) out.push_back(k);
  return out;
}

/// sum_{i in O} omega_i for each sigma-orbit O on I.
inline std::vector<Weight> orbit_fundamental_weights(const DiagramAutomorphism& sigma) {
  std::vector<Weight> out;
  for (IndexSet orbit : sigma.orbits()) {
    Weight w{std::vector<int>(sigma.rank(), 0)};
    for (int i : orbit.indices()) w.coeffs[i] = 1;
    out.push_back(std::move(w));
  }
  return out;
}

/// omega_i for each i; the sigma-stable ones among these are exactly the
/// orbit weights of fixed points.
inline std::vector<Weight> fundamental_weights(int rank) {
  std::vector<Weight> out;
  for (int i = 0; i < rank; ++i) {
    Weight w{std::vector<int>(rank, 0)};
    w.coeffs[i] = 1;
    out.push_back(std::move(w));
  }
  return out;
}

/// Every sigma-stable weight whose value on each sigma-orbit is drawn from
/// `values`, in lexicographic order of the per-orbit choices.
inline std::vector<Weight> sigma_stable_weights(const DiagramAutomorphism& sigma, const std::vector<int>& values) {
  const auto orbits = sigma.orbits();
  std::vector<Weight> out;
  std::vector<std::size_t> choice(orbits.size(), 0);
  for (;;) {
    Weight w{std::vector<int>(sigma.rank(), 0)};
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (int i : orbits[o].indices()) w.coeffs[i] = values[choice[o]];
    out.push_back(std::move(w));
    std::size_t o = orbits.size();
    while (o > 0 && ++choice[o - 1] == values.size()) choice[--o] = 0;
    if (o == 0) break;
  }
  return out;
}

/// Regular sigma-stable samples with entries in {1, 2}.
inline std::vector<Weight> regular_sample_weights(const DiagramAutomorphism& sigma) {
  return sigma_stable_weights(sigma, {1, 2});
}

namespace detail {

inline std::vector<std::string> ids_of(const PieceSet& all, const PieceIndices& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (std::size_t k : idx) out.push_back(all[k].id);
  std::sort(out.begin(), out.end());
  return out;
}

inline PieceIndices complement(const PieceSet& all, const PieceIndices& idx) {
  std::vector<bool> in(all.size(), false);
  for (std::size_t k : idx) in[k] = true;
  PieceIndices out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (!in[k]) out.push_back(k);
  return out;
}

inline PieceIndices intersect(const PieceIndices& a, const PieceIndices& b) {
  PieceIndices out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline PieceIndices unite(const PieceIndices& a, const PieceIndices& b) {
  PieceIndices out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

/// Checks, for each sample weight, that the semistable pieces are exactly the
/// complement of N(lambda)_sigma, and that this complement does not depend on
/// lambda. Every sample must be dominant, regular and sigma-stable.
inline std::vector<CheckResult> verify_theorem2(const PieceSet& all, const std::vector<Weight>& samples) {
  const RootSystem& rs = all.group().root_system();
  for (const Weight& lambda : samples) {
    const auto pred = weight_predicates(rs, all.sigma(), lambda);
    if (!pred.dominant || !pred.regular || !pred.sigma_stable)
      throw InvalidArgument("sample weight " + lambda.to_string() + " is not dominant, regular and sigma-stable");
  }
  const PieceIndices ss = semistable_pieces(all);
  CheckResult partition{"git.semistable_partition", true, "", {}};
  CheckResult independence{"git.weight_independence", true, "", {}};
  std::optional<PieceIndices> first;
  for (const Weight& lambda : samples) {
    const PieceIndices rest = detail::complement(all, nilcone_pieces(all, lambda));
    if (partition.pass && rest != ss) {
      partition.pass = false;
      partition.counterexample = {{"weight", lambda.to_string()}};
    }
    if (!first) first = rest;
    if (independence.pass && rest != *first) {
      independence.pass = false;
      independence.counterexample = {{"weight", lambda.to_string()}, {"reference", samples.front().to_string()}};
    }
  }
  partition.detail = std::to_string(samples.size()) + " weights, " + std::to_string(ss.size()) + " semistable pieces";
  independence.detail = std::to_string(samples.size()) + " weights";
  return {partition, independence};
}

/// Semistable locus, nilpotent cones, and the git checks for one context.
struct LocusReport {
  std::string type;
  std::string automorphism;
  std::vector<std::string> semistable_ids;
  std::map<std::string, std::vector<std::string>> nilcone_ids;
  std::vector<std::string> common_nilcone_ids;
  std::vector<CheckResult> checks;
};

/// All git checks for one context.
///
/// The intersection identity is checked over the fundamental weights omega_i
/// with the support formula (the intersection runs over all dominant weights).
/// Over sigma-stable weights alone the intersection is the set of pieces whose
/// support meets every sigma-orbit, which contains the common nilcone and
/// agrees with it for sigma = id; that containment is checked separately.
inline std::vector<CheckResult> locus_checks(const PieceSet& all, const ClosureRelation& rel) {
  std::vector<CheckResult> checks = verify_theorem2(all, regular_sample_weights(all.sigma()));
  const PieceIndices ss = semistable_pieces(all);
  const PieceIndices all_idx = [&] {
    PieceIndices v(all.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }();

  {
    CheckResult c{"git.semistable_count", true, "", {}};
    const std::size_t expected = std::size_t{1} << all.group().rank();
    c.pass = ss.size() == expected;
    c.detail = std::to_string(ss.size()) + " of expected " + std::to_string(expected);
    checks.push_back(c);
  }
  {
    CheckResult c{"git.nilcone_union", true, "", {}};
    PieceIndices uni;
    for (const Weight& lambda : orbit_fundamental_weights(all.sigma()))
      uni = detail::unite(uni, nilcone_pieces(all, lambda));
    c.pass = uni == detail::complement(all, ss);
    c.detail = std::to_string(uni.size()) + " pieces in the union";
    checks.push_back(c);
  }
  {
    CheckResult c{"git.common_nilcone_intersection", true, "", {}};
    PieceIndices inter = all_idx;
    for (const Weight& lambda : fundamental_weights(all.group().rank()))
      inter = detail::intersect(inter, pieces_meeting_support(all, weight_predicates(all.group().root_system(),
                                                                                      all.sigma(), lambda).support));
    const PieceIndices common = common_nilcone(all);
    PieceIndices stable_inter = all_idx;
    for (const Weight& lambda : orbit_fundamental_weights(all.sigma()))
      stable_inter = detail::intersect(stable_inter, nilcone_pieces(all, lambda));
    const bool contained = std::includes(stable_inter.begin(), stable_inter.end(), common.begin(), common.end());
    const bool untwisted_equal = !all.sigma().is_identity() || stable_inter == common;
    c.pass = inter == common && contained && untwisted_equal;
    c.detail = std::to_string(common.size()) + " pieces with full support; " + std::to_string(stable_inter.size()) +
               " in the sigma-stable intersection";
    checks.push_back(c);
  }
  {
    CheckResult c{"git.nilcone_monotone", true, "", {}};
    const auto samples = sigma_stable_weights(all.sigma(), {0, 1});
    const RootSystem& rs = all.group().root_system();
    std::size_t pairs = 0;
    for (const Weight& a : samples)
      for (const Weight& b : samples) {
        const IndexSet sa = weight_predicates(rs, all.sigma(), a).support;
        const IndexSet sb = weight_predicates(rs, all.sigma(), b).support;
        if (!sa.subset_of(sb)) continue;
        ++pairs;
        const PieceIndices na = nilcone_pieces(all, a), nb = nilcone_pieces(all, b);
        if (c.pass && !std::includes(nb.begin(), nb.end(), na.begin(), na.end())) {
          c.pass = false;
          c.counterexample = {{"smaller", a.to_string()}, {"larger", b.to_string()}};
        }
      }
    c.detail = std::to_string(pairs) + " comparable pairs";
    checks.push_back(c);
  }
  {
    // No piece with w != e has a w = e piece in its closure.
    CheckResult c{"git.semistable_open", true, "", {}};
    for (std::size_t p = 0; p < all.size() && c.pass; ++p) {
      if (all[p].w.is_identity()) continue;
      for (std::size_t q : ss)
        if (rel.contains(p, q)) {
          c.pass = false;
          c.counterexample = {{"piece", all[p].id}, {"semistable_in_closure", all[q].id}};
          break;
        }
    }
    checks.push_back(c);
  }
  return checks;
}

/// Builds the report. `weights` fills the nilcone map; when empty, the
/// sigma-orbit fundamental weights are used.
inline LocusReport locus_report(const PieceSet& all, const ClosureRelation& rel, std::vector<Weight> weights = {}) {
  LocusReport r;
  r.type = all.group().root_system().type_label();
  r.automorphism = all.sigma().to_string();
  r.semistable_ids = detail::ids_of(all, semistable_pieces(all));
  r.common_nilcone_ids = detail::ids_of(all, common_nilcone(all));
  if (weights.empty()) weights = orbit_fundamental_weights(all.sigma());
  for (const Weight& lambda : weights) r.nilcone_ids[lambda.to_string()] = detail::ids_of(all, nilcone_pieces(all, lambda));
  r.checks = locus_checks(all, rel);
  return r;
}

}  // namespace gsp

#endif  // GSP_GIT_LOCUS_HPP
