#ifndef GSP_VERIFY_HPP
#define GSP_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gsp/core.hpp"
#include "gsp/git_locus.hpp"
#include "gsp/pgl2_oracle.hpp"
#include "gsp/pieces.hpp"
#include "gsp/quotient_strata.hpp"
#include "gsp/weyl.hpp"

namespace gsp::verify {

enum class Suite { all, bruhat, pieces, git, quotient, pgl2 };

inline Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "bruhat") return Suite::bruhat;
  if (name == "pieces") return Suite::pieces;
  if (name == "git") return Suite::git;
  if (name == "quotient") return Suite::quotient;
  if (name == "pgl2") return Suite::pgl2;
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

/// Every check each suite must report, in report order. run_suite refuses to
/// return a result set that differs from this list.
inline std::vector<std::string> registered_checks(Suite suite) {
  static const std::vector<std::string> bruhat = {
      "weyl.group_order",          "weyl.length_parity",       "weyl.bruhat_subword_oracle",
      "weyl.bruhat_partial_order", "weyl.parabolic_factorization", "weyl.minimal_coset_reps_count",
      "weyl.support_word_independence", "weyl.twist_automorphism"};
  static const std::vector<std::string> pieces = {
      "pieces.count_identity",     "pieces.distinct_ids",          "pieces.core_maximality",
      "pieces.closure_routes_agree", "pieces.closure_reflexive",   "pieces.closure_antisymmetric",
      "pieces.closure_idempotent", "pieces.openness",              "pieces.poset_unique_maximum"};
  static const std::vector<std::string> git = {
      "git.semistable_partition", "git.weight_independence", "git.semistable_count", "git.nilcone_union",
      "git.common_nilcone_intersection", "git.nilcone_monotone", "git.semistable_open"};
  static const std::vector<std::string> quotient = {"quotient.cone_count", "quotient.action_laws",
                                                    "quotient.orbit_partition", "quotient.strata_match_semistable"};
  static const std::vector<std::string> pgl2 = {
      "pgl2.quotient_conjugation_invariance", "pgl2.classify_conjugation_invariance", "pgl2.nilpotent_iff_unstable",
      "pgl2.semistable_iff_w_identity",       "pgl2.unipotent_fiber",
      "pgl2.diagonalizable_orbit_meets_torus", "pgl2.torus_swap_invariance",  "pgl2.torus_swap_injectivity",
      "pgl2.torus_conjugation_compatibility"};
  switch (suite) {
    case Suite::bruhat: return bruhat;
    case Suite::pieces: return pieces;
    case Suite::git: return git;
    case Suite::quotient: return quotient;
    case Suite::pgl2: return pgl2;
    case Suite::all: {
      std::vector<std::string> out;
      for (const auto* s : {&bruhat, &pieces, &git, &quotient, &pgl2}) out.insert(out.end(), s->begin(), s->end());
      return out;
    }
  }
  return {};
}

struct Options {
  std::size_t pgl2_samples = 1000;
  std::uint64_t seed = 42;
};

namespace detail {

using Bits = boost::dynamic_bitset<>;

inline CheckResult make(std::string name) { return {std::move(name), true, "", {}}; }

inline void fail(CheckResult& c, std::vector<std::pair<std::string, std::string>> cx) {
  if (!c.pass) return;
  c.pass = false;
  c.counterexample = std::move(cx);
}

/// [e, y] as the set of all subword products of the canonical word of y.
inline Bits subword_interval(const WeylGroup& W, Element y) {
  Bits reached(W.size());
  reached.set(0);
  for (int i : W.reduced_word(y)) {
    Bits next = reached;
    for (auto x = reached.find_first(); x != Bits::npos; x = reached.find_next(x))
      next.set(W.right_multiply(W.element(static_cast<std::uint32_t>(x)), i).id());
    reached = std::move(next);
  }
  return reached;
}

/// Every reduced word of w, by backtracking over right descents.
inline void all_reduced_words(const WeylGroup& W, Element w, std::vector<int>& suffix,
                              std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i : W.right_descents(w).indices()) {
    suffix.push_back(i);
    all_reduced_words(W, W.right_multiply(w, i), suffix, out);
    suffix.pop_back();
  }
}

inline std::vector<CheckResult> bruhat_checks(const WeylGroup& W, const DiagramAutomorphism& sigma) {
  const RootSystem& rs = W.root_system();
  const IndexSet I = rs.index_set();
  std::vector<CheckResult> out;

  auto order = make("weyl.group_order");
  order.pass = W.size() == weyl_group_order(rs.type());
  order.detail = std::to_string(W.size()) + " elements";
  out.push_back(order);

  auto parity = make("weyl.length_parity");
  for (Element w : W.elements())
    for (int i = 0; i < W.rank(); ++i)
      if (std::abs(W.right_multiply(w, i).length() - w.length()) != 1)
        fail(parity, {{"w", w.to_string()}, {"i", std::to_string(i + 1)}});
  out.push_back(parity);

  // Up-sets as bitsets, shared by the next two checks.
  std::vector<Bits> up(W.size(), Bits(W.size()));
  for (Element x : W.elements())
    for (Element y : W.elements())
      if (W.bruhat_leq(x, y)) up[x.id()].set(y.id());

  auto oracle = make("weyl.bruhat_subword_oracle");
  for (Element y : W.elements()) {
    const Bits below = subword_interval(W, y);
    for (Element x : W.elements())
      if (below.test(x.id()) != up[x.id()].test(y.id())) fail(oracle, {{"x", x.to_string()}, {"y", y.to_string()}});
  }
  oracle.detail = std::to_string(W.size() * W.size()) + " pairs";
  out.push_back(oracle);

  auto po = make("weyl.bruhat_partial_order");
  for (Element x : W.elements()) {
    if (!up[x.id()].test(x.id())) fail(po, {{"reflexivity", x.to_string()}});
    for (auto y = up[x.id()].find_first(); y != Bits::npos; y = up[x.id()].find_next(y)) {
      if (y != x.id() && up[y].test(x.id()))
        fail(po, {{"antisymmetry", x.to_string()}, {"other", W.element(static_cast<std::uint32_t>(y)).to_string()}});
      if (!up[y].is_subset_of(up[x.id()]))
        fail(po, {{"transitivity", x.to_string()}, {"via", W.element(static_cast<std::uint32_t>(y)).to_string()}});
    }
  }
  out.push_back(po);

  auto fact = make("weyl.parabolic_factorization");
  auto counts = make("weyl.minimal_coset_reps_count");
  for (std::uint32_t m = 0; m <= I.mask(); ++m) {
    const IndexSet J(m);
    const auto reps = W.minimal_coset_reps(J);
    const auto para = W.parabolic_elements(J);
    if (reps.size() * para.size() != W.size()) fail(counts, {{"J", J.to_string()}});
    Bits hit(W.size());
    for (Element r : reps)
      for (Element v : para) {
        const Element w = W.multiply(r, v);
        if (hit.test(w.id()) || w.length() != r.length() + v.length())
          fail(fact, {{"J", J.to_string()}, {"w", w.to_string()}});
        hit.set(w.id());
      }
    if (!hit.all()) fail(fact, {{"J", J.to_string()}, {"reason", "not every element factors"}});
  }
  out.push_back(fact);
  out.push_back(counts);

  // Word independence: W_J is exactly {w : supp(w) within J}, and for small
  // groups every reduced word uses the letters of supp(w).
  auto supp = make("weyl.support_word_independence");
  for (std::uint32_t m = 0; m <= I.mask(); ++m) {
    const IndexSet J(m);
    Bits para(W.size());
    for (Element v : W.parabolic_elements(J)) para.set(v.id());
    for (Element w : W.elements())
      if (para.test(w.id()) != W.support(w).subset_of(J)) fail(supp, {{"J", J.to_string()}, {"w", w.to_string()}});
  }
  if (W.size() <= 48) {
    for (Element w : W.elements()) {
      std::vector<std::vector<int>> words;
      std::vector<int> suffix;
      all_reduced_words(W, w, suffix, words);
      for (const auto& word : words)
        if (IndexSet::from_indices(word) != W.support(w)) fail(supp, {{"w", w.to_string()}});
    }
    supp.detail = "parabolic characterization and all reduced words";
  } else {
    supp.detail = "parabolic characterization";
  }
  out.push_back(supp);

  // twist(a s_i) = twist(a) s_sigma(i) on generators, length preservation,
  // and agreement with conjugating the root permutation by sigma.
  auto tw = make("weyl.twist_automorphism");
  std::vector<std::uint16_t> sigma_roots(rs.root_count());
  for (int b = 0; b < rs.root_count(); ++b) sigma_roots[b] = static_cast<std::uint16_t>(rs.find(sigma(rs.root(b))));
  std::vector<std::uint16_t> conj(rs.root_count());
  for (Element w : W.elements()) {
    const Element t = W.twist(sigma, w);
    if (t.length() != w.length()) fail(tw, {{"w", w.to_string()}, {"reason", "length"}});
    for (int i = 0; i < W.rank(); ++i)
      if (W.twist(sigma, W.right_multiply(w, i)) != W.right_multiply(t, sigma(i)))
        fail(tw, {{"w", w.to_string()}, {"i", std::to_string(i + 1)}});
    const auto p = w.perm();
    for (int b = 0; b < rs.root_count(); ++b) conj[sigma_roots[b]] = sigma_roots[p[b]];
    const auto found = W.find(conj);
    if (!found || *found != t) fail(tw, {{"w", w.to_string()}, {"reason", "root conjugation"}});
  }
  out.push_back(tw);
  return out;
}

inline std::vector<CheckResult> piece_checks(const PieceSet& all, const ClosureRelation& rel) {
  const WeylGroup& W = all.group();
  const RootSystem& rs = W.root_system();
  const IndexSet I = rs.index_set();
  std::vector<CheckResult> out;

  auto count = make("pieces.count_identity");
  std::size_t expected = 0;
  for (std::uint32_t m = 0; m <= I.mask(); ++m)
    expected += W.size() / W.parabolic_elements(all.sigma()(IndexSet(m))).size();
  count.pass = expected == all.size();
  count.detail = std::to_string(all.size()) + " pieces, formula " + std::to_string(expected);
  out.push_back(count);

  auto distinct = make("pieces.distinct_ids");
  std::set<std::string> ids;
  for (const auto& p : all.pieces())
    if (!ids.insert(p.id).second) fail(distinct, {{"id", p.id}});
  out.push_back(distinct);

  auto core_check = make("pieces.core_maximality");
  for (const auto& p : all.pieces()) {
    auto stable = [&](IndexSet K) {
      IndexSet image;
      for (int k : K.indices()) {
        const int b = W.apply(p.w, rs.simple(all.sigma()(k)));
        if (!rs.is_simple(b)) return false;
        image = image.with(b);
      }
      return image == K;
    };
    if (!p.core.subset_of(p.J) || !stable(p.core)) fail(core_check, {{"piece", p.id}, {"reason", "core not stable"}});
    for (std::uint32_t k = p.J.mask();; k = (k - 1) & p.J.mask()) {
      if (stable(IndexSet(k)) && !IndexSet(k).subset_of(p.core))
        fail(core_check, {{"piece", p.id}, {"larger", IndexSet(k).to_string()}});
      if (k == 0) break;
    }
  }
  out.push_back(core_check);

  // The direct closure_leq route against the bitset relation.
  auto routes = make("pieces.closure_routes_agree");
  const std::size_t stride = all.size() <= 100 ? 1 : all.size() / 50;
  std::size_t compared = 0;
  for (std::size_t p = 0; p < all.size(); p += stride) {
    ++compared;
    Bits direct(all.size());
    for (std::size_t q : closure(all, p)) direct.set(q);
    if (direct != rel.row(p)) fail(routes, {{"piece", all[p].id}});
  }
  routes.detail = std::to_string(compared) + " pieces compared";
  out.push_back(routes);

  auto refl = make("pieces.closure_reflexive");
  auto anti = make("pieces.closure_antisymmetric");
  auto idem = make("pieces.closure_idempotent");
  for (std::size_t p = 0; p < all.size(); ++p) {
    if (!rel.contains(p, p)) fail(refl, {{"piece", all[p].id}});
    const Bits& row = rel.row(p);
    for (auto q = row.find_first(); q != Bits::npos; q = row.find_next(q)) {
      if (q != p && rel.contains(q, p)) fail(anti, {{"p", all[p].id}, {"q", all[q].id}});
      if (!rel.row(q).is_subset_of(row)) fail(idem, {{"p", all[p].id}, {"q", all[q].id}});
    }
  }
  out.push_back(refl);
  out.push_back(anti);
  out.push_back(idem);

  auto open = make("pieces.openness");
  const OpennessReport report = verify_openness(all);
  open.pass = report.pass();
  if (!open.pass) open.counterexample = {{"piece", report.counterexamples.front()}};
  open.detail = std::to_string(report.pieces_checked) + " pieces, " + std::to_string(report.counterexamples.size()) +
                " counterexamples";
  out.push_back(open);

  auto top = make("pieces.poset_unique_maximum");
  try {
    const ClosurePoset poset = closure_poset(all, rel);
    Bits has_upper(all.size());
    for (auto [lo, hi] : poset.covers) has_upper.set(lo);
    const std::size_t maxima = all.size() - has_upper.count();
    const auto open_piece = all.find(piece_id(I, W.identity()));
    top.pass = maxima == 1 && open_piece && !has_upper.test(*open_piece) && rel.row(*open_piece).all();
    top.detail = std::to_string(poset.covers.size()) + " cover relations, " + std::to_string(maxima) + " maxima";
  } catch (const ConsistencyError& e) {
    fail(top, {{"error", e.what()}});
  }
  out.push_back(top);
  return out;
}

inline std::vector<CheckResult> quotient_checks(const PieceSet& untwisted) {
  const WeylGroup& W = untwisted.group();
  const auto cones = enumerate_cones(W);
  std::vector<CheckResult> out;

  auto count = make("quotient.cone_count");
  count.pass = cones.size() == untwisted.size();
  count.detail = std::to_string(cones.size()) + " cones, " + std::to_string(untwisted.size()) + " untwisted pieces";
  out.push_back(count);

  // Full pairs when small; otherwise the generator form act(s_i v, c) =
  // act(s_i, act(v, c)), which implies the full law.
  auto laws = make("quotient.action_laws");
  const bool full = W.size() * W.size() * cones.size() <= 2'000'000;
  for (const CoxeterCone& c : cones) {
    if (act(W.identity(), c) != c) fail(laws, {{"cone", c.to_string()}, {"reason", "identity"}});
    for (Element v : W.elements()) {
      const CoxeterCone vc = act(v, c);
      if (full) {
        for (Element u : W.elements())
          if (act(W.multiply(u, v), c) != act(u, vc))
            fail(laws, {{"u", u.to_string()}, {"v", v.to_string()}, {"cone", c.to_string()}});
      } else {
        for (int i = 0; i < W.rank(); ++i)
          if (act(W.left_multiply(i, v), c) != act(W.simple_reflection(i), vc))
            fail(laws, {{"i", std::to_string(i + 1)}, {"v", v.to_string()}, {"cone", c.to_string()}});
      }
    }
  }
  laws.detail = full ? "all pairs" : "generator form";
  out.push_back(laws);

  auto orbits = make("quotient.orbit_partition");
  try {
    const auto partition = orbit_partition(cones);
    const std::size_t expected = std::size_t{1} << W.rank();
    orbits.pass = partition.size() == expected;
    for (const auto& [J, orbit] : partition)
      if (orbit.size() != W.minimal_coset_reps(J).size()) fail(orbits, {{"J", J.to_string()}});
    orbits.detail = std::to_string(partition.size()) + " orbits";
  } catch (const ConsistencyError& e) {
    fail(orbits, {{"error", e.what()}});
  }
  out.push_back(orbits);

  auto strata = make("quotient.strata_match_semistable");
  try {
    const auto list = quotient_strata(untwisted);
    std::vector<std::string> matched, semistable = gsp::detail::ids_of(untwisted, semistable_pieces(untwisted));
    for (const auto& s : list) matched.push_back(s.matched_piece_id);
    std::sort(matched.begin(), matched.end());
    strata.pass = matched == semistable;
    strata.detail = std::to_string(list.size()) + " strata";
  } catch (const Error& e) {
    fail(strata, {{"error", e.what()}});
  }
  out.push_back(strata);
  return out;
}

}  // namespace detail

/// Runs a suite on one (root system, automorphism) context. Quotient checks
/// always use the untwisted action on the same group.
inline std::vector<CheckResult> run_suite(const PieceSet& ctx, Suite suite, const Options& options = {}) {
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  const bool everything = suite == Suite::all;
  if (everything || suite == Suite::bruhat) add(detail::bruhat_checks(ctx.group(), ctx.sigma()));
  if (everything || suite == Suite::pieces || suite == Suite::git) {
    const ClosureRelation rel(ctx);
    if (everything || suite == Suite::pieces) add(detail::piece_checks(ctx, rel));
    if (everything || suite == Suite::git) add(locus_checks(ctx, rel));
  }
  if (everything || suite == Suite::quotient) {
    if (ctx.sigma().is_identity()) {
      add(detail::quotient_checks(ctx));
    } else {
      add(detail::quotient_checks(PieceSet(ctx.group_ptr(), identity_automorphism(ctx.group().root_system()))));
    }
  }
  if (everything || suite == Suite::pgl2) add(pgl2::run_oracle(options.pgl2_samples, options.seed).checks);

  std::vector<std::string> names;
  for (const auto& c : out) names.push_back(c.name);
  if (names != registered_checks(suite))
    throw ConsistencyError("suite produced checks that do not match the registry");
  return out;
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace gsp::verify

#endif  // GSP_VERIFY_HPP
