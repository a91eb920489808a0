#ifndef GSP_QUOTIENT_STRATA_HPP
#define GSP_QUOTIENT_STRATA_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gsp/core.hpp"
#include "gsp/pieces.hpp"
#include "gsp/weyl.hpp"

namespace gsp {

/// The cone rep * C_J of the Coxeter fan, named by its face type J and the
/// minimal representative of the coset rep W_J. These index the torus orbits
/// of the closure of T.
struct CoxeterCone {
  IndexSet J;
  Element rep;

  std::string to_string() const { return "(" + J.to_string() + "," + rep.to_string() + ")"; }
  friend bool operator==(const CoxeterCone&, const CoxeterCone&) = default;
  friend auto operator<=>(const CoxeterCone& a, const CoxeterCone& b) {
    if (auto c = a.J <=> b.J; c != 0) return c;
    return a.rep <=> b.rep;
  }
};

/// One cone per (J, rep in W^J), J by bitmask ascending then rep by ID.
inline std::vector<CoxeterCone> enumerate_cones(const WeylGroup& W) {
  std::vector<CoxeterCone> cones;
  const IndexSet I = W.root_system().index_set();
  for (std::uint32_t m = 0; m <= I.mask(); ++m)
    for (Element r : W.minimal_coset_reps(IndexSet(m))) cones.push_back({IndexSet(m), r});
  return cones;
}

/// Left translation v * rep W_J.
inline CoxeterCone act(Element v, const CoxeterCone& c) {
  const WeylGroup& W = c.rep.group();
  if (v.group_ptr() != &W) throw InvalidArgument("element and cone belong to different groups");
  return {c.J, W.minimal_coset_rep(W.multiply(v, c.rep), c.J)};
}

/// W-orbits on the cones, keyed by face type. Throws ConsistencyError unless
/// every orbit is exactly the set of cones sharing one J.
inline std::map<IndexSet, std::vector<CoxeterCone>> orbit_partition(const std::vector<CoxeterCone>& cones) {
  std::map<IndexSet, std::vector<CoxeterCone>> out;
  if (cones.empty()) return out;
  const WeylGroup& W = cones.front().rep.group();
  std::set<CoxeterCone> remaining(cones.begin(), cones.end());
  while (!remaining.empty()) {
    const CoxeterCone seed = *remaining.begin();
    std::vector<CoxeterCone> orbit{seed};
    std::set<CoxeterCone> seen{seed};
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (int i = 0; i < W.rank(); ++i) {
        const CoxeterCone next = act(W.simple_reflection(i), orbit[k]);
        if (seen.insert(next).second) orbit.push_back(next);
      }
    for (const CoxeterCone& c : orbit) {
      if (c.J != seed.J) throw ConsistencyError("cones " + seed.to_string() + " and " + c.to_string() + " share an orbit");
      if (!remaining.erase(c)) throw ConsistencyError("orbit reached cone " + c.to_string() + " outside the input");
    }
    if (out.count(seed.J)) throw ConsistencyError("face type " + seed.J.to_string() + " splits into several orbits");
    std::sort(orbit.begin(), orbit.end());
    out.emplace(seed.J, std::move(orbit));
  }
  return out;
}

/// One stratum of the closure of T modulo W, matched with the semistable piece (J, e).
struct QuotientStratum {
  IndexSet J;
  std::size_t cone_count = 0;
  std::string matched_piece_id;
};

/// Strata of T-bar / W for the untwisted action, sorted by J bitmask.
inline std::vector<QuotientStratum> quotient_strata(const PieceSet& untwisted) {
  if (!untwisted.sigma().is_identity())
    throw InvalidArgument("quotient strata are defined for the untwisted action only");
  const WeylGroup& W = untwisted.group();
  std::vector<QuotientStratum> out;
  for (const auto& [J, orbit] : orbit_partition(enumerate_cones(W))) {
    const std::string id = piece_id(J, W.identity());
    if (!untwisted.find(id)) throw ConsistencyError("no semistable piece " + id);
    if (orbit.size() * W.parabolic_elements(J).size() != W.size())
      throw ConsistencyError("orbit of face type " + J.to_string() + " has the wrong size");
    out.push_back({J, orbit.size(), id});
  }
  return out;
}

}  // namespace gsp

#endif  // GSP_QUOTIENT_STRATA_HPP
