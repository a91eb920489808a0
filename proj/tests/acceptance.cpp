// Acceptance suite: one PASS/FAIL line per criterion, each with its time
// budget. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gsp/gsp.hpp"
#include "oracles.hpp"

#ifndef GSP_CLI_PATH
#error "GSP_CLI_PATH must name the gsp executable"
#endif

namespace {

using Clock = std::chrono::steady_clock;

struct Config {
  const char* type;
  const char* sigma;
};

// A1, A2 (both), B2, G2, A3 (both), D4 (orders 1, 2, 3).
const std::vector<Config> kMatrix{{"A1", "id"},      {"A2", "id"},      {"A2", "1:2,2:1"},     {"B2", "id"},
                                  {"G2", "id"},      {"A3", "id"},      {"A3", "1:3,3:1"},     {"D4", "id"},
                                  {"D4", "3:4,4:3"}, {"D4", "1:3,3:4,4:1"}};

gsp::PieceSet make(const Config& c) {
  auto rs = gsp::build_root_system(c.type);
  const auto s = gsp::parse_automorphism(rs, c.sigma);
  return gsp::PieceSet(gsp::generate_group(std::move(rs)), s);
}

std::string label(const Config& c) { return std::string(c.type) + "/" + c.sigma; }

/// Runs a criterion body that appends failures to `why`; prints one line.
bool criterion(int number, const char* title, double budget_s, const std::function<void(std::ostream&)>& body) {
  std::ostringstream why;
  const auto start = Clock::now();
  try {
    body(why);
  } catch (const std::exception& e) {
    why << "exception: " << e.what() << "; ";
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (elapsed >= budget_s) why << "took " << elapsed << " s, budget " << budget_s << " s; ";
  const bool pass = why.str().empty();
  std::printf("%s  criterion %d: %s (%.3f s / %.0f s)%s%s\n", pass ? "PASS" : "FAIL", number, title, elapsed,
              budget_s, pass ? "" : " -- ", why.str().c_str());
  std::fflush(stdout);
  return pass;
}

void piece_counts(std::ostream& why) {
  const std::vector<std::pair<Config, std::size_t>> expected{
      {{"A1", "id"}, 3}, {{"A2", "id"}, 13}, {{"B2", "id"}, 17}, {{"G2", "id"}, 25}, {{"A3", "id"}, 75}};
  for (const auto& [c, n] : expected) {
    const auto all = make(c);
    if (all.size() != n) why << label(c) << " has " << all.size() << " pieces, expected " << n << "; ";
  }
}

void bruhat_oracle(std::ostream& why) {
  for (const char* type : {"A2", "B2", "A3"}) {
    const auto W = gsp::generate_group(gsp::build_root_system(type));
    const gsp::oracle::MatrixGroup G(W->root_system().cartan());
    std::size_t pairs = 0, bad = 0;
    for (gsp::Element x : W->elements())
      for (gsp::Element y : W->elements()) {
        ++pairs;
        if (gsp::bruhat_leq(x, y) != G.subword_leq(G.of(x), G.of(y))) ++bad;
      }
    if (pairs != W->size() * W->size() || bad != 0) why << type << ": " << bad << " disagreements; ";
  }
}

void openness(std::ostream& why) {
  for (const Config& c : kMatrix) {
    const auto report = gsp::verify_openness(make(c));
    if (!report.pass()) why << label(c) << ": " << report.counterexamples.front() << "; ";
  }
}

void idempotence(std::ostream& why) {
  auto check = [&](const gsp::PieceSet& all, const std::vector<std::size_t>& tops, const std::string& name) {
    const gsp::ClosureRelation rel(all);
    for (std::size_t p : tops) {
      const auto direct = gsp::closure(all, p);
      std::size_t members = 0;
      for (std::size_t q = 0; q < all.size(); ++q) members += rel.contains(p, q);
      if (members != direct.size()) why << name << ": closure routes disagree at " << all[p].id << "; ";
      for (std::size_t q : direct)
        if (!rel.row(q).is_subset_of(rel.row(p))) {
          why << name << ": closure of " << all[q].id << " escapes closure of " << all[p].id << "; ";
          return;
        }
    }
  };
  for (const char* type : {"A2", "B2", "G2"}) {
    const auto all = make({type, "id"});
    std::vector<std::size_t> every(all.size());
    std::iota(every.begin(), every.end(), 0);
    check(all, every, type);
  }
  std::mt19937_64 rng(42);
  for (const Config& c : {Config{"A3", "id"}, Config{"D4", "id"}}) {
    const auto all = make(c);
    std::vector<std::size_t> every(all.size()), sample;
    std::iota(every.begin(), every.end(), 0);
    std::sample(every.begin(), every.end(), std::back_inserter(sample), 50, rng);
    check(all, sample, label(c));
  }
}

void partition(std::ostream& why) {
  for (const Config& c : kMatrix) {
    if (std::string(c.type) == "A1" || std::string(c.type) == "G2") continue;
    const auto all = make(c);
    const auto weights = gsp::regular_sample_weights(all.sigma());
    for (const auto& r : gsp::verify_theorem2(all, weights))
      if (!r.pass) why << label(c) << ": " << r.name << "; ";
    // Direct restatement: nilcone and {w = e} are complementary.
    const auto ss = gsp::semistable_pieces(all);
    for (const auto& lambda : weights) {
      auto uni = gsp::detail::unite(gsp::nilcone_pieces(all, lambda), ss);
      if (uni.size() != all.size() || !gsp::detail::intersect(gsp::nilcone_pieces(all, lambda), ss).empty())
        why << label(c) << ": partition fails at lambda " << lambda.to_string() << "; ";
    }
  }
}

void lattice(std::ostream& why) {
  for (const Config& c : kMatrix) {
    const auto all = make(c);
    gsp::PieceIndices nonidentity, full, uni, inter(all.size());
    std::iota(inter.begin(), inter.end(), 0);
    const gsp::IndexSet I = all.group().root_system().index_set();
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (!all[k].w.is_identity()) nonidentity.push_back(k);
      if (gsp::support(all[k].w) == I) full.push_back(k);
    }
    for (const auto& lambda : gsp::orbit_fundamental_weights(all.sigma()))
      uni = gsp::detail::unite(uni, gsp::nilcone_pieces(all, lambda));
    for (int i = 0; i < all.group().rank(); ++i)
      inter = gsp::detail::intersect(inter, gsp::pieces_meeting_support(all, gsp::IndexSet().with(i)));
    if (uni != nonidentity) why << label(c) << ": union mismatch; ";
    if (inter != full || gsp::common_nilcone(all) != full) why << label(c) << ": intersection mismatch; ";
    for (const auto& r : gsp::locus_checks(all, gsp::ClosureRelation(all)))
      if (r.name == "git.nilcone_monotone" && !r.pass) why << label(c) << ": monotonicity fails; ";
  }
}

void quotient(std::ostream& why) {
  for (const char* type : {"A1", "A2", "A3", "B2", "G2", "D4"}) {
    const auto all = make({type, "id"});
    const auto cones = gsp::enumerate_cones(all.group());
    const auto orbits = gsp::orbit_partition(cones);
    if (orbits.size() != (std::size_t{1} << all.group().rank())) why << type << ": " << orbits.size() << " orbits; ";
    for (const auto& [J, orbit] : orbits) {
      std::size_t with_j = 0;
      for (const auto& c : cones) with_j += c.J == J;
      for (const auto& c : orbit)
        if (c.J != J) why << type << ": mixed orbit; ";
      if (orbit.size() != with_j) why << type << ": orbit " << J.to_string() << " incomplete; ";
    }
    if (cones.size() != all.size()) why << type << ": " << cones.size() << " cones vs " << all.size() << " pieces; ";
    if (gsp::quotient_strata(all).size() != orbits.size()) why << type << ": strata count; ";
  }
}

void pgl2(std::ostream& why) {
  const auto report = gsp::pgl2::run_oracle(1000, 42);
  if (gsp::pgl2::torus_pair_count(1000) != 100) why << "torus pair count; ";
  if (report.checks.size() != 9) why << report.checks.size() << " checks; ";
  for (const auto& c : report.checks)
    if (!c.pass) why << c.name << "; ";
}

void end_to_end(std::ostream& why) {
  for (const Config& c : kMatrix) {
    const std::string cmd = std::string("\"") + GSP_CLI_PATH + "\" verify --type " + c.type + " --auto " + c.sigma +
                            " --suite all > /dev/null";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
      why << label(c) << " exited " << (WIFEXITED(status) ? WEXITSTATUS(status) : -1) << "; ";
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion(1, "piece counts A1:3 A2:13 B2:17 G2:25 A3:75", 1, piece_counts);
  ok &= criterion(2, "Bruhat order equals subword oracle on A2, B2, A3", 5, bruhat_oracle);
  ok &= criterion(3, "openness over the configuration matrix", 30, openness);
  ok &= criterion(4, "closure idempotence (A2, B2, G2 exhaustive; A3, D4 sampled)", 30, idempotence);
  ok &= criterion(5, "semistable/nilcone partition, weight independent", 10, partition);
  ok &= criterion(6, "nilcone union, intersection and monotonicity", 5, lattice);
  ok &= criterion(7, "quotient strata orbits for A1-A3, B2, G2, D4", 10, quotient);
  ok &= criterion(8, "PGL2 oracle, seed 42, 1000 samples", 5, pgl2);
  ok &= criterion(9, "gsp verify --suite all over the configuration matrix", 60, end_to_end);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
