#ifndef GSP_REPORT_HPP
#define GSP_REPORT_HPP

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsp/core.hpp"
#include "gsp/git_locus.hpp"
#include "gsp/pgl2_oracle.hpp"
#include "gsp/pieces.hpp"
#include "gsp/quotient_strata.hpp"

namespace gsp::report {

using Json = nlohmann::ordered_json;

inline Json index_list(IndexSet s) {
  Json a = Json::array();
  for (int i : s.indices()) a.push_back(i + 1);
  return a;
}

inline Json sorted_ids(const PieceSet& all, const std::vector<std::size_t>& idx) {
  return gsp::detail::ids_of(all, idx);
}

inline Json counterexample_json(const CheckResult& c) {
  if (c.counterexample.empty()) return nullptr;
  Json o = Json::object();
  for (const auto& [k, v] : c.counterexample) o[k] = v;
  return o;
}

inline Json checks_json(const std::vector<CheckResult>& checks) {
  Json a = Json::array();
  for (const CheckResult& c : checks) {
    Json o{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) o["detail"] = c.detail;
    if (!c.pass) o["counterexample"] = counterexample_json(c);
    a.push_back(std::move(o));
  }
  return a;
}

inline Json context_header(const PieceSet& all) {
  return Json{{"type", all.group().root_system().type_label()}, {"automorphism", all.sigma().to_string()}};
}

inline Json pieces_json(const PieceSet& all) {
  Json j = context_header(all);
  Json list = Json::array();
  for (const TwistedPiece& p : all.pieces())
    list.push_back(Json{{"id", p.id}, {"J", index_list(p.J)}, {"w", p.w.to_string()}, {"core", index_list(p.core)}});
  j["pieces"] = std::move(list);
  return j;
}

inline Json closure_json(const PieceSet& all, std::size_t p) {
  Json j = context_header(all);
  j["piece"] = all[p].id;
  j["closure"] = sorted_ids(all, closure(all, p));
  return j;
}

inline Json poset_json(const PieceSet& all, const ClosurePoset& poset) {
  Json j = context_header(all);
  j["nodes"] = sorted_ids(all, poset.nodes);
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [lo, hi] : poset.covers) edges.emplace_back(all[lo].id, all[hi].id);
  std::sort(edges.begin(), edges.end());
  Json covers = Json::array();
  for (const auto& [lo, hi] : edges) covers.push_back(Json{{"lower", lo}, {"upper", hi}});
  j["covers"] = std::move(covers);
  return j;
}

/// Nodes and edges sorted by ID; each edge points from a piece to one it covers.
inline std::string poset_dot(const PieceSet& all, const ClosurePoset& poset) {
  std::vector<std::string> nodes;
  for (std::size_t k : poset.nodes) nodes.push_back(all[k].id);
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [lo, hi] : poset.covers) edges.emplace_back(all[hi].id, all[lo].id);
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph \"closure_poset_" << all.group().root_system().type_label() << "_" << all.sigma().to_string()
      << "\" {\n";
  for (const auto& n : nodes) out << "  \"" << n << "\" [label=\"" << n << "\"];\n";
  for (const auto& [hi, lo] : edges) out << "  \"" << hi << "\" -> \"" << lo << "\";\n";
  out << "}\n";
  return out.str();
}

inline Json locus_json(const LocusReport& r) {
  Json nil = Json::object();
  for (const auto& [weight, ids] : r.nilcone_ids) nil[weight] = ids;
  return Json{{"type", r.type},
              {"automorphism", r.automorphism},
              {"semistable", r.semistable_ids},
              {"nilcone", std::move(nil)},
              {"common_nilcone", r.common_nilcone_ids},
              {"checks", checks_json(r.checks)}};
}

inline Json strata_json(const std::vector<QuotientStratum>& strata) {
  Json list = Json::array();
  for (const auto& s : strata)
    list.push_back(Json{{"J", index_list(s.J)}, {"cone_count", s.cone_count}, {"piece", s.matched_piece_id}});
  return Json{{"strata", std::move(list)}};
}

inline Json oracle_json(const pgl2::OracleReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json o{{"name", c.name}, {"pass", c.pass}, {"counterexample", counterexample_json(c)}};
    checks.push_back(std::move(o));
  }
  return Json{{"samples", r.samples}, {"seed", r.seed}, {"checks", std::move(checks)}};
}

/// Fixed-width text table; the first row is the header.
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
  return out.str();
}

inline std::string pieces_table(const PieceSet& all, const std::vector<std::size_t>& idx) {
  std::vector<std::vector<std::string>> rows{{"id", "J", "w", "core"}};
  for (std::size_t k : idx)
    rows.push_back({all[k].id, all[k].J.to_string(), all[k].w.to_string(), all[k].core.to_string()});
  return table(rows);
}

inline std::string checks_table(const std::vector<CheckResult>& checks) {
  std::vector<std::vector<std::string>> rows{{"result", "check", "detail"}};
  for (const CheckResult& c : checks) rows.push_back({c.pass ? "PASS" : "FAIL", c.name, c.detail});
  return table(rows);
}

}  // namespace gsp::report

#endif  // GSP_REPORT_HPP
