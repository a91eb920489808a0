#ifndef GSP_PGL2_ORACLE_HPP
#define GSP_PGL2_ORACLE_HPP

// Concrete model for G = PGL_2. The wonderful compactification is the
// projective space of nonzero 2x2 matrices, the diagonal G-action is
// conjugation, semistable means "not nilpotent", and the quotient map is
// A -> [tr(A)^2 : det(A)]. All arithmetic is exact over the rationals.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsp/core.hpp"

namespace gsp::pgl2 {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

/// Row-major 2x2 matrix.
struct Matrix2 {
  std::array<Rational, 4> e{};

  Matrix2() = default;
  Matrix2(Rational a, Rational b, Rational c, Rational d) : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Matrix2 identity() { return {1, 0, 0, 1}; }
  static Matrix2 diagonal(const Rational& a, const Rational& d) { return {a, 0, 0, d}; }

  Rational trace() const { return e[0] + e[3]; }
  Rational det() const { return e[0] * e[3] - e[1] * e[2]; }
  bool is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const Rational& x) { return x == 0; });
  }

  /// Inverse; throws when singular.
  Matrix2 inverse() const {
    const Rational d = det();
    if (d == 0) throw InvalidArgument("matrix is singular");
    return {e[3] / d, -e[1] / d, -e[2] / d, e[0] / d};
  }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
            x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;

  std::string to_string() const {
    return "[[" + e[0].str() + "," + e[1].str() + "],[" + e[2].str() + "," + e[3].str() + "]]";
  }
};

/// A point of P(End(k^2)): a nonzero matrix up to scale, stored with its
/// first nonzero entry (row-major) normalized to 1.
class ProjMatrixPoint {
 public:
  explicit ProjMatrixPoint(Matrix2 m) : m_(std::move(m)) {
    auto it = std::find_if(m_.e.begin(), m_.e.end(), [](const Rational& x) { return x != 0; });
    if (it == m_.e.end()) throw InvalidArgument("the zero matrix is not a projective point");
    const Rational lead = *it;
    for (Rational& x : m_.e) x /= lead;
  }
  ProjMatrixPoint(Rational a, Rational b, Rational c, Rational d)
      : ProjMatrixPoint(Matrix2(std::move(a), std::move(b), std::move(c), std::move(d))) {}

  const Matrix2& representative() const { return m_; }
  std::string to_string() const { return m_.to_string(); }
  friend bool operator==(const ProjMatrixPoint&, const ProjMatrixPoint&) = default;

 private:
  Matrix2 m_;
};

/// [p : q] up to common nonzero scale, stored as coprime integers with the
/// first nonzero coordinate positive.
class QuotientPoint {
 public:
  QuotientPoint(const Rational& p, const Rational& q) {
    if (p == 0 && q == 0) throw InvalidArgument("[0:0] is not a projective point");
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Integer l = boost::multiprecision::lcm(denominator(p), denominator(q));
    Integer a = numerator(p) * (l / denominator(p));
    Integer b = numerator(q) * (l / denominator(q));
    const Integer g = boost::multiprecision::gcd(a, b);
    a /= g;
    b /= g;
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
    }
    p_ = a;
    q_ = b;
  }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  std::string to_string() const { return "[" + p_.str() + ":" + q_.str() + "]"; }
  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;

 private:
  Integer p_, q_;
};

/// Piece of the A1 enumeration containing A: det != 0 is the open piece G;
/// on the boundary (rank one), trace != 0 gives w = e and trace = 0 gives w = s1.
inline std::string classify_piece(const ProjMatrixPoint& A) {
  const Matrix2& m = A.representative();
  if (m.det() != 0) return "J={1};w=e";
  return m.trace() != 0 ? "J={};w=e" : "J={};w=s1";
}

/// Semistable iff some characteristic-polynomial coefficient is nonzero.
inline bool is_semistable(const ProjMatrixPoint& A) {
  const Matrix2& m = A.representative();
  return m.trace() != 0 || m.det() != 0;
}

/// [tr^2 : det]; both are homogeneous of degree 2, so any representative works.
inline QuotientPoint quotient_point(const ProjMatrixPoint& A) {
  if (!is_semistable(A)) throw InvalidArgument("point " + A.to_string() + " is not semistable");
  const Matrix2& m = A.representative();
  const Rational t = m.trace();
  return {t * t, m.det()};
}

/// g A g^{-1}
inline ProjMatrixPoint conjugate(const ProjMatrixPoint& A, const Matrix2& g) {
  return ProjMatrixPoint(g * A.representative() * g.inverse());
}

/// Image of the torus-closure point diag(a, d): [(a + d)^2 : a d].
inline QuotientPoint torus_quotient_map(const Rational& a, const Rational& d) {
  if (a == 0 && d == 0) throw InvalidArgument("diag(0,0) is not a projective point");
  const Rational s = a + d;
  return {s * s, a * d};
}

/// (a : d) == (a' : d') projectively.
inline bool same_ratio(const Rational& a, const Rational& d, const Rational& a2, const Rational& d2) {
  return a * d2 == a2 * d;
}

/// Per-sample random stream. Sample k of a run is drawn from an engine seeded
/// by (seed, stream, k), so results do not depend on evaluation order.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint32_t stream, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream,
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
  }

  /// Uniform in [-9, 9].
  int small() { return static_cast<int>(engine_() % 19) - 9; }
  int small_nonzero() {
    for (;;)
      if (int v = small(); v != 0) return v;
  }
  // Draws are sequenced explicitly; argument evaluation order is unspecified.
  Rational rational() {
    const int n = small();
    return Rational(n) / small_nonzero();
  }
  Rational rational_nonzero() {
    const int n = small_nonzero();
    return Rational(n) / small_nonzero();
  }
  Matrix2 matrix() {
    Rational a = rational(), b = rational(), c = rational(), d = rational();
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
  }
  Matrix2 invertible() {
    for (;;)
      if (Matrix2 g = matrix(); g.det() != 0) return g;
  }
  /// (a, d) not both zero.
  std::pair<Rational, Rational> torus_pair() {
    for (;;) {
      Rational a = rational(), d = rational();
      if (a != 0 || d != 0) return {a, d};
    }
  }
  /// A nonzero matrix drawn in turn from the open piece, the rank-one
  /// semisimple boundary, and the nilpotent boundary, each conjugated by a
  /// random invertible matrix.
  Matrix2 stratified(std::uint64_t k) {
    const Matrix2 g = invertible();
    switch (k % 3) {
      case 0: return invertible();
      case 1: return g * Matrix2::diagonal(rational_nonzero(), 0) * g.inverse();
      default: return g * Matrix2(0, rational_nonzero(), 0, 0) * g.inverse();
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct OracleReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
};

namespace detail {

inline void fail(CheckResult& c, std::vector<std::pair<std::string, std::string>> cx) {
  if (!c.pass) return;
  c.pass = false;
  c.counterexample = std::move(cx);
}

}  // namespace detail

/// Swap invariance, injectivity up to swap and scale, and compatibility with
/// conjugation for the map from the torus closure to the quotient.
inline OracleReport verify_corollary5_pgl2(std::size_t sample_count, std::uint64_t seed) {
  OracleReport report{sample_count, seed, {}};
  CheckResult swap{"pgl2.torus_swap_invariance", true, "", {}};
  CheckResult inject{"pgl2.torus_swap_injectivity", true, "", {}};
  CheckResult conj{"pgl2.torus_conjugation_compatibility", true, "", {}};

  std::vector<std::pair<Rational, Rational>> pairs;
  for (std::size_t k = 0; k < sample_count; ++k) {
    SampleStream rng(seed, 1, k);
    auto [a, d] = rng.torus_pair();
    const QuotientPoint image = torus_quotient_map(a, d);
    if (!(image == torus_quotient_map(d, a)))
      detail::fail(swap, {{"a", a.str()}, {"d", d.str()}});

    const Matrix2 g = rng.invertible();
    const ProjMatrixPoint moved = conjugate(ProjMatrixPoint(Matrix2::diagonal(a, d)), g);
    if (!(quotient_point(moved) == image))
      detail::fail(conj, {{"a", a.str()}, {"d", d.str()}, {"g", g.to_string()}});

    // Scaled and swapped partners make genuine collisions certain.
    const Rational c = rng.rational_nonzero();
    pairs.emplace_back(a, d);
    pairs.emplace_back(c * d, c * a);
  }

  std::size_t collisions = 0;
  std::vector<QuotientPoint> images;
  images.reserve(pairs.size());
  for (const auto& [a, d] : pairs) images.push_back(torus_quotient_map(a, d));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (!(images[i] == images[j])) continue;
      ++collisions;
      const auto& [a, d] = pairs[i];
      const auto& [a2, d2] = pairs[j];
      if (!same_ratio(a, d, a2, d2) && !same_ratio(a, d, d2, a2))
        detail::fail(inject, {{"first", "(" + a.str() + "," + d.str() + ")"},
                              {"second", "(" + a2.str() + "," + d2.str() + ")"},
                              {"image", images[i].to_string()}});
    }

  swap.detail = std::to_string(sample_count) + " pairs";
  inject.detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(collisions) + " collisions";
  conj.detail = std::to_string(sample_count) + " conjugates";
  report.checks = {swap, inject, conj};
  return report;
}

/// Number of torus pairs used by run_oracle for a given sample count.
inline std::size_t torus_pair_count(std::size_t samples) { return std::min<std::size_t>(samples, 100); }

/// Every PGL_2 check: conjugation invariance, the nilpotent/unstable
/// correspondence, the unipotent fiber, orbits of diagonalizable matrices
/// meeting the torus, and the torus checks on min(samples, 100) pairs.
inline OracleReport run_oracle(std::size_t samples, std::uint64_t seed) {
  OracleReport report{samples, seed, {}};
  CheckResult qinv{"pgl2.quotient_conjugation_invariance", true, "", {}};
  CheckResult cinv{"pgl2.classify_conjugation_invariance", true, "", {}};
  CheckResult nil{"pgl2.nilpotent_iff_unstable", true, "", {}};
  CheckResult weq{"pgl2.semistable_iff_w_identity", true, "", {}};
  CheckResult uni{"pgl2.unipotent_fiber", true, "", {}};
  CheckResult meets{"pgl2.diagonalizable_orbit_meets_torus", true, "", {}};
  const QuotientPoint identity_image = quotient_point(ProjMatrixPoint(Matrix2::identity()));
  std::size_t semistable_seen = 0, unstable_seen = 0;

  for (std::size_t k = 0; k < samples; ++k) {
    SampleStream rng(seed, 0, k);

    const ProjMatrixPoint A(rng.stratified(k));
    const Matrix2 g = rng.invertible();
    const ProjMatrixPoint B = conjugate(A, g);
    if (classify_piece(A) != classify_piece(B))
      detail::fail(cinv, {{"A", A.to_string()}, {"g", g.to_string()}});

    // For 2x2 matrices, nilpotent means A^2 = 0.
    const Matrix2& m = A.representative();
    const bool nilpotent = (m * m).is_zero();
    if (is_semistable(A) == nilpotent) detail::fail(nil, {{"A", A.to_string()}});
    const std::string piece = classify_piece(A);
    const bool w_identity = piece.size() >= 3 && piece.compare(piece.size() - 3, 3, "w=e") == 0;
    if (is_semistable(A) != w_identity) detail::fail(weq, {{"A", A.to_string()}, {"piece", piece}});

    if (is_semistable(A)) {
      ++semistable_seen;
      if (!(quotient_point(A) == quotient_point(B)))
        detail::fail(qinv, {{"A", A.to_string()}, {"g", g.to_string()}});
    } else {
      ++unstable_seen;
    }

    const Matrix2 h = rng.invertible();
    const ProjMatrixPoint U(h * Matrix2(1, rng.rational(), 0, 1) * h.inverse());
    if (!(quotient_point(U) == identity_image)) detail::fail(uni, {{"U", U.to_string()}});

    const Rational a = rng.rational_nonzero(), d = rng.rational_nonzero();
    const ProjMatrixPoint D(Matrix2::diagonal(a, d));
    const ProjMatrixPoint C(h * D.representative() * h.inverse());
    if (!(quotient_point(C) == quotient_point(D)) || !(quotient_point(C) == torus_quotient_map(a, d)))
      detail::fail(meets, {{"a", a.str()}, {"d", d.str()}, {"h", h.to_string()}});
  }

  qinv.detail = std::to_string(semistable_seen) + " semistable samples";
  cinv.detail = std::to_string(samples) + " samples";
  nil.detail = std::to_string(unstable_seen) + " unstable of " + std::to_string(samples);
  weq.detail = std::to_string(samples) + " samples";
  uni.detail = "image " + identity_image.to_string();
  meets.detail = std::to_string(samples) + " conjugates";
  report.checks = {qinv, cinv, nil, weq, uni, meets};
  for (CheckResult& c : verify_corollary5_pgl2(torus_pair_count(samples), seed).checks)
    report.checks.push_back(std::move(c));
  return report;
}

}  // namespace gsp::pgl2

#endif  // GSP_PGL2_ORACLE_HPP
