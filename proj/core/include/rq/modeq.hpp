#pragma once

#include "rq/characters.hpp"
#include "rq/linalg.hpp"
#include "rq/series.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rq {

// Monomial set u^i v^j: box(s) is 0 <= i,j <= s, total(d) is i + j <= d.
struct Shape {
  enum class Kind { box, total };
  Kind kind = Kind::box;
  long size = 0;

  static Shape box(long s) { return {Kind::box, s}; }
  static Shape total(long d) { return {Kind::total, d}; }

  // Graded-lex ascending: by i + j, then by i.
  std::vector<std::pair<long, long>> monomials() const;
  std::string to_string() const;  // "box(4)" or "total(5)"
};

// Integer polynomial in u, v. Always canonical: content 1 and positive
// coefficient on the graded-lex leading term (largest i + j, then largest i).
class BivariatePolynomial {
 public:
  using Exponents = std::pair<long, long>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::map<Exponents, Integer> terms);

  // Reads the text form below, e.g. "u^4 - v^2 + 4*u^4*v^4". Throws
  // std::invalid_argument on malformed input.
  static BivariatePolynomial parse(std::string_view text);

  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree() const;  // total degree
  std::size_t term_count() const { return terms_.size(); }

  // Terms by ascending power of v, then of u.
  std::string to_string() const;

  FormalSeries evaluate(const FormalSeries& u, const FormalSeries& v) const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::map<Exponents, Integer> terms_;
};

// A named series recipe; build(order) must be exact at least to `order` or
// report the reached order through FormalSeries::order().
struct SeriesBuilder {
  std::string description;
  std::function<FormalSeries(const Rational& order)> build;
};

// R(spec; q^power). Rational specs are used as given; the series machinery
// already handles fractional exponents.
SeriesBuilder rq_builder(const RQSpec& spec, const Rational& power = 1);

// N(q) = q^(-1/6) f(-q)^(-4) (Q - sum tau(n) q^n), the algebraic part of R'/R.
FormalSeries n_series(const RQSpec& spec, const Rational& order);
SeriesBuilder n_builder(const RQSpec& spec, const Rational& power = 1);

struct MiningJob {
  SeriesBuilder u;
  SeriesBuilder v;
  Shape shape = Shape::box(4);
  Rational order = 0;           // 0: the smallest order the shape needs
  Rational reverify_order = 0;  // 0: 3/2 of the mining order
  long guard = 30;              // extra equations per block
};

struct MinedPolynomial {
  BivariatePolynomial poly;
  Rational verified_order;
};

struct DroppedCandidate {
  BivariatePolynomial poly;
  Rational first_failure_exponent;
};

struct MiningResult {
  Rational order;           // q-exponent the matrix rows reach
  Rational step;            // exponent spacing of the rows
  Rational reverify_order;
  long lattice_steps = 0;   // order / step, rounded up
  std::vector<MinedPolynomial> polynomials;  // by total degree, then term count
  std::vector<DroppedCandidate> dropped;
};

// Smallest mining order for the job's shape and guard.
Rational required_order(const MiningJob& job);

// Throws std::invalid_argument when an explicit order is too small.
MiningResult mine(const MiningJob& job);
MiningResult mine_cross(const RQSpec& u_spec, const Rational& alpha, const RQSpec& v_spec, const Rational& beta,
                        const Shape& shape, const Rational& order = 0);

struct RelationVerdict {
  bool holds = false;
  Rational order;                         // order the residual was checked to
  std::optional<Rational> fails_at;
};

// Throws std::invalid_argument when P(u, v) is not known to `order`.
RelationVerdict verify_relation(const BivariatePolynomial& p, const FormalSeries& u, const FormalSeries& v,
                                const Rational& order);
// Rebuilds u and v until P(u, v) is known to `order`.
RelationVerdict verify_relation(const BivariatePolynomial& p, const SeriesBuilder& u, const SeriesBuilder& v,
                                const Rational& order);

nlohmann::json to_json(const BivariatePolynomial& p);
nlohmann::json to_json(const MiningResult& r);

}  // namespace rq
