// rq: command line front end. Every report is one JSON object per line,
// stamped with the schema and the job config that reproduces it.

#include "rq/characters.hpp"
#include "rq/checks.hpp"
#include "rq/modeq.hpp"
#include "rq/numerics.hpp"
#include "rq/quantities.hpp"
#include "rq/recognize.hpp"
#include "rq/report.hpp"
#include "rq/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace rq;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spec;
  std::string vspec;
  std::string agile;
  std::string alpha = "1";
  std::string beta = "2";
  std::optional<long> box;
  std::optional<long> total;
  std::string order;
  std::string power = "1";
  long digits = 60;
  std::string r = "1";
  std::string q;
  std::string value;
  std::string which;
  std::string id;
  long J = 0;
  long nmax = 0;
  long reverify = 0;
  long degree = 4;
  long A = 1;
  long B = 2;
  std::string out;
  bool text = false;
};

// Writes either JSON lines or a plain rendering of each record.
class Sink {
 public:
  Sink(const Options& o, std::string kind, json config)
      : text_(o.text), kind_(std::move(kind)), config_(std::move(config)) {
    if (!o.out.empty()) {
      file_ = std::make_unique<std::ofstream>(o.out);
      if (!*file_) throw UsageError("cannot open output file " + o.out);
    }
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void emit(const json& payload, const std::string& text_form) {
    if (text_) {
      stream() << text_form << "\n";
      return;
    }
    json j = report_envelope(kind_, config_);
    for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
    stream() << j.dump() << "\n";
  }

 private:
  bool text_;
  std::string kind_;
  json config_;
  std::unique_ptr<std::ofstream> file_;
};

Rational rational_flag(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("--") + name + ": not a rational: '" + text + "'");
  }
}

RQSpec spec_flag(const std::string& text, const char* name = "spec") {
  if (text.empty()) throw UsageError(std::string("--") + name + " is required");
  try {
    return RQSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

Shape shape_flag(const Options& o) {
  if (o.box && o.total) throw UsageError("--box and --total are exclusive");
  if (o.total) return Shape::total(*o.total);
  return Shape::box(o.box.value_or(4));
}

PrecisionContext precision(const Options& o) {
  if (o.digits < 10 || o.digits > 5000) throw UsageError("--digits must lie in [10, 5000]");
  return PrecisionContext::with_digits(o.digits);
}

// The canonical argument list; re-running it reproduces the report.
json job_config(const std::string& sub, const std::vector<std::pair<std::string, std::string>>& flags) {
  json argv = json::array({sub});
  json options = json::object();
  for (const auto& [k, v] : flags) {
    argv.push_back("--" + k);
    if (!v.empty()) argv.push_back(v);
    options[k] = v;
  }
  return json{{"subcommand", sub}, {"options", options}, {"argv", argv}};
}

std::string spec_text(const RQSpec& s) { return s.to_string(); }

json series_terms(const FormalSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) terms.push_back(json::array({json_rational(t.exponent), json_rational(t.coeff)}));
  return terms;
}

int cmd_series(const Options& o) {
  RQSpec spec = spec_flag(o.spec);
  Rational order = o.order.empty() ? Rational(20) : rational_flag(o.order, "order");
  Rational power = rational_flag(o.power, "power");
  if (power <= 0) throw UsageError("--power must be positive");
  NormalizedSpec norm = normalize_rational_spec(spec);
  FormalSeries s = substitute_power(rq_series(spec, order / power), power);
  Sink sink(o, "series",
            job_config("series", {{"spec", spec_text(spec)}, {"power", power.get_str()}, {"order", order.get_str()}}));
  json payload{{"spec", spec_text(spec)},
               {"Q", json_rational(spec.Q())},
               {"normalized",
                {{"spec", spec_text(norm.spec)},
                 {"substitution", json_rational(norm.substitution)},
                 {"inverted", norm.inverted}}},
               {"series", s.to_string()},
               {"terms", series_terms(s)}};
  sink.emit(payload, s.to_string());
  return kOk;
}

int cmd_tau(const Options& o) {
  RQSpec spec = spec_flag(o.spec);
  if (!spec.is_integer()) throw UsageError("tau needs an integer spec");
  long nmax = o.nmax > 0 ? o.nmax : 50;
  TauTable table(spec);
  json tau = json::array(), chi = json::array();
  std::ostringstream text;
  for (long n = 1; n <= nmax; ++n) {
    tau.push_back(table.tau(n));
    text << "tau(" << n << ") = " << table.tau(n) << "\n";
  }
  for (long n = 0; n < spec.ip(); ++n) chi.push_back(table.chi(n));
  Sink sink(o, "tau", job_config("tau", {{"spec", spec_text(spec)}, {"nmax", std::to_string(nmax)}}));
  std::string t = text.str();
  if (!t.empty()) t.pop_back();
  sink.emit({{"spec", spec_text(spec)}, {"chi_period", chi}, {"tau", tau}}, t);
  return kOk;
}

std::string relation_text(const TauRelation& rel) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < rel.coeffs.size(); ++j) {
    const Integer& c = rel.coeffs[j];
    if (c == 0) continue;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    Integer m = abs(c);
    if (m != 1) out << m.get_str() << "*";
    out << "tau(" << (j + 1 == 1 ? std::string("n") : std::to_string(j + 1) + "n") << ")";
  }
  out << " = 0  [" << rel.status << ", n <= " << rel.verified_to << "]";
  return out.str();
}

int cmd_tau_scan(const Options& o) {
  RQSpec spec = spec_flag(o.spec);
  if (!spec.is_integer()) throw UsageError("tau-scan needs an integer spec");
  if (o.J < 1) throw UsageError("--J must be at least 1");
  long nmax = o.nmax > 0 ? o.nmax : spec.ip() * spec.ip();
  TauTable table(spec);
  TauScan scan = tau_relation_scan(table, o.J, nmax, o.reverify);
  Sink sink(o, "tau-relation",
            job_config("tau-scan", {{"spec", spec_text(spec)},
                                    {"J", std::to_string(o.J)},
                                    {"nmax", std::to_string(nmax)},
                                    {"reverify", std::to_string(scan.reverify_max)}}));
  for (const auto& rel : scan.relations) sink.emit(relation_record(scan, rel), relation_text(rel));
  for (const auto& rel : scan.dropped) sink.emit(relation_record(scan, rel), "dropped: " + relation_text(rel));
  return scan.dropped.empty() ? kOk : kFailed;
}

int cmd_mine(const Options& o) {
  RQSpec u = spec_flag(o.spec);
  RQSpec v = o.vspec.empty() ? u : spec_flag(o.vspec, "vspec");
  Rational alpha = rational_flag(o.alpha, "alpha");
  Rational beta = rational_flag(o.beta, "beta");
  if (alpha <= 0 || beta <= 0) throw UsageError("--alpha and --beta must be positive");
  Shape shape = shape_flag(o);
  Rational order = o.order.empty() ? Rational(0) : rational_flag(o.order, "order");
  MiningResult res;
  try {
    res = mine_cross(u, alpha, v, beta, shape, order);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::pair<std::string, std::string>> flags{{"spec", spec_text(u)}};
  if (!o.vspec.empty()) flags.emplace_back("vspec", spec_text(v));
  flags.insert(flags.end(), {{"alpha", alpha.get_str()},
                             {"beta", beta.get_str()},
                             {shape.kind == Shape::Kind::box ? "box" : "total", std::to_string(shape.size)},
                             {"order", res.order.get_str()}});
  Sink sink(o, "mine", job_config("mine", flags));
  json payload = to_json(res);
  payload["u"] = "R(" + spec_text(u) + "; q^" + alpha.get_str() + ")";
  payload["v"] = "R(" + spec_text(v) + "; q^" + beta.get_str() + ")";
  payload["shape"] = shape.to_string();
  std::ostringstream text;
  text << payload["u"].get<std::string>() << ", " << payload["v"].get<std::string>() << ", " << shape.to_string()
       << ", order " << res.order.get_str();
  for (const auto& m : res.polynomials) text << "\n  " << m.poly.to_string() << " = 0";
  for (const auto& d : res.dropped)
    text << "\n  dropped: " << d.poly.to_string() << " (fails at q^" << d.first_failure_exponent.get_str() << ")";
  sink.emit(payload, text.str());
  return res.dropped.empty() ? kOk : kFailed;
}

int cmd_verify(const Options& o) {
  Rational order = o.order.empty() ? Rational(200) : rational_flag(o.order, "order");
  std::vector<std::pair<std::string, std::string>> flags{{"order", order.get_str()}};
  if (!o.id.empty()) flags.emplace_back("id", o.id);
  Sink sink(o, "identity", job_config("verify-identities", flags));
  bool any = false, proved_failed = false;
  long verified = 0, failed = 0;
  for (const auto& rec : identity_registry()) {
    if (!o.id.empty() && rec.id != o.id && rec.paper_eq != o.id) continue;
    any = true;
    IdentityOutcome out = verify_identity(rec, order);
    (out.verified ? verified : failed)++;
    if (!out.verified && out.paper_status == PaperStatus::proved) proved_failed = true;
    std::string text = rec.id + (rec.paper_eq.empty() ? "" : " (" + rec.paper_eq + ")") + ": " +
                       (out.verified ? "verified to q^" + out.verified_order.get_str()
                                     : "FAILED at q^" + out.first_failure_exponent->get_str()) +
                       " [" + to_string(out.paper_status) + "]";
    sink.emit(to_json(out), text);
  }
  if (!any) throw UsageError("no registry entry matches --id " + o.id);
  sink.emit({{"summary", {{"verified", verified}, {"failed", failed}, {"paper_proved_failed", proved_failed}}}},
            "verified " + std::to_string(verified) + ", failed " + std::to_string(failed));
  return proved_failed ? kFailed : kOk;
}

Real nome_flag(const Options& o, const PrecisionContext& ctx, std::vector<std::pair<std::string, std::string>>& flags) {
  if (!o.q.empty()) {
    Real q(ctx.bits());
    try {
      q = Real(o.q, ctx.bits());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--q: ") + e.what());
    }
    if (q.sign() <= 0 || q >= ctx.from(1L)) throw UsageError("--q must lie in (0, 1)");
    flags.emplace_back("q", o.q);
    return q;
  }
  Rational r = rational_flag(o.r, "r");
  if (r <= 0) throw UsageError("--r must be positive");
  flags.emplace_back("r", r.get_str());
  return nome(r, ctx);
}

int cmd_eval(const Options& o) {
  RQSpec spec = spec_flag(o.spec);
  PrecisionContext ctx = precision(o);
  std::vector<std::pair<std::string, std::string>> flags{{"spec", spec_text(spec)}, {"digits", std::to_string(o.digits)}};
  Real q = nome_flag(o, ctx, flags);
  Evaluated prod = eval_rq(spec, q, ctx);
  Evaluated theta = eval_rq_theta(spec, q, ctx);
  Evaluated der = eval_rq_derivative(spec, q, ctx);
  const int d = static_cast<int>(o.digits);
  Sink sink(o, "eval", job_config("eval", flags));
  json payload{{"spec", spec_text(spec)},
               {"q", q.to_string(d)},
               {"digits", o.digits},
               {"product", prod.value.to_string(d)},
               {"product_error", prod.error.to_string(6)},
               {"theta", theta.value.to_string(d)},
               {"theta_error", theta.error.to_string(6)},
               {"derivative", der.value.to_string(d)},
               {"derivative_error", der.error.to_string(6)}};
  sink.emit(payload, "R(" + spec_text(spec) + "; " + q.to_string(20) + ") = " + prod.value.to_string(d) +
                         "\ndR/dq = " + der.value.to_string(d));
  return kOk;
}

std::string check_text(const CheckReport& c) {
  std::ostringstream out;
  out << c.check_id << (c.paper_eq.empty() ? "" : " (" + c.paper_eq + ")") << " [" << c.variant << "]";
  if (c.r) out << " r=" << c.r->get_str();
  out << ": " << (c.passed ? "pass" : "FAIL") << "  " << (c.relative ? "rel_err " : "abs_err ")
      << (c.relative ? c.rel_err : c.abs_err).to_string(3);
  return out.str();
}

int cmd_check(const Options& o) {
  PrecisionContext ctx = precision(o);
  const std::string& w = o.which;
  std::vector<std::pair<std::string, std::string>> flags{{"case", w}, {"digits", std::to_string(o.digits)}};
  std::vector<CheckReport> reports;
  auto r_flag = [&] {
    Rational r = rational_flag(o.r, "r");
    if (r <= 0) throw UsageError("--r must be positive");
    flags.emplace_back("r", r.get_str());
    return r;
  };
  auto add = [&](std::vector<CheckReport> v) { reports.insert(reports.end(), v.begin(), v.end()); };
  if (w == "k1") {
    reports.push_back(check_k1(ctx));
  } else if (w == "h-closed") {
    reports.push_back(check_h_closed_form(r_flag(), ctx));
  } else if (w == "h-radical") {
    add(check_h_radical(ctx));
  } else if (w == "modulus") {
    add(check_modulus_relations(r_flag(), ctx));
  } else if (w == "rgg") {
    add(check_derivative_formulas(DerivativeCase::rgg, r_flag(), ctx));
  } else if (w == "cubic") {
    add(check_derivative_formulas(DerivativeCase::cubic, r_flag(), ctx));
  } else if (w == "n-function") {
    add(check_derivative_formulas(DerivativeCase::n_function, r_flag(), ctx));
  } else if (w == "examples") {
    add(check_derivative_formulas(DerivativeCase::examples, 1, ctx));
  } else if (w == "y-q4") {
    reports.push_back(check_y_q4(r_flag(), ctx));
  } else if (w == "v1") {
    reports.push_back(check_v1(r_flag(), ctx));
  } else if (w == "theta") {
    RQSpec spec = spec_flag(o.spec);
    flags.emplace_back("spec", spec_text(spec));
    Rational r = r_flag();
    Real q = nome(r, ctx);
    reports.push_back(make_report("theta_form", "17", "printed", r, q, eval_rq(spec, q, ctx).value,
                                  eval_rq_theta(spec, q, ctx).value, ctx.digits - 10, false, ctx,
                                  "theta_4 quotient against the product, spec (" + spec_text(spec) + ")"));
  } else if (w == "cf") {
    if (o.A < 1 || o.B <= o.A) throw UsageError("--A and --B need 0 < A < B");
    flags.emplace_back("A", std::to_string(o.A));
    flags.emplace_back("B", std::to_string(o.B));
    Real q = nome_flag(o, ctx, flags);
    RQSpec spec = theorem6_spec(o.A, o.B);
    CfValue cf = eval_cf(CfKind::theorem6, {ctx.zero(), ctx.zero(), o.A, o.B}, q, ctx);
    reports.push_back(make_report("continued_fraction_product", "28", "printed", std::nullopt, q,
                                  eval_product(rq_star_progressions(spec), q, ctx).value, cf.value, ctx.digits - 10,
                                  false, ctx, "R*(" + spec_text(spec) + ") against its continued fraction"));
  } else if (w == "theorem7") {
    RQSpec spec = spec_flag(o.spec);
    flags.emplace_back("spec", spec_text(spec));
    Real q = nome_flag(o, ctx, flags);
    Theorem7Report t;
    try {
      t = check_theorem7(spec, q, ctx);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    reports.push_back(make_report("root_of_unity_product", "36", "printed", std::nullopt, q, t.lhs, t.rhs.re,
                                  ctx.digits - 10, false, ctx, "imaginary part " + abs(t.rhs.im).to_string(3)));
    reports.back().abs_err = t.abs_mismatch;
    reports.back().passed = t.abs_mismatch < power_of_ten(-(ctx.digits - 10), ctx.bits());
  } else {
    throw UsageError("unknown --case '" + w +
                     "' (k1, h-closed, h-radical, modulus, rgg, cubic, n-function, examples, y-q4, v1, theta, cf, "
                     "theorem7)");
  }
  Sink sink(o, "check", job_config("check", flags));
  bool all = true;
  for (const auto& c : reports) {
    all = all && c.passed;
    sink.emit(to_json(c), check_text(c));
  }
  return all ? kOk : kFailed;
}

int cmd_recognize(const Options& o) {
  PrecisionContext ctx = precision(o);
  std::vector<std::pair<std::string, std::string>> flags{{"degree", std::to_string(o.degree)},
                                                         {"digits", std::to_string(o.digits)}};
  Real x(ctx.bits());
  std::string source;
  int given = !o.value.empty() + !o.spec.empty() + !o.agile.empty();
  if (given != 1) throw UsageError("give exactly one of --value, --spec, --agile");
  if (!o.value.empty()) {
    try {
      x = Real(o.value, ctx.bits());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--value: ") + e.what());
    }
    flags.emplace_back("value", o.value);
    source = o.value;
  } else if (!o.spec.empty()) {
    RQSpec spec = spec_flag(o.spec);
    flags.emplace_back("spec", spec_text(spec));
    Real q = nome_flag(o, ctx, flags);
    x = eval_rq(spec, q, ctx).value;
    source = "R(" + spec_text(spec) + "; q)";
  } else {
    Rational a, p;
    auto comma = o.agile.find(',');
    if (comma == std::string::npos) throw UsageError("--agile must be 'a,p'");
    a = rational_flag(o.agile.substr(0, comma), "agile");
    p = rational_flag(o.agile.substr(comma + 1), "agile");
    if (a <= 0 || p <= a) throw UsageError("--agile needs 0 < a < p");
    flags.emplace_back("agile", a.get_str() + "," + p.get_str());
    Real q = nome_flag(o, ctx, flags);
    x = pow(q, agile_weight(a, p)) * eval_agile(a, p, q, ctx).value;
    source = "q^w [" + a.get_str() + "," + p.get_str() + "; q]";
  }
  std::optional<Recognition> rec;
  try {
    rec = recognize_algebraic(x, o.degree, ctx);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Sink sink(o, "recognize", job_config("recognize", flags));
  const int d = static_cast<int>(o.digits);
  json payload{{"x", x.to_string(d)}, {"source", source}, {"max_degree", o.degree}, {"digits", o.digits}};
  std::string text;
  if (rec) {
    json coeffs = json::array();
    for (const auto& c : rec->poly) coeffs.push_back(json_integer(c));
    payload["polynomial"] = polynomial_text(rec->poly);
    payload["coefficients"] = coeffs;
    payload["degree"] = rec->poly.size() - 1;
    payload["residual"] = rec->residual.to_string(6);
    payload["height"] = json_integer(rec->height);
    text = polynomial_text(rec->poly) + " = 0  (residual " + rec->residual.to_string(3) + ")";
  } else {
    payload["polynomial"] = nullptr;
    text = "no polynomial of degree <= " + std::to_string(o.degree);
  }
  sink.emit(payload, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramanujan quantity workbench: exact q-series, tau relations, modular equations, numeric checks"};
  app.set_version_flag("--version", std::string(rq::kVersion));
  app.require_subcommand(1);
  Options o;

  auto output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report to this file");
    auto* text = sub->add_flag("--text", o.text, "Plain text instead of JSON lines");
    sub->add_flag("--json", "JSON lines (default)")->excludes(text);
  };

  auto* series = app.add_subcommand("series", "Truncated q-series of R(a,b,p;q^power)");
  series->add_option("--spec", o.spec, "a,b,p (rationals allowed)")->required();
  series->add_option("--order", o.order, "Last exponent kept (default 20)");
  series->add_option("--power", o.power, "Substitute q -> q^power");
  output(series);

  auto* tau = app.add_subcommand("tau", "Character period and tau(n)");
  tau->add_option("--spec", o.spec, "a,b,p")->required();
  tau->add_option("--nmax", o.nmax, "Largest n (default 50)");
  output(tau);

  auto* scan = app.add_subcommand("tau-scan", "Linear relations sum c_j tau(j n) = 0");
  scan->add_option("--spec", o.spec, "a,b,p")->required();
  scan->add_option("--J", o.J, "Largest multiplier j")->required();
  scan->add_option("--nmax", o.nmax, "Rows n <= nmax (default p^2)");
  scan->add_option("--reverify", o.reverify, "Re-check up to this n (default 4 nmax)");
  output(scan);

  auto* mine = app.add_subcommand("mine", "Polynomial relations between R(spec;q^alpha) and R(vspec;q^beta)");
  mine->add_option("--spec", o.spec, "a,b,p for u")->required();
  mine->add_option("--vspec", o.vspec, "a,b,p for v (default: --spec)");
  mine->add_option("--alpha", o.alpha, "u = R(q^alpha)");
  mine->add_option("--beta", o.beta, "v = R(q^beta)");
  mine->add_option("--box", o.box, "Monomials u^i v^j with i, j <= s");
  mine->add_option("--total", o.total, "Monomials with i + j <= d");
  mine->add_option("--order", o.order, "Series order (default: smallest sufficient)");
  output(mine);

  auto* verify = app.add_subcommand("verify-identities", "Check the identity registry");
  verify->add_option("--order", o.order, "Order to verify to (default 200)");
  verify->add_option("--id", o.id, "Only this entry (id or equation label)");
  output(verify);

  auto* eval = app.add_subcommand("eval", "R, its theta form and dR/dq at one point");
  eval->add_option("--spec", o.spec, "a,b,p")->required();
  auto* eval_q = eval->add_option("--q", o.q, "Decimal q in (0,1)");
  eval->add_option("--r", o.r, "q = exp(-pi sqrt(r)) (default 1)")->excludes(eval_q);
  eval->add_option("--digits", o.digits, "Decimal digits (default 60)");
  output(eval);

  auto* check = app.add_subcommand("check", "Numeric closed-form checks");
  check->add_option("--case", o.which, "k1, h-closed, h-radical, modulus, rgg, cubic, n-function, examples, y-q4, "
                                       "v1, theta, cf, theorem7")
      ->required();
  check->add_option("--spec", o.spec, "a,b,p for theta and theorem7");
  check->add_option("--r", o.r, "q = exp(-pi sqrt(r)) (default 1)");
  check->add_option("--q", o.q, "Decimal q for cf and theorem7");
  check->add_option("--A", o.A, "cf: A (default 1)");
  check->add_option("--B", o.B, "cf: B (default 2)");
  check->add_option("--digits", o.digits, "Decimal digits (default 60)");
  output(check);

  auto* recog = app.add_subcommand("recognize", "Integer polynomial annihilating a number");
  recog->add_option("--value", o.value, "Decimal value");
  recog->add_option("--spec", o.spec, "Use R(a,b,p;q)");
  recog->add_option("--agile", o.agile, "Use q^w [a,p;q] with the weight that makes it modular");
  auto* recog_r = recog->add_option("--r", o.r, "q = exp(-pi sqrt(r)) (default 1)");
  recog->add_option("--q", o.q, "Decimal q")->excludes(recog_r);
  recog->add_option("--degree", o.degree, "Largest degree (default 4)");
  recog->add_option("--digits", o.digits, "Decimal digits (default 60)");
  output(recog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*series) return cmd_series(o);
    if (*tau) return cmd_tau(o);
    if (*scan) return cmd_tau_scan(o);
    if (*mine) return cmd_mine(o);
    if (*verify) return cmd_verify(o);
    if (*eval) return cmd_eval(o);
    if (*check) return cmd_check(o);
    if (*recog) return cmd_recognize(o);
  } catch (const UsageError& e) {
    std::cerr << "rq: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rq: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "rq: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
