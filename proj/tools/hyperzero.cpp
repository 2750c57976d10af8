// hyperzero: zeros of regular polynomials over the quaternions/octonions.
//
// Verbs: zeros, factor, product, normal, remainder, camshaft, fta,
// series-divide, verify.  Exit codes: 0 success, 1 mathematical assertion
// failure, 2 parse/usage error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>

#include "hyperzero/camshaft.hpp"
#include "hyperzero/format.hpp"
#include "hyperzero/json_io.hpp"
#include "hyperzero/parse.hpp"
#include "hyperzero/series.hpp"
#include "hyperzero/zero_analysis.hpp"

namespace {

struct Options {
  hz::Tolerances tol;
  std::size_t order = 64;
  std::uint64_t seed = 1;
  bool json = false;
  bool quaternion_only = false;
};

// "-" means: read the expression from stdin.
std::string slurp(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

hz::OctPoly read_poly(const std::string& arg, const Options& opt) {
  const hz::OctPoly f = hz::parse_poly(slurp(arg), opt.tol);
  if (opt.quaternion_only && !f.is_quaternionic(opt.tol))
    throw hz::ParseError("input is not quaternionic (uses k, ik, jk or ijk)", 0);
  return f;
}

const char* kind_name(hz::ZeroKind kind) {
  switch (kind) {
    case hz::ZeroKind::Real: return "real";
    case hz::ZeroKind::Isolated: return "isolated";
    case hz::ZeroKind::Spherical: return "spherical";
  }
  return "?";
}

void print_record(const hz::ZeroRecord& rec, const Options& opt) {
  std::cout << "  class (t=" << hz::format_real(rec.cls.t, opt.tol)
            << ", n=" << hz::format_real(rec.cls.n, opt.tol) << ")  "
            << kind_name(rec.kind) << "  multiplicity " << rec.multiplicity;
  if (rec.kind == hz::ZeroKind::Spherical)
    std::cout << "  representative " << hz::format_octonion(rec.point, opt.tol);
  else
    std::cout << "  at " << hz::format_octonion(rec.point, opt.tol);
  std::cout << "\n";
}

int cmd_zeros(const std::string& expr, const Options& opt) {
  const hz::OctPoly f = read_poly(expr, opt);
  const hz::FtaSummary summary = hz::verify_fta(f, opt.tol);
  if (opt.json) {
    std::cout << hz::to_json(summary).dump(2) << "\n";
    return 0;
  }
  std::cout << "f = " << hz::format_poly(f, opt.tol) << "\n"
            << "zeros (" << summary.records.size() << " classes):\n";
  for (const hz::ZeroRecord& rec : summary.records) print_record(rec, opt);
  std::cout << "total multiplicity " << summary.total_multiplicity << " = degree "
            << summary.degree << "\n";
  return 0;
}

int cmd_factor(const std::string& expr, const Options& opt) {
  const hz::OctPoly f = read_poly(expr, opt);
  const hz::Factorization fact = hz::factorize(f, opt.tol);
  if (opt.json) {
    std::cout << hz::to_json(fact).dump(2) << "\n";
    return 0;
  }
  std::cout << "f = " << hz::format_poly(f, opt.tol) << "\n";
  for (const hz::Octonion& alpha : fact.factors)
    std::cout << "  (w - (" << hz::format_octonion(alpha, opt.tol) << ")) *\n";
  std::cout << "  " << hz::format_octonion(fact.constant, opt.tol)
            << "   (right-nested)\n";
  return 0;
}

int cmd_product(const std::string& lhs, const std::string& rhs, const Options& opt) {
  const hz::OctPoly fg = hz::star_mul(read_poly(lhs, opt), read_poly(rhs, opt), opt.tol);
  if (opt.json)
    std::cout << hz::to_json(fg).dump(2) << "\n";
  else
    std::cout << hz::format_poly(fg, opt.tol) << "\n";
  return 0;
}

int cmd_normal(const std::string& expr, const Options& opt) {
  const hz::RealPoly nf = hz::normal(read_poly(expr, opt), opt.tol);
  if (opt.json)
    std::cout << hz::to_json(nf).dump(2) << "\n";
  else
    std::cout << hz::format_poly(nf, opt.tol) << "\n";
  return 0;
}

int cmd_remainder(const std::string& expr, double t, double n, const Options& opt) {
  const hz::OctPoly f = read_poly(expr, opt);
  const hz::Remainder rem = hz::remainder_at(f, {t, n}, opt.tol);
  if (opt.json) {
    std::cout << hz::to_json(rem).dump(2) << "\n";
    return 0;
  }
  std::cout << hz::format_poly(rem.as_poly(), opt.tol) << "\n";
  return 0;
}

int cmd_fta(const std::string& expr, const Options& opt) {
  const hz::OctPoly f = read_poly(expr, opt);
  const hz::FtaSummary summary = hz::verify_fta(f, opt.tol);
  if (opt.json) {
    std::cout << hz::to_json(summary).dump(2) << "\n";
    return 0;
  }
  std::cout << "degree " << summary.degree << ": " << summary.real_count << " real, "
            << summary.isolated_count << " isolated, " << summary.spherical_count
            << " spherical classes; total multiplicity " << summary.total_multiplicity
            << "\n";
  return 0;
}

int cmd_camshaft(const std::string& lhs, const std::string& rhs, const Options& opt) {
  const hz::OctPoly f = read_poly(lhs, opt);
  const hz::OctPoly g = read_poly(rhs, opt);
  const hz::OctPoly fg = hz::star_mul(f, g, opt.tol);
  const auto zf = hz::zero_set(f, opt.tol);
  const auto zg = hz::zero_set(g, opt.tol);
  const auto zp = hz::zero_set(fg, opt.tol);

  hz::Tolerances loose = opt.tol;
  loose.cls = std::max(opt.tol.cls, 1e-4);
  int mismatches = 0;
  hz::json out = hz::json::array();
  for (const hz::ZeroRecord& direct : zp) {
    std::optional<hz::ZeroRecord> rec_f, rec_g;
    for (const hz::ZeroRecord& rec : zf)
      if (hz::same_class(rec.cls, direct.cls, loose)) rec_f = rec;
    for (const hz::ZeroRecord& rec : zg)
      if (hz::same_class(rec.cls, direct.cls, loose)) rec_g = rec;
    const hz::SpherePrediction pred =
        hz::predict(direct.cls, rec_f, rec_g, hz::remainder_at(f, direct.cls, opt.tol),
                    hz::remainder_at(g, direct.cls, opt.tol), opt.tol);
    const bool kind_ok = pred.predicted.kind == direct.kind;
    const bool mult_ok = pred.predicted.multiplicity == direct.multiplicity;
    if (!pred.borderline && (!kind_ok || !mult_ok)) ++mismatches;
    if (opt.json) {
      hz::json row = hz::to_json(pred);
      row["direct"] = hz::to_json(direct);
      row["match"] = kind_ok && mult_ok;
      out.push_back(row);
    } else {
      std::cout << hz::to_string(pred.case_tag) << "  predicted ";
      print_record(pred.predicted, opt);
      std::cout << "  direct    ";
      print_record(direct, opt);
      if (pred.borderline) std::cout << "  (borderline degeneracy test)\n";
    }
  }
  if (opt.json) std::cout << out.dump(2) << "\n";
  return mismatches == 0 ? 0 : 1;
}

int cmd_series_divide(const std::string& expr, const std::string& alpha_text,
                      double radius, const Options& opt) {
  const hz::OctPoly f = read_poly(expr, opt);
  const hz::Octonion alpha = hz::parse_octonion(slurp(alpha_text), opt.tol);
  hz::TruncatedSeries s = hz::TruncatedSeries::from_poly(f, opt.order);
  s.radius = radius;
  auto [g, r] = hz::series_divide_linear(s, alpha, opt.order, opt.tol);
  if (opt.json) {
    hz::json out;
    out["quotient"] = hz::to_json(g);
    out["remainder"] = hz::to_json(r);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "remainder f(alpha) = " << hz::format_octonion(r, opt.tol) << "\n";
  for (std::size_t idx = 0; idx <= g.order; ++idx)
    std::cout << "b_" << idx << " = " << hz::format_octonion(g.coeff(idx), opt.tol)
              << "\n";
  return 0;
}

int cmd_verify(std::uint64_t trials, int max_degree, const Options& opt) {
  const hz::VerifyReport report =
      hz::verify_products(trials, max_degree, opt.seed, opt.tol);
  if (opt.json) {
    std::cout << hz::to_json(report).dump(2) << "\n";
  } else {
    std::cout << report.passes << "/" << report.trials << " trials passed ("
              << report.borderline << " borderline), worst normal residual "
              << report.worst_normal_residual << ", worst point error "
              << report.worst_point_error << "\n";
    for (const hz::TrialFailure& failure : report.failures)
      std::cerr << "trial " << failure.trial << ": " << failure.what << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero sets of regular polynomials over quaternions and octonions"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol-abs", opt.tol.abs, "absolute tolerance");
  app.add_option("--tol-rel", opt.tol.rel, "relative tolerance");
  app.add_option("--tol-root", opt.tol.root, "root-finder tolerance");
  app.add_option("--tol-class", opt.tol.cls, "conjugacy-class matching tolerance");
  app.add_option("--order", opt.order, "series truncation order");
  app.add_option("--seed", opt.seed, "random seed for verify");
  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_flag("--quaternion", opt.quaternion_only,
               "reject inputs outside the quaternion subalgebra");

  std::string expr, rhs, alpha;
  double class_t = 0.0, class_n = 0.0, radius = 1e308;
  std::uint64_t trials = 500;
  int max_degree = 4;

  auto* zeros = app.add_subcommand("zeros", "classify and count all zeros");
  zeros->add_option("poly", expr, "polynomial expression (or - for stdin)")->required();

  auto* factor = app.add_subcommand("factor", "factor into nested linear factors");
  factor->add_option("poly", expr)->required();

  auto* product = app.add_subcommand("product", "star product of two polynomials");
  product->add_option("lhs", expr)->required();
  product->add_option("rhs", rhs)->required();

  auto* normal = app.add_subcommand("normal", "normal polynomial N(f)");
  normal->add_option("poly", expr)->required();

  auto* remainder = app.add_subcommand("remainder", "remainder modulo a class");
  remainder->add_option("poly", expr)->required();
  remainder->add_option("t", class_t, "class trace")->required();
  remainder->add_option("n", class_n, "class squared norm")->required();

  auto* camshaft = app.add_subcommand("camshaft",
                                      "predict zeros of f*g from the factors");
  camshaft->add_option("lhs", expr)->required();
  camshaft->add_option("rhs", rhs)->required();

  auto* fta = app.add_subcommand("fta", "multiplicity count summary");
  fta->add_option("poly", expr)->required();

  auto* sdiv = app.add_subcommand("series-divide", "divide a truncated series by w - alpha");
  sdiv->add_option("poly", expr)->required();
  sdiv->add_option("alpha", alpha)->required();
  sdiv->add_option("--radius", radius, "declared convergence radius");

  auto* verify = app.add_subcommand("verify", "randomized product-law verification");
  verify->add_option("--trials", trials, "number of random products");
  verify->add_option("--degree", max_degree, "max factor degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (zeros->parsed()) return cmd_zeros(expr, opt);
    if (factor->parsed()) return cmd_factor(expr, opt);
    if (product->parsed()) return cmd_product(expr, rhs, opt);
    if (normal->parsed()) return cmd_normal(expr, opt);
    if (remainder->parsed()) return cmd_remainder(expr, class_t, class_n, opt);
    if (camshaft->parsed()) return cmd_camshaft(expr, rhs, opt);
    if (fta->parsed()) return cmd_fta(expr, opt);
    if (sdiv->parsed()) return cmd_series_divide(expr, alpha, radius, opt);
    if (verify->parsed()) return cmd_verify(trials, max_degree, opt);
  } catch (const hz::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const hz::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 2;
}
