#include <doctest.h>

#include <cmath>

#include "hyperzero/zero_analysis.hpp"
#include "support.hpp"

using namespace hz;
using namespace hz::test;

namespace {
const Octonion I = Octonion::i();
const Octonion J = Octonion::j();
const Octonion IJ = Octonion::ij();
const Octonion K = Octonion::k();

const OctPoly kBookPoly({J, I, Octonion(1.0)});  // w^2 + wi + j

void check_poly_eq(const OctPoly& a, const OctPoly& b, double eps) {
  REQUIRE(a.degree() == b.degree());
  for (std::size_t idx = 0; idx < a.coeffs().size(); ++idx)
    CHECK(distance(a.coeff(idx), b.coeff(idx)) < eps);
}
}  // namespace

TEST_CASE("linear division basics") {
  // Delta_alpha = (w - alpha)*(w - conj(alpha))
  const Octonion alpha = rand_nonreal();
  const OctPoly delta = star_mul(OctPoly::linear(alpha), OctPoly::linear(conj(alpha)));
  auto [g, r] = divide_linear(delta, alpha);
  CHECK(norm(r) < 1e-12);
  CHECK(distance(g.coeff(0), -conj(alpha)) < 1e-12);
  CHECK(distance(g.coeff(1), Octonion(1.0)) < 1e-12);

  auto [g0, r0] = divide_linear(kBookPoly, Octonion());
  CHECK(distance(r0, J) == doctest::Approx(0.0));
  CHECK(distance(g0.coeff(0), I) == doctest::Approx(0.0));
}

TEST_CASE("division reconstruction and remainder = evaluation") {
  for (int it = 0; it < 40; ++it) {
    const OctPoly f = rand_poly(1 + static_cast<int>(rng()() % 6));
    const Octonion alpha = rand_oct();
    auto [g, r] = divide_linear(f, alpha);
    CHECK(g.degree() == f.degree() - 1);
    CHECK(distance(r, evaluate(f, alpha)) < 1e-11);
    const OctPoly back = add(star_mul(OctPoly::linear(alpha), g), OctPoly::constant(r));
    check_poly_eq(back, f, 1e-11);
  }
}

TEST_CASE("remainders of the book example") {
  const Remainder rb = remainder_at(kBookPoly, {1.0, 1.0});
  REQUIRE(rb.linear);
  CHECK(distance(rb.a, Octonion(1.0) + I) < 1e-12);          // w(1+i)
  CHECK(distance(rb.b, -(Octonion(1.0) - J)) < 1e-12);       // -(1-j)

  const Remainder rg = remainder_at(kBookPoly, {-1.0, 1.0});
  REQUIRE(rg.linear);
  CHECK(distance(rg.a, Octonion(-1.0) + I) < 1e-12);
  CHECK(distance(rg.b, -(Octonion(1.0) - J)) < 1e-12);
}

TEST_CASE("remainder vanishes on exact multiples") {
  const Octonion alpha = rand_nonreal();
  const ConjugacyClass c = class_of(alpha);
  const OctPoly h = rand_poly(3);
  const OctPoly f = star_mul(OctPoly::from_real(char_poly(c)), h);
  const Remainder rem = remainder_at(f, c);
  const double scale = f.max_coeff_norm();
  CHECK(norm(rem.a) < 1e-10 * scale);
  CHECK(norm(rem.b) < 1e-10 * scale);
}

TEST_CASE("remainder reconstruction through divide_class") {
  for (int it = 0; it < 30; ++it) {
    const OctPoly f = rand_poly(2 + static_cast<int>(rng()() % 5));
    const ConjugacyClass c = class_of(rand_nonreal());
    auto [h, rem] = divide_class(f, c);
    const OctPoly back =
        add(star_mul(OctPoly::from_real(char_poly(c)), h), rem.as_poly());
    check_poly_eq(back, f, 1e-10);
  }
}

TEST_CASE("remainder depends only on the conjugacy class") {
  for (int it = 0; it < 20; ++it) {
    const OctPoly f = rand_poly(4);
    const ConjugacyClass c = class_of(rand_nonreal());
    const Remainder canonical = remainder_at(f, c);
    for (int rep = 0; rep < 20; ++rep) {
      const Octonion point = point_on_sphere(c, rand_imag_unit());
      const Remainder other = remainder_at_representative(f, point);
      CHECK(distance(other.a, canonical.a) < 1e-9 * (1.0 + norm(canonical.a)));
      CHECK(distance(other.b, canonical.b) < 1e-9 * (1.0 + norm(canonical.b)));
    }
  }
}

TEST_CASE("normal remainder identities") {
  // Real alpha: r_alpha(N(f)) = n_r with r = r_alpha(f).
  for (int it = 0; it < 20; ++it) {
    const OctPoly f = rand_poly(4);
    const double alpha = rand_real();
    auto [g, r] = divide_linear(f, Octonion(alpha));
    const RealPoly nf = normal(f);
    auto [q, rem] = real_div_rem(nf, RealPoly({-alpha, 1.0}));
    CHECK(rem.coeff(0) == doctest::Approx(norm_sq(r)).epsilon(1e-9));
  }
  // Non-real alpha: r_alpha(N(f)) = w(a conj(b) + b conj(a) + t n_a) + n_b - n n_a.
  for (int it = 0; it < 20; ++it) {
    const OctPoly f = rand_poly(4);
    const ConjugacyClass c = class_of(rand_nonreal());
    const Remainder rf = remainder_at(f, c);
    const RealPoly nf = normal(f);
    auto [q, rem] = real_div_rem(nf, char_poly(c));
    const double want_a =
        mul(rf.a, conj(rf.b))[0] + mul(rf.b, conj(rf.a))[0] + c.t * norm_sq(rf.a);
    const double want_b = norm_sq(rf.b) - c.n * norm_sq(rf.a);
    const double scale = 1.0 + nf.max_abs_coeff();
    CHECK(std::fabs(rem.coeff(1) - want_a) < 1e-9 * scale);
    CHECK(std::fabs(rem.coeff(0) - want_b) < 1e-9 * scale);
  }
}

TEST_CASE("classification of the book example") {
  const auto rec1 = classify_at(kBookPoly, {1.0, 1.0});
  REQUIRE(rec1.has_value());
  CHECK(rec1->kind == ZeroKind::Isolated);
  CHECK(distance(rec1->point, (Octonion(1.0) - I - J - IJ) * 0.5) < 1e-10);

  const auto rec2 = classify_at(kBookPoly, {-1.0, 1.0});
  REQUIRE(rec2.has_value());
  CHECK(rec2->kind == ZeroKind::Isolated);
  CHECK(distance(rec2->point, (Octonion(-1.0) - I + J - IJ) * 0.5) < 1e-10);

  // w^2 + 1: real polynomial, spherical on (0,1), empty on (0,4).
  const OctPoly wsq1 = OctPoly::from_real(RealPoly({1, 0, 1}));
  const auto sph = classify_at(wsq1, {0.0, 1.0});
  REQUIRE(sph.has_value());
  CHECK(sph->kind == ZeroKind::Spherical);
  CHECK(!classify_at(wsq1, {0.0, 4.0}).has_value());
}

TEST_CASE("zero set of the book example") {
  const auto records = zero_set(kBookPoly);
  REQUIRE(records.size() == 2);
  for (const ZeroRecord& rec : records) {
    CHECK(rec.kind == ZeroKind::Isolated);
    CHECK(rec.multiplicity == 1);
    CHECK(norm(evaluate(kBookPoly, rec.point)) < 1e-9);
  }
}

TEST_CASE("monic polynomials are not determined by their zeros") {
  const OctPoly f = star_mul(OctPoly::linear(I), OctPoly::linear(I));
  const OctPoly g = star_mul(OctPoly::linear(I), OctPoly::linear(J));
  for (const OctPoly* p : {&f, &g}) {
    const auto records = zero_set(*p);
    REQUIRE(records.size() == 1);
    CHECK(records[0].kind == ZeroKind::Isolated);
    CHECK(records[0].multiplicity == 2);
    CHECK(distance(records[0].point, I) < 1e-7);
  }
  const auto diff_records = zero_set(sub(f, g));
  REQUIRE(diff_records.size() == 1);
  CHECK(diff_records[0].multiplicity == 1);
  CHECK(distance(diff_records[0].point, I) < 1e-10);
}

TEST_CASE("spherical zero of a real polynomial") {
  const auto records = zero_set(OctPoly::from_real(RealPoly({1, 0, 1})));
  REQUIRE(records.size() == 1);
  CHECK(records[0].kind == ZeroKind::Spherical);
  CHECK(records[0].multiplicity == 2);
  // Vanishes at random points of the sphere.
  for (int it = 0; it < 20; ++it) {
    const Octonion p = point_on_sphere(records[0].cls, rand_imag_unit());
    CHECK(norm(evaluate(OctPoly::from_real(RealPoly({1, 0, 1})), p)) < 1e-8);
  }
}

TEST_CASE("zero set rejects constants") {
  CHECK_THROWS_AS(zero_set(OctPoly::constant(Octonion(2.0))), DegreeZero);
  CHECK_THROWS_AS(verify_fta(OctPoly::zero()), DegreeZero);
}

TEST_CASE("fta on simple inputs") {
  const FtaSummary book = verify_fta(kBookPoly);
  CHECK(book.class_count() == 2);
  CHECK(book.isolated_count == 2);
  CHECK(book.total_multiplicity == 2);

  const FtaSummary lin = verify_fta(OctPoly::linear(Octonion(3.0)));
  CHECK(lin.real_count == 1);
  CHECK(lin.total_multiplicity == 1);

  // Delta_i * (w - j): one spherical class + one more class, total 3.
  const OctPoly f = star_mul(OctPoly::from_real(RealPoly({1, 0, 1})), OctPoly::linear(J));
  const FtaSummary mixed = verify_fta(f);
  CHECK(mixed.total_multiplicity == 3);
  CHECK(mixed.spherical_count == 1);
}

TEST_CASE("fta on random polynomials") {
  for (int it = 0; it < 60; ++it) {
    const OctPoly f = rand_poly(1 + static_cast<int>(rng()() % 8));
    const FtaSummary summary = verify_fta(f);
    CHECK(summary.total_multiplicity == f.degree());
    CHECK(summary.real_count + summary.isolated_count + 2 * summary.spherical_count <=
          f.degree());
    CHECK(static_cast<int>(summary.records.size()) <= 2 * f.degree());
    for (const ZeroRecord& rec : summary.records) {
      if (rec.kind == ZeroKind::Spherical) CHECK(rec.multiplicity >= 2);
      if (rec.kind == ZeroKind::Isolated) {
        Tolerances loose;
        loose.cls = 1e-5;
        CHECK(same_class(class_of(rec.point), rec.cls, loose));
      }
      const Octonion at = rec.kind == ZeroKind::Spherical
                              ? point_on_sphere(rec.cls, rand_imag_unit())
                              : rec.point;
      CHECK(norm(evaluate(f, at)) < 1e-7 * evaluation_scale(f, at));
    }
  }
}

TEST_CASE("real polynomials have no isolated zeros") {
  for (int it = 0; it < 20; ++it) {
    std::vector<Octonion> c(static_cast<std::size_t>(2 + rng()() % 5));
    for (Octonion& a : c) a = Octonion(rand_real());
    c.push_back(Octonion(1.0));
    const auto records = zero_set(OctPoly(std::move(c)));
    for (const ZeroRecord& rec : records) CHECK(rec.kind != ZeroKind::Isolated);
  }
}

TEST_CASE("factorization") {
  // Delta_i factors into conjugate linear factors with constant 1.
  const Factorization fd = factorize(OctPoly::from_real(RealPoly({1, 0, 1})));
  REQUIRE(fd.factors.size() == 2);
  CHECK(distance(fd.constant, Octonion(1.0)) < 1e-9);
  check_poly_eq(fd.expand(), OctPoly::from_real(RealPoly({1, 0, 1})), 1e-8);

  const Factorization fb = factorize(kBookPoly);
  REQUIRE(fb.factors.size() == 2);
  check_poly_eq(fb.expand(), kBookPoly, 1e-8);

  const OctPoly fij = star_mul(OctPoly::linear(I), OctPoly::linear(J));
  const Factorization fij_fact = factorize(fij);
  check_poly_eq(fij_fact.expand(), fij, 1e-6);

  // Each factor is conjugate to a class of the zero set.
  const auto records = zero_set(fij);
  for (const Octonion& alpha : fij_fact.factors) {
    bool matched = false;
    Tolerances loose;
    loose.cls = 1e-5;
    for (const ZeroRecord& rec : records)
      if (same_class(class_of(alpha), rec.cls, loose)) matched = true;
    CHECK(matched);
  }
}

TEST_CASE("factorization of random polynomials reconstructs") {
  for (int it = 0; it < 20; ++it) {
    const OctPoly f = rand_poly(1 + static_cast<int>(rng()() % 5));
    const Factorization fact = factorize(f);
    CHECK(static_cast<int>(fact.factors.size()) == f.degree());
    const OctPoly back = fact.expand();
    REQUIRE(back.degree() == f.degree());
    const double scale = 1.0 + f.max_coeff_norm();
    for (std::size_t idx = 0; idx < back.coeffs().size(); ++idx)
      CHECK(distance(back.coeff(idx), f.coeff(idx)) < 1e-5 * scale);
  }
}

TEST_CASE("structure profile") {
  // w^2 + w + 1 + k: real body plus non-real constant, only isolated zeros
  // in the plane of 1 and k.
  const OctPoly f1({Octonion(1.0) + K, Octonion(1.0), Octonion(1.0)});
  const StructureProfile p1 = structure_profile(f1);
  CHECK(p1.form == StructureForm::RealPlusNonRealConstant);
  CHECK(p1.prediction_holds);
  CHECK(p1.max_plane_residual < 1e-8);
  for (const ZeroRecord& rec : p1.records) CHECK(rec.kind == ZeroKind::Isolated);

  // w^3 + wi: non-real degree-1 coefficient, no spherical zeros.
  const OctPoly f2({Octonion(), I, Octonion(), Octonion(1.0)});
  const StructureProfile p2 = structure_profile(f2);
  CHECK(p2.form == StructureForm::RealPlusLinearNonReal);
  CHECK(p2.prediction_holds);

  // w^2 + 1: everything real or spherical.
  const StructureProfile p3 = structure_profile(OctPoly::from_real(RealPoly({1, 0, 1})));
  CHECK(p3.form == StructureForm::AllReal);
  CHECK(p3.prediction_holds);
}
