#include <doctest.h>

#include "hyperzero/camshaft.hpp"
#include "support.hpp"

using namespace hz;
using namespace hz::test;

namespace {
const Octonion I = Octonion::i();
const Octonion J = Octonion::j();
const Octonion IJ = Octonion::ij();
const Octonion K = Octonion::k();
}  // namespace

TEST_CASE("product remainder matches direct division") {
  for (int it = 0; it < 30; ++it) {
    const OctPoly f = rand_poly(2 + static_cast<int>(rng()() % 4));
    const OctPoly g = rand_poly(2 + static_cast<int>(rng()() % 4));
    const ConjugacyClass c = class_of(rand_nonreal());
    const Remainder rf = remainder_at(f, c);
    const Remainder rg = remainder_at(g, c);
    const Remainder combined = product_remainder(rf, rg, c);
    const Remainder direct = remainder_at(star_mul(f, g), c);
    const double scale = 1.0 + norm(direct.a) + norm(direct.b);
    CHECK(distance(combined.a, direct.a) < 1e-8 * scale);
    CHECK(distance(combined.b, direct.b) < 1e-8 * scale);
  }
}

TEST_CASE("multiplying by a constant moves an isolated zero") {
  // f = wi - j vanishes exactly at ij; f * k = w(ik) - jk vanishes at -ij
  // instead, even though k vanishes nowhere.
  const OctPoly f({-J, I});
  const OctPoly fk = star_mul(f, OctPoly::constant(K));
  CHECK(norm(evaluate(f, IJ)) < 1e-14);
  CHECK(norm(evaluate(fk, -IJ)) < 1e-14);
  CHECK(norm(evaluate(fk, IJ)) > 1.0);

  const ConjugacyClass c{0.0, 1.0};
  const ZeroRecord rec_f{c, ZeroKind::Isolated, IJ, 1};
  const SpherePrediction pred = predict(c, rec_f, std::nullopt,
                                        remainder_at(f, c),
                                        remainder_at(OctPoly::constant(K), c));
  CHECK(pred.case_tag == CamshaftCase::Case1);
  CHECK(pred.predicted.kind == ZeroKind::Isolated);
  CHECK(distance(pred.predicted.point, -IJ) < 1e-12);
}

TEST_CASE("case 1: zero of f moves through a zero-free right factor") {
  for (int it = 0; it < 25; ++it) {
    const Octonion alpha = rand_nonreal();
    const ConjugacyClass c = class_of(alpha);
    const OctPoly f = OctPoly::linear(alpha);
    // A right factor with no zero on the sphere of alpha: constant plus a
    // linear factor on a far-away sphere.
    const OctPoly g = star_mul(OctPoly::linear(rand_nonreal() + Octonion(10.0)),
                               OctPoly::constant(rand_oct()));
    const auto rec_f = classify_at(f, c);
    REQUIRE(rec_f.has_value());
    const SpherePrediction pred = predict(c, rec_f, std::nullopt,
                                          remainder_at(f, c), remainder_at(g, c));
    CHECK(pred.case_tag == CamshaftCase::Case1);
    const auto direct = classify_at(star_mul(f, g), c);
    REQUIRE(direct.has_value());
    CHECK(direct->kind == ZeroKind::Isolated);
    CHECK(distance(pred.predicted.point, direct->point) <
          1e-9 * (1.0 + norm(direct->point)));
  }
}

TEST_CASE("case 1 over the quaternions leaves the zero fixed") {
  for (int it = 0; it < 25; ++it) {
    const Octonion alpha = rand_quat().imag() + Octonion(rand_real());
    if (norm(alpha.imag()) < 0.3) continue;
    const ConjugacyClass c = class_of(alpha);
    const OctPoly f = OctPoly::linear(alpha);
    std::vector<Octonion> gc(3);
    for (Octonion& a : gc) a = rand_quat() + Octonion(2.0);
    const OctPoly g(std::move(gc));
    if (classify_at(g, c).has_value()) continue;  // want g zero-free there
    const SpherePrediction pred =
        predict(c, classify_at(f, c), std::nullopt,
                remainder_at(f, c), remainder_at(g, c));
    // Associativity makes (f*g)(alpha) = f(alpha) g(...) = 0: no movement.
    CHECK(distance(pred.predicted.point, alpha) < 1e-9);
    CHECK(norm(evaluate(star_mul(f, g), alpha)) <
          1e-10 * evaluation_scale(star_mul(f, g), alpha));
  }
}

TEST_CASE("case 2: zero of g moves, by conjugation over the quaternions") {
  for (int it = 0; it < 25; ++it) {
    const Octonion beta = rand_quat().imag() + Octonion(rand_real());
    if (norm(beta.imag()) < 0.3) continue;
    const ConjugacyClass c = class_of(beta);
    const OctPoly g = OctPoly::linear(beta);
    std::vector<Octonion> fc(3);
    for (Octonion& a : fc) a = rand_quat() + Octonion(2.0);
    const OctPoly f(std::move(fc));
    if (classify_at(f, c).has_value()) continue;
    const SpherePrediction pred =
        predict(c, std::nullopt, classify_at(g, c),
                remainder_at(f, c), remainder_at(g, c));
    CHECK(pred.case_tag == CamshaftCase::Case2);
    const Octonion moved = pred.predicted.point;
    // Quaternionic product rule: the displaced zero satisfies
    // moved = f(moved) beta f(moved)^{-1}.
    const Octonion h = evaluate(f, moved);
    CHECK(distance(moved, mul(h, mul(beta, inverse(h)))) < 1e-8 * (1.0 + norm(moved)));
    const auto direct = classify_at(star_mul(f, g), c);
    REQUIRE(direct.has_value());
    CHECK(distance(moved, direct->point) < 1e-9 * (1.0 + norm(moved)));
  }
}

TEST_CASE("case 3: two isolated zeros merge into a sphere or displace") {
  // Degenerate branch: (w - alpha) * (w - conj(alpha)) is real, hence
  // spherical on the class of alpha.
  const Octonion alpha = rand_nonreal();
  const ConjugacyClass c = class_of(alpha);
  const OctPoly f = OctPoly::linear(alpha), g = OctPoly::linear(conj(alpha));
  const SpherePrediction sph =
      predict(c, classify_at(f, c), classify_at(g, c),
              remainder_at(f, c), remainder_at(g, c));
  CHECK(sph.case_tag == CamshaftCase::Case3Spherical);
  CHECK(sph.predicted.kind == ZeroKind::Spherical);
  CHECK(sph.predicted.multiplicity == 2);
  const auto direct = classify_at(star_mul(f, g), c);
  REQUIRE(direct.has_value());
  CHECK(direct->kind == ZeroKind::Spherical);

  // Generic branch: zeros on one sphere but not conjugate-paired.
  for (int it = 0; it < 20; ++it) {
    const Octonion a1 = rand_nonreal();
    const ConjugacyClass cc = class_of(a1);
    const Octonion a2 = point_on_sphere(cc, rand_imag_unit());
    if (distance(a2, conj(a1)) < 0.3) continue;
    const OctPoly ff = OctPoly::linear(a1), gg = OctPoly::linear(a2);
    const SpherePrediction pred =
        predict(cc, classify_at(ff, cc), classify_at(gg, cc),
                remainder_at(ff, cc), remainder_at(gg, cc));
    if (pred.borderline) continue;
    CHECK(pred.case_tag == CamshaftCase::Case3Isolated);
    CHECK(pred.predicted.multiplicity == 2);
    const auto d2 = classify_at(star_mul(ff, gg), cc);
    REQUIRE(d2.has_value());
    CHECK(d2->kind == ZeroKind::Isolated);
    CHECK(distance(pred.predicted.point, d2->point) < 1e-8 * (1.0 + norm(d2->point)));
  }
}

TEST_CASE("case 4: a spherical factor keeps the sphere") {
  const Octonion alpha = rand_nonreal();
  const ConjugacyClass c = class_of(alpha);
  const OctPoly f = OctPoly::from_real(char_poly(c));
  const OctPoly g = OctPoly::linear(point_on_sphere(c, rand_imag_unit()));
  const SpherePrediction pred =
      predict(c, classify_at(f, c), classify_at(g, c),
              remainder_at(f, c), remainder_at(g, c));
  CHECK(pred.case_tag == CamshaftCase::Case4);
  CHECK(pred.predicted.kind == ZeroKind::Spherical);
  CHECK(pred.predicted.multiplicity == 3);
  const auto direct = classify_at(star_mul(f, g), c);
  REQUIRE(direct.has_value());
  CHECK(direct->kind == ZeroKind::Spherical);
  CHECK(direct->multiplicity == 3);
}

TEST_CASE("real classes add multiplicities") {
  const ConjugacyClass c{2.0, 1.0};  // the real point 1
  const OctPoly f = OctPoly::linear(Octonion(1.0));
  const SpherePrediction pred =
      predict(c, classify_at(f, c), classify_at(f, c),
              remainder_at(f, c), remainder_at(f, c));
  CHECK(pred.case_tag == CamshaftCase::RealCase);
  CHECK(pred.predicted.kind == ZeroKind::Real);
  CHECK(pred.predicted.multiplicity == 2);
  CHECK(distance(pred.predicted.point, Octonion(1.0)) < 1e-12);
}

TEST_CASE("predict requires a zero on the sphere") {
  const ConjugacyClass c{0.0, 1.0};
  CHECK_THROWS_AS(predict(c, std::nullopt, std::nullopt,
                          Remainder::linear_form(Octonion(1.0), Octonion(1.0)),
                          Remainder::linear_form(Octonion(1.0), Octonion(1.0))),
                  Error);
}

TEST_CASE("randomized product verification") {
  const VerifyReport report = verify_products(100, 4, 0xca35ULL);
  CHECK(report.trials == 100);
  CHECK(report.ok());
  CHECK(report.passes + report.borderline >= report.trials);
  CHECK(report.worst_normal_residual <= 1e-8);
  CHECK(report.worst_point_error <= 1e-7);
}
