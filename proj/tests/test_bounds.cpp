#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ineq2d/bounds.hpp"
#include "ineq2d/expr.hpp"
#include "ineq2d/sharpness.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace ineq2d;
using std::numbers::pi;

namespace {

const RectDomain kUnit(0, 1, 0, 1);
const double kPi2 = pi * pi;
const double kPi4 = kPi2 * kPi2;

double oracle_integral(const Expression& e, const RectDomain& d, int n = 400) {
  return oracle::simpson2d([&](double x, double y) { return e(x, y); }, d.a(), d.b(), d.c(), d.d(), n);
}

std::vector<Expression> algebra_corpus() {
  std::vector<Expression> out;
  for (const char* s : corpus::algebra()) out.push_back(parse(s));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Assumption checks

TEST(Assumptions, SineProductWeakLeft) {
  const FunctionCheck c = check_assumptions(parse("sin(pi*x/2)*sin(pi*y/2)"), kUnit, HypothesisMode::Weak).checks[0];
  EXPECT_TRUE(c.weak_left);
  EXPECT_FALSE(c.weak_right);
}

TEST(Assumptions, ProductFailsStrictLeft) {
  const FunctionCheck c = check_assumptions(parse("x*y"), kUnit, HypothesisMode::Strict).checks[0];
  EXPECT_TRUE(c.weak_left);
  EXPECT_FALSE(c.strict_left);
  ASSERT_TRUE(c.residual_dx.has_value());
  EXPECT_EQ((*c.residual_dx)[static_cast<int>(Edge::XA)], 1.0);
}

TEST(Assumptions, StrictImpliesWeak) {
  for (const char* s : {"x^2*y^2", "x^2*y^2*(1-x)^2*(1-y)^2", "sin(pi*x)^2*sin(pi*y)^2", "x*y", "1", "(1-x)^2*(1-y)^2"}) {
    const FunctionCheck c = check_assumptions(parse(s), kUnit, HypothesisMode::Strict).checks[0];
    if (c.strict_left) {
      EXPECT_TRUE(c.weak_left) << s;
    }
    if (c.strict_right) {
      EXPECT_TRUE(c.weak_right) << s;
    }
  }
  const FunctionCheck both = check_assumptions(parse("x^2*y^2*(1-x)^2*(1-y)^2"), kUnit, HypothesisMode::Strict).checks[0];
  EXPECT_TRUE(both.strict_left);
  EXPECT_TRUE(both.strict_right);
}

TEST(Assumptions, ToleranceScalesWithMagnitude) {
  // A 1e-10 offset is tolerated for a function of size ~1e3, not for one of size 1.
  EXPECT_TRUE(check_assumptions(parse("1000*sin(pi*x)*sin(pi*y) + 1e-10"), kUnit, HypothesisMode::Weak)
                  .checks[0].weak_left);
  EXPECT_FALSE(check_assumptions(parse("sin(pi*x)*sin(pi*y) + 1e-7"), kUnit, HypothesisMode::Weak).checks[0].weak_left);
}

// ---------------------------------------------------------------------------
// Wirtinger

TEST(Wirtinger, ExtremalOnUnitSquare) {
  const BoundReport r = wirtinger_2d(parse("sin(pi*x/2)*sin(pi*y/2)"), kUnit, Side::Left);
  EXPECT_NEAR(r.lhs, 0.25, 1e-13);
  EXPECT_NEAR(r.rhs, 0.25, 1e-13);
  ASSERT_TRUE(r.ratio);
  EXPECT_NEAR(*r.ratio, 1.0, 1e-12);
  EXPECT_EQ(r.status, Status::Holds);
  EXPECT_TRUE(r.assumptions.satisfied());
}

TEST(Wirtinger, Product) {
  const BoundReport r = wirtinger_2d(parse("x*y"), kUnit, Side::Left);
  EXPECT_NEAR(r.lhs, 1.0 / 9.0, 1e-14);
  EXPECT_NEAR(r.rhs, 16.0 / kPi4, 1e-14);
  EXPECT_EQ(r.status, Status::Holds);
}

TEST(Wirtinger, ZeroFunctionHasUndefinedRatio) {
  const BoundReport r = wirtinger_2d(parse("0"), kUnit, Side::Left);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_FALSE(r.ratio.has_value());
  EXPECT_EQ(r.status, Status::Holds);
}

TEST(Wirtinger, RightSideUsesMirroredConditions) {
  const BoundReport right = wirtinger_2d(parse("sin(pi*(1-x)/2)*sin(pi*(1-y)/2)"), kUnit, Side::Right);
  EXPECT_EQ(right.status, Status::Holds);
  EXPECT_NEAR(*right.ratio, 1.0, 1e-12);
  const BoundReport wrong = wirtinger_2d(parse("sin(pi*(1-x)/2)*sin(pi*(1-y)/2)"), kUnit, Side::Left);
  EXPECT_EQ(wrong.status, Status::AssumptionsUnmet);
  EXPECT_TRUE(wrong.ratio.has_value());
}

TEST(Wirtinger, ViolationWhenHypothesisIgnored) {
  // A constant has zero mixed partial: the bound is violated, but the
  // hypothesis check catches it.
  const BoundReport r = wirtinger_2d(parse("1"), kUnit, Side::Left);
  EXPECT_EQ(r.status, Status::AssumptionsUnmet);
  EXPECT_EQ(r.rhs, 0.0);
}

TEST(Wirtinger, InconclusiveTakesPrecedence) {
  BoundOptions opt;
  opt.quad.max_panels = 1;
  const BoundReport r = wirtinger_2d(parse("sqrt(x*y)*step(x+y-1)"), kUnit, Side::Left, opt);
  EXPECT_EQ(r.status, Status::Inconclusive);
}

TEST(Wirtinger, NonsmoothInputIsFlagged) {
  const BoundReport r = wirtinger_2d(parse("x*y*abs(x-0.5)"), kUnit, Side::Left);
  EXPECT_FALSE(r.smooth_inputs);
}

// ---------------------------------------------------------------------------
// Pointwise

TEST(Pointwise, ConstantHolds) {
  for (EvalPoint p : {EvalPoint{0.5, 0.5}, EvalPoint{0.1, 0.9}}) {
    const BoundReport r = pointwise_2d(parse("3.5"), kUnit, p);
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.status, Status::Holds);
  }
}

TEST(Pointwise, SineProductAtCentre) {
  const Expression f = parse("sin(pi*x/2)*sin(pi*y/2)");
  const BoundReport r = pointwise_2d(f, kUnit, {0.5, 0.5});
  EXPECT_NEAR(r.rhs, 1.0 / 64.0, 1e-14);
  const Expression shifted = (f - 0.5) * (f - 0.5);
  EXPECT_NEAR(r.lhs, oracle_integral(shifted, kUnit), 1e-9);
  ASSERT_TRUE(r.ratio);
  EXPECT_NEAR(*r.ratio, r.lhs * 64.0, 1e-12);
}

TEST(Pointwise, AnchorMustBeInterior) {
  EXPECT_THROW(pointwise_2d(parse("x"), kUnit, {0.0, 0.5}), PreconditionError);
  EXPECT_THROW(pointwise_2d(parse("x"), kUnit, {0.5, 1.0}), PreconditionError);
}

TEST(Pointwise, FunctionVanishingOnAnchorLinesHolds) {
  // (x - 0.3)(y - 0.6) is zero on x = 0.3 and y = 0.6.
  const BoundReport r = pointwise_2d(parse("(x - 0.3)*(y - 0.6)"), kUnit, {0.3, 0.6});
  EXPECT_TRUE(r.assumptions.satisfied());
  EXPECT_EQ(r.status, Status::Holds);
}

TEST(Pointwise, BracketMonotonicity) {
  const double a = -1.0, b = 3.0;
  const double centre = anchor_bracket(a, b, 1.0);
  EXPECT_EQ(centre, 2.0);
  EXPECT_EQ(anchor_bracket(a, b, a), 4.0);
  EXPECT_EQ(anchor_bracket(a, b, b), 4.0);
  double prev = centre;
  for (double t = 1.0; t <= b; t += 0.25) {
    const double v = anchor_bracket(a, b, t);
    EXPECT_GE(v, prev);
    EXPECT_GE(v, centre);
    EXPECT_LE(v, 4.0);
    prev = v;
  }
}

// ---------------------------------------------------------------------------
// Chebyshev functional

TEST(ChebyshevFunctional, ConstantGivesZero) {
  const QuadResult t = chebyshev_functional(parse("2"), parse("sin(x*y)"), kUnit, QuadConfig{});
  EXPECT_NEAR(t.value, 0.0, t.error + 1e-15);
}

TEST(ChebyshevFunctional, ProductPair) {
  const QuadResult t = chebyshev_functional(parse("x*y"), parse("x*y"), kUnit, QuadConfig{});
  EXPECT_NEAR(t.value, 7.0 / 144.0, 1e-14);
}

TEST(ChebyshevFunctional, CosineAgainstSignProduct) {
  const QuadResult t =
      chebyshev_functional(parse("cos(pi*x)*cos(pi*y)"), parse("sgn(x-0.5)*sgn(y-0.5)"), kUnit, QuadConfig{});
  EXPECT_NEAR(std::fabs(t.value), 4.0 / kPi2, 1e-12);
}

TEST(ChebyshevFunctional, ProductAgainstSum) {
  // mean(xy(x+y)) = 1/3, mean(xy) = 1/4, mean(x+y) = 1.
  const QuadResult t = chebyshev_functional(parse("x*y"), parse("x+y"), kUnit, QuadConfig{});
  EXPECT_NEAR(t.value, 1.0 / 12.0, 1e-14);
}

TEST(ChebyshevFunctional, Symmetry) {
  for (const RectDomain& d : {kUnit, RectDomain(1, 3, 0, 2)}) {
    const auto corpus = algebra_corpus();
    for (const auto& f : corpus) {
      for (const auto& g : corpus) {
        const QuadResult fg = chebyshev_functional(f, g, d, QuadConfig{});
        const QuadResult gf = chebyshev_functional(g, f, d, QuadConfig{});
        EXPECT_NEAR(fg.value, gf.value, fg.error + gf.error) << f.to_string() << " / " << g.to_string();
      }
    }
  }
}

TEST(ChebyshevFunctional, ShiftInvariance) {
  for (const auto& f : algebra_corpus()) {
    for (const auto& g : algebra_corpus()) {
      const QuadResult base = chebyshev_functional(f, g, kUnit, QuadConfig{});
      for (double kappa : {-3.0, 1.0, 10.0}) {
        const QuadResult shifted = chebyshev_functional(f + kappa, g, kUnit, QuadConfig{});
        EXPECT_NEAR(shifted.value, base.value, shifted.error + base.error) << f.to_string() << " + " << kappa;
      }
    }
  }
}

TEST(ChebyshevFunctional, NonnegativeOnDiagonal) {
  for (const auto& f : algebra_corpus()) {
    const QuadResult t = chebyshev_functional(f, f, RectDomain(1, 3, 0, 2), QuadConfig{});
    EXPECT_GE(t.value, -t.error) << f.to_string();
  }
}

TEST(ChebyshevFunctional, CauchySchwarzChain) {
  const auto corpus = algebra_corpus();
  for (const auto& f : corpus) {
    const QuadResult tff = chebyshev_functional(f, f, kUnit, QuadConfig{});
    for (const auto& g : corpus) {
      const QuadResult tgg = chebyshev_functional(g, g, kUnit, QuadConfig{});
      const QuadResult tfg = chebyshev_functional(f, g, kUnit, QuadConfig{});
      const double bound = std::sqrt(std::max(tff.value, 0.0) * std::max(tgg.value, 0.0));
      const double eps = tfg.error + std::sqrt(tff.error * std::fabs(tgg.value) + tgg.error * std::fabs(tff.value) +
                                               tff.error * tgg.error);
      EXPECT_LE(std::fabs(tfg.value), bound + eps + 1e-15) << f.to_string() << " / " << g.to_string();
    }
  }
}

TEST(ChebyshevFunctional, RangeBound) {
  // Functions whose extrema lie on the 201x201 sample grid.
  for (const char* s : {"x*y", "x + y", "sin(pi*x)*sin(pi*y)", "cos(pi*x)*cos(pi*y)", "sgn(x-0.5)*sgn(y-0.5)",
                        "exp(x - y)", "x^2"}) {
    const Expression g = parse(s);
    const RangeEstimate range = range_bounds(g, kUnit);
    const QuadResult var = chebyshev_functional(g, g, kUnit, QuadConfig{});
    EXPECT_LE(var.value, 0.25 * range.spread() * range.spread() * (1.0 + 1e-6) + var.error) << s;
  }
}

TEST(ChebyshevFunctional, CornerAverageInequality) {
  for (const RectDomain& d : {kUnit, RectDomain(1, 3, 0, 2)}) {
    for (const auto& nf : compliant_family(d)) {
      const Expression& f = nf.expr;
      const double avg = 0.25 * (f(d.a(), d.c()) + f(d.a(), d.d()) + f(d.b(), d.c()) + f(d.b(), d.d()));
      const QuadResult lhs = l2_norm_sq(f - avg, d, QuadConfig{});
      const QuadResult norm = l2_norm_sq(mixed_partial(f), d, QuadConfig{});
      const double scale = 64.0 / kPi4 * d.area() * d.area();
      EXPECT_LE(lhs.value, scale * norm.value + lhs.error + scale * norm.error) << nf.id;
    }
  }
}

// ---------------------------------------------------------------------------
// Chebyshev bounds

TEST(ChebyshevL2, CosinePairAsStated) {
  const Expression f = parse("cos(pi*x)*cos(pi*y)");
  const BoundReport r = chebyshev_l2_bound(f, f, kUnit, Variant::AsStated);
  EXPECT_EQ(r.id, InequalityId::ChebyshevL2);
  EXPECT_NEAR(r.lhs, 0.25, 1e-13);
  EXPECT_NEAR(r.rhs, 0.25, 1e-13);
  EXPECT_NEAR(*r.ratio, 1.0, 1e-12);
}

TEST(ChebyshevL2, AsStatedScalesWithSquaredArea) {
  const Expression f = parse("cos(2*pi*x)*cos(2*pi*y)");
  const RectDomain small(0, 0.5, 0, 0.5);
  const BoundReport stated = chebyshev_l2_bound(f, f, small, Variant::AsStated);
  EXPECT_NEAR(stated.lhs, 0.25, 1e-13);
  EXPECT_NEAR(stated.rhs, 1.0 / 16.0, 1e-13);
  EXPECT_NEAR(*stated.ratio, 4.0, 1e-10);
  EXPECT_NE(stated.status, Status::Holds);
  const BoundReport area = chebyshev_l2_bound(f, f, small, Variant::AreaVariant);
  EXPECT_EQ(area.id, InequalityId::ChebyshevL2AreaVariant);
  EXPECT_NEAR(*area.ratio, 1.0, 1e-10);
}

TEST(ChebyshevL2, ProductPairFailsHypotheses) {
  const Expression f = parse("x*y");
  const BoundReport r = chebyshev_l2_bound(f, f, kUnit, Variant::AsStated);
  EXPECT_NEAR(r.lhs, 7.0 / 144.0, 1e-14);
  EXPECT_NEAR(r.rhs, 1.0 / kPi4, 1e-15);
  EXPECT_NEAR(*r.ratio, 7.0 / 144.0 * kPi4, 1e-10);
  EXPECT_EQ(r.status, Status::AssumptionsUnmet);
}

TEST(ChebyshevMixed, ConstantG) {
  const BoundReport r = chebyshev_mixed_bound(parse("sin(pi*x)*sin(pi*y)"), parse("2"), kUnit);
  EXPECT_NEAR(r.lhs, 0.0, 1e-15);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_EQ(r.status, Status::Holds);
  EXPECT_TRUE(r.range_estimated);
}

TEST(ChebyshevMixed, CosineAgainstSignProduct) {
  const BoundReport r = chebyshev_mixed_bound(parse("cos(pi*x)*cos(pi*y)"), parse("sgn(x-0.5)*sgn(y-0.5)"), kUnit);
  EXPECT_NEAR(r.lhs, 4.0 / kPi2, 1e-12);
  EXPECT_NEAR(r.rhs, 4.0, 1e-12);
  EXPECT_NEAR(*r.ratio, 1.0 / kPi2, 1e-12);
  ASSERT_TRUE(r.assumptions.range);
  EXPECT_EQ(r.assumptions.range->spread(), 2.0);
}

TEST(ChebyshevMixed, ProductAgainstSum) {
  const BoundReport r = chebyshev_mixed_bound(parse("x*y"), parse("x+y"), kUnit);
  EXPECT_NEAR(r.lhs, 1.0 / 12.0, 1e-14);
  EXPECT_NEAR(r.rhs, 8.0 / kPi2, 1e-12);
  EXPECT_EQ(r.status, Status::AssumptionsUnmet);
}

// ---------------------------------------------------------------------------
// Ostrowski

TEST(Ostrowski, SineProductAtCentre) {
  const BoundReport r = ostrowski_2d(parse("sin(pi*x/2)*sin(pi*y/2)"), kUnit, {0.5, 0.5});
  EXPECT_NEAR(r.lhs, std::fabs(0.5 - 4.0 / kPi2), 1e-13);
  EXPECT_NEAR(r.rhs, 0.125, 1e-13);
  EXPECT_NEAR(*r.ratio, std::fabs(0.5 - 4.0 / kPi2) * 8.0, 1e-12);
}

TEST(Ostrowski, ConstantHolds) {
  for (EvalPoint p : {EvalPoint{0, 0}, EvalPoint{0.5, 0.5}, EvalPoint{1, 0.3}}) {
    const BoundReport r = ostrowski_2d(parse("-2"), kUnit, p);
    EXPECT_NEAR(r.lhs, 0.0, 1e-14);
    EXPECT_EQ(r.status, Status::Holds);
  }
}

TEST(Ostrowski, ProductAtCorner) {
  const BoundReport r = ostrowski_2d(parse("x*y"), kUnit, {1, 1});
  EXPECT_NEAR(r.lhs, 0.75, 1e-14);
  EXPECT_NEAR(r.rhs, 4.0 / kPi2, 1e-14);
  EXPECT_NEAR(*r.ratio, 0.75 * kPi2 / 4.0, 1e-12);
  EXPECT_EQ(r.status, Status::AssumptionsUnmet);
}

TEST(Ostrowski, PointOutsideDomain) {
  EXPECT_THROW(ostrowski_2d(parse("x"), kUnit, {1.5, 0.5}), PreconditionError);
}

TEST(Ostrowski, MidpointCollapse) {
  const RectDomain d(1, 3, 0, 2);
  const Expression f = parse("x*y*(3-x)*(2-y)");
  const BoundReport r = ostrowski_2d(f, d, {2, 1});
  const double norm = std::sqrt(l2_norm_sq(mixed_partial(f), d, QuadConfig{}).value);
  EXPECT_NEAR(r.rhs, std::sqrt(d.area()) / kPi2 * norm, 1e-12);
}

// ---------------------------------------------------------------------------
// One-dimensional baselines

TEST(DiazMetcalf, SineAtLeftEnd) {
  const BoundReport r = diaz_metcalf_1d(parse("sin(pi*x/2)"), 0, 1, 0);
  EXPECT_NEAR(r.lhs, 0.5, 1e-14);
  EXPECT_NEAR(r.rhs, 0.5, 1e-14);
  EXPECT_NEAR(*r.ratio, 1.0, 1e-12);
  EXPECT_EQ(r.status, Status::Holds);
}

TEST(DiazMetcalf, IdentityAtCentre) {
  const BoundReport r = diaz_metcalf_1d(parse("x"), 0, 1, 0.5);
  EXPECT_NEAR(r.lhs, 1.0 / 12.0, 1e-14);
  EXPECT_NEAR(r.rhs, 1.0 / kPi2, 1e-14);
  EXPECT_NEAR(*r.ratio, kPi2 / 12.0, 1e-12);
}

TEST(DiazMetcalf, ConstantAndErrors) {
  EXPECT_EQ(diaz_metcalf_1d(parse("4"), 0, 1, 0.3).lhs, 0.0);
  EXPECT_THROW(diaz_metcalf_1d(parse("x"), 0, 1, 1.5), PreconditionError);
  EXPECT_THROW(diaz_metcalf_1d(parse("x*y"), 0, 1, 0.5), PreconditionError);
}

TEST(Lupas, Identity) {
  const BoundReport r = lupas_1d(parse("x"), parse("x"), 0, 1);
  EXPECT_NEAR(r.lhs, 1.0 / 12.0, 1e-14);
  EXPECT_NEAR(r.rhs, 1.0 / kPi2, 1e-14);
  EXPECT_EQ(r.status, Status::Holds);
}

TEST(Lupas, CosineExtremal) {
  const BoundReport r = lupas_1d(parse("cos(pi*x)"), parse("cos(pi*x)"), 0, 1);
  EXPECT_NEAR(r.lhs, 0.5, 1e-14);
  EXPECT_NEAR(r.rhs, 0.5, 1e-14);
  EXPECT_NEAR(*r.ratio, 1.0, 1e-12);
}

TEST(Lupas, ConstantAndErrors) {
  EXPECT_NEAR(lupas_1d(parse("3"), parse("x^2"), 0, 2).lhs, 0.0, 1e-14);
  EXPECT_THROW(lupas_1d(parse("x"), parse("y"), 0, 1), PreconditionError);
}

// ---------------------------------------------------------------------------
// Status logic

TEST(Status, ViolatedWhenHypothesesHoldButBoundFails) {
  // Strict mode on a function that passes weak checks, with a forged report.
  BoundReport r;
  r.lhs = 2.0;
  r.rhs = 1.0;
  r.integrals = {{"i", QuadResult{1.0, 1e-15, 1, true}}};
  detail::finalize(r);
  EXPECT_EQ(r.status, Status::Violated);
  r.lhs = 1.0 + 5e-9;
  detail::finalize(r);
  EXPECT_EQ(r.status, Status::Holds);
  r.rhs = 0.0;
  r.lhs = 1e-3;
  r.ratio.reset();
  detail::finalize(r);
  EXPECT_EQ(r.status, Status::Violated);
  EXPECT_FALSE(r.ratio.has_value());
}

TEST(Status, PublishedConstants) {
  EXPECT_DOUBLE_EQ(published_constant(InequalityId::Wirtinger2D), 16.0 / kPi4);
  EXPECT_DOUBLE_EQ(published_constant(InequalityId::ChebyshevL2), 1.0 / kPi4);
  EXPECT_DOUBLE_EQ(published_constant(InequalityId::ChebyshevMixed), 4.0 / kPi2);
  EXPECT_DOUBLE_EQ(published_constant(InequalityId::Lupas1D), 1.0 / kPi2);
}

// ---------------------------------------------------------------------------
// Compliant family

class CompliantFamily : public ::testing::TestWithParam<RectDomain> {};

TEST_P(CompliantFamily, SingleFunctionBoundsHold) {
  const RectDomain d = GetParam();
  for (const auto& nf : compliant_family(d)) {
    EXPECT_EQ(wirtinger_2d(nf.expr, d, Side::Left).status, Status::Holds) << nf.id;
    EXPECT_EQ(wirtinger_2d(nf.expr, d, Side::Right).status, Status::Holds) << nf.id;
    for (EvalPoint corner : {EvalPoint{d.a(), d.c()}, EvalPoint{d.b(), d.d()}}) {
      EXPECT_EQ(ostrowski_2d(nf.expr, d, corner).status, Status::Holds) << nf.id;
    }
  }
}

TEST_P(CompliantFamily, PairBoundsHold) {
  const RectDomain d = GetParam();
  const auto fam = compliant_family(d);
  for (std::size_t i = 0; i < fam.size(); i += 3) {
    for (std::size_t j = 0; j < fam.size(); j += 4) {
      EXPECT_EQ(chebyshev_l2_bound(fam[i].expr, fam[j].expr, d, Variant::AreaVariant).status, Status::Holds)
          << fam[i].id << " / " << fam[j].id;
      EXPECT_EQ(chebyshev_mixed_bound(fam[i].expr, fam[j].expr, d).status, Status::Holds)
          << fam[i].id << " / " << fam[j].id;
    }
  }
}

TEST_P(CompliantFamily, NoViolationAtAnchors) {
  const RectDomain d = GetParam();
  for (const auto& nf : compliant_family(d)) {
    const EvalPoint centre{d.mid_x(), d.mid_y()};
    EXPECT_NE(pointwise_2d(nf.expr, d, centre).status, Status::Violated) << nf.id;
    EXPECT_NE(ostrowski_2d(nf.expr, d, centre).status, Status::Violated) << nf.id;
  }
}

INSTANTIATE_TEST_SUITE_P(Domains, CompliantFamily, ::testing::Values(RectDomain(0, 1, 0, 1), RectDomain(1, 3, 0, 2)));
