#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "relkummer/errors.hpp"
#include "relkummer/ratfield.hpp"

using namespace relkummer;

namespace {

GaloisContext ctx_of(std::uint32_t p, std::uint32_t l, std::uint32_t r, std::uint32_t m = 1) {
  return make_context(p, l, std::make_shared<const GaloisField>(r, m));
}

FactoredElement random_element(const GaloisContext& ctx, std::mt19937_64& rng) {
  const GaloisField& k = ctx.k();
  FactoredElement out = ratfunc::from_unit(k.element(1 + uniform_below(rng, k.order() - 1)));
  for (int i = 0; i < 2; ++i) {
    std::vector<FieldElement> c(1 + uniform_below(rng, 4));
    for (auto& x : c) x = k.element(1 + uniform_below(rng, k.order() - 1));
    const auto f = ratfunc::from_polynomial(k, Polynomial(c));
    out = ratfunc::multiply(k, out, i == 0 ? f : ratfunc::inverse(k, f));
  }
  return out;
}

}  // namespace

TEST(Context, Validation) {
  const auto ctx = ctx_of(2, 2, 5);
  EXPECT_EQ(ctx.q, 4u);
  EXPECT_EQ(ctx.k().multiplicative_order(ctx.zeta), 4u);
  EXPECT_EQ(ctx.zeta_p, ctx.k().pow(ctx.zeta, 2));
  EXPECT_THROW(ctx_of(3, 1, 5), UnsupportedInstance);   // 3 does not divide 4
  EXPECT_THROW(ctx_of(4, 1, 5), UnsupportedInstance);   // not prime
  EXPECT_NO_THROW(ctx_of(5, 1, 11));
  EXPECT_THROW(ctx_of(2, 3, 5), UnsupportedInstance);   // 8 does not divide 4
  EXPECT_THROW(ctx_of(3, 1, 3, 2), UnsupportedInstance);  // char k = p
  auto field = std::make_shared<const GaloisField>(5);
  EXPECT_THROW(make_context(2, 2, field, FieldElement{4}), UnsupportedInstance);  // order 2
  EXPECT_EQ(make_context(2, 2, field, FieldElement{3}).zeta.value, 3u);
}

TEST(Parser, Expressions) {
  const auto ctx = ctx_of(2, 2, 5);
  const GaloisField& k = ctx.k();
  EXPECT_EQ(ratfunc::to_string(k, parse_ratfunc("t", ctx)), "t");
  EXPECT_EQ(ratfunc::to_string(k, parse_ratfunc("3*(t+1)/(t^2+2)", ctx)), "3*(t+1)*(t^2+2)^-1");
  EXPECT_EQ(ratfunc::to_string(k, parse_ratfunc("t^2 - 1", ctx)), "(t+1)*(t+4)");
  EXPECT_EQ(parse_ratfunc("(t+1)^-2", ctx), ratfunc::power(k, parse_ratfunc("t+1", ctx), -2));
  EXPECT_EQ(parse_ratfunc("-t", ctx), parse_ratfunc("4*t", ctx));
  EXPECT_EQ(parse_ratfunc("t*t/t", ctx), parse_ratfunc("t", ctx));
  const auto ctx9 = ctx_of(2, 1, 3, 2);
  EXPECT_EQ(parse_ratfunc("[0,1]*t", ctx9).unit, ctx9.k().element(3));
  EXPECT_EQ(parse_field_literal("[2,1]", ctx9.k()), ctx9.k().element(5));
}

TEST(Parser, PrintedFormParsesBack) {
  std::mt19937_64 rng(9);
  for (const auto& ctx : {ctx_of(2, 2, 5), ctx_of(2, 1, 3, 2), ctx_of(3, 2, 19)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const FactoredElement e = random_element(ctx, rng);
      EXPECT_EQ(parse_ratfunc(ratfunc::to_string(ctx.k(), e), ctx), e);
    }
  }
}

TEST(Parser, ErrorsCarryColumns) {
  const auto ctx = ctx_of(2, 2, 5);
  try {
    parse_ratfunc("t + * 2", ctx, 0, 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_ratfunc("(t+1", ctx), ParseError);
  EXPECT_THROW(parse_ratfunc("t^x", ctx), ParseError);
  EXPECT_THROW(parse_ratfunc("s", ctx), ParseError);
  EXPECT_THROW(parse_ratfunc("", ctx), ParseError);
  EXPECT_THROW(parse_ratfunc("t/(t-t)", ctx), DomainError);
  EXPECT_THROW(parse_ratfunc("t-t", ctx), DomainError);
}

TEST(Sigma, OrderAndMultiplicativity) {
  std::mt19937_64 rng(10);
  for (const auto& ctx : {ctx_of(2, 2, 5), ctx_of(3, 2, 19), ctx_of(2, 1, 3, 2), ctx_of(5, 1, 11)}) {
    const GaloisField& k = ctx.k();
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(ctx, rng), b = random_element(ctx, rng);
      EXPECT_EQ(sigma_power(a, static_cast<std::int64_t>(ctx.q), ctx), a);
      EXPECT_EQ(sigma_power(sigma_power(a, -1, ctx), 1, ctx), a);
      EXPECT_EQ(sigma(ratfunc::multiply(k, a, b), ctx), ratfunc::multiply(k, sigma(a, ctx), sigma(b, ctx)));
      EXPECT_EQ(class_of(ratfunc::multiply(k, sigma(a, ctx), sigma(b, ctx)), ctx),
                class_of(sigma(ratfunc::multiply(k, a, b), ctx), ctx));
    }
  }
  const auto ctx = ctx_of(2, 2, 5);
  // sigma(t + 1) = 2t + 1 = 2 (t + 3)
  EXPECT_EQ(sigma(parse_ratfunc("t+1", ctx), ctx), parse_ratfunc("2*(t+3)", ctx));
}

TEST(Sigma, FixedFieldElementsAreFixed) {
  const auto ctx = ctx_of(3, 1, 7);
  const auto f = parse_ratfunc("(t^3+2)*(t^6+t^3+5)^-1", ctx);
  EXPECT_EQ(sigma(f, ctx), f);
  EXPECT_NE(sigma(parse_ratfunc("t^2+2", ctx), ctx), parse_ratfunc("t^2+2", ctx));
}

TEST(PthPowers, DecisionAndRoot) {
  const auto ctx = ctx_of(3, 1, 7);
  const GaloisField& k = ctx.k();
  EXPECT_TRUE(is_pth_power_in_E(k, parse_ratfunc("(t+1)^3*(t^2+t+3)^-6", ctx), 3));
  EXPECT_TRUE(is_pth_power_in_E(k, parse_ratfunc("6", ctx), 3));  // 6 = 3^3 mod 7
  EXPECT_FALSE(is_pth_power_in_E(k, parse_ratfunc("2*(t+1)^3", ctx), 3));
  EXPECT_FALSE(is_pth_power_in_E(k, parse_ratfunc("(t+1)^2", ctx), 3));
  const auto root = pth_root_in_E(k, parse_ratfunc("6*(t+1)^3*t^-3", ctx), 3);
  EXPECT_EQ(ratfunc::power(k, root, 3), parse_ratfunc("6*(t+1)^3*t^-3", ctx));
  EXPECT_THROW(pth_root_in_E(k, parse_ratfunc("t", ctx), 3), DomainError);
}

TEST(KummerClasses, CoordinatesAreInjective) {
  // every class supported on one sigma-orbit of irreducibles plus units, p = 3
  const auto ctx = ctx_of(3, 1, 7);
  const GaloisField& k = ctx.k();
  // t^3 - 1 splits into one sigma-orbit of linear factors
  const auto factored = ratfunc::from_polynomial(k, poly::from_ints(k, {-1, 0, 0, 1}));
  std::vector<Polynomial> irr;
  for (const auto& [f, e] : factored.factors) irr.push_back(f);
  const ClassSpace space(ctx, irr);
  ASSERT_EQ(space.dimension(), irr.size() + 1);
  std::vector<KummerClass> seen_classes;
  const std::size_t n = space.dimension();
  for (std::uint64_t code = 0; code < oracle::ipow(3, n); ++code) {
    const FpVector v = oracle::decode(code, n, 3);
    const KummerClass c = space.class_at(v);
    EXPECT_EQ(space.coordinates(c), v);
    for (const auto& other : seen_classes) EXPECT_FALSE(other == c);
    seen_classes.push_back(c);
  }
  EXPECT_THROW(space.coordinates(class_of(parse_ratfunc("t^2+t+3", ctx), ctx)), DomainError);
}

TEST(KummerClasses, ClassOfModuloPthPowers) {
  const auto ctx = ctx_of(2, 2, 5);
  const GaloisField& k = ctx.k();
  const auto a = parse_ratfunc("3*(t+1)*(t^2+2)^3", ctx);
  const auto w = parse_ratfunc("(t+4)*(t^2+3)^-1", ctx);
  EXPECT_EQ(class_of(a, ctx), class_of(ratfunc::multiply(k, a, ratfunc::power(k, w, 2)), ctx));
  EXPECT_TRUE(class_of(parse_ratfunc("4*(t+1)^2", ctx), ctx).is_trivial());
  const auto c2 = class_of(parse_ratfunc("2", ctx), ctx);
  EXPECT_FALSE(c2.is_trivial());
  EXPECT_EQ(c2.unit_coordinate, 1u);
  // x[t] = [zeta] = [2], and x[2] is trivial
  EXPECT_EQ(x_action(class_of(parse_ratfunc("t", ctx), ctx), ctx), c2);
  EXPECT_TRUE(x_action(c2, ctx).is_trivial());
}

TEST(DenseElements, AgreeWithFactoredArithmetic) {
  std::mt19937_64 rng(12);
  const auto ctx = ctx_of(3, 2, 19);
  const GaloisField& k = ctx.k();
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_element(ctx, rng), b = random_element(ctx, rng);
    const ClassSpace space = ClassSpace::closure_of(ctx, {a, b});
    const auto da = space.to_dense(a), db = space.to_dense(b);
    EXPECT_EQ(space.to_factored(space.multiply(da, db)), ratfunc::multiply(k, a, b));
    EXPECT_EQ(space.to_factored(space.sigma(da)), sigma(a, ctx));
    EXPECT_EQ(space.to_factored(space.power(da, -2)), ratfunc::power(k, a, -2));
  }
}
