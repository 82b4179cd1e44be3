#include "common.hpp"

#include "gnp/expr.hpp"

using namespace gnp;
using namespace testing_util;

TEST(ClassOf, Examples) {
  auto gl2 = oracle::datum(kGL2);
  BofG bg(*gl2);
  const auto& aw = bg.affine();
  auto b1 = bg.class_of(parse_element(aw, "t[0,1]"));
  EXPECT_EQ(b1.nu, rv({1, 0}));
  EXPECT_EQ(b1.kappa, gl2->pi1_class(cw({1, 0})));
  auto b2 = bg.class_of(parse_element(aw, "t[1,0] s"));
  EXPECT_EQ(b2.nu, rv({q(1, 2), q(1, 2)}));
  EXPECT_EQ(b2.kappa, b1.kappa);

  auto gl3 = oracle::datum(kGL3);
  BofG bg3(*gl3);
  auto b3 = bg3.class_of(parse_element(bg3.affine(), "s0"));
  EXPECT_EQ(b3.nu, rv({0, 0, 0}));
  EXPECT_EQ(b3.kappa, gl3->pi1_class(cw({0, 0, 0})));
}

TEST(ClassOf, NewtonPointMatchesPowers) {
  for (auto js : small_data()) {
    auto d = oracle::datum(js);
    BofG bg(*d);
    for (const auto& x : bg.affine().enumerate(5, 2))
      EXPECT_EQ(bg.class_of(x).nu, oracle::newton_by_powers(bg.affine(), x)) << js << " " << bg.affine().to_string(x);
  }
}

TEST(Order, Examples) {
  auto gl2 = oracle::datum(kGL2);
  BofG bg(*gl2);
  const auto& aw = bg.affine();
  auto basic = bg.class_of(parse_element(aw, "t[1,0] s"));
  auto top = bg.class_of(parse_element(aw, "t[1,0]"));
  auto other = bg.class_of(parse_element(aw, "t[1,1]"));
  EXPECT_TRUE(bg.leq(basic, basic));
  EXPECT_TRUE(bg.leq(basic, top));
  EXPECT_FALSE(bg.leq(top, basic));
  EXPECT_FALSE(bg.leq(basic, other));
  EXPECT_FALSE(bg.leq(other, basic));
}

TEST(Lambda, Examples) {
  auto gl2 = oracle::datum(kGL2);
  BofG bg(*gl2);
  const auto& aw = bg.affine();
  auto l1 = bg.lambda_invariant(bg.class_of(parse_element(aw, "t[2,1]")));
  EXPECT_EQ(l1, gl2->gamma_class(cw({2, 1})));
  auto l2 = bg.lambda_invariant(bg.class_of(parse_element(aw, "t[1,0] s")));
  EXPECT_EQ(l2, gl2->gamma_class(cw({0, 1})));
  EXPECT_EQ(bg.defect(bg.class_of(parse_element(aw, "t[1,0] s"))), 1);
  EXPECT_EQ(bg.defect(bg.class_of(parse_element(aw, "t[2,1]"))), 0);

  auto gl3 = oracle::datum(kGL3);
  BofG bg3(*gl3);
  auto b = bg3.class_of(parse_element(bg3.affine(), "s0"));
  EXPECT_EQ(bg3.lambda_invariant(b), gl3->gamma_class(cw({0, 0, 0})));
  EXPECT_EQ(bg3.defect(b), 0);
}

TEST(Lambda, MatchesBoxScan) {
  for (auto js : small_data()) {
    auto d = oracle::datum(js);
    BofG bg(*d);
    std::set<SigmaClass> classes;
    for (const auto& x : bg.affine().enumerate(5, 2)) classes.insert(bg.class_of(x));
    for (const auto& b : classes) {
      auto l = bg.lambda_invariant(b);
      EXPECT_EQ(l.average, oracle::lambda_by_scan(*d, b, 4)) << js << " nu " << b.nu;
      EXPECT_EQ(d->conv(l), b.nu) << js;
      EXPECT_EQ(d->pi1_class(l), b.kappa) << js;
    }
  }
}

TEST(Defect, CharacterizationsAgreeOnScan) {
  for (auto js : small_data()) {
    auto d = oracle::datum(js);
    BofG bg(*d);
    const auto& aw = bg.affine();
    for (const auto& x : aw.enumerate(4, 2)) {
      auto b = bg.class_of(x);
      Int iii = bg.defect(b);
      EXPECT_EQ(iii, bg.defect_orbits(b)) << js;
      EXPECT_EQ(Rational(iii), bg.defect_pairing(b));
      if (aw.is_fundamental(x)) EXPECT_EQ(bg.defect_min_length(x), iii) << js << " " << aw.to_string(x);
    }
  }
}

TEST(FundamentalRepresentative, Examples) {
  auto gl3 = oracle::datum(kGL3);
  BofG bg(*gl3);
  const auto& aw = bg.affine();
  auto s0 = parse_element(aw, "s0");
  auto y = bg.fundamental_representative(bg.class_of(s0), s0);
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, aw.identity());
  auto t = parse_element(aw, "t[1,0,0]");
  EXPECT_EQ(*bg.fundamental_representative(bg.class_of(t), t), t);

  auto sl2 = oracle::datum(kA1);
  BofG b2(*sl2);
  auto x = parse_element(b2.affine(), "t[1] s");
  auto target = parse_element(b2.affine(), "t[1]");
  auto z = b2.fundamental_representative(b2.class_of(target), x);
  ASSERT_TRUE(z);
  EXPECT_EQ(b2.class_of(*z), b2.class_of(target));
  EXPECT_TRUE(b2.affine().is_fundamental(*z));
  EXPECT_TRUE(b2.affine().bruhat_leq(*z, x));
}

TEST(VirtualDimension, Examples) {
  auto gl3 = oracle::datum(kGL3);
  BofG bg(*gl3);
  const auto& aw = bg.affine();
  auto basic = bg.class_of(aw.identity());
  EXPECT_EQ(bg.virtual_dimension(aw.identity(), basic), Rational(0));
  EXPECT_EQ(bg.virtual_dimension(parse_element(aw, "s1"), basic), Rational(1));
  EXPECT_EQ(bg.virtual_dimension(parse_element(aw, "s2"), basic), Rational(1));
  EXPECT_EQ(bg.virtual_dimension(parse_element(aw, "s0"), basic), Rational(2));
}
