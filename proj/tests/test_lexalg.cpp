#include "lexspec/lexalg.hpp"
#include "lexspec/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>

using namespace lexspec;

namespace {

const Signature k2(2, 1);
const Signature k2d2(2, 2);

LexElement L(Signature s, long h, std::vector<long> g) {
  std::vector<Integer> gi(g.begin(), g.end());
  return LexElement(s, h, gi);
}

// Plain-integer reference for d = 2: heights first, then componentwise.
struct Ref {
  long h;
  std::array<long, 2> g;
};

Ref ref_of(const LexElement& a) {
  return {static_cast<long>(a.height()), {static_cast<long>(a.infinitesimal()[0]), static_cast<long>(a.infinitesimal()[1])}};
}

bool ref_le(const Ref& a, const Ref& b) {
  if (a.h != b.h) return a.h < b.h;
  return a.g[0] <= b.g[0] && a.g[1] <= b.g[1];
}

Ref ref_oplus(const Ref& a, const Ref& b, long k) {
  Ref s{a.h + b.h, {a.g[0] + b.g[0], a.g[1] + b.g[1]}};
  if (s.h < k) return s;
  if (s.h > k) return {k, {0, 0}};
  return {k, {std::min(s.g[0], 0L), std::min(s.g[1], 0L)}};
}

// Every member of [0, u] for k = 2, d = 2 with |g_i| <= 2.
std::vector<LexElement> members() {
  std::vector<LexElement> out;
  for (long h = 0; h <= 2; ++h)
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b) {
        LexElement e = L(k2d2, h, {a, b});
        if (in_unit_interval(e)) out.push_back(e);
      }
  return out;
}

}  // namespace

TEST(LexCmp, EqualHeightComparesInfinitesimals) {
  EXPECT_EQ(lex_cmp(L(k2, 1, {2}), L(k2, 1, {3})), Order::Less);
}

TEST(LexCmp, HeightDominates) {
  EXPECT_EQ(lex_cmp(L(k2, 0, {5}), L(k2, 1, {-100})), Order::Less);
  EXPECT_EQ(lex_cmp(L(k2, 1, {-100}), L(k2, 0, {5})), Order::Greater);
}

TEST(LexCmp, IncomparableInRankTwo) {
  EXPECT_EQ(lex_cmp(L(k2d2, 1, {0, 1}), L(k2d2, 1, {1, 0})), Order::Incomparable);
  EXPECT_EQ(lex_cmp(L(k2d2, 1, {1, 1}), L(k2d2, 1, {1, 1})), Order::Equal);
}

TEST(LexCmp, SignatureMismatchThrows) {
  EXPECT_THROW(lex_cmp(L(k2, 1, {0}), L(Signature(3, 1), 1, {0})), Error);
  EXPECT_THROW(L(k2, 1, {0}) + L(k2d2, 1, {0, 0}), Error);
}

TEST(Signature, RejectsNonPositive) {
  EXPECT_THROW(Signature(0, 1), Error);
  EXPECT_THROW(Signature(1, 0), Error);
  EXPECT_THROW(L(k2, 1, {0, 0}), Error);
}

TEST(GroupOps, AddSub) {
  EXPECT_EQ(L(k2, 1, {2}) + L(k2, 1, {-3}), L(k2, 2, {-1}));
  EXPECT_EQ(L(k2, 2, {0}) - L(k2, 1, {2}), L(k2, 1, {-2}));
  LexElement a = L(k2, 1, {7});
  EXPECT_TRUE((a - a).is_zero());
}

TEST(GroupOps, MeetJoin) {
  EXPECT_EQ(meet(L(k2, 2, {4}), L(k2, 2, {0})), L(k2, 2, {0}));
  EXPECT_EQ(meet(L(k2, 1, {9}), L(k2, 2, {-9})), L(k2, 1, {9}));
  EXPECT_EQ(join(L(k2d2, 1, {0, 3}), L(k2d2, 1, {2, 1})), L(k2d2, 1, {2, 3}));
}

TEST(MV, Examples) {
  EXPECT_EQ(mv_oplus(L(k2, 1, {2}), L(k2, 1, {-3})), L(k2, 2, {-1}));
  EXPECT_EQ(mv_oplus(L(k2, 1, {2}), L(k2, 1, {2})), LexElement::unit(k2));
  EXPECT_EQ(mv_neg(L(k2, 1, {2})), L(k2, 1, {-2}));
}

TEST(MV, OperandsOutsideUnitIntervalThrow) {
  EXPECT_THROW(mv_neg(L(k2, 0, {-3})), Error);
  EXPECT_THROW(mv_oplus(L(k2, 3, {0}), L(k2, 0, {0})), Error);
  EXPECT_THROW(partial_add(L(k2, 2, {1}), L(k2, 0, {0})), Error);
}

TEST(PartialAdd, Examples) {
  EXPECT_EQ(partial_add(L(k2, 1, {2}), L(k2, 1, {-3})), L(k2, 2, {-1}));
  EXPECT_FALSE(partial_add(L(k2, 1, {2}), L(k2, 1, {2})).has_value());
  LexElement a = L(k2, 1, {5});
  EXPECT_EQ(partial_add(a, LexElement::zero(k2)), a);
}

TEST(SumFinite, Examples) {
  std::vector<LexElement> ex{L(k2, 0, {1}), L(k2, 1, {2}), L(k2, 1, {-3})};
  EXPECT_EQ(sum_finite(k2, ex), LexElement::unit(k2));
  std::vector<LexElement> too_big(3, L(k2, 1, {0}));
  EXPECT_FALSE(sum_finite(k2, too_big).has_value());
  EXPECT_EQ(sum_finite(k2, {}), LexElement::zero(k2));
}

TEST(Membership, Examples) {
  EXPECT_EQ(height_class(L(k2, 0, {7})), 0);
  EXPECT_EQ(height_class(L(k2, 2, {-2})), 2);
  EXPECT_TRUE(in_unit_interval(L(k2, 2, {-2})));
  EXPECT_FALSE(in_unit_interval(L(k2, 0, {-3})));
  EXPECT_FALSE(in_unit_interval(L(k2, 2, {1})));
  EXPECT_FALSE(in_unit_interval(L(k2d2, 0, {1, -1})));
}

TEST(Text, RoundTrip) {
  for (const auto& e : members()) EXPECT_EQ(parse_lex(to_string(e), k2d2), e);
  EXPECT_EQ(to_string(L(k2, 1, {-3})), "(1; -3)");
  EXPECT_EQ(parse_lex("(1;2)", k2), L(k2, 1, {2}));
  EXPECT_THROW(parse_lex("(1; 2, 3)", k2), ParseError);
  EXPECT_THROW(parse_lex("1; 2", k2), ParseError);
}

TEST(Text, BigIntegersStayExact) {
  LexElement big = parse_lex("(1; 123456789012345678901234567890)", k2);
  EXPECT_EQ(to_string(big + big), "(2; 246913578024691357802469135780)");
}

TEST(MVProperties, AgreeWithReferenceOverAllSmallMembers) {
  auto ms = members();
  for (const auto& a : ms)
    for (const auto& b : ms) {
      Ref ra = ref_of(a), rb = ref_of(b);
      EXPECT_EQ(lex_le(a, b), ref_le(ra, rb));
      Ref ro = ref_oplus(ra, rb, 2);
      LexElement o = mv_oplus(a, b);
      EXPECT_EQ(ref_of(o).h, ro.h);
      EXPECT_EQ(ref_of(o).g, ro.g);
    }
}

TEST(MVProperties, Axioms) {
  auto ms = members();
  const LexElement one = LexElement::unit(k2d2), zero = LexElement::zero(k2d2);
  EXPECT_EQ(mv_neg(zero), one);
  for (const auto& a : ms) {
    EXPECT_EQ(mv_neg(mv_neg(a)), a);
    EXPECT_EQ(mv_oplus(a, one), one);
    EXPECT_EQ(mv_oplus(a, zero), a);
    for (const auto& b : ms) {
      EXPECT_EQ(mv_oplus(a, b), mv_oplus(b, a));
      EXPECT_EQ(mv_oplus(a, mv_neg(mv_oplus(a, mv_neg(b)))), mv_oplus(b, mv_neg(mv_oplus(b, mv_neg(a)))));
      auto p = partial_add(a, b);
      EXPECT_EQ(p.has_value(), mv_odot(a, b).is_zero());
      EXPECT_EQ(p.has_value(), lex_le(a, mv_neg(b)));
      if (p) {
        EXPECT_EQ(*p, mv_oplus(a, b));
        EXPECT_EQ(*p, a + b);
      }
      LexElement m = meet(a, b), j = join(a, b);
      EXPECT_TRUE(lex_le(m, a) && lex_le(m, b) && lex_le(a, j) && lex_le(b, j));
      EXPECT_EQ(meet(a, j), a);
      EXPECT_EQ(join(a, m), a);
      EXPECT_EQ(m + j, a + b);
    }
  }
}

TEST(MVProperties, OplusIsAssociativeOnRandomTriples) {
  auto ms = members();
  SplitMix64 rng(7);
  auto pick = [&] { return ms[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ms.size()) - 1))]; };
  for (int t = 0; t < 3000; ++t) {
    LexElement a = pick(), b = pick(), c = pick();
    EXPECT_EQ(mv_oplus(mv_oplus(a, b), c), mv_oplus(a, mv_oplus(b, c)));
  }
}

TEST(MVProperties, SummableFamiliesArePermutationInvariant) {
  auto ms = members();
  SplitMix64 rng(11);
  for (int t = 0; t < 500; ++t) {
    std::vector<LexElement> items;
    int len = static_cast<int>(rng.uniform(0, 4));
    for (int i = 0; i < len; ++i)
      items.push_back(ms[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ms.size()) - 1))]);
    auto base = sum_finite(k2d2, items);
    std::sort(items.begin(), items.end(), [](const LexElement& a, const LexElement& b) { return repr_order(a, b) < 0; });
    do {
      EXPECT_EQ(sum_finite(k2d2, items), base);
    } while (std::next_permutation(items.begin(), items.end(),
                                   [](const LexElement& a, const LexElement& b) { return repr_order(a, b) < 0; }));
  }
}
