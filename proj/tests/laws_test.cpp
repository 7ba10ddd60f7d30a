#include <gtest/gtest.h>

#include <set>

#include "lndt/laws.hpp"
#include "oracles.hpp"

namespace lndt {
namespace {

const TypeExpr kInt = TypeExpr::base(AtomSort::Int);

TypeExpr over_int(const char* code) { return TypeExpr::app(parse_code(code), kInt); }

std::vector<std::string> texts(const std::vector<Val>& vs) {
  std::vector<std::string> out;
  for (const Val& v : vs) out.push_back(print_val(v));
  return out;
}

TEST(SplitMix64, ReferenceOutputs) {
  // Published first outputs for seed 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
}

TEST(MinInhabitant, Sizes) {
  EXPECT_EQ(min_inhabitant_size(kInt, {0}), 1u);
  EXPECT_EQ(min_inhabitant_size(kInt, {"a"}), kUninhabited);
  EXPECT_EQ(min_inhabitant_size(TypeExpr::app(parse_code("tup:2"), kInt), {0}), 4u);
  EXPECT_EQ(min_inhabitant_size(TypeExpr::app(Code::null(), kInt), {0}), kUninhabited);
  EXPECT_EQ(min_inhabitant_size(over_int("bush"), {}), 1u);
  EXPECT_EQ(min_inhabitant_size(app_iter(parse_code("tup:1"), 80, kInt), {0}), kUninhabited);
}

TEST(GenVal, Examples) {
  GenConfig cfg;
  cfg.budget = 1;
  cfg.seed = 42;
  EXPECT_EQ(print_val(gen_val(over_int("list"), cfg)), "[]");

  cfg.budget = 2;
  cfg.atom_domain = {0, 1};
  const std::set<std::string> allowed = {"[]", "[0]", "[1]"};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    cfg.seed = seed;
    EXPECT_TRUE(allowed.contains(print_val(gen_val(over_int("maybe"), cfg))));
  }
}

TEST(GenVal, Deterministic) {
  GenConfig cfg;
  cfg.seed = 99;
  for (const char* code : {"list", "nest", "bush", "sqlist"})
    EXPECT_EQ(gen_val(over_int(code), cfg), gen_val(over_int(code), cfg));
}

TEST(GenVal, SoundAndWithinBudget) {
  for (const char* code : {"list", "nest", "maybe", "sqlist", "bush", "nperfect:3", "lndt(tup:4)",
                           "lndt(lndt(bush))"}) {
    const TypeExpr t = over_int(code);
    for (std::size_t budget : {1u, 2u, 5u, 30u, 200u}) {
      GenConfig cfg;
      cfg.budget = budget;
      for (std::uint64_t seed = 0; seed < 60; ++seed) {
        cfg.seed = seed;
        const Val v = gen_val(t, cfg);
        ASSERT_TRUE(wf(t, v).ok()) << code << " " << print_val(v);
        ASSERT_LE(struct_size(v), budget) << code;
      }
    }
  }
}

TEST(GenVal, ProducesNontrivialBushes) {
  GenConfig cfg;
  std::size_t deepest = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    cfg.seed = seed;
    deepest = std::max(deepest, gen_val(over_int("bush"), cfg).children().size());
  }
  EXPECT_GE(deepest, 3u);
}

TEST(GenVal, Errors) {
  GenConfig cfg;
  EXPECT_THROW(gen_val(TypeExpr::app(Code::null(), kInt), cfg), ArgumentError);
  cfg.atom_domain = {"a"};
  EXPECT_THROW(gen_val(TypeExpr::app(parse_code("tup:0"), kInt), cfg), ArgumentError);
  cfg.atom_domain = {0};
  cfg.budget = 2;
  EXPECT_THROW(gen_val(TypeExpr::app(parse_code("tup:1"), kInt), cfg), ArgumentError);
  cfg.budget = 0;
  EXPECT_THROW(gen_val(over_int("list"), cfg), ArgumentError);
  cfg.budget = 5;
  cfg.atom_domain = {};
  EXPECT_THROW(gen_val(over_int("list"), cfg), ArgumentError);
}

TEST(EnumVals, Examples) {
  EXPECT_EQ(texts(enum_vals(over_int("maybe"), 10, {0, 1})), (std::vector<std::string>{"[]", "[0]", "[1]"}));
  EXPECT_EQ(texts(enum_vals(over_int("list"), 4, {0})), (std::vector<std::string>{"[]", "[0]", "[0;(0)]"}));
  EXPECT_TRUE(enum_vals(over_int("list"), 0, {0}).empty());
  EXPECT_TRUE(enum_vals(TypeExpr::app(Code::null(), kInt), 10, {0}).empty());
  EXPECT_EQ(enum_vals(over_int("list"), 4, {0, 0}).size(), 3u);
}

TEST(EnumVals, MatchesRawTreeFilter) {
  const char* codes[] = {"list", "nest", "maybe", "sqlist", "bush", "nperfect:3", "lndt(tup:2)"};
  for (const std::vector<Atom>& domain : {std::vector<Atom>{0}, std::vector<Atom>{0, 1}}) {
    std::vector<std::set<std::string>> expected(std::size(codes));
    for (std::size_t size = 1; size <= 8; ++size)
      oracle::raw_trees(size, domain, [&](const Val& v) {
        for (std::size_t i = 0; i < std::size(codes); ++i)
          if (wf(over_int(codes[i]), v).ok()) expected[i].insert(print_val(v));
      });
    for (std::size_t i = 0; i < std::size(codes); ++i) {
      const auto found = texts(enum_vals(over_int(codes[i]), 8, domain));
      const std::set<std::string> unique(found.begin(), found.end());
      EXPECT_EQ(unique.size(), found.size()) << codes[i];
      EXPECT_EQ(unique, expected[i]) << codes[i];
    }
  }
}

TEST(EnumVals, OrderedBySizeThenText) {
  const auto vs = enum_vals(over_int("bush"), 8, {0, 1});
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const auto a = std::make_pair(struct_size(vs[i - 1]), print_val(vs[i - 1]));
    const auto b = std::make_pair(struct_size(vs[i]), print_val(vs[i]));
    EXPECT_LT(a, b);
  }
}

TEST(Congruence, SkipsWhenFunctionsDisagree) {
  const Code list = parse_code("list");
  const AtomFn plus1 = [](const Atom& a) { return Atom(a.as_int() + 1); };
  const AtomFn plus2 = [](const Atom& a) { return Atom(a.as_int() + 2); };
  EXPECT_EQ(check_congruence(list, plus1, plus2, parse_val("[1;(2)]")), LawOutcome::Skipped);
  EXPECT_EQ(check_congruence(list, plus1, plus2, parse_val("[]")), LawOutcome::Holds);
  const AtomFn plus_self = [](const Atom& a) { return Atom(a.as_int() + a.as_int()); };
  const AtomFn twice = [](const Atom& a) { return Atom(2 * a.as_int()); };
  EXPECT_EQ(check_congruence(list, plus_self, twice, parse_val("[1;(2)]")), LawOutcome::Holds);
}

TEST(RunLaws, ListAndBushHaveNoFailures) {
  GenConfig cfg;
  const LawReport list = run_laws(parse_code("list"), cfg, 1000);
  EXPECT_EQ(list.total_failures(), 0u) << to_text(list);
  const LawReport bush = run_laws(parse_code("bush"), cfg, 500);
  EXPECT_EQ(bush.total_failures(), 0u) << to_text(bush);
  ASSERT_EQ(bush.laws.size(), law_names().size());
  for (const LawResult& law : bush.laws) {
    EXPECT_EQ(law.cases, 500u);
    EXPECT_EQ(law.skipped, 0u);
  }
}

TEST(RunLaws, TextReport) {
  GenConfig cfg;
  const std::string text = to_text(run_laws(parse_code("maybe"), cfg, 3));
  EXPECT_EQ(text.substr(0, text.find('\n')), "lndt(null) congruence: cases=3 skipped=0 failures=0");
  cfg.atom_domain = {"a"};
  EXPECT_THROW(run_laws(parse_code("list"), cfg, 1), ArgumentError);
}

}  // namespace
}  // namespace lndt
