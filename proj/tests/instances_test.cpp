#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "lndt/instances.hpp"
#include "lndt/laws.hpp"
#include "lndt/spread.hpp"
#include "oracles.hpp"

namespace lndt {
namespace {

const TypeExpr kInt = TypeExpr::base(AtomSort::Int);

std::vector<Atom> iota_atoms(std::size_t n, std::int64_t from = 1) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(from + static_cast<std::int64_t>(i));
  return out;
}

// Sum of n^i for i < d, by repeated multiplication.
std::size_t geometric(std::size_t n, std::size_t d) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t i = 0; i < d; ++i, layer *= n) total += layer;
  return total;
}

TEST(InstanceTable, NamesResolveToCodes) {
  std::set<std::string> names;
  for (const InstanceEntry& e : instance_table()) {
    EXPECT_EQ(resolve_alias(e.name), e.code) << e.name;
    EXPECT_FALSE(e.doc.empty());
    names.insert(e.name);
  }
  EXPECT_EQ(names, (std::set<std::string>{"list", "nest", "maybe", "bush", "sqlist", "nperfect:3"}));
}

TEST(ListOf, Examples) {
  EXPECT_EQ(print_val(list_of({})), "[]");
  EXPECT_EQ(print_val(list_of({1, 2})), "[1;(2)]");
  EXPECT_EQ(print_val(list_of({1, 2, 3})), "[1;(2);((3))]");
  EXPECT_THROW(list_of({1, "a"}), SortMismatchError);
}

TEST(ListOf, WellFormedAndFlattensBack) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto xs = iota_atoms(n);
    const Val v = list_of(xs);
    EXPECT_TRUE(wf(TypeExpr::app(parse_code("list"), kInt), v).ok());
    EXPECT_EQ(flatten(parse_code("list"), v), xs);
  }
}

TEST(NestFull, Examples) {
  EXPECT_EQ(print_val(nest_full(0, {})), "[]");
  EXPECT_EQ(print_val(nest_full(2, {1, 2, 3})), "[1;(2,3)]");
  EXPECT_EQ(print_val(nest_full(3, iota_atoms(7))), "[1;(2,3);((4,5),(6,7))]");
  EXPECT_THROW(nest_full(2, {1, 2}), ArgumentError);
}

TEST(MaybeOf, Examples) {
  EXPECT_EQ(print_val(maybe_of(std::nullopt)), "[]");
  EXPECT_EQ(print_val(maybe_of(Atom(5))), "[5]");
  EXPECT_EQ(flatten(parse_code("maybe"), maybe_of(Atom(5))), (std::vector<Atom>{5}));
}

TEST(NperfectFull, Examples) {
  EXPECT_EQ(print_val(nperfect_full(2, 0, {})), "[]");
  EXPECT_EQ(nperfect_full(2, 2, {1, 2, 3}), nest_full(2, {1, 2, 3}));
  EXPECT_EQ(size(parse_code("nperfect:3"), nperfect_full(3, 3, iota_atoms(13))), 13u);
  EXPECT_EQ(print_val(nperfect_full(1, 3, {1, 2, 3})), "[1;(2);((3))]");
  EXPECT_THROW(nperfect_full(0, 1, {1}), ArgumentError);
  EXPECT_THROW(nperfect_full(3, 2, {1, 2, 3}), ArgumentError);
}

TEST(NperfectFull, MatchesNestUpToDepthFour) {
  for (std::size_t d = 0; d <= 4; ++d) {
    const auto xs = iota_atoms(geometric(2, d));
    EXPECT_EQ(nperfect_full(2, d, xs), nest_full(d, xs)) << d;
  }
}

TEST(NperfectFull, SizesFollowGeometricSum) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Code c = resolve_alias("nperfect:" + std::to_string(n));
    for (std::size_t d = 0; d <= 4; ++d) {
      const std::size_t expected = geometric(n, d);
      EXPECT_EQ(perfect_count(n, d), expected);
      const auto xs = iota_atoms(expected, 100);
      const Val v = nperfect_full(n, d, xs);
      EXPECT_TRUE(wf(TypeExpr::app(c, kInt), v).ok()) << n << " " << d;
      EXPECT_EQ(size(c, v), expected);
      EXPECT_EQ(flatten(c, v), xs);
      // layer i holds n^i atoms
      for (std::size_t i = 0; i < d; ++i)
        EXPECT_EQ(oracle::atoms(v.children()[i]).size(), geometric(n, i + 1) - geometric(n, i));
    }
  }
}

TEST(NperfectFull, StringAtoms) {
  const Val v = nperfect_full(2, 2, {"a", "b", "c"});
  EXPECT_EQ(print_val(v), R"(["a";("b","c")])");
}

TEST(PerfectCount, Overflow) {
  EXPECT_EQ(perfect_count(0, 3), 1u);
  EXPECT_THROW(perfect_count(1u << 20, 8), ArgumentError);
}

TEST(Maybe, WellFormedSetIsNothingOrJust) {
  for (const std::vector<Atom>& domain : {std::vector<Atom>{0}, std::vector<Atom>{0, 1},
                                          std::vector<Atom>{3, 1, 4}}) {
    std::vector<Val> expected = {maybe_of(std::nullopt)};
    for (const Atom& a : domain) expected.push_back(maybe_of(a));
    std::vector<Val> found;
    for (std::size_t size = 1; size <= 7; ++size)
      oracle::raw_trees(size, domain, [&](const Val& v) {
        if (wf(TypeExpr::app(parse_code("maybe"), kInt), v).ok()) found.push_back(v);
      });
    auto key = [](const std::vector<Val>& vs) {
      std::multiset<std::string> out;
      for (const Val& v : vs) out.insert(print_val(v));
      return out;
    };
    EXPECT_EQ(key(found), key(expected));
  }
}

}  // namespace
}  // namespace lndt
