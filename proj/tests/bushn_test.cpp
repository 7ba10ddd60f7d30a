#include <gtest/gtest.h>

#include "lndt/bushn.hpp"
#include "lndt/laws.hpp"
#include "lndt/spread.hpp"
#include "oracles.hpp"

namespace lndt {
namespace {

using B = BushNVal;

// In-order atoms of a BushN value.
void bushn_atoms(const B& b, std::vector<Atom>& out) {
  switch (b.kind()) {
    case B::Kind::Base: out.push_back(b.atom()); break;
    case B::Kind::Nil: break;
    case B::Kind::Cons:
      bushn_atoms(b.head(), out);
      bushn_atoms(b.tail(), out);
      break;
  }
}

TEST(ToBushN, Examples) {
  EXPECT_EQ(to_bushn(parse_val("[]")), B::nil(1));
  EXPECT_EQ(to_bushn(parse_val("[7]")), B::cons(1, B::base(7), B::nil(2)));
  EXPECT_EQ(to_string(to_bushn(parse_val("[1;[10]]"))),
            "ConsBN(1,BaseBN(1),ConsBN(2,ConsBN(1,BaseBN(10),NilBN(2)),NilBN(3)))");
  EXPECT_EQ(to_bushn(parse_val("[[]]"), 2), B::cons(2, B::nil(1), B::nil(3)));
}

TEST(ToBushN, Errors) {
  EXPECT_THROW(to_bushn(parse_val("[]"), 0), ArgumentError);
  EXPECT_THROW(to_bushn(parse_val("[1;2]")), IllFormedError);
  EXPECT_THROW(to_bushn(parse_val("[1]"), 2), IllFormedError);
}

TEST(FromBushN, Examples) {
  EXPECT_EQ(from_bushn(B::nil(1)), parse_val("[]"));
  EXPECT_EQ(from_bushn(B::cons(1, B::base(7), B::nil(2))), parse_val("[7]"));
  EXPECT_THROW(from_bushn(B::base(7)), ArgumentError);
  EXPECT_THROW(from_bushn(B::cons(1, B::base(7), B::nil(5))), ArgumentError);
}

TEST(WfBushN, Examples) {
  EXPECT_TRUE(wf_bushn(B::nil(3)));
  EXPECT_TRUE(wf_bushn(B::cons(1, B::base(7), B::nil(2))));
  EXPECT_FALSE(wf_bushn(B::cons(1, B::base(7), B::nil(5))));
  EXPECT_FALSE(wf_bushn(B::nil(0)));
  EXPECT_FALSE(wf_bushn(B::cons(2, B::base(7), B::nil(3))));
}

TEST(BushN, RoundTripsGeneratedBushes) {
  const TypeExpr t = TypeExpr::app(Code::bush(), TypeExpr::base(AtomSort::Int));
  GenConfig cfg;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    cfg.seed = seed;
    const Val v = gen_val(t, cfg);
    const B b = to_bushn(v);
    ASSERT_TRUE(wf_bushn(b)) << print_val(v);
    EXPECT_EQ(b.level(), 1u);
    EXPECT_EQ(from_bushn(b), v);
    EXPECT_EQ(to_bushn(from_bushn(b)), b);
    std::vector<Atom> xs;
    bushn_atoms(b, xs);
    EXPECT_EQ(xs, oracle::atoms(v));
  }
}

TEST(BushN, RoundTripsEnumeratedBushes) {
  const TypeExpr t = TypeExpr::app(Code::bush(), TypeExpr::base(AtomSort::Str));
  for (const Val& v : enum_vals(t, 9, {"a", "b"})) EXPECT_EQ(from_bushn(to_bushn(v)), v);
}

}  // namespace
}  // namespace lndt
