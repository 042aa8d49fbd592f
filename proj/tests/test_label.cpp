#include <gtest/gtest.h>

#include <random>

#include "sposet/error.hpp"
#include "sposet/label.hpp"

namespace sposet {
namespace {

ElementLabel random_label(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1);
  switch (kind(rng)) {
    case 0:
      return ElementLabel::bottom();
    case 1: {
      std::vector<std::string> names{"a", "b", "x1", "x10", "1110", "l2"};
      std::shuffle(names.begin(), names.end(), rng);
      names.resize(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
      return ElementLabel::atom_set(names);
    }
    case 2:
      return ElementLabel::copy(std::uniform_int_distribution<std::size_t>(0, 12)(rng),
                                random_label(rng, depth - 1));
    default: {
      std::vector<ElementLabel> members;
      const auto k = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int i = 0; i < k; ++i) {
        auto m = random_label(rng, depth - 1);
        if (std::find(members.begin(), members.end(), m) == members.end()) members.push_back(m);
      }
      return ElementLabel::class_of(members);
    }
  }
}

TEST(ElementLabel, CanonicalStrings) {
  EXPECT_EQ(ElementLabel::bottom().str(), "0");
  EXPECT_EQ(ElementLabel::atom_set({"c", "b"}).str(), "b*c");
  EXPECT_EQ(ElementLabel::atom_set({}).str(), "0");
  EXPECT_TRUE(ElementLabel::atom_set({}).is_bottom());
  EXPECT_EQ(ElementLabel::copy(2, ElementLabel::atom_set({"b", "c"})).str(), "2@b*c");
  const auto cls = ElementLabel::class_of(
      {ElementLabel::copy(1, ElementLabel::vertex("a")), ElementLabel::copy(0, ElementLabel::vertex("a"))});
  EXPECT_EQ(cls.str(), "{0@a,1@a}");
}

TEST(ElementLabel, ParseRoundTripProperty) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const ElementLabel l = random_label(rng, 3);
    const ElementLabel back = ElementLabel::parse(l.str());
    EXPECT_EQ(back, l) << l.str();
    EXPECT_EQ(back.str(), l.str());
  }
}

TEST(ElementLabel, OrderIsTotalAndStructural) {
  const auto bottom = ElementLabel::bottom();
  const auto a = ElementLabel::vertex("a");
  const auto ab = ElementLabel::atom_set({"a", "b"});
  const auto z = ElementLabel::vertex("z");
  EXPECT_LT(bottom, a);
  EXPECT_LT(z, ab);  // atom sets order by size first
  EXPECT_LT(a, z);
  EXPECT_LT(ab, ElementLabel::copy(0, bottom));
  EXPECT_LT(ElementLabel::copy(0, z), ElementLabel::copy(1, a));
  EXPECT_LT(ElementLabel::copy(5, a), ElementLabel::class_of({a}));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_label(rng, 2);
    const auto y = random_label(rng, 2);
    EXPECT_EQ(x == y, x.str() == y.str());
    EXPECT_NE(x < y, y < x || x == y);
  }
}

TEST(ElementLabel, RejectsMalformedText) {
  EXPECT_THROW(ElementLabel::parse(""), ParseError);
  EXPECT_THROW(ElementLabel::parse("a**b"), ParseError);
  EXPECT_THROW(ElementLabel::parse("a*a"), ParseError);
  EXPECT_THROW(ElementLabel::parse("{a,b"), ParseError);
  EXPECT_THROW(ElementLabel::parse("x@a"), ParseError);
  EXPECT_THROW(ElementLabel::parse("0*a"), ParseError);
  EXPECT_THROW(ElementLabel::atom_set({"a b"}), ParseError);
  EXPECT_THROW(ElementLabel::vertex("a").copy_index(), DomainError);
  EXPECT_THROW(ElementLabel::vertex("a").members(), DomainError);
}

}  // namespace
}  // namespace sposet
