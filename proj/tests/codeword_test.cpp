#include <gtest/gtest.h>

#include "snnpat/codeword.h"
#include "snnpat/errors.h"

using namespace snnpat;

TEST(CodeWord, Construction) {
  const CodeWord w(992, 10);
  EXPECT_EQ(w.value(), 992u);
  EXPECT_TRUE(w.bit(5));
  EXPECT_FALSE(w.bit(4));
  EXPECT_EQ(w.complement().value(), 31u);
  EXPECT_THROW(CodeWord(1024, 10), ValidationError);
  EXPECT_THROW(CodeWord(0, 0), ValidationError);
  EXPECT_THROW(CodeWord(0, 33), ValidationError);
  EXPECT_NO_THROW(CodeWord(0xFFFFFFFFu, 32));
}

TEST(Hamming, KnownPairs) {
  EXPECT_EQ(hamming(CodeWord(992, 10), CodeWord(960, 10)), 1);
  EXPECT_EQ(hamming(CodeWord(992, 10), CodeWord(31, 10)), 10);
  EXPECT_EQ(hamming(CodeWord(77, 10), CodeWord(77, 10)), 0);
}

TEST(Hamming, WidthMismatch) {
  EXPECT_THROW(hamming(CodeWord(1, 10), CodeWord(1, 11)), ValidationError);
}

TEST(ParseCodeWord, ListsAndErrors) {
  const auto list = parse_codeword_list("992, 960,0", 10);
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[1].value(), 960u);
  EXPECT_THROW(parse_codeword_list("992,,1", 10), ValidationError);
  EXPECT_THROW(parse_codeword("abc", 10), ValidationError);
  EXPECT_THROW(parse_codeword("-1", 10), ValidationError);
  EXPECT_THROW(parse_codeword("2048", 10), ValidationError);
}
