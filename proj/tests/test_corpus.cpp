#include <random>

#include <gtest/gtest.h>

#include "densilex/corpus.hpp"
#include "densilex/csv.hpp"
#include "densilex/util.hpp"
#include "support/oracles.hpp"

namespace densilex {
namespace {

const char* kHeader = "nickname,age,gender,likes,comment\n";

TEST(ParseComments, GenderFemaleMapsToZero) {
  auto recs = parse_comments(std::string(kHeader) + "ann,20,female,3,nice video\n");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].gender, Gender::Female);
  EXPECT_EQ(static_cast<int>(*recs[0].gender), 0);
}

TEST(ParseComments, GenderVariants) {
  for (const char* s : {"0", "F", "Female", "女", " f "}) {
    EXPECT_EQ(parse_gender(s), Gender::Female) << s;
  }
  for (const char* s : {"1", "M", "MALE", "男"}) {
    EXPECT_EQ(parse_gender(s), Gender::Male) << s;
  }
  for (const char* s : {"", "2", "unknown", "fem"}) {
    EXPECT_FALSE(parse_gender(s).has_value()) << s;
  }
}

TEST(ParseComments, EmptyFileWithHeader) {
  EXPECT_TRUE(parse_comments(kHeader).empty());
}

TEST(ParseComments, BadOptionalCellsBecomeAbsent) {
  // Three-row fixture; expected records written out by hand.
  const std::string csv = std::string(kHeader) +
                          "a,abc,m,10,first comment\n"
                          "b,200,x,zz,\"second, with comma\"\n"
                          "c,,1,,third\n";
  auto recs = parse_comments(csv);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_FALSE(recs[0].age.has_value());
  EXPECT_EQ(recs[0].text, "first comment");
  EXPECT_EQ(recs[0].gender, Gender::Male);
  EXPECT_EQ(recs[0].likes, 10u);

  EXPECT_FALSE(recs[1].age.has_value());  // out of [0, 150]
  EXPECT_FALSE(recs[1].gender.has_value());
  EXPECT_EQ(recs[1].likes, 0u);
  EXPECT_EQ(recs[1].text, "second, with comma");

  EXPECT_FALSE(recs[2].age.has_value());
  EXPECT_EQ(recs[2].gender, Gender::Male);
  EXPECT_EQ(recs[2].nickname, "c");
}

TEST(ParseComments, SkipsBlankText) {
  auto recs = parse_comments(std::string(kHeader) + "a,1,0,1,   \nb,2,1,2,ok\n");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].nickname, "b");
}

TEST(ParseComments, MissingTextColumnIsSchemaError) {
  EXPECT_THROW(parse_comments("nickname,age\na,1\n"), SchemaError);
}

TEST(ParseComments, CustomSchema) {
  CsvSchema schema;
  schema.text = "评论";
  schema.gender = "性别";
  auto recs = parse_comments("性别,评论\n男,很好\n", schema);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].gender, Gender::Male);
  EXPECT_EQ(recs[0].text, "很好");
}

TEST(ParseComments, FramingErrorsCarryRowNumber) {
  try {
    parse_comments(std::string(kHeader) + "a,1,0,1,ok\nb,2,1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_comments(std::string(kHeader) + "a,1,0,1,ok\nb,2,1,2,\"open\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Csv, QuotedNewlinesAndCrlf) {
  auto rows = csv::read("a,b\r\n\"x\ny\",\"say \"\"hi\"\"\"\r\nlast,row");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].fields[0], "x\ny");
  EXPECT_EQ(rows[1].fields[1], "say \"hi\"");
  EXPECT_EQ(rows[2].line, 4u);
  EXPECT_THROW(csv::read("a,b\"c\n"), ParseError);
}

TEST(Tokenize, Pretokenized) {
  EXPECT_EQ(tokenize("good day", TokenizerMode::Pretokenized),
            (std::vector<std::string>{"good", "day"}));
  EXPECT_TRUE(tokenize("", TokenizerMode::Pretokenized).empty());
  EXPECT_TRUE(tokenize("", TokenizerMode::CjkChars).empty());
  EXPECT_EQ(tokenize("  \"wow!!\"  (nice) ... it's ", TokenizerMode::Pretokenized),
            (std::vector<std::string>{"wow", "nice", "it's"}));
}

TEST(Tokenize, CjkChars) {
  EXPECT_EQ(tokenize("很好!", TokenizerMode::CjkChars),
            (std::vector<std::string>{"很", "好"}));
  EXPECT_EQ(tokenize("抖音video真的awesome，哈哈", TokenizerMode::CjkChars),
            (std::vector<std::string>{"抖", "音", "video", "真", "的", "awesome", "哈", "哈"}));
  EXPECT_EQ(tokenize("すごい 좋아", TokenizerMode::CjkChars),
            (std::vector<std::string>{"す", "ご", "い", "좋", "아"}));
}

TEST(Tokenize, NfcNormalizesComposedForms) {
  // "e" + combining acute accent composes to U+00E9.
  EXPECT_EQ(tokenize("caf\x65\xCC\x81", TokenizerMode::Pretokenized),
            (std::vector<std::string>{"caf\xC3\xA9"}));
}

TEST(Tokenize, CjkClassMatchesRangeOracle) {
  const std::pair<char32_t, char32_t> ranges[] = {
      {0x4E00, 0x9FFC}, {0x3400, 0x4DBF}, {0x3041, 0x3096},
      {0x30A1, 0x30FA}, {0xAC00, 0xD7A3}, {0x20000, 0x2A6DD}};
  for (auto [lo, hi] : ranges) {
    for (char32_t cp = lo; cp <= hi; ++cp) {
      ASSERT_TRUE(is_cjk_codepoint(cp)) << std::hex << static_cast<std::uint32_t>(cp);
      ASSERT_TRUE(testing::cjk_by_ranges(cp));
    }
  }
  for (char32_t cp : {U'a', U'Z', U'0', U'!', U'、', U'。', U'！',
                      U'，', U'é', U'Ж', U'\U0001F600', U'ー'}) {
    EXPECT_FALSE(is_cjk_codepoint(cp)) << std::hex << static_cast<std::uint32_t>(cp);
    EXPECT_FALSE(testing::cjk_by_ranges(cp));
  }
}

TEST(Tokenize, PretokenizedJoinIsFixpoint) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> pieces = {"a", "好", "!", "...", "x,y", "(z)", " ",
                                           "\t", "ok?", "\"q\"", "-", "e\xCC\x81"};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    for (int i = 0; i < 12; ++i) text += pieces[pick(rng)];
    auto once = tokenize(text, TokenizerMode::Pretokenized);
    std::string joined;
    for (std::size_t i = 0; i < once.size(); ++i) joined += (i ? " " : "") + once[i];
    EXPECT_EQ(tokenize(joined, TokenizerMode::Pretokenized), once) << text;
    for (const auto& t : once) EXPECT_FALSE(t.empty());
  }
}

TEST(TokenizedCorpus, DropsEmptyDocumentsAndTokens) {
  TokenizedCorpus c({{"a", ""}, {}, {""}, {"b"}});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.documents()[0], (Document{"a"}));
  EXPECT_EQ(parse_token_file(format_token_file(c)).documents(), c.documents());
}

TEST(FrequencyTable, CountsByHand) {
  auto t = build_frequency_table(TokenizedCorpus({{"a", "b", "a"}}));
  EXPECT_EQ(t.count("a"), 2u);
  EXPECT_EQ(t.count("b"), 1u);
  EXPECT_EQ(t.max_count(), 2u);

  auto single = build_frequency_table(TokenizedCorpus({{"x"}}));
  EXPECT_EQ(single.count("x"), 1u);
  EXPECT_EQ(single.max_count(), 1u);

  EXPECT_THROW(build_frequency_table(TokenizedCorpus{}), InvalidArgument);
}

TEST(FrequencyTable, TableOneCounts) {
  TokenizedCorpus c;
  for (int i = 0; i < 3710; ++i) c.add({"feel", i % 2 ? "x" : "y"});
  auto t = build_frequency_table(c);
  EXPECT_EQ(t.count("feel"), 3710u);
  EXPECT_EQ(t.max_count(), 3710u);
}

FrequencyTable table_one() {
  FrequencyTable t;
  t.add("feel", 3710);
  t.add("Awesome", 3523);
  t.add("heart", 3365);
  t.add("praise", 2351);
  return t;
}

TEST(TermFrequency, TableOneRatios) {
  auto t = table_one();
  EXPECT_DOUBLE_EQ(term_frequency(t, "feel"), 1.0);
  EXPECT_NEAR(term_frequency(t, "Awesome"), 0.94960, 1e-5);
  EXPECT_NEAR(term_frequency(t, "praise"), 0.63369, 1e-5);
  EXPECT_THROW(term_frequency(t, "nope"), NotFoundError);
}

TEST(TermFrequency, ScaleFreeUnderDocumentDuplication) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> w(0, 6), len(1, 8);
  for (int trial = 0; trial < 20; ++trial) {
    TokenizedCorpus c, doubled;
    for (int d = 0; d < 15; ++d) {
      Document doc;
      for (int i = len(rng); i > 0; --i) doc.push_back("w" + std::to_string(w(rng)));
      c.add(doc);
      doubled.add(doc);
      doubled.add(doc);
    }
    auto a = build_frequency_table(c);
    auto b = build_frequency_table(doubled);
    std::uint64_t sum = 0;
    for (const auto& [word, count] : a.counts()) {
      sum += count;
      EXPECT_DOUBLE_EQ(term_frequency(a, word), term_frequency(b, word));
    }
    EXPECT_EQ(sum, c.token_count());
  }
}

TEST(FrequencyTable, TsvSortedByCountThenWord) {
  FrequencyTable t;
  t.add("b", 2);
  t.add("a", 2);
  t.add("c", 5);
  EXPECT_EQ(format_frequency_tsv(t), "c\t5\na\t2\nb\t2\n");
  EXPECT_EQ(t.top(2), (std::vector<std::string>{"c", "a"}));
}

TEST(CooccurrencePairRate, HandEnumerated) {
  TokenizedCorpus c({{"a", "a"}, {"a", "b"}, {"c"}});
  EXPECT_DOUBLE_EQ(cooccurrence_pair_rate(c, {"a"}), 0.5);
  EXPECT_DOUBLE_EQ(cooccurrence_pair_rate(TokenizedCorpus(std::vector<Document>{{"a", "a"}}), {"a"}), 1.0);
  EXPECT_DOUBLE_EQ(cooccurrence_pair_rate(TokenizedCorpus({{"a", "x"}, {"b"}}), {"a", "b"}), 0.0);
  EXPECT_THROW(cooccurrence_pair_rate(c, {"zzz"}), InvalidArgument);
  EXPECT_THROW(cooccurrence_pair_rate(c, {}), InvalidArgument);
}

}  // namespace
}  // namespace densilex
