#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace densilex {

enum class Gender : std::uint8_t { Female = 0, Male = 1 };

struct CommentRecord {
  std::string nickname;
  std::optional<int> age;  // years, in [0, 150]
  std::optional<Gender> gender;
  std::uint64_t likes = 0;
  std::string text;  // never empty
};

// Logical field -> CSV column name. Only the text column is mandatory.
struct CsvSchema {
  std::string nickname = "nickname";
  std::string age = "age";
  std::string gender = "gender";
  std::string likes = "likes";
  std::string text = "comment";
};

// One record per data row; rows whose text is blank are dropped.
// Unparseable age or gender cells become absent; unparseable likes become 0.
std::vector<CommentRecord> parse_comments(std::string_view csv_bytes,
                                          const CsvSchema& schema = {});

// "0"/"1", "female"/"male", "f"/"m", "女"/"男", case-insensitive.
std::optional<Gender> parse_gender(std::string_view cell);

enum class TokenizerMode { Pretokenized, CjkChars };

std::optional<TokenizerMode> parse_tokenizer_mode(std::string_view name);

using Document = std::vector<std::string>;

// Documents of non-empty tokens. Empty documents are never stored.
class TokenizedCorpus {
 public:
  TokenizedCorpus() = default;
  explicit TokenizedCorpus(std::vector<Document> documents);

  void add(Document doc);
  const std::vector<Document>& documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }
  std::size_t token_count() const;

 private:
  std::vector<Document> documents_;
};

// Input is NFC-normalized first. Pretokenized splits on Unicode whitespace;
// CjkChars additionally emits every CJK ideograph/kana/hangul codepoint as
// its own token. Punctuation and symbols are stripped from token edges and
// tokens left empty are dropped.
std::vector<std::string> tokenize(std::string_view text, TokenizerMode mode);

// True for codepoints the CjkChars tokenizer splits into single tokens.
bool is_cjk_codepoint(char32_t cp);

TokenizedCorpus tokenize_comments(const std::vector<CommentRecord>& records,
                                  TokenizerMode mode);

// One document per line, tokens separated by single spaces.
std::string format_token_file(const TokenizedCorpus& corpus);
TokenizedCorpus parse_token_file(std::string_view bytes);

class FrequencyTable {
 public:
  FrequencyTable() = default;

  void add(const std::string& word, std::uint64_t count = 1);
  void merge(const FrequencyTable& other);

  std::uint64_t count(const std::string& word) const;  // 0 when absent
  bool contains(const std::string& word) const;
  std::uint64_t max_count() const { return max_count_; }
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  const std::map<std::string, std::uint64_t>& counts() const {
    return counts_;
  }

  // Count descending, ties broken by byte-wise word order.
  std::vector<std::pair<std::string, std::uint64_t>> sorted() const;
  std::vector<std::string> top(std::size_t n) const;

 private:
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t max_count_ = 0;
  std::uint64_t total_ = 0;
};

// Throws InvalidArgument on an empty corpus.
FrequencyTable build_frequency_table(const TokenizedCorpus& corpus);

// counts[word] / max_count. Throws NotFoundError for unknown words.
double term_frequency(const FrequencyTable& table, const std::string& word);

// Among documents holding at least one token from hi_freq, the fraction
// holding two or more such token occurrences.
double cooccurrence_pair_rate(const TokenizedCorpus& corpus,
                              const std::set<std::string>& hi_freq);

inline constexpr std::size_t kDefaultHighFrequencyWords = 200;

// `word<TAB>count` lines in sorted() order.
std::string format_frequency_tsv(const FrequencyTable& table);

}  // namespace densilex
