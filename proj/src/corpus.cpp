#include "densilex/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/uscript.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "densilex/csv.hpp"
#include "densilex/kernels.hpp"
#include "densilex/util.hpp"

namespace densilex {

namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c);
  });
  return out;
}

std::optional<int> parse_age(std::string_view cell) {
  cell = trim(cell);
  int value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    return std::nullopt;
  }
  if (value < 0 || value > 150) return std::nullopt;
  return value;
}

std::uint64_t parse_likes(std::string_view cell) {
  cell = trim(cell);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    return 0;
  }
  return value;
}

std::optional<std::size_t> column_of(const std::vector<std::string>& header,
                                     const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return i;
  }
  return std::nullopt;
}

std::string nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString dst = norm->normalize(src, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::string out;
  dst.toUTF8String(out);
  return out;
}

// Codepoint boundaries of a token, for edge stripping.
struct CodepointSpan {
  std::size_t begin;
  std::size_t end;
  UChar32 cp;
};

std::string strip_punct(std::string_view token) {
  std::vector<CodepointSpan> cps;
  int32_t i = 0;
  const auto* s = reinterpret_cast<const uint8_t*>(token.data());
  const auto n = static_cast<int32_t>(token.size());
  while (i < n) {
    int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, n, c);
    cps.push_back({static_cast<std::size_t>(start), static_cast<std::size_t>(i), c});
  }
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && (cps[b].cp < 0 || u_ispunct(cps[b].cp))) ++b;
  while (e > b && (cps[e - 1].cp < 0 || u_ispunct(cps[e - 1].cp))) --e;
  if (b == e) return {};
  return std::string(token.substr(cps[b].begin, cps[e - 1].end - cps[b].begin));
}

}  // namespace

std::optional<Gender> parse_gender(std::string_view cell) {
  std::string v = ascii_lower(trim(cell));
  if (v == "0" || v == "female" || v == "f" || v == "女") return Gender::Female;
  if (v == "1" || v == "male" || v == "m" || v == "男") return Gender::Male;
  return std::nullopt;
}

std::vector<CommentRecord> parse_comments(std::string_view csv_bytes,
                                          const CsvSchema& schema) {
  std::vector<csv::Row> rows = csv::read(csv_bytes);
  if (rows.empty()) throw SchemaError("CSV has no header row");

  const auto& header = rows.front().fields;
  auto text_col = column_of(header, schema.text);
  if (!text_col) {
    throw SchemaError("CSV header has no text column '" + schema.text + "'");
  }
  auto nick_col = column_of(header, schema.nickname);
  auto age_col = column_of(header, schema.age);
  auto gender_col = column_of(header, schema.gender);
  auto likes_col = column_of(header, schema.likes);

  std::vector<CommentRecord> out;
  out.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r].fields;
    if (f.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) +
                           " fields, found " + std::to_string(f.size()),
                       rows[r].line);
    }
    CommentRecord rec;
    rec.text = std::string(trim(f[*text_col]));
    if (rec.text.empty()) continue;
    if (nick_col) rec.nickname = std::string(trim(f[*nick_col]));
    if (age_col) rec.age = parse_age(f[*age_col]);
    if (gender_col) rec.gender = parse_gender(f[*gender_col]);
    if (likes_col) rec.likes = parse_likes(f[*likes_col]);
    out.push_back(std::move(rec));
  }
  return out;
}

std::optional<TokenizerMode> parse_tokenizer_mode(std::string_view name) {
  if (name == "pretokenized") return TokenizerMode::Pretokenized;
  if (name == "cjk-chars") return TokenizerMode::CjkChars;
  return std::nullopt;
}

TokenizedCorpus::TokenizedCorpus(std::vector<Document> documents) {
  documents_.reserve(documents.size());
  for (auto& d : documents) add(std::move(d));
}

void TokenizedCorpus::add(Document doc) {
  std::erase_if(doc, [](const std::string& t) { return t.empty(); });
  if (!doc.empty()) documents_.push_back(std::move(doc));
}

std::size_t TokenizedCorpus::token_count() const {
  std::size_t n = 0;
  for (const auto& d : documents_) n += d.size();
  return n;
}

bool is_cjk_codepoint(char32_t cp) {
  UErrorCode status = U_ZERO_ERROR;
  UScriptCode script = uscript_getScript(static_cast<UChar32>(cp), &status);
  if (U_FAILURE(status)) return false;
  return script == USCRIPT_HAN || script == USCRIPT_HIRAGANA ||
         script == USCRIPT_KATAKANA || script == USCRIPT_HANGUL;
}

std::vector<std::string> tokenize(std::string_view text, TokenizerMode mode) {
  std::vector<std::string> tokens;
  if (text.empty()) return tokens;
  const std::string norm = nfc(text);

  std::string run;
  auto flush = [&] {
    if (run.empty()) return;
    std::string t = strip_punct(run);
    if (!t.empty()) tokens.push_back(std::move(t));
    run.clear();
  };

  const auto* s = reinterpret_cast<const uint8_t*>(norm.data());
  const auto n = static_cast<int32_t>(norm.size());
  int32_t i = 0;
  while (i < n) {
    int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, n, c);
    if (c >= 0 && u_isUWhiteSpace(c)) {
      flush();
    } else if (mode == TokenizerMode::CjkChars && c >= 0 &&
               is_cjk_codepoint(static_cast<char32_t>(c))) {
      flush();
      tokens.emplace_back(norm.substr(static_cast<std::size_t>(start),
                                      static_cast<std::size_t>(i - start)));
    } else {
      run.append(norm, static_cast<std::size_t>(start),
                 static_cast<std::size_t>(i - start));
    }
  }
  flush();
  return tokens;
}

TokenizedCorpus tokenize_comments(const std::vector<CommentRecord>& records,
                                  TokenizerMode mode) {
  TokenizedCorpus corpus;
  for (const auto& r : records) corpus.add(tokenize(r.text, mode));
  return corpus;
}

std::string format_token_file(const TokenizedCorpus& corpus) {
  std::string out;
  for (const auto& doc : corpus.documents()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (i) out.push_back(' ');
      out += doc[i];
    }
    out.push_back('\n');
  }
  return out;
}

TokenizedCorpus parse_token_file(std::string_view bytes) {
  TokenizedCorpus corpus;
  for (auto line : split(bytes, '\n')) {
    Document doc;
    for (auto tok : split_whitespace(line)) doc.emplace_back(tok);
    corpus.add(std::move(doc));
  }
  return corpus;
}

void FrequencyTable::add(const std::string& word, std::uint64_t count) {
  if (count == 0) return;
  auto& c = counts_[word];
  c += count;
  total_ += count;
  max_count_ = std::max(max_count_, c);
}

void FrequencyTable::merge(const FrequencyTable& other) {
  for (const auto& [w, c] : other.counts_) add(w, c);
}

std::uint64_t FrequencyTable::count(const std::string& word) const {
  auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

bool FrequencyTable::contains(const std::string& word) const {
  return counts_.contains(word);
}

std::vector<std::pair<std::string, std::uint64_t>> FrequencyTable::sorted() const {
  std::vector<std::pair<std::string, std::uint64_t>> out(counts_.begin(),
                                                         counts_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  return out;
}

std::vector<std::string> FrequencyTable::top(std::size_t n) const {
  std::vector<std::string> out;
  for (auto& [w, c] : sorted()) {
    if (out.size() == n) break;
    out.push_back(w);
  }
  return out;
}

FrequencyTable build_frequency_table(const TokenizedCorpus& corpus) {
  if (corpus.empty()) {
    throw InvalidArgument("cannot build a frequency table from an empty corpus");
  }
  return kernels::omp::count_tokens(corpus.documents());
}

double term_frequency(const FrequencyTable& table, const std::string& word) {
  auto c = table.count(word);
  if (c == 0) throw NotFoundError("word not in frequency table: " + word);
  return static_cast<double>(c) / static_cast<double>(table.max_count());
}

double cooccurrence_pair_rate(const TokenizedCorpus& corpus,
                              const std::set<std::string>& hi_freq) {
  if (hi_freq.empty()) {
    throw InvalidArgument("high-frequency word set is empty");
  }
  std::size_t with_any = 0;
  std::size_t with_two = 0;
  for (const auto& doc : corpus.documents()) {
    std::size_t hits = 0;
    for (const auto& t : doc) {
      if (hi_freq.contains(t) && ++hits == 2) break;
    }
    if (hits >= 1) ++with_any;
    if (hits >= 2) ++with_two;
  }
  if (with_any == 0) {
    throw InvalidArgument("no document contains a high-frequency word");
  }
  return static_cast<double>(with_two) / static_cast<double>(with_any);
}

std::string format_frequency_tsv(const FrequencyTable& table) {
  std::string out;
  for (const auto& [w, c] : table.sorted()) {
    out += w;
    out.push_back('\t');
    out += std::to_string(c);
    out.push_back('\n');
  }
  return out;
}

}  // namespace densilex
