#include "densilex/embedding.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "densilex/util.hpp"

namespace densilex {

EmbeddingTable::EmbeddingTable(std::vector<std::string> vocab, RowMatrix vectors)
    : vocab_(std::move(vocab)), vectors_(std::move(vectors)) {
  if (static_cast<Eigen::Index>(vocab_.size()) != vectors_.rows()) {
    throw InvalidArgument("vocabulary size does not match row count");
  }
  if (!vocab_.empty() && vectors_.cols() == 0) {
    throw InvalidArgument("embedding dimension must be positive");
  }
  if (!vectors_.allFinite()) {
    throw InvalidArgument("embedding table contains non-finite values");
  }
  index_.reserve(vocab_.size());
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    if (vocab_[i].empty()) throw InvalidArgument("empty word in vocabulary");
    if (!index_.emplace(vocab_[i], i).second) {
      throw InvalidArgument("duplicate word in vocabulary: " + vocab_[i]);
    }
  }
}

std::optional<std::size_t> EmbeddingTable::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t EmbeddingTable::index(std::string_view word) const {
  auto i = find(word);
  if (!i) throw NotFoundError("word not in vocabulary: " + std::string(word));
  return *i;
}

std::span<const double> EmbeddingTable::row(std::size_t i) const {
  return {vectors_.data() + static_cast<Eigen::Index>(i) * vectors_.cols(),
          static_cast<std::size_t>(vectors_.cols())};
}

std::span<const double> EmbeddingTable::lookup(std::string_view word) const {
  return row(index(word));
}

void save_word2vec_text(const EmbeddingTable& table, std::ostream& sink) {
  sink << format_word2vec_text(table);
  sink.flush();
  if (!sink) throw Error("failed writing word2vec text output");
}

std::string format_word2vec_text(const EmbeddingTable& table) {
  if (table.empty()) throw InvalidArgument("cannot save an empty embedding table");
  std::string out = std::to_string(table.size()) + " " +
                    std::to_string(table.dim()) + "\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += table.vocab()[i];
    for (double v : table.row(i)) {
      out.push_back(' ');
      out += format_double(v);
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("bad header field '" + std::string(tok) + "'", line);
  }
  return v;
}

}  // namespace

EmbeddingTable load_word2vec_text(std::string_view bytes) {
  auto lines = split(bytes, '\n');
  if (lines.empty() || trim(lines[0]).empty()) {
    throw ParseError("missing '<vocab_size> <dim>' header", 1);
  }
  auto header = split_whitespace(lines[0]);
  if (header.size() != 2) throw ParseError("header must be '<vocab_size> <dim>'", 1);
  const std::size_t n = parse_count(header[0], 1);
  const std::size_t dim = parse_count(header[1], 1);
  if (dim == 0) throw ParseError("dimension must be positive", 1);

  std::vector<std::string> vocab;
  vocab.reserve(n);
  RowMatrix vectors(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t row = 0;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    std::string_view line = lines[li];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    auto tok = split_whitespace(line);
    if (tok.size() != dim + 1) {
      throw ParseError("expected word and " + std::to_string(dim) +
                           " values, found " + std::to_string(tok.size() - 1),
                       line_no);
    }
    if (row == n) throw ParseError("more rows than declared in header", line_no);
    std::string word(tok[0]);
    if (!seen.emplace(word, row).second) {
      throw ParseError("duplicate word '" + word + "'", line_no);
    }
    for (std::size_t j = 0; j < dim; ++j) {
      vectors(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) =
          parse_double(tok[j + 1], line_no);
    }
    vocab.push_back(std::move(word));
    ++row;
  }
  if (row != n) {
    throw ParseError("header declares " + std::to_string(n) + " rows, found " +
                         std::to_string(row),
                     lines.size());
  }
  return EmbeddingTable(std::move(vocab), std::move(vectors));
}

EmbeddingTable load_word2vec_text(std::istream& source) {
  std::string bytes{std::istreambuf_iterator<char>(source),
                    std::istreambuf_iterator<char>()};
  return load_word2vec_text(std::string_view(bytes));
}

}  // namespace densilex
