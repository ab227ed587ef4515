#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "densilex/kernels.hpp"

namespace densilex {

// Vocabulary-indexed dense vectors; row i belongs to vocab()[i].
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  // Throws InvalidArgument on duplicate words, a row/vocab size mismatch,
  // dim == 0, or non-finite entries.
  EmbeddingTable(std::vector<std::string> vocab, RowMatrix vectors);

  std::size_t size() const { return vocab_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(vectors_.cols()); }
  bool empty() const { return vocab_.empty(); }

  const std::vector<std::string>& vocab() const { return vocab_; }
  const RowMatrix& vectors() const { return vectors_; }

  std::optional<std::size_t> find(std::string_view word) const;
  // Throws NotFoundError.
  std::size_t index(std::string_view word) const;
  std::span<const double> row(std::size_t i) const;
  std::span<const double> lookup(std::string_view word) const;

 private:
  std::vector<std::string> vocab_;
  RowMatrix vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

// word2vec text format: "<vocab_size> <dim>\n" followed by one
// "<word> <v1> ... <v_dim>\n" line per word. Numbers use the shortest
// round-trip decimal form, so save -> load -> save is byte-stable.
void save_word2vec_text(const EmbeddingTable& table, std::ostream& sink);
std::string format_word2vec_text(const EmbeddingTable& table);

EmbeddingTable load_word2vec_text(std::istream& source);
EmbeddingTable load_word2vec_text(std::string_view bytes);

}  // namespace densilex
