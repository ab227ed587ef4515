#include "densilex/csv.hpp"

#include "densilex/util.hpp"

namespace densilex::csv {

std::vector<Row> read(std::string_view bytes) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);

  std::vector<Row> rows;
  Row row;
  std::string field;
  std::size_t line = 1;
  row.line = 1;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool row_has_content = false;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    if (row_has_content) {
      end_field();
      rows.push_back(std::move(row));
    }
    row = Row{};
    field.clear();
    field_was_quoted = false;
    row_has_content = false;
  };

  for (std::size_t i = 0; i < bytes.size(); ++i) {
    char c = bytes[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < bytes.size() && bytes[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw ParseError("unexpected quote inside field", line);
        }
        if (!row_has_content) row.line = line;
        in_quotes = true;
        field_was_quoted = true;
        row_has_content = true;
        break;
      case ',':
        if (!row_has_content) row.line = line;
        row_has_content = true;
        end_field();
        break;
      case '\r':
        if (i + 1 < bytes.size() && bytes[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_row();
        ++line;
        row.line = line;
        break;
      default:
        if (field_was_quoted) {
          throw ParseError("text after closing quote", line);
        }
        if (!row_has_content) row.line = line;
        row_has_content = true;
        field.push_back(c);
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted field", row.line);
  end_row();
  return rows;
}

}  // namespace densilex::csv
