#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace densilex::csv {

struct Row {
  std::size_t line = 0;  // 1-based line where the row starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: comma separated, double-quoted fields may contain
// commas, newlines and doubled quotes. Accepts LF or CRLF line endings and
// a leading UTF-8 BOM. Blank lines are skipped. Throws ParseError on an
// unterminated quote or a quote inside an unquoted field.
std::vector<Row> read(std::string_view bytes);

}  // namespace densilex::csv
