#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace entcolor {

// Line iterator over a text document that strips '#' comments and skips blank lines.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}
  std::optional<std::string_view> next();
  int line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

std::string_view trim(std::string_view s);
// Whitespace-separated integers; throws ParseError tagged with `line`.
std::vector<long long> parse_ints(std::string_view s, int line);
std::string read_file(const std::string& path);

}  // namespace entcolor
