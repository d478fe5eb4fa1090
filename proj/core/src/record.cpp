#include <sstream>

#include "entcolor/engine.hpp"
#include "entcolor/errors.hpp"
#include "entcolor/text.hpp"

namespace entcolor {

namespace {
constexpr std::string_view kUncolor = "Uncolor, Bad Event ";
}

std::string Record::to_text() const {
  std::string out;
  for (const auto& s : steps) {
    out += "Color\n";
    if (s) {
      out += kUncolor;
      out += std::to_string(s->type) + ", " + std::to_string(s->cls) + "\n";
    }
  }
  return out;
}

Record Record::parse(std::string_view text) {
  Record r;
  LineReader in(text);
  while (auto line = in.next()) {
    if (*line == "Color") {
      r.steps.emplace_back();
      continue;
    }
    if (line->rfind(kUncolor, 0) != 0) throw ParseError(in.line_no(), "unknown record line");
    if (r.steps.empty() || r.steps.back())
      throw ParseError(in.line_no(), "Uncolor must directly follow a Color line");
    std::string_view rest = line->substr(kUncolor.size());
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw ParseError(in.line_no(), "expected \"j, k\"");
    auto j = parse_ints(rest.substr(0, comma), in.line_no());
    auto k = parse_ints(rest.substr(comma + 1), in.line_no());
    if (j.size() != 1 || k.size() != 1 || j[0] < 1 || k[0] < 1)
      throw ParseError(in.line_no(), "event type and class must be positive integers");
    r.steps.back() = EventId{static_cast<int>(j[0]), k[0]};
  }
  return r;
}

std::string RunManifest::to_text() const {
  std::ostringstream out;
  out << "# family: " << family << '\n'
      << "# kappa: " << kappa << '\n'
      << "# budget: " << budget << '\n'
      << "# seed: " << seed << '\n'
      << "# mode: " << (list_mode ? "list" : "plain") << '\n'
      << "# graph-hash: " << std::hex << graph_hash << std::dec << '\n';
  return out.str();
}

RunManifest RunManifest::parse(std::string_view text) {
  RunManifest m;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() != '#') continue;
    body = trim(body.substr(1));
    auto colon = body.find(':');
    if (colon == std::string_view::npos) continue;
    std::string key(trim(body.substr(0, colon)));
    std::string value(trim(body.substr(colon + 1)));
    try {
      if (key == "family") m.family = value;
      else if (key == "kappa") m.kappa = std::stoi(value);
      else if (key == "budget") m.budget = std::stoll(value);
      else if (key == "seed") m.seed = std::stoull(value);
      else if (key == "mode") m.list_mode = value == "list";
      else if (key == "graph-hash") m.graph_hash = std::stoull(value, nullptr, 16);
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "bad manifest value for " + key);
    }
  }
  return m;
}

}  // namespace entcolor
