#include "legruling/front_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace legruling {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

FrontDiagram parse_front(std::string_view text, std::string name) {
  FrontDiagram front;
  front.name = std::move(name);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    EventKind kind;
    switch (line.front()) {
      case 'L': kind = EventKind::LeftCusp; break;
      case 'R': kind = EventKind::RightCusp; break;
      case 'X': kind = EventKind::Crossing; break;
      default: throw ParseError(line_no, "expected 'L <k>', 'R <k>' or 'X <k>', got '" + std::string(line) + "'");
    }
    std::string_view rest = line.substr(1);
    if (rest.empty() || (rest.front() != ' ' && rest.front() != '\t')) {
      throw ParseError(line_no, "expected whitespace after event letter in '" + std::string(line) + "'");
    }
    rest = trim(rest);
    int height = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), height);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw ParseError(line_no, "bad height '" + std::string(rest) + "'");
    }
    if (height < 1) throw ParseError(line_no, "height must be positive, got " + std::to_string(height));
    front.events.push_back({kind, height});
  }
  return front;
}

FrontDiagram read_front(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_front(buf.str(), path.stem().string());
}

std::string render_front(const FrontDiagram& front) {
  std::ostringstream os;
  if (!front.name.empty()) os << "# " << front.name << '\n';
  for (const auto& ev : front.events) {
    const char c = ev.kind == EventKind::LeftCusp ? 'L' : ev.kind == EventKind::RightCusp ? 'R' : 'X';
    os << c << ' ' << ev.height << '\n';
  }
  return os.str();
}

}  // namespace legruling
