#include "chaincov/poset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace chaincov {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw FormatError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) return out;
    auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) return out;
    s.remove_prefix(end);
  }
}

}  // namespace

LabeledPoset read_poset(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Relation> pairs;
  std::vector<std::pair<std::size_t, std::string>> labels;

  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    const auto hash = text.find('#');
    if (hash != std::string_view::npos) {
      auto comment = trim(text.substr(hash + 1));
      if (comment.starts_with("label ")) {
        comment = trim(comment.substr(6));
        auto space = comment.find_first_of(" \t");
        if (space != std::string_view::npos) {
          labels.emplace_back(parse_index(comment.substr(0, space), line),
                              std::string(trim(comment.substr(space))));
        }
      }
      text = text.substr(0, hash);
    }
    const auto tokens = split(text);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "n") throw FormatError(line, "expected header 'n <count>'");
      n = parse_index(tokens[1], line);
      have_header = true;
      continue;
    }
    if (tokens.size() != 2) throw FormatError(line, "expected '<u> <v>'");
    pairs.emplace_back(parse_index(tokens[0], line), parse_index(tokens[1], line));
  }
  if (!have_header) throw FormatError(line, "missing header 'n <count>'");

  LabeledPoset result{Poset::from_relations(n, pairs), {}};
  if (!labels.empty()) {
    result.labels.resize(n);
    for (auto& [i, text] : labels) {
      if (i >= n) throw IndexError("label for element " + std::to_string(i) + " out of range");
      result.labels[i] = std::move(text);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (result.labels[i].empty()) result.labels[i] = std::to_string(i);
  }
  return result;
}

LabeledPoset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_poset(in);
}

void write_poset(std::ostream& out, const Poset& p, const std::vector<std::string>& labels) {
  out << "n " << p.size() << '\n';
  for (std::size_t i = 0; i < labels.size() && i < p.size(); ++i) out << "# label " << i << ' ' << labels[i] << '\n';
  for (auto [u, v] : p.covers()) out << u << ' ' << v << '\n';
}

std::vector<Bitset> read_ideals(std::istream& in, std::size_t n) {
  std::vector<Bitset> ideals;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    const auto tokens = split(text);
    if (tokens.empty()) continue;
    Bitset ideal(n);
    for (auto t : tokens) {
      auto i = parse_index(t, line);
      if (i >= n) throw FormatError(line, "element " + std::to_string(i) + " out of range");
      ideal.set(i);
    }
    ideals.push_back(std::move(ideal));
  }
  return ideals;
}

void write_dot(std::ostream& out, const Poset& p, const std::vector<std::string>& labels, DotOptions options) {
  out << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  " << i << " [label=\"" << (i < labels.size() ? labels[i] : std::to_string(i)) << "\"];\n";
  }
  for (auto [u, v] : p.covers()) out << "  " << u << " -> " << v << ";\n";
  if (options.incomparability_edges) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = x + 1; y < p.size(); ++y) {
        if (p.incomparable(x, y))
          out << "  " << x << " -> " << y << " [dir=none, style=dashed, constraint=false];\n";
      }
    }
  }
  out << "}\n";
}

}  // namespace chaincov
