#include "hcd/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hcd/errors.hpp"

namespace hcd {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-comment, non-empty lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++number;
    const std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos == s.size()) break;
    const std::size_t end = std::min(s.find(' ', pos), s.size());
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got \"" + std::string(token) + "\"");
  }
  return v;
}

std::uint64_t parse_keyed(std::string_view token, std::string_view key, std::size_t line) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=') {
    throw ParseError(line, "expected " + std::string(key) + "=<value>, got \"" + std::string(token) + "\"");
  }
  return parse_number(token.substr(key.size() + 1), line);
}

Kind parse_kind(std::string_view token, std::size_t line) {
  if (token == "H") return Kind::H;
  if (token == "A") return Kind::A;
  throw ParseError(line, "design kind must be H or A, got \"" + std::string(token) + "\"");
}

DesignParams parse_params(const std::vector<std::string_view>& tok, std::size_t first, std::size_t line,
                          ParamPolicy policy) {
  DesignParams p;
  p.kind = parse_kind(tok[first], line);
  p.n = parse_keyed(tok[first + 1], "n", line);
  const std::uint64_t q = parse_keyed(tok[first + 2], "q", line);
  if (q > kMaxAlphabet) throw ParseError(line, "q too large");
  p.q = static_cast<std::uint32_t>(q);
  p.w = parse_keyed(tok[first + 3], "w", line);
  p.t = parse_keyed(tok[first + 4], "t", line);
  try {
    p.validate(policy);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
  return p;
}

std::string params_fields(const DesignParams& p) {
  return std::string(1, kind_char(p.kind)) + " n=" + std::to_string(p.n) + " q=" + std::to_string(p.q) +
         " w=" + std::to_string(p.w) + " t=" + std::to_string(p.t);
}

// Parses and checks one word against the header; records duplicates.
Codeword parse_word(const Line& line, const DesignParams& p, std::map<std::string_view, std::size_t>& seen) {
  const auto [it, inserted] = seen.emplace(line.text, line.number);
  if (!inserted) {
    throw ParseError(line.number, "duplicate codeword " + std::string(line.text) + " (first on line " +
                                      std::to_string(it->second) + ")");
  }
  Codeword c = [&] {
    try {
      return Codeword::parse(line.text, p.q);
    } catch (const std::exception& e) {
      throw ParseError(line.number, e.what());
    }
  }();
  if (c.length() != p.n) {
    throw ParseError(line.number, "codeword " + std::string(line.text) + " has length " +
                                      std::to_string(c.length()) + ", expected " + std::to_string(p.n));
  }
  if (weight(c) != p.word_weight()) {
    throw ParseError(line.number, "codeword " + std::string(line.text) + " has weight " +
                                      std::to_string(weight(c)) + ", expected " +
                                      std::to_string(p.word_weight()));
  }
  return c;
}

}  // namespace

std::string format_design(const Design& d) {
  std::string out = "design " + params_fields(d.params()) + "\n";
  for (const Codeword& c : d.words()) {
    out += c.to_string();
    out += '\n';
  }
  return out;
}

Design parse_design(std::string_view text, ParamPolicy policy) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing design header");
  const auto head = split_spaces(lines[0].text);
  if (head.size() != 6 || head[0] != "design") {
    throw ParseError(lines[0].number, "header must read: design <H|A> n= q= w= t=");
  }
  const DesignParams p = parse_params(head, 1, lines[0].number, policy);

  std::map<std::string_view, std::size_t> seen;
  std::vector<Codeword> words;
  for (std::size_t i = 1; i < lines.size(); ++i) words.push_back(parse_word(lines[i], p, seen));
  return Design(p, std::move(words), policy);
}

std::string format_partition(const Partition& part) {
  std::string out =
      "partition " + params_fields(part.params) + " parts=" + std::to_string(part.parts.size()) + "\n";
  for (std::size_t i = 0; i < part.parts.size(); ++i) {
    out += "part " + std::to_string(i + 1) + "\n";
    for (const Codeword& c : part.parts[i].words()) {
      out += c.to_string();
      out += '\n';
    }
  }
  return out;
}

Partition parse_partition(std::string_view text, ParamPolicy policy) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing partition header");
  const auto head = split_spaces(lines[0].text);
  if (head.size() != 7 || head[0] != "partition") {
    throw ParseError(lines[0].number, "header must read: partition <H|A> n= q= w= t= parts=");
  }
  Partition out;
  out.params = parse_params(head, 1, lines[0].number, policy);
  const std::uint64_t expected_parts = parse_keyed(head[6], "parts", lines[0].number);

  std::vector<std::vector<Codeword>> parts;
  std::map<std::string_view, std::size_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.text.starts_with("part ")) {
      const std::uint64_t index = parse_number(line.text.substr(5), line.number);
      if (index != parts.size() + 1) {
        throw ParseError(line.number, "expected part " + std::to_string(parts.size() + 1));
      }
      parts.emplace_back();
      seen.clear();
      continue;
    }
    if (parts.empty()) throw ParseError(line.number, "codeword before the first part line");
    parts.back().push_back(parse_word(line, out.params, seen));
  }
  if (parts.size() != expected_parts) {
    throw ParseError(lines.back().number, "header announces " + std::to_string(expected_parts) +
                                              " parts, file has " + std::to_string(parts.size()));
  }
  for (auto& words : parts) out.parts.emplace_back(out.params, std::move(words), policy);
  return out;
}

std::string format_array(const AdjacencyArray& m) {
  std::string out = "array k=" + std::to_string(m.k()) + " n=" + std::to_string(m.n()) + "\n";
  for (std::size_t i = 0; i < m.cell_count(); ++i) {
    const auto c = m.cell(i);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != 0) out += ' ';
      out += std::to_string(c[j] + 1);
    }
    out += '\n';
  }
  return out;
}

AdjacencyArray parse_array(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing array header");
  const auto head = split_spaces(lines[0].text);
  if (head.size() != 3 || head[0] != "array") throw ParseError(lines[0].number, "header must read: array k= n=");
  const std::uint64_t k = parse_keyed(head[1], "k", lines[0].number);
  const std::uint64_t n = parse_keyed(head[2], "n", lines[0].number);
  if (k < 1) throw ParseError(lines[0].number, "k must be at least 1");

  std::vector<std::vector<std::uint32_t>> cells;
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view body = lines[i].text;
    if (const std::size_t hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    const auto tok = split_spaces(body);
    if (tok.size() != k) {
      throw ParseError(lines[i].number, "cell needs " + std::to_string(k) + " indices, got " +
                                            std::to_string(tok.size()));
    }
    std::vector<std::uint32_t> cell;
    for (std::string_view t : tok) {
      const std::uint64_t v = parse_number(t, lines[i].number);
      if (v < 1 || v > n) throw ParseError(lines[i].number, "index " + std::string(t) + " outside [1, n]");
      cell.push_back(static_cast<std::uint32_t>(v - 1));
    }
    if (const auto [it, inserted] = seen.emplace(cell, lines[i].number); !inserted) {
      throw ParseError(lines[i].number, "duplicate cell (first on line " + std::to_string(it->second) + ")");
    }
    cells.push_back(std::move(cell));
  }
  return AdjacencyArray(k, n, cells);
}

std::string format_hypergraph(const PartiteHypergraph& g) {
  std::string out = "array k=" + std::to_string(g.k) + " n=" + std::to_string(g.n) + "\n";
  for (std::size_t part = 0; part < g.vertex_labels.size(); ++part) {
    for (std::size_t v = 0; v < g.vertex_labels[part].size(); ++v) {
      out += "# vertex " + std::to_string(part + 1) + " " + std::to_string(v + 1) + " " +
             g.vertex_labels[part][v].to_string() + "\n";
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (std::size_t j = 0; j < g.edges[e].size(); ++j) {
      if (j != 0) out += ' ';
      out += std::to_string(g.edges[e][j] + 1);
    }
    if (e < g.edge_witnesses.size() && !g.edge_witnesses[e].empty()) {
      out += " #";
      for (const Codeword& b : g.edge_witnesses[e]) out += " " + b.to_string();
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::size_t>> parse_blocks(std::string_view text) {
  std::vector<std::vector<std::size_t>> blocks;
  for (const Line& line : content_lines(text)) {
    std::vector<std::size_t> block;
    for (std::string_view t : split_spaces(line.text)) block.push_back(parse_number(t, line.number));
    if (block.empty()) continue;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace hcd
