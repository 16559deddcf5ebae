#include "semgraph/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <span>
#include <sstream>
#include <tuple>

#include "semgraph/error.hpp"

namespace semgraph {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty() || number == 1) {
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    lines.push_back({number++, raw});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool is_skippable(std::string_view line) {
  auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) parts.push_back(s.substr(i, j - i));
    i = j;
  }
  return parts;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

bool must_encode(char c) {
  switch (c) {
    case '%':
    case ',':
    case ';':
    case '=':
    case '#':
    case '[':
    case '\n':
    case '\r':
      return true;
    default:
      return false;
  }
}

void parse_attribute_cell(std::string_view cell, Attributes& out,
                          std::string_view file, std::size_t line) {
  for (auto item : split(cell, ';')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw FileFormatError(std::string(file), line,
                            "attribute '" + std::string(item) +
                                "' is not of the form key=value");
    auto key = decode_cell(trim(item.substr(0, eq)), file, line);
    if (key.empty())
      throw FileFormatError(std::string(file), line, "empty attribute name");
    auto value = decode_cell(trim(item.substr(eq + 1)), file, line);
    if (!out.emplace(key, std::move(value)).second)
      throw FileFormatError(std::string(file), line,
                            "attribute '" + key + "' given twice");
  }
}

std::string format_attributes(const Attributes& attributes) {
  std::string out;
  for (const auto& [k, v] : attributes) {
    if (!out.empty()) out += ';';
    out += encode_cell(k);
    out += '=';
    out += encode_cell(v);
  }
  return out;
}

OntologySchema parse_ontology_lines(std::span<const Line> lines,
                                    std::string_view file) {
  OntologySchema schema;
  auto fail = [&](std::size_t line, const std::string& msg) -> void {
    throw FileFormatError(std::string(file), line, msg);
  };
  for (const auto& l : lines) {
    if (is_skippable(l.text)) continue;
    auto text = trim(l.text);
    auto words = split_ws(text);
    auto keyword = words.front();
    auto rest = trim(text.substr(keyword.size()));
    auto name = [&](std::string_view raw) {
      auto decoded = decode_cell(raw, file, l.number);
      if (decoded.empty()) fail(l.number, "empty type name");
      return decoded;
    };
    std::vector<std::string_view> triple;
    if (keyword == "nodetype" || keyword == "linktype") {
      if (words.size() != 2)
        fail(l.number, std::string(keyword) + " expects exactly one name");
      if (keyword == "nodetype")
        schema.add_node_type(name(words[1]));
      else
        schema.add_link_type(name(words[1]));
      continue;
    } else if (keyword == "allow") {
      triple = split(rest, ',');
    } else if (keyword == "link") {
      triple.assign(words.begin() + 1, words.end());
    } else {
      fail(l.number, "unknown directive '" + std::string(keyword) + "'");
    }
    if (triple.size() != 3)
      fail(l.number, std::string(keyword) +
                         " expects source, link type and target");
    auto src = name(triple[0]);
    auto link = name(triple[1]);
    auto dst = name(triple[2]);
    for (const auto* t : {&src, &dst})
      if (!schema.has_node_type(*t))
        fail(l.number, "undeclared node type '" + *t + "'");
    schema.allow(std::move(src), std::move(link), std::move(dst));
  }
  return schema;
}

// Skips comments and the header row, hands each data row's cells to `row`.
template <typename RowFn>
void for_each_row(std::span<const Line> lines, RowFn&& row) {
  bool header_seen = false;
  for (const auto& l : lines) {
    if (is_skippable(l.text)) continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    row(l.number, split(l.text, ','));
  }
}

std::vector<NodeRecord> parse_node_lines(std::span<const Line> lines,
                                         std::string_view file) {
  std::vector<NodeRecord> nodes;
  std::map<std::string, std::size_t, std::less<>> seen;
  for_each_row(lines, [&](std::size_t line,
                          const std::vector<std::string_view>& cells) {
    if (cells.size() < 2)
      throw FileFormatError(std::string(file), line,
                            "node row needs at least id and type");
    NodeRecord rec;
    rec.id = decode_cell(cells[0], file, line);
    rec.type = decode_cell(cells[1], file, line);
    if (rec.id.empty())
      throw FileFormatError(std::string(file), line, "empty node id");
    if (rec.type.empty())
      throw FileFormatError(std::string(file), line, "empty node type");
    for (std::size_t c = 2; c < cells.size(); ++c)
      parse_attribute_cell(cells[c], rec.attributes, file, line);
    auto [it, inserted] = seen.emplace(rec.id, line);
    if (!inserted)
      throw FileFormatError(std::string(file), line,
                            "duplicate node id '" + rec.id +
                                "' (first seen on line " +
                                std::to_string(it->second) + ")");
    nodes.push_back(std::move(rec));
  });
  return nodes;
}

std::vector<LinkRecord> parse_link_lines(std::span<const Line> lines,
                                         std::string_view file) {
  std::vector<LinkRecord> links;
  for_each_row(lines, [&](std::size_t line,
                          const std::vector<std::string_view>& cells) {
    if (cells.size() < 3)
      throw FileFormatError(std::string(file), line,
                            "link row needs source, target and link type");
    LinkRecord rec;
    rec.source = decode_cell(cells[0], file, line);
    rec.target = decode_cell(cells[1], file, line);
    rec.type = decode_cell(cells[2], file, line);
    if (rec.source.empty() || rec.target.empty() || rec.type.empty())
      throw FileFormatError(std::string(file), line,
                            "link row has an empty source, target or type");
    for (std::size_t c = 3; c < cells.size(); ++c)
      parse_attribute_cell(cells[c], rec.attributes, file, line);
    links.push_back(std::move(rec));
  });
  return links;
}

}  // namespace

std::string encode_cell(std::string_view raw) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    bool edge_space = (c == ' ' || c == '\t') && (i == 0 || i + 1 == raw.size());
    if (must_encode(c) || edge_space) {
      auto u = static_cast<unsigned char>(c);
      out += '%';
      out += kHex[u >> 4];
      out += kHex[u & 0xF];
    } else {
      out += c;
    }
  }
  return out;
}

std::string decode_cell(std::string_view cell, std::string_view file,
                        std::size_t line) {
  std::string out;
  out.reserve(cell.size());
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (cell[i] != '%') {
      out += cell[i];
      continue;
    }
    int hi = i + 2 < cell.size() ? hex_value(cell[i + 1]) : -1;
    int lo = i + 2 < cell.size() ? hex_value(cell[i + 2]) : -1;
    if (hi < 0 || lo < 0)
      throw FileFormatError(std::string(file), line,
                            "bad percent escape in '" + std::string(cell) +
                                "'");
    out += static_cast<char>(hi * 16 + lo);
    i += 2;
  }
  return out;
}

OntologySchema parse_ontology(std::string_view text, std::string_view file) {
  return parse_ontology_lines(split_lines(text), file);
}

std::vector<NodeRecord> parse_nodes(std::string_view text,
                                    std::string_view file) {
  return parse_node_lines(split_lines(text), file);
}

std::vector<LinkRecord> parse_links(std::string_view text,
                                    std::string_view file) {
  return parse_link_lines(split_lines(text), file);
}

std::string export_ontology(const OntologySchema& schema) {
  std::string out;
  for (const auto& t : schema.node_types())
    out += "nodetype " + encode_cell(t) + "\n";
  for (const auto& t : schema.link_types())
    out += "linktype " + encode_cell(t) + "\n";
  for (const auto& tr : schema.allowed())
    out += "allow " + encode_cell(tr.source) + "," + encode_cell(tr.link) +
           "," + encode_cell(tr.target) + "\n";
  return out;
}

std::string export_graph(const SemanticGraph& graph) {
  std::string out = "# semgraph graph document\n";
  out += "[metadata]\n";
  for (const auto& [k, v] : graph.metadata())
    out += encode_cell(k) + "=" + encode_cell(v) + "\n";
  out += "[schema]\n";
  out += export_ontology(graph.schema());

  std::vector<const NodeRecord*> nodes;
  for (const auto& n : graph.nodes()) nodes.push_back(&n);
  std::sort(nodes.begin(), nodes.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });
  out += "[nodes]\nid,type,attributes\n";
  for (const auto* n : nodes) {
    out += encode_cell(n->id) + "," + encode_cell(n->type);
    if (!n->attributes.empty()) out += "," + format_attributes(n->attributes);
    out += "\n";
  }

  struct Row {
    std::string source, target, type, attributes;
  };
  std::vector<Row> rows;
  rows.reserve(graph.link_count());
  for (const auto& l : graph.links())
    rows.push_back({encode_cell(l.source), encode_cell(l.target),
                    encode_cell(l.type), format_attributes(l.attributes)});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.source, a.target, a.type, a.attributes) <
           std::tie(b.source, b.target, b.type, b.attributes);
  });
  out += "[links]\nsource,target,type,attributes\n";
  for (const auto& r : rows) {
    out += r.source + "," + r.target + "," + r.type;
    if (!r.attributes.empty()) out += "," + r.attributes;
    out += "\n";
  }
  return out;
}

GraphDocument parse_graph_document(std::string_view text,
                                   std::string_view file) {
  auto lines = split_lines(text);
  std::map<std::string, std::vector<Line>, std::less<>> sections;
  std::vector<Line>* current = nullptr;
  for (const auto& l : lines) {
    auto t = trim(l.text);
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
      auto name = std::string(t.substr(1, t.size() - 2));
      if (name != "metadata" && name != "schema" && name != "nodes" &&
          name != "links")
        throw FileFormatError(std::string(file), l.number,
                              "unknown section [" + name + "]");
      if (sections.count(name))
        throw FileFormatError(std::string(file), l.number,
                              "section [" + name + "] appears twice");
      current = &sections[name];
      continue;
    }
    if (is_skippable(l.text)) continue;
    if (!current)
      throw FileFormatError(std::string(file), l.number,
                            "content before the first section");
    current->push_back(l);
  }

  GraphDocument doc;
  for (const auto& l : sections["metadata"]) {
    auto t = trim(l.text);
    auto eq = t.find('=');
    if (eq == std::string_view::npos)
      throw FileFormatError(std::string(file), l.number,
                            "metadata line is not key=value");
    doc.metadata[decode_cell(trim(t.substr(0, eq)), file, l.number)] =
        decode_cell(trim(t.substr(eq + 1)), file, l.number);
  }
  doc.schema = parse_ontology_lines(sections["schema"], file);
  doc.nodes = parse_node_lines(sections["nodes"], file);
  doc.links = parse_link_lines(sections["links"], file);
  return doc;
}

SemanticGraph import_graph(std::string_view text, std::string_view file) {
  auto doc = parse_graph_document(text, file);
  return build_graph(std::move(doc.nodes), std::move(doc.links),
                     std::move(doc.schema), std::move(doc.metadata));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace semgraph
