#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semgraph/graph.hpp"
#include "semgraph/ontology.hpp"

namespace semgraph {

// Ontology files are line oriented; `#` starts a comment line.
//
//   nodetype person
//   linktype knows
//   allow person,knows,person
//   link person born-in city      (same as allow, whitespace separated)
//
// Triples declare their link type implicitly. Node types must be declared
// before a triple uses them.
OntologySchema parse_ontology(std::string_view text,
                              std::string_view file = "<ontology>");

// Comma separated, first non-comment line is a header. Columns: id, type,
// then any number of attribute cells of the form key=value[;key=value...].
std::vector<NodeRecord> parse_nodes(std::string_view text,
                                    std::string_view file = "<nodes>");

// Columns: source, target, link type, then optional attribute cells.
std::vector<LinkRecord> parse_links(std::string_view text,
                                    std::string_view file = "<links>");

struct GraphDocument {
  Attributes metadata;
  OntologySchema schema;
  std::vector<NodeRecord> nodes;
  std::vector<LinkRecord> links;
};

// Canonical single-document form with [metadata], [schema], [nodes] and
// [links] sections; nodes sorted by id, links by (source, target, type).
// Reserved characters inside cells are percent-encoded.
std::string export_graph(const SemanticGraph& graph);
std::string export_ontology(const OntologySchema& schema);

GraphDocument parse_graph_document(std::string_view text,
                                   std::string_view file = "<graph>");
SemanticGraph import_graph(std::string_view text,
                           std::string_view file = "<graph>");

// Whole-file read; throws semgraph::Error when the file cannot be opened.
std::string read_file(const std::string& path);

// Percent-encoding used for cells of the comma separated formats.
std::string encode_cell(std::string_view raw);
std::string decode_cell(std::string_view cell, std::string_view file,
                        std::size_t line);

}  // namespace semgraph
