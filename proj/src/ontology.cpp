#include "semgraph/ontology.hpp"

#include "semgraph/error.hpp"

namespace semgraph {

namespace {

std::pair<std::string, std::string> unordered_key(std::string_view a,
                                                  std::string_view b) {
  if (b < a) std::swap(a, b);
  return {std::string(a), std::string(b)};
}

}  // namespace

void OntologySchema::add_node_type(std::string name) {
  if (name.empty()) throw Error("empty node type name");
  node_types_.insert(std::move(name));
}

void OntologySchema::add_link_type(std::string name) {
  if (name.empty()) throw Error("empty link type name");
  link_types_.insert(std::move(name));
}

void OntologySchema::allow(std::string source, std::string link,
                           std::string target) {
  if (!has_node_type(source))
    throw Error("allowed triple references undeclared node type '" + source +
                "'");
  if (!has_node_type(target))
    throw Error("allowed triple references undeclared node type '" + target +
                "'");
  add_link_type(link);
  pairs_.insert(unordered_key(source, target));
  allowed_.insert({std::move(source), std::move(link), std::move(target)});
}

bool OntologySchema::has_node_type(std::string_view name) const {
  return node_types_.find(name) != node_types_.end();
}

bool OntologySchema::has_link_type(std::string_view name) const {
  return link_types_.find(name) != link_types_.end();
}

bool OntologySchema::allows(std::string_view source, std::string_view link,
                            std::string_view target) const {
  Triple forward{std::string(source), std::string(link), std::string(target)};
  if (allowed_.count(forward)) return true;
  std::swap(forward.source, forward.target);
  return allowed_.count(forward) > 0;
}

bool OntologySchema::allows_pair(std::string_view a, std::string_view b) const {
  return pairs_.count(unordered_key(a, b)) > 0;
}

OntologySchema::NameSet OntologySchema::allowed_neighbor_types(
    std::string_view alpha) const {
  if (!has_node_type(alpha))
    throw Error("unknown node type '" + std::string(alpha) + "'");
  NameSet result;
  for (const auto& [a, b] : pairs_) {
    if (a == alpha) result.insert(b);
    if (b == alpha) result.insert(a);
  }
  return result;
}

std::size_t OntologySchema::base_degree(std::string_view alpha) const {
  return allowed_neighbor_types(alpha).size();
}

OntologySchema OntologySchema::complete(const std::set<std::string>& node_types,
                                        const std::string& link_type) {
  OntologySchema schema;
  for (const auto& t : node_types) schema.add_node_type(t);
  schema.add_link_type(link_type);
  for (auto a = node_types.begin(); a != node_types.end(); ++a)
    for (auto b = a; b != node_types.end(); ++b) schema.allow(*a, link_type, *b);
  return schema;
}

}  // namespace semgraph
