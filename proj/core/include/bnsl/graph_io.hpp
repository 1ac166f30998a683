#pragma once

#include <string>
#include <vector>

#include "bnsl/graph.hpp"

namespace bnsl {

/// Edge-list graph file:
///   nodes: <comma-separated names>
///   parent -> child          (one per line)
/// Blank lines and lines starting with '#' are ignored.
void write_graph(const std::string& path, const Dag& dag, const std::vector<std::string>& names);

struct ParsedGraph {
    std::vector<std::string> names;
    Dag dag;
};

ParsedGraph read_graph(const std::string& path);

}  // namespace bnsl
