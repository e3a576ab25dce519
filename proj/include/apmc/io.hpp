#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "apmc/fourpartite.hpp"
#include "apmc/graph.hpp"

namespace apmc {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Line-oriented digraph format:
//   c <comment>
//   p <n> <m>
//   a <tail> <head>        (0-based; arc ids 0..m-1 in file order)
MultiDigraph parse_graph(std::istream& in);
MultiDigraph parse_graph_string(const std::string& text);
std::string format_graph(const MultiDigraph& g);

// 4-partite format:
//   c <comment>
//   p4 <n>
//   e <side><idx> <side><idx>   (sides a/b/c/d, e.g. "e a0 d3")
FourPartiteGraph parse_4partite(std::istream& in);
FourPartiteGraph parse_4partite_string(const std::string& text);
std::string format_4partite(const FourPartiteGraph& g4);

}  // namespace apmc
