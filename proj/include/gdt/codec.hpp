#pragma once

#include <cstddef>
#include <string>

#include "gdt/graph.hpp"

namespace gdt {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// graph6 format, single-byte size prefix (n <= 62).  Bit-exact with the
// published byte layout: N(n) = n+63, then the upper triangle in column
// order x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian into 6-bit
// groups, each +63.  An optional ">>graph6<<" header is accepted on read.
std::string graph6_write(const Graph& g);
Graph graph6_read(const std::string& data);

// Whitespace-separated edge list with an optional leading "n m" line.
// Without the header, n is one more than the largest vertex mentioned.
std::string edge_list_write(const Graph& g);
Graph edge_list_read(const std::string& data);

enum class Format { kGraph6, kEdgeList };

std::string codec_write(Format f, const Graph& g);
Graph codec_read(Format f, const std::string& data);
// Guess the format: a line starting with a digit is an edge list.
Graph codec_read_auto(const std::string& data);

}  // namespace gdt
