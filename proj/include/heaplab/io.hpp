#ifndef HEAPLAB_IO_HPP
#define HEAPLAB_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "heaplab/heap.hpp"
#include "heaplab/structure.hpp"

namespace heaplab {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParsedStructure {
    StructurePtr structure;
    std::vector<std::string> warnings;
};

/// Parses the line-oriented structure format:
///   # comment
///   piece <name>
///   conc <name> <name>
/// Blank lines are ignored. Throws parse_error with "<origin>:<line>: ..."
/// positions on malformed input; reflexive pairs produce warnings.
ParsedStructure parse_structure_text(std::string_view text, const std::string& origin = "<input>");

ParsedStructure load_structure_file(const std::string& path);

/// Undirected concurrency graph in DOT format.
std::string structure_dot(const ConcurrencyStructure& s);

/// Heap diagram in DOT format: one node per vertex labelled "id:piece",
/// one arc per covering pair, drawn bottom-up.
std::string heap_dot(const Heap& e);

} // namespace heaplab

#endif
