#pragma once

#include <iosfwd>
#include <string>

#include "tempo/temporal_graph.hpp"

namespace tempo {

// Text format, one record per line, '#' starts a comment:
//   t <directed|undirected> <n>
//   e <u> <v> [<l1> <l2> ...]
// Labels are written sorted, edges in canonical key order, so
// write(parse(text)) is byte-identical to write of any equal graph.
TemporalGraph read_graph(std::istream& in);
TemporalGraph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const TemporalGraph& g);
std::string format_graph(const TemporalGraph& g);

TemporalGraph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const TemporalGraph& g);

}  // namespace tempo
