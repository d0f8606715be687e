#include "tempo/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace tempo {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw std::runtime_error("graph file line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

TemporalGraph read_graph(std::istream& in) {
    std::optional<TemporalGraph> g;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream fields(line);
        std::string kind;
        fields >> kind;
        if (kind == "t") {
            if (g) fail(lineno, "duplicate header");
            std::string mode;
            int n;
            if (!(fields >> mode >> n)) fail(lineno, "expected 't <directed|undirected> <n>'");
            if (mode != "directed" && mode != "undirected") fail(lineno, "bad mode '" + mode + "'");
            if (n < 0) fail(lineno, "negative vertex count");
            g.emplace(n, mode == "directed");
        } else if (kind == "e") {
            if (!g) fail(lineno, "edge before header");
            int u, v;
            if (!(fields >> u >> v)) fail(lineno, "expected 'e <u> <v> [labels]'");
            try {
                g->add_edge(u, v);
                Label l;
                while (fields >> l) g->add_label(u, v, l);
            } catch (const std::exception& e) {
                fail(lineno, e.what());
            }
            if (!fields.eof()) fail(lineno, "trailing garbage");
        } else {
            fail(lineno, "unknown record '" + kind + "'");
        }
    }
    if (!g) throw std::runtime_error("graph file has no header line");
    return *g;
}

TemporalGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

void write_graph(std::ostream& out, const TemporalGraph& g) {
    out << "t " << (g.directed() ? "directed" : "undirected") << ' ' << g.vertex_count() << '\n';
    for (const auto& [edge, labels] : g.edges()) {
        out << "e " << edge.first << ' ' << edge.second;
        for (Label l : labels) out << ' ' << l;
        out << '\n';
    }
}

std::string format_graph(const TemporalGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

TemporalGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void save_graph_file(const std::string& path, const TemporalGraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_graph(out, g);
}

}  // namespace tempo
