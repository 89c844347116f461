#include "heaplab/io.hpp"

#include <fstream>
#include <sstream>

namespace heaplab {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw parse_error(origin + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

ParsedStructure parse_structure_text(std::string_view text, const std::string& origin) {
    std::vector<std::string> pieces;
    std::vector<std::pair<std::string, std::string>> conc;
    std::vector<std::string> warnings;

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;

        if (toks[0] == "piece") {
            if (toks.size() != 2) fail(origin, lineno, "expected: piece <name>");
            for (const auto& p : pieces)
                if (p == toks[1]) fail(origin, lineno, "duplicate piece '" + toks[1] + "'");
            pieces.push_back(toks[1]);
        } else if (toks[0] == "conc") {
            if (toks.size() != 3) fail(origin, lineno, "expected: conc <name> <name>");
            bool known1 = false, known2 = false;
            for (const auto& p : pieces) {
                known1 |= p == toks[1];
                known2 |= p == toks[2];
            }
            if (!known1) fail(origin, lineno, "unknown piece '" + toks[1] + "'");
            if (!known2) fail(origin, lineno, "unknown piece '" + toks[2] + "'");
            if (toks[1] == toks[2]) {
                warnings.push_back(origin + ":" + std::to_string(lineno) +
                                   ": ignoring reflexive pair '" + toks[1] + "'");
                continue;
            }
            conc.emplace_back(toks[1], toks[2]);
        } else {
            fail(origin, lineno, "unknown directive '" + toks[0] + "'");
        }
    }

    if (pieces.empty()) fail(origin, lineno, "no pieces declared");
    return {make_structure(pieces, conc), std::move(warnings)};
}

ParsedStructure load_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure_text(buf.str(), path);
}

std::string structure_dot(const ConcurrencyStructure& s) {
    std::ostringstream os;
    os << "graph concurrency {\n";
    os << "  node [shape=circle];\n";
    for (int i = 0; i < s.piece_count(); ++i)
        os << "  \"" << s.piece_name(i) << "\";\n";
    for (auto [a, b] : s.edges())
        os << "  \"" << s.piece_name(a) << "\" -- \"" << s.piece_name(b) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string heap_dot(const Heap& e) {
    const int n = e.size();
    std::ostringstream os;
    os << "digraph heap {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (int v = 0; v < n; ++v)
        os << "  v" << v << " [label=\"" << v << ":" << e.label_name(v) << "\"];\n";
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!e.less(u, v)) continue;
            bool covering = true;
            for (int w = 0; w < n && covering; ++w)
                if (e.less(u, w) && e.less(w, v)) covering = false;
            if (covering) os << "  v" << u << " -> v" << v << ";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace heaplab
