#include "astopo/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "astopo/errors.hpp"

namespace astopo {

namespace {

NodeId parse_node_id(const std::string& token, long line_no) {
    NodeId value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("expected integer node id, got '" + token + "'", line_no);
    }
    if (value < 0) {
        throw ParseError("node ids must be non-negative, got '" + token + "'", line_no);
    }
    return value;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in) {
    EdgeList out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first.front() == '#') {
            continue;  // blank or comment line
        }
        std::string second;
        if (!(tokens >> second)) {
            throw ParseError("expected two node ids, got one token", line_no);
        }
        out.edges.push_back(Edge{parse_node_id(first, line_no),
                                 parse_node_id(second, line_no)});
    }
    return out;
}

EdgeList load_edge_list(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw DataError("cannot open edge-list file: " + path);
    }
    return parse_edge_list(file);
}

CleanResult clean(const EdgeList& raw) {
    CleanResult out;
    out.edges.edges.reserve(raw.edges.size());
    for (const Edge& e : raw.edges) {
        if (e.u == e.v) {
            ++out.stats.self_loops_removed;
            continue;
        }
        out.edges.edges.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    auto& edges = out.edges.edges;
    std::sort(edges.begin(), edges.end());
    const auto last = std::unique(edges.begin(), edges.end());
    out.stats.duplicates_removed =
        static_cast<std::int64_t>(edges.end() - last);
    edges.erase(last, edges.end());
    return out;
}

DegreeSequence degree_sequence(const EdgeList& cleaned) {
    std::map<NodeId, int> counts;
    for (const Edge& e : cleaned.edges) {
        ++counts[e.u];
        ++counts[e.v];
    }
    DegreeSequence seq;
    seq.degrees.reserve(counts.size());
    for (const auto& [node, degree] : counts) {
        seq.degrees.push_back(degree);
    }
    return seq;
}

GraphSummary summarize(const DegreeSequence& seq, std::int64_t m) {
    if (seq.degrees.empty()) {
        throw DataError("summarize: empty degree sequence");
    }
    std::int64_t degree_sum = 0;
    int lo = seq.degrees.front();
    int hi = lo;
    for (int d : seq.degrees) {
        degree_sum += d;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (degree_sum != 2 * m) {
        throw DataError("summarize: degree sum " + std::to_string(degree_sum) +
                        " does not equal 2m = " + std::to_string(2 * m) +
                        " (handshake violated)");
    }
    GraphSummary out;
    out.n = static_cast<std::int64_t>(seq.degrees.size());
    out.m = m;
    out.k_min0 = lo;
    out.k_max0 = hi;
    out.avg_degree0 = 2.0 * static_cast<double>(m) / static_cast<double>(out.n);
    return out;
}

std::map<int, std::int64_t> degree_histogram(const DegreeSequence& seq) {
    std::map<int, std::int64_t> hist;
    for (int d : seq.degrees) {
        ++hist[d];
    }
    return hist;
}

void write_edge_list(std::ostream& out, const EdgeList& edges) {
    for (const Edge& e : edges.edges) {
        out << e.u << ' ' << e.v << '\n';
    }
}

}  // namespace astopo
