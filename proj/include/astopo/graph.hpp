#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace astopo {

/// Opaque non-negative node identifier (an AS number). Never renumbered, so
/// results stay comparable across snapshots.
using NodeId = std::int64_t;

struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeList {
    std::vector<Edge> edges;
};

/// Parse whitespace-separated integer pairs, one edge per line. Lines that
/// are blank or start with '#' are skipped; extra tokens after the first two
/// are ignored. Self-loops and duplicates are kept: this is the raw list.
/// Throws ParseError (with line number) on non-integer tokens or short lines.
EdgeList parse_edge_list(std::istream& in);

/// parse_edge_list over a file; throws DataError if the file cannot be read.
EdgeList load_edge_list(const std::string& path);

struct CleanStats {
    std::int64_t self_loops_removed = 0;
    std::int64_t duplicates_removed = 0;
};

struct CleanResult {
    EdgeList edges;
    CleanStats stats;
};

/// Drop self-pairs, identify (u,v) with (v,u), collapse duplicates, and
/// order canonically (smaller endpoint first, then lexicographic). The
/// result is an undirected, unweighted simple graph; removal counts are
/// reported for audit.
CleanResult clean(const EdgeList& raw);

/// Multiset of node degrees, one entry per node.
struct DegreeSequence {
    std::vector<int> degrees;
};

/// Degrees of a cleaned edge list, listed in ascending node-id order.
DegreeSequence degree_sequence(const EdgeList& cleaned);

struct GraphSummary {
    std::int64_t n = 0;         // node count
    std::int64_t m = 0;         // edge count
    int k_min0 = 0;             // smallest observed degree
    int k_max0 = 0;             // largest observed degree
    double avg_degree0 = 0.0;   // 2m/n
};

/// Throws DataError unless the degree sum equals 2m (handshake) and the
/// sequence is nonempty.
GraphSummary summarize(const DegreeSequence& seq, std::int64_t m);

/// Count of nodes per distinct degree.
std::map<int, std::int64_t> degree_histogram(const DegreeSequence& seq);

/// Emit the same text format parse_edge_list consumes: "u v" per line.
void write_edge_list(std::ostream& out, const EdgeList& edges);

}  // namespace astopo
