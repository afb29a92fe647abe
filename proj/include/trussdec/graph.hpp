#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace trussdec {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Edge stream as read from disk or a generator. May contain duplicates,
/// self loops, and both orientations of the same edge.
struct RawEdgeList {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

/// Simple undirected graph in CSR form. Adjacency lists are sorted
/// ascending, free of duplicates and self loops, and symmetric.
struct CsrGraph {
    std::uint32_t n = 0;
    std::uint32_t m = 0;  // undirected edge count; neighbors has 2m slots
    std::vector<std::uint32_t> offsets;  // size n+1
    std::vector<VertexId> neighbors;     // size 2m
    std::vector<std::uint64_t> labels;   // original label per vertex; empty = identity

    std::uint32_t degree(VertexId u) const { return offsets[u + 1] - offsets[u]; }
    std::uint64_t label_of(VertexId u) const { return labels.empty() ? u : labels[u]; }
    bool has_edge(VertexId u, VertexId v) const;
};

/// CSR augmented with per-slot edge ids, the edge list, and the offset of
/// the first neighbor greater than each vertex.
struct TrussGraph {
    CsrGraph csr;
    std::vector<EdgeId> eid;                             // size 2m
    std::vector<std::pair<VertexId, VertexId>> el;       // size m, u < v
    std::vector<std::uint32_t> eo;                       // size n

    std::uint32_t n() const { return csr.n; }
    std::uint32_t m() const { return csr.m; }

    /// Bytes for the six core arrays (CSR offsets, neighbors, eid, el, eo,
    /// support) at 4-byte integer width: 28m + 8n.
    static std::uint64_t core_array_bytes(std::uint64_t n, std::uint64_t m) {
        return 28 * m + 8 * n;
    }
};

struct GraphStats {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint32_t d_max = 0;
    std::uint64_t wedge_count = 0;    // (sum_deg_sq - 2m) / 2
    std::uint64_t sum_deg_sq = 0;     // sum over v of d(v)^2
    std::uint64_t sum_dplus_sq = 0;   // sum over v of d+(v)^2
    // Filled in by callers that have run the respective decompositions.
    std::int64_t triangle_count = -1;
    std::int64_t c_max = -1;
    std::int64_t t_max = -1;
};

/// Dedupe, drop self loops, relabel vertices densely in first-appearance
/// order, and build the CSR. Accepts multi-component input.
CsrGraph canonicalize(const RawEdgeList& raw);

/// Assign edge ids in ascending (u, v) scan order and build eid/el/eo.
TrussGraph build_truss_graph(const CsrGraph& g);

/// Relabel vertices: vertex v becomes perm[v]. perm must be a bijection.
CsrGraph reorder(const CsrGraph& g, const std::vector<VertexId>& perm);

GraphStats stats(const CsrGraph& g);

/// Text edge list: two whitespace-separated integers per line, '#'/'%'
/// comment lines skipped. Gzip input is handled transparently.
RawEdgeList read_edge_list(const std::string& path);

void write_edge_list(const std::string& path, const RawEdgeList& raw);

}  // namespace trussdec
