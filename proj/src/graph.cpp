#include "trussdec/graph.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace trussdec {

bool CsrGraph::has_edge(VertexId u, VertexId v) const {
    auto first = neighbors.begin() + offsets[u];
    auto last = neighbors.begin() + offsets[u + 1];
    return std::binary_search(first, last, v);
}

CsrGraph canonicalize(const RawEdgeList& raw) {
    constexpr std::uint64_t kMaxId = std::numeric_limits<std::uint32_t>::max();

    // Dense ids in first-appearance order over the raw stream.
    std::unordered_map<std::uint64_t, VertexId> id_of;
    id_of.reserve(raw.edges.size() * 2);
    std::vector<std::uint64_t> labels;
    auto intern = [&](std::uint64_t label) -> VertexId {
        auto [it, inserted] = id_of.try_emplace(label, static_cast<VertexId>(labels.size()));
        if (inserted) {
            if (labels.size() > kMaxId)
                throw std::runtime_error("graph exceeds 32-bit vertex id width");
            labels.push_back(label);
        }
        return it->second;
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(raw.edges.size());
    for (const auto& [a, b] : raw.edges) {
        VertexId u = intern(a);
        VertexId v = intern(b);
        if (u == v) continue;  // self loop
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    if (edges.size() * 2 > kMaxId)
        throw std::runtime_error("graph exceeds 32-bit edge width (2m too large)");

    CsrGraph g;
    g.n = static_cast<std::uint32_t>(labels.size());
    g.m = static_cast<std::uint32_t>(edges.size());
    g.labels = std::move(labels);
    g.offsets.assign(g.n + 1, 0);
    for (const auto& [u, v] : edges) {
        g.offsets[u + 1]++;
        g.offsets[v + 1]++;
    }
    for (std::uint32_t i = 0; i < g.n; i++) g.offsets[i + 1] += g.offsets[i];

    g.neighbors.resize(2ull * g.m);
    std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbors[cursor[u]++] = v;
        g.neighbors[cursor[v]++] = u;
    }
    // Edges were inserted in sorted (u, v) order, so each adjacency list is
    // already ascending.
    return g;
}

TrussGraph build_truss_graph(const CsrGraph& g) {
    TrussGraph tg;
    tg.csr = g;
    tg.eid.assign(2ull * g.m, 0);
    tg.el.resize(g.m);
    tg.eo.resize(g.n);

    for (VertexId u = 0; u < g.n; u++) {
        auto first = g.neighbors.begin() + g.offsets[u];
        auto last = g.neighbors.begin() + g.offsets[u + 1];
        tg.eo[u] = static_cast<std::uint32_t>(std::upper_bound(first, last, u) - g.neighbors.begin());
    }

    // Scan (u, v) pairs with u < v in ascending order. The mirror slot of
    // edge {u, v} in adj(v) is the next unfilled smaller-neighbor slot of v,
    // since those appear in ascending u order as well.
    std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    EdgeId next_id = 0;
    for (VertexId u = 0; u < g.n; u++) {
        for (std::uint32_t j = tg.eo[u]; j < g.offsets[u + 1]; j++) {
            VertexId v = g.neighbors[j];
            tg.eid[j] = next_id;
            tg.eid[cursor[v]++] = next_id;
            tg.el[next_id] = {u, v};
            next_id++;
        }
    }
    return tg;
}

CsrGraph reorder(const CsrGraph& g, const std::vector<VertexId>& perm) {
    if (perm.size() != g.n)
        throw std::invalid_argument("reorder: permutation size does not match vertex count");
    std::vector<std::uint8_t> seen(g.n, 0);
    for (VertexId p : perm) {
        if (p >= g.n || seen[p])
            throw std::invalid_argument("reorder: permutation is not a bijection on 0..n-1");
        seen[p] = 1;
    }

    CsrGraph out;
    out.n = g.n;
    out.m = g.m;
    out.offsets.assign(g.n + 1, 0);
    for (VertexId u = 0; u < g.n; u++) out.offsets[perm[u] + 1] = g.degree(u);
    for (std::uint32_t i = 0; i < g.n; i++) out.offsets[i + 1] += out.offsets[i];

    out.neighbors.resize(g.neighbors.size());
    for (VertexId u = 0; u < g.n; u++) {
        std::uint32_t base = out.offsets[perm[u]];
        for (std::uint32_t j = g.offsets[u]; j < g.offsets[u + 1]; j++)
            out.neighbors[base++] = perm[g.neighbors[j]];
        std::sort(out.neighbors.begin() + out.offsets[perm[u]], out.neighbors.begin() + base);
    }

    if (!g.labels.empty()) {
        out.labels.resize(g.n);
        for (VertexId u = 0; u < g.n; u++) out.labels[perm[u]] = g.labels[u];
    }
    return out;
}

GraphStats stats(const CsrGraph& g) {
    GraphStats st;
    st.n = g.n;
    st.m = g.m;
    for (VertexId u = 0; u < g.n; u++) {
        std::uint64_t d = g.degree(u);
        st.d_max = std::max<std::uint32_t>(st.d_max, static_cast<std::uint32_t>(d));
        st.sum_deg_sq += d * d;
        auto first = g.neighbors.begin() + g.offsets[u];
        auto last = g.neighbors.begin() + g.offsets[u + 1];
        std::uint64_t dplus = static_cast<std::uint64_t>(last - std::upper_bound(first, last, u));
        st.sum_dplus_sq += dplus * dplus;
    }
    st.wedge_count = (st.sum_deg_sq - 2ull * g.m) / 2;
    return st;
}

RawEdgeList read_edge_list(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");  // also reads plain text
    if (f == nullptr) throw std::runtime_error("cannot open input file: " + path);

    RawEdgeList raw;
    std::string line;
    char buf[1 << 16];
    std::uint64_t lineno = 0;
    auto fail = [&](const std::string& why) {
        gzclose(f);
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + why);
    };

    bool eof = false;
    while (!eof) {
        line.clear();
        while (true) {
            if (gzgets(f, buf, sizeof(buf)) == nullptr) {
                eof = true;
                break;
            }
            line += buf;
            if (!line.empty() && line.back() == '\n') break;
        }
        if (line.empty()) continue;
        lineno++;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) i++;
        if (i == line.size() || line[i] == '#' || line[i] == '%') continue;

        std::uint64_t vals[2];
        for (int k = 0; k < 2; k++) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) i++;
            if (i < line.size() && line[i] == '-') fail("negative vertex label");
            if (i == line.size() || !std::isdigit(static_cast<unsigned char>(line[i])))
                fail("expected two nonnegative integers, got '" +
                     line.substr(0, line.size() - (line.back() == '\n' ? 1 : 0)) + "'");
            std::uint64_t v = 0;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
                v = v * 10 + static_cast<std::uint64_t>(line[i++] - '0');
            vals[k] = v;
        }
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) i++;
        if (i != line.size()) fail("trailing characters after edge");
        raw.edges.emplace_back(vals[0], vals[1]);
    }
    gzclose(f);
    return raw;
}

void write_edge_list(const std::string& path, const RawEdgeList& raw) {
    FILE* f = std::fopen(path.c_str(), "w");
    if (f == nullptr) throw std::runtime_error("cannot open output file: " + path);
    for (const auto& [u, v] : raw.edges)
        std::fprintf(f, "%llu %llu\n", static_cast<unsigned long long>(u),
                     static_cast<unsigned long long>(v));
    std::fclose(f);
}

}  // namespace trussdec
