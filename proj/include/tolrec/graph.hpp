#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tolrec {

using Vertex = int;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool has_edge(Vertex u, Vertex v) const;
    // Adds uv. Self-loops and out-of-range ids throw; duplicates are ignored.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    // Sorted adjacency list.
    const std::vector<Vertex>& adj(Vertex u) const;
    // All edges (u < v), lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const;

private:
    void check(Vertex u) const;

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> mat_;
};

VertexSet neighborhood(const Graph& g, Vertex u);
VertexSet closed_neighborhood(const Graph& g, Vertex u);
// N(S) = union of N(x) over x in S, minus S.
VertexSet set_neighborhood(const Graph& g, const VertexSet& s);
// True iff some vertex of s is adjacent to x.
bool adjacent_to_set(const Graph& g, Vertex x, const VertexSet& s);

// Connected components of g[restrict], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& restrict);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // new id -> id in the host graph
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

// bijection[v] is the image in g2 of vertex v of g1.
bool labeled_equal(const Graph& g1, const Graph& g2, const std::vector<Vertex>& bijection);

VertexSet all_vertices(const Graph& g);
VertexSet make_set(std::vector<Vertex> v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);
bool is_subset(const VertexSet& a, const VertexSet& b);

}  // namespace tolrec
