#pragma once

#include <string>
#include <vector>

#include "gfkit/error.hpp"

namespace gfkit {

// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    explicit Graph(int n) : adj_(n) {}

    int size() const { return static_cast<int>(adj_.size()); }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_; // sorted
};

// A finite hypergraph: named vertices and a family of nonempty hyperedges.
class Hypergraph {
public:
    Hypergraph(std::vector<std::string> vertex_names,
               std::vector<std::vector<int>> hyperedges);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& vertex_name(int v) const { return names_[v]; }
    const std::vector<std::vector<int>>& hyperedges() const { return edges_; }
    const std::vector<int>& edges_containing(int v) const { return by_vertex_[v]; }

    // max hyperedge size (0 if no hyperedges)
    int width() const;

    // X guarded iff contained in some hyperedge (or empty ... rejected).
    bool covers(const std::vector<int>& set) const;

    std::string to_text() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> edges_; // each sorted unique; family sorted unique
    std::vector<std::vector<int>> by_vertex_;
};

// Undirected graph on h's vertices; {u,v} an edge iff u != v and both lie in
// one hyperedge.
Graph gaifman_graph(const Hypergraph& h);

// Text format: `vertex <name>` lines for isolated vertices and
// `edge <name> <name> ...` lines; `# comment`.
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph parse_hypergraph_file(const std::string& path);

} // namespace gfkit
