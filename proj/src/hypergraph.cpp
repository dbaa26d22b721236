#include "gfkit/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "gfkit/util.hpp"

namespace gfkit {

void Graph::add_edge(int u, int v) {
    if (u == v) return;
    auto ins = [&](int a, int b) {
        auto it = std::lower_bound(adj_[a].begin(), adj_[a].end(), b);
        if (it == adj_[a].end() || *it != b) adj_[a].insert(it, b);
    };
    ins(u, v);
    ins(v, u);
}

bool Graph::adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Hypergraph::Hypergraph(std::vector<std::string> vertex_names,
                       std::vector<std::vector<int>> hyperedges)
    : names_(std::move(vertex_names)), edges_(std::move(hyperedges)) {
    for (auto& e : edges_) {
        sort_unique(e);
        if (e.empty()) throw DomainError("empty hyperedge");
        for (int v : e)
            if (v < 0 || v >= size()) throw DomainError("hyperedge vertex out of range");
    }
    sort_unique(edges_);
    by_vertex_.assign(size(), {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
        for (int v : edges_[i]) by_vertex_[v].push_back(i);
}

int Hypergraph::width() const {
    std::size_t w = 0;
    for (const auto& e : edges_) w = std::max(w, e.size());
    return static_cast<int>(w);
}

bool Hypergraph::covers(const std::vector<int>& set) const {
    if (set.empty()) throw DomainError("covers: empty set");
    std::vector<int> s = set;
    sort_unique(s);
    for (int ei : by_vertex_[s[0]])
        if (is_subset(s, edges_[ei])) return true;
    return false;
}

std::string Hypergraph::to_text() const {
    std::ostringstream os;
    std::vector<bool> in_edge(size(), false);
    for (const auto& e : edges_)
        for (int v : e) in_edge[v] = true;
    for (int v = 0; v < size(); ++v)
        if (!in_edge[v]) os << "vertex " << names_[v] << "\n";
    for (const auto& e : edges_) {
        os << "edge";
        for (int v : e) os << " " << names_[v];
        os << "\n";
    }
    return os.str();
}

Graph gaifman_graph(const Hypergraph& h) {
    Graph g(h.size());
    for (const auto& e : h.hyperedges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
    return g;
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<std::vector<int>> edges;
    auto intern = [&](const std::string& n) {
        auto it = index.find(n);
        if (it != index.end()) return it->second;
        names.push_back(n);
        index[n] = static_cast<int>(names.size()) - 1;
        return static_cast<int>(names.size()) - 1;
    };
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "vertex") {
            std::string n;
            if (!(ls >> n)) throw ParseError("vertex needs a name", lineno, 1);
            intern(n);
        } else if (kw == "edge") {
            std::vector<int> e;
            std::string n;
            while (ls >> n) e.push_back(intern(n));
            if (e.empty()) throw ParseError("edge needs at least one vertex", lineno, 1);
            edges.push_back(std::move(e));
        } else {
            throw ParseError("expected `vertex` or `edge`", lineno, 1);
        }
    }
    return Hypergraph(std::move(names), std::move(edges));
}

Hypergraph parse_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_hypergraph(os.str());
}

} // namespace gfkit
