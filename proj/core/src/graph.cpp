#include "sfthom/graph.hpp"

#include <algorithm>
#include <numeric>

#include "sfthom/errors.hpp"

namespace sfthom {

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::tuple<std::string, std::string, std::string>> edges) {
    vertices_ = std::move(vertices);
    rebuild_indices();
    edges_.reserve(edges.size());
    for (auto& [name, i, t] : edges) {
        auto iv = vertex_index(i), tv = vertex_index(t);
        if (!iv || !tv)
            throw InputError("edge '" + name + "' references unknown vertex '" +
                             (iv ? t : i) + "'");
        edges_.push_back(Edge{std::move(name), *iv, *tv});
    }
    rebuild_indices();
}

Graph Graph::from_indices(std::vector<std::string> vertices, std::vector<Edge> edges) {
    Graph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    for (const auto& e : g.edges_)
        if (e.i >= g.vertices_.size() || e.t >= g.vertices_.size())
            throw InputError("edge '" + e.name + "' references out-of-range vertex");
    g.rebuild_indices();
    return g;
}

void Graph::rebuild_indices() {
    vindex_.clear();
    eindex_.clear();
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (!vindex_.emplace(vertices_[v], v).second)
            throw InputError("duplicate vertex name '" + vertices_[v] + "'");
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (!eindex_.emplace(edges_[e].name, e).second)
            throw InputError("duplicate edge name '" + edges_[e].name + "'");
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        out_[edges_[e].i].push_back(e);
        in_[edges_[e].t].push_back(e);
    }
}

std::optional<std::size_t> Graph::vertex_index(const std::string& name) const {
    auto it = vindex_.find(name);
    if (it == vindex_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Graph::edge_index(const std::string& name) const {
    auto it = eindex_.find(name);
    if (it == eindex_.end()) return std::nullopt;
    return it->second;
}

bool Graph::same_presentation(const Graph& o) const {
    if (vertices_ != o.vertices_) return false;
    if (edges_.size() != o.edges_.size()) return false;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].name != o.edges_[e].name || edges_[e].i != o.edges_[e].i ||
            edges_[e].t != o.edges_[e].t)
            return false;
    return true;
}

std::vector<std::vector<std::size_t>> Graph::paths(std::size_t k) const {
    std::vector<std::vector<std::size_t>> result;
    if (k == 0) return result;
    std::vector<std::size_t> word;
    auto extend = [&](auto&& self, std::size_t depth) -> void {
        if (depth == k) {
            result.push_back(word);
            return;
        }
        std::size_t from = edges_[word.back()].t;
        for (std::size_t e : out_[from]) {
            word.push_back(e);
            self(self, depth + 1);
            word.pop_back();
        }
    };
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        word.assign(1, e);
        extend(extend, 1);
    }
    return result;
}

GraphHom::GraphHom(Graph source, Graph target, std::vector<std::size_t> vertex_map,
                   std::vector<std::size_t> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
    if (vertex_map_.size() != source_.num_vertices() || edge_map_.size() != source_.num_edges())
        throw InputError("GraphHom: map sizes do not match the source graph");
    for (std::size_t v : vertex_map_)
        if (v >= target_.num_vertices()) throw InputError("GraphHom: vertex image out of range");
    for (std::size_t e = 0; e < edge_map_.size(); ++e) {
        if (edge_map_[e] >= target_.num_edges())
            throw InputError("GraphHom: edge image out of range");
        const auto& se = source_.edge(e);
        const auto& te = target_.edge(edge_map_[e]);
        if (te.i != vertex_map_[se.i] || te.t != vertex_map_[se.t])
            throw InputError("GraphHom: edge '" + se.name +
                             "' does not commute with i and t under the maps");
    }
}

GraphHom GraphHom::identity(const Graph& g) {
    std::vector<std::size_t> vm(g.num_vertices()), em(g.num_edges());
    std::iota(vm.begin(), vm.end(), 0);
    std::iota(em.begin(), em.end(), 0);
    return GraphHom(g, g, std::move(vm), std::move(em));
}

bool GraphHom::surjective_on_vertices() const {
    std::vector<char> hit(target_.num_vertices(), 0);
    for (std::size_t v : vertex_map_) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool GraphHom::surjective_on_edges() const {
    std::vector<char> hit(target_.num_edges(), 0);
    for (std::size_t e : edge_map_) hit[e] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

GraphHom GraphHom::compose(const GraphHom& inner) const {
    if (!inner.target_.same_presentation(source_))
        throw InputError("GraphHom: compose endpoint mismatch");
    std::vector<std::size_t> vm(inner.source_.num_vertices()), em(inner.source_.num_edges());
    for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = vertex_map_[inner.vertex_map_[v]];
    for (std::size_t e = 0; e < em.size(); ++e) em[e] = edge_map_[inner.edge_map_[e]];
    return GraphHom(inner.source_, target_, std::move(vm), std::move(em));
}

Graph trim_essential(const Graph& g) {
    std::vector<char> alive_v(g.num_vertices(), 1), alive_e(g.num_edges(), 1);
    std::vector<std::size_t> indeg(g.num_vertices(), 0), outdeg(g.num_vertices(), 0);
    for (const auto& e : g.edges()) {
        ++outdeg[e.i];
        ++indeg[e.t];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            if (!alive_v[v] || (indeg[v] > 0 && outdeg[v] > 0)) continue;
            alive_v[v] = 0;
            changed = true;
            for (std::size_t e : g.out_edges(v))
                if (alive_e[e]) {
                    alive_e[e] = 0;
                    --outdeg[v];
                    --indeg[g.edge(e).t];
                }
            for (std::size_t e : g.in_edges(v))
                if (alive_e[e]) {
                    alive_e[e] = 0;
                    --indeg[v];
                    --outdeg[g.edge(e).i];
                }
        }
    }
    std::vector<std::string> vs;
    std::vector<std::size_t> vmap(g.num_vertices(), 0);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (alive_v[v]) {
            vmap[v] = vs.size();
            vs.push_back(g.vertex_name(v));
        }
    std::vector<Graph::Edge> es;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (alive_e[e])
            es.push_back(Graph::Edge{g.edge(e).name, vmap[g.edge(e).i], vmap[g.edge(e).t]});
    return Graph::from_indices(std::move(vs), std::move(es));
}

bool is_essential(const Graph& g) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.in_edges(v).empty() || g.out_edges(v).empty()) return false;
    return true;
}

namespace {

std::string join_names(const Graph& g, const std::vector<std::size_t>& word) {
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) s += '|';
        s += g.edge(word[k]).name;
    }
    return s;
}

}  // namespace

std::pair<Graph, GraphHom> higher_block(const Graph& g, std::size_t K, BlockDirection dir) {
    if (K == 0) throw InputError("higher_block: K must be positive");
    if (!is_essential(g)) throw InputError("higher_block: graph must be essential");
    if (K == 1) return {g, GraphHom::identity(g)};

    auto vwords = g.paths(K - 1);
    auto ewords = g.paths(K);
    std::unordered_map<std::string, std::size_t> vlookup;
    std::vector<std::string> vs;
    vs.reserve(vwords.size());
    for (const auto& w : vwords) {
        vlookup.emplace(join_names(g, w), vs.size());
        vs.push_back(join_names(g, w));
    }
    std::vector<Graph::Edge> es;
    es.reserve(ewords.size());
    for (const auto& w : ewords) {
        std::vector<std::size_t> head(w.begin(), w.end() - 1), tail(w.begin() + 1, w.end());
        es.push_back(Graph::Edge{join_names(g, w), vlookup.at(join_names(g, head)),
                                 vlookup.at(join_names(g, tail))});
    }
    Graph gk = Graph::from_indices(std::move(vs), std::move(es));

    // Canonical homomorphism G(K) -> G(K-1).
    Graph prev = (K == 2) ? g : higher_block(g, K - 1, dir).first;
    std::vector<std::size_t> vm(gk.num_vertices()), em(gk.num_edges());
    bool drop_last = (dir == BlockDirection::Initial);
    for (std::size_t v = 0; v < vwords.size(); ++v) {
        const auto& w = vwords[v];
        if (K == 2) {
            vm[v] = drop_last ? g.edge(w[0]).i : g.edge(w[0]).t;
        } else {
            std::vector<std::size_t> sub = drop_last
                                               ? std::vector<std::size_t>(w.begin(), w.end() - 1)
                                               : std::vector<std::size_t>(w.begin() + 1, w.end());
            vm[v] = *prev.vertex_index(join_names(g, sub));
        }
    }
    for (std::size_t e = 0; e < ewords.size(); ++e) {
        const auto& w = ewords[e];
        std::vector<std::size_t> sub = drop_last ? std::vector<std::size_t>(w.begin(), w.end() - 1)
                                                 : std::vector<std::size_t>(w.begin() + 1, w.end());
        em[e] = (K == 2) ? sub[0] : *prev.edge_index(join_names(g, sub));
    }
    GraphHom hom(gk, prev, std::move(vm), std::move(em));
    return {gk, hom};
}

namespace {

// Tarjan strongly connected components, iterative.
std::vector<std::vector<std::size_t>> tarjan_scc(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> comps;
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t edge_pos;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != SIZE_MAX) continue;
        std::vector<Frame> call;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& outs = g.out_edges(f.v);
            if (f.edge_pos < outs.size()) {
                std::size_t w = g.edge(outs[f.edge_pos++]).t;
                if (index[w] == SIZE_MAX) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<std::size_t> comp;
                    for (;;) {
                        std::size_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                        if (w == f.v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
                std::size_t v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

// gcd of cycle lengths of a strongly connected graph; 0 for a single vertex
// with no edges (cannot happen for essential graphs).
Int graph_period(const Graph& g) {
    if (g.empty()) return 1;
    std::vector<long long> dist(g.num_vertices(), -1);
    std::vector<std::size_t> queue{0};
    dist[0] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        std::size_t v = queue[h];
        for (std::size_t e : g.out_edges(v)) {
            std::size_t w = g.edge(e).t;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Int p = 0;
    for (const auto& e : g.edges()) p = gcd(p, Int(dist[e.i] + 1 - dist[e.t]));
    return abs(p);
}

}  // namespace

SccAnalysis scc_analysis(const Graph& g) {
    SccAnalysis a;
    a.components = tarjan_scc(g);
    a.is_strongly_connected = a.components.size() <= 1;

    std::vector<std::size_t> comp_of(g.num_vertices(), 0);
    for (std::size_t c = 0; c < a.components.size(); ++c)
        for (std::size_t v : a.components[c]) comp_of[v] = c;
    a.is_nonwandering = true;
    for (const auto& e : g.edges())
        if (comp_of[e.i] != comp_of[e.t]) {
            a.is_nonwandering = false;
            break;
        }
    a.is_mixing = a.is_strongly_connected && graph_period(g) == 1;
    return a;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.num_vertices(), g.num_vertices());
    for (const auto& e : g.edges()) a(e.t, e.i) += 1;
    return a;
}

}  // namespace sfthom
