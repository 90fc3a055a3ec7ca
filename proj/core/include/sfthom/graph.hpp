#ifndef SFTHOM_GRAPH_HPP
#define SFTHOM_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sfthom/intmatrix.hpp"

namespace sfthom {

// Directed multigraph.  Vertices and edges carry unique names; parallel edges
// and loops are first class.  Declaration order is part of the presentation:
// every matrix produced from a graph uses it.  Immutable after construction.
class Graph {
  public:
    struct Edge {
        std::string name;
        std::size_t i;  // initial vertex index
        std::size_t t;  // terminal vertex index
    };

    Graph() = default;
    Graph(std::vector<std::string> vertices,
          std::vector<std::tuple<std::string, std::string, std::string>> edges);

    static Graph from_indices(std::vector<std::string> vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    const std::string& vertex_name(std::size_t v) const { return vertices_[v]; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<std::size_t> vertex_index(const std::string& name) const;
    std::optional<std::size_t> edge_index(const std::string& name) const;

    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

    bool same_presentation(const Graph& o) const;

    // Paths of length k as edge-index words (k >= 1), in lexicographic order
    // of their edge indices.
    std::vector<std::vector<std::size_t>> paths(std::size_t k) const;

  private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::unordered_map<std::string, std::size_t> vindex_, eindex_;

    void rebuild_indices();
};

// Structure-preserving map of directed multigraphs: i and t commute with the
// vertex and edge maps.  Verified at construction.
class GraphHom {
  public:
    GraphHom() = default;
    GraphHom(Graph source, Graph target, std::vector<std::size_t> vertex_map,
             std::vector<std::size_t> edge_map);

    static GraphHom identity(const Graph& g);

    const Graph& source() const { return source_; }
    const Graph& target() const { return target_; }
    std::size_t vertex_image(std::size_t v) const { return vertex_map_[v]; }
    std::size_t edge_image(std::size_t e) const { return edge_map_[e]; }
    const std::vector<std::size_t>& vertex_map() const { return vertex_map_; }
    const std::vector<std::size_t>& edge_map() const { return edge_map_; }

    bool surjective_on_vertices() const;
    bool surjective_on_edges() const;

    // this o inner
    GraphHom compose(const GraphHom& inner) const;

  private:
    Graph source_, target_;
    std::vector<std::size_t> vertex_map_, edge_map_;
};

// Maximal subgraph in which every vertex has in-degree >= 1 and out-degree
// >= 1; exactly the edges traversed by some bi-infinite path.  Idempotent,
// may return the empty graph.
Graph trim_essential(const Graph& g);

bool is_essential(const Graph& g);

enum class BlockDirection { Initial, Terminal };

// Higher block presentation: vertices are (K-1)-paths, edges are K-paths.
// Also returns the canonical homomorphism G(K) -> G(K-1) induced by i
// (Initial) or t (Terminal); for K = 1 it is the identity on G.
// Path names are the component edge names joined with '|'.
std::pair<Graph, GraphHom> higher_block(const Graph& g, std::size_t K,
                                        BlockDirection dir = BlockDirection::Initial);

struct SccAnalysis {
    std::vector<std::vector<std::size_t>> components;  // vertex indices per SCC
    bool is_strongly_connected;
    bool is_nonwandering;  // every edge lies on a cycle
    bool is_mixing;        // adjacency matrix primitive
};

SccAnalysis scc_analysis(const Graph& g);

// Entry (w, v) counts edges from v to w, in declaration order.
IntMatrix adjacency_matrix(const Graph& g);

}  // namespace sfthom

#endif
