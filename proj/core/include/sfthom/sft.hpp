#ifndef SFTHOM_SFT_HPP
#define SFTHOM_SFT_HPP

#include <string>
#include <vector>

#include "sfthom/graph.hpp"
#include "sfthom/point.hpp"

namespace sfthom {

// Shift of finite type, presented as the edge shift of an essential graph.
// The empty shift (empty presentation) is a legal value.
class Sft {
  public:
    Sft() = default;
    Sft(Graph presentation, std::string name);

    // Trims the graph first; convenience for raw input graphs.
    static Sft from_graph(const Graph& g, std::string name);

    const Graph& presentation() const { return presentation_; }
    const std::string& name() const { return name_; }
    bool empty() const { return presentation_.empty(); }

    bool same_presentation(const Sft& o) const {
        return presentation_.same_presentation(o.presentation_);
    }

  private:
    Graph presentation_;
    std::string name_;
};

// All points of period dividing n, as canonical periodic points; the count
// equals the trace of the n-th power of the adjacency matrix.
std::vector<Point> periodic_points(const Sft& s, std::size_t n);

}  // namespace sfthom

#endif
