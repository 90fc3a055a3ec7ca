#include "sfthom/sft.hpp"

#include "sfthom/errors.hpp"

namespace sfthom {

Sft::Sft(Graph presentation, std::string name)
    : presentation_(std::move(presentation)), name_(std::move(name)) {
    if (!is_essential(presentation_))
        throw InputError("SFT '" + name_ + "': presentation is not essential (trim it first)");
}

Sft Sft::from_graph(const Graph& g, std::string name) {
    return Sft(trim_essential(g), std::move(name));
}

std::vector<Point> periodic_points(const Sft& s, std::size_t n) {
    if (n == 0) throw InputError("periodic_points: n must be positive");
    const Graph& g = s.presentation();
    std::vector<Point> out;
    std::vector<std::size_t> word;
    auto extend = [&](auto&& self, std::size_t root, std::size_t here, std::size_t depth) -> void {
        if (depth == n) {
            if (here == root) out.push_back(Point::periodic(g, word));
            return;
        }
        for (std::size_t e : g.out_edges(here)) {
            word.push_back(e);
            self(self, root, g.edge(e).t, depth + 1);
            word.pop_back();
        }
    };
    for (std::size_t v = 0; v < g.num_vertices(); ++v) extend(extend, v, v, 0);
    return out;
}

}  // namespace sfthom
