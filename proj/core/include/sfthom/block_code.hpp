#ifndef SFTHOM_BLOCK_CODE_HPP
#define SFTHOM_BLOCK_CODE_HPP

#include <memory>
#include <string>
#include <vector>

#include "sfthom/graph.hpp"
#include "sfthom/point.hpp"
#include "sfthom/sft.hpp"

namespace sfthom {

namespace detail {
struct PairCache;
}

// A sliding block code between edge shifts, stored as a graph homomorphism
// from the (level+1)-block presentation of the source into the target
// presentation.  Level 0 means an edge-wise homomorphism.  The induced point
// map reads the window starting at the current coordinate:
//
//   pi(x)_n = Phi(x_[n, n+level]).
//
// Codes described with memory m are represented at level m+anticipation via
// the canonical conjugacy that aligns the window start with the memory end;
// this changes nothing any decision procedure can observe.
class BlockCode {
  public:
    BlockCode() = default;
    BlockCode(Sft source, Sft target, GraphHom hom, std::size_t level);

    static BlockCode identity(const Sft& s);
    static BlockCode one_block(Sft source, Sft target, GraphHom hom);

    // Build from word maps: edge_word -> target edge, for all source paths of
    // length level+1.  The vertex map is inferred and verified.
    template <typename EdgeFn>
    static BlockCode from_word_map(const Sft& source, const Sft& target, std::size_t level,
                                   EdgeFn&& edge_of_word);

    const Sft& source() const { return source_; }
    const Sft& target() const { return target_; }
    const GraphHom& hom() const { return hom_; }
    std::size_t level() const { return level_; }
    const Graph& rec_graph() const { return hom_.source(); }

    // Image data on windows of the source presentation.
    std::size_t edge_image_of_word(const std::vector<std::size_t>& word) const;
    std::size_t vertex_image_of_word(const std::vector<std::size_t>& word) const;

    // Equivalent level-0 code on the higher-block presentation of the source.
    BlockCode recode_one_block() const;
    // Same point map re-expressed at level `level() + extra`.
    BlockCode lift(std::size_t extra) const;

    Point apply(const Point& x) const;

    static BlockCode compose(const BlockCode& outer, const BlockCode& inner);
    static bool code_equal(const BlockCode& a, const BlockCode& b);

    // The left shift as a block code (level 1, edge word (e,f) -> f).
    static BlockCode shift_code(const Sft& s);
    // n-fold composition of the shift with this code is frequent enough in
    // the automorphism tests to deserve a helper.
    static BlockCode power(const BlockCode& c, std::size_t n);

    // Shared per-code cache used by the decision procedures.
    detail::PairCache& pair_cache() const { return *cache_; }

  private:
    Sft source_, target_;
    GraphHom hom_;
    std::size_t level_ = 0;
    std::shared_ptr<detail::PairCache> cache_;
};

// Product of components cut out by equality constraints: the sub-shift of
// the product of the (recoded) component shifts on which, for every
// constraint, the two codes agree.  Fibre products, the N-fold fibre
// products Y_N and the Sigma_{L,M} grid are all instances.
struct Constraint {
    std::size_t a;
    BlockCode code_a;  // from components[a]
    std::size_t b;
    BlockCode code_b;  // from components[b]; same target as code_a
};

struct DiagramLimit {
    Sft product;
    // Level-0 projections onto the recoded components.
    std::vector<BlockCode> projections;
    // Recoded components (targets of the projections).
    std::vector<Sft> components;
};

DiagramLimit diagram_limit(const std::vector<Sft>& components,
                           const std::vector<Constraint>& constraints, const std::string& name);

struct FibreProduct {
    Sft product;
    BlockCode p1, p2;
};

// Fibre product of two codes with a common target.
FibreProduct fibre_product(const BlockCode& c1, const BlockCode& c2);

struct NFoldFibre {
    Sft y_n;
    std::vector<BlockCode> deltas;  // delta_0 ... delta_N, dropping coordinate n
    Sft y_prev;                     // Y_{N-1}(pi), the common target of the deltas
};

// Y_N(pi): (N+1)-tuples with equal image, with the coordinate deletions.
NFoldFibre n_fold_fibre(const BlockCode& c, std::size_t N);

template <typename EdgeFn>
BlockCode BlockCode::from_word_map(const Sft& source, const Sft& target, std::size_t level,
                                   EdgeFn&& edge_of_word) {
    auto [rec, canon] = higher_block(source.presentation(), level + 1);
    (void)canon;
    const Graph& tg = target.presentation();
    std::vector<std::size_t> em(rec.num_edges());
    std::vector<std::size_t> vm(rec.num_vertices(), SIZE_MAX);
    auto words = source.presentation().paths(level + 1);
    for (std::size_t e = 0; e < words.size(); ++e) {
        em[e] = edge_of_word(words[e]);
        std::size_t iv = rec.edge(e).i;
        std::size_t want = tg.edge(em[e]).i;
        if (vm[iv] == SIZE_MAX) vm[iv] = want;
        std::size_t tv = rec.edge(e).t;
        std::size_t wantt = tg.edge(em[e]).t;
        if (vm[tv] == SIZE_MAX) vm[tv] = wantt;
    }
    for (std::size_t v = 0; v < vm.size(); ++v)
        if (vm[v] == SIZE_MAX)
            throw InputError("from_word_map: vertex with no incident path (source not essential?)");
    return BlockCode(source, target, GraphHom(rec, tg, std::move(vm), std::move(em)), level);
}

}  // namespace sfthom

#endif
