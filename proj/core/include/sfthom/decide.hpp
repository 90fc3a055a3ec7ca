#ifndef SFTHOM_DECIDE_HPP
#define SFTHOM_DECIDE_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "sfthom/block_code.hpp"
#include "sfthom/graph.hpp"
#include "sfthom/intmatrix.hpp"
#include "sfthom/point.hpp"

namespace sfthom {

namespace detail {

// Trimmed graph on pairs of edges with equal image; the standard decision
// device for injectivity and the resolving properties.
struct PairData {
    Graph graph;
    std::vector<std::pair<std::size_t, std::size_t>> vpairs, epairs;
    std::vector<char> vdiag, ediag;
    bool has_offdiagonal_edge = false;
};

struct PairCache {
    std::mutex m;
    std::shared_ptr<const PairData> pair;
    std::optional<bool> injective, surjective, s_resolving, u_resolving;
};

// Pair graph of the recoded code; memoized per code, safe for concurrent use.
std::shared_ptr<const PairData> pair_graph(const BlockCode& recoded);

}  // namespace detail

// All decisions recode their input to an edge-wise code first.  Predicates
// on codes with an empty source or target return the vacuous verdict.

bool is_injective(const BlockCode& c);
bool is_surjective(const BlockCode& c);
bool is_conjugacy(const BlockCode& c);

bool is_s_resolving(const BlockCode& c);
bool is_u_resolving(const BlockCode& c);

// s-resolving + factor map, under the non-wandering criterion; throws
// CriterionError if the source is wandering (the criterion does not apply).
bool is_s_bijective(const BlockCode& c);
bool is_u_bijective(const BlockCode& c);

// Covering conditions on an edge-wise homomorphism: restriction of the edge
// map to incoming (left) resp. outgoing (right) edge sets is surjective at
// every vertex, together with global surjectivity.
bool is_left_covering(const GraphHom& h);
bool is_right_covering(const GraphHom& h);

// Fibre cardinality over a periodic point, constant under the n-to-1 theorem
// hypotheses (irreducible, s- and u-bijective factor map); cross-checked on a
// second orbit.  Throws HypothesisError naming the failed hypothesis, or
// CriterionError("not constant-to-one") if the fibre is infinite or the two
// orbits disagree.
Int degree(const BlockCode& c);

// Fibre cardinality of c over the given periodic point; SIZE_MAX-like
// sentinel is never used, infinite fibres throw CriterionError.
Int fibre_count(const BlockCode& c, const Point& target_point);

// A pair of distinct points with equal image, when the code is not
// injective; std::nullopt when it is.  Points live on the original source
// presentation.
std::optional<std::pair<Point, Point>> injectivity_witness(const BlockCode& c);

}  // namespace sfthom

#endif
