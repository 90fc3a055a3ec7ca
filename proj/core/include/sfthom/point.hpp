#ifndef SFTHOM_POINT_HPP
#define SFTHOM_POINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sfthom/errors.hpp"
#include "sfthom/graph.hpp"

namespace sfthom {

// Eventually periodic bi-infinite edge path:
//
//   ... L L L | core | R R R ...
//
// with the core starting at index `offset`.  Edges are stored as indices into
// a fixed presentation graph.  Every representation is validated to be a
// legal path; `canonical` computes the unique minimal representation, so two
// points are equal iff their canonical forms are structurally equal.
class Point {
  public:
    Point(const Graph& g, std::vector<std::size_t> left_cycle, std::vector<std::size_t> core,
          std::vector<std::size_t> right_cycle, std::int64_t offset);

    static Point periodic(const Graph& g, const std::vector<std::size_t>& cycle,
                          std::int64_t start = 0);

    // Edge index at position n.
    std::size_t at(std::int64_t n) const;
    // Vertex index at position n, i.e. the initial vertex of the edge at n.
    std::size_t vertex_at(const Graph& g, std::int64_t n) const;

    const std::vector<std::size_t>& left_cycle() const { return left_; }
    const std::vector<std::size_t>& core() const { return core_; }
    const std::vector<std::size_t>& right_cycle() const { return right_; }
    std::int64_t offset() const { return offset_; }

    // x shifted by k places: result_n = x_{n+k}.
    Point shifted(std::int64_t k) const;

    Point canonical(const Graph& g) const;
    static bool equal(const Graph& g, const Point& a, const Point& b);

    std::string to_string(const Graph& g) const;

  private:
    Point() = default;
    std::vector<std::size_t> left_, core_, right_;
    std::int64_t offset_ = 0;
};

// Splices the right ray of x onto the left ray of y:
// result_n = y_n for n < 0 and x_n for n >= 0.  Defined when x and y sit at
// the same vertex at coordinate 0; throws UndefinedOperation otherwise.
Point bracket(const Graph& g, const Point& x, const Point& y);

struct UndefinedOperation : Error {
    explicit UndefinedOperation(const std::string& msg) : Error(msg) {}
};

}  // namespace sfthom

#endif
