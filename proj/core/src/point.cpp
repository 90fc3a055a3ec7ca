#include "sfthom/point.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sfthom {

namespace {

std::int64_t imod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Minimal period of the cyclic word w (as a bi-infinite periodic sequence).
std::size_t primitive_period(const std::vector<std::size_t>& w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
        if (w.size() % p != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i < w.size(); ++i) ok = w[i] == w[i % p];
        if (ok) return p;
    }
    return w.size();
}

void rotate_left(std::vector<std::size_t>& w) { std::rotate(w.begin(), w.begin() + 1, w.end()); }
void rotate_right(std::vector<std::size_t>& w) { std::rotate(w.begin(), w.end() - 1, w.end()); }

}  // namespace

Point::Point(const Graph& g, std::vector<std::size_t> left_cycle, std::vector<std::size_t> core,
             std::vector<std::size_t> right_cycle, std::int64_t offset)
    : left_(std::move(left_cycle)),
      core_(std::move(core)),
      right_(std::move(right_cycle)),
      offset_(offset) {
    if (left_.empty() || right_.empty()) throw InputError("Point: cycles must be nonempty");
    auto check_edge = [&](std::size_t e) {
        if (e >= g.num_edges()) throw InputError("Point: edge index out of range");
    };
    for (std::size_t e : left_) check_edge(e);
    for (std::size_t e : core_) check_edge(e);
    for (std::size_t e : right_) check_edge(e);
    auto fits = [&](std::size_t a, std::size_t b) { return g.edge(a).t == g.edge(b).i; };
    for (std::size_t k = 0; k < left_.size(); ++k)
        if (!fits(left_[k], left_[(k + 1) % left_.size()]))
            throw InputError("Point: left cycle is not a cycle");
    for (std::size_t k = 0; k < right_.size(); ++k)
        if (!fits(right_[k], right_[(k + 1) % right_.size()]))
            throw InputError("Point: right cycle is not a cycle");
    for (std::size_t k = 0; k + 1 < core_.size(); ++k)
        if (!fits(core_[k], core_[k + 1])) throw InputError("Point: core is not a path");
    std::size_t before = core_.empty() ? right_.front() : core_.front();
    if (!fits(left_.back(), before)) throw InputError("Point: left cycle does not join the core");
    if (!core_.empty() && !fits(core_.back(), right_.front()))
        throw InputError("Point: core does not join the right cycle");
}

Point Point::periodic(const Graph& g, const std::vector<std::size_t>& cycle, std::int64_t start) {
    return Point(g, cycle, {}, cycle, start).canonical(g);
}

std::size_t Point::at(std::int64_t n) const {
    if (n < offset_) return left_[imod(n - offset_, std::int64_t(left_.size()))];
    std::int64_t k = n - offset_;
    if (k < std::int64_t(core_.size())) return core_[k];
    return right_[imod(k - std::int64_t(core_.size()), std::int64_t(right_.size()))];
}

std::size_t Point::vertex_at(const Graph& g, std::int64_t n) const { return g.edge(at(n)).i; }

Point Point::shifted(std::int64_t k) const {
    Point p = *this;
    p.offset_ -= k;
    return p;
}

Point Point::canonical(const Graph& g) const {
    Point p = *this;
    // primitive cycles, keeping the alignment with the offset
    std::size_t lp = primitive_period(p.left_);
    if (lp < p.left_.size()) p.left_.resize(lp);
    std::size_t rp = primitive_period(p.right_);
    if (rp < p.right_.size()) p.right_.resize(rp);

    // absorb matching edges at the left end of the core
    while (!p.core_.empty() && p.core_.front() == p.left_.front()) {
        p.core_.erase(p.core_.begin());
        rotate_left(p.left_);
        ++p.offset_;
    }
    // absorb matching edges at the right end of the core
    while (!p.core_.empty() && p.core_.back() == p.right_.back()) {
        p.core_.pop_back();
        rotate_right(p.right_);
    }
    if (!p.core_.empty()) return p;

    // Empty core: decide pure periodicity via a Fine-Wilf window.
    std::size_t pl = p.left_.size(), pr = p.right_.size();
    bool periodic = true;
    for (std::size_t k = 0; k < pl + pr; ++k)
        if (p.left_[k % pl] != p.right_[k % pr]) {
            periodic = false;
            break;
        }
    if (periodic) {
        std::size_t period = std::gcd(pl, pr);
        std::vector<std::size_t> w(period);
        for (std::size_t i = 0; i < period; ++i)
            w[i] = p.right_[imod(std::int64_t(i) - p.offset_, std::int64_t(pr))];
        std::size_t wp = primitive_period(w);
        w.resize(wp);
        Point out;
        out.left_ = w;
        out.right_ = w;
        out.offset_ = 0;
        (void)g;
        return out;
    }
    // Not periodic: push the boundary as far right as the left pattern holds.
    while (p.left_[0] == p.right_[0]) {
        rotate_left(p.left_);
        rotate_left(p.right_);
        ++p.offset_;
    }
    return p;
}

bool Point::equal(const Graph& g, const Point& a, const Point& b) {
    Point ca = a.canonical(g), cb = b.canonical(g);
    return ca.offset_ == cb.offset_ && ca.left_ == cb.left_ && ca.core_ == cb.core_ &&
           ca.right_ == cb.right_;
}

std::string Point::to_string(const Graph& g) const {
    Point c = canonical(g);
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < c.left_.size(); ++k) os << (k ? " " : "") << g.edge(c.left_[k]).name;
    os << ")^inf [" << c.offset_ << "] ";
    for (std::size_t k = 0; k < c.core_.size(); ++k) os << g.edge(c.core_[k]).name << " ";
    os << "(";
    for (std::size_t k = 0; k < c.right_.size(); ++k)
        os << (k ? " " : "") << g.edge(c.right_[k]).name;
    os << ")^inf";
    return os.str();
}

Point bracket(const Graph& g, const Point& x, const Point& y) {
    if (x.vertex_at(g, 0) != y.vertex_at(g, 0))
        throw UndefinedOperation("bracket: points do not share the vertex at coordinate 0");
    std::int64_t pl = std::int64_t(y.left_cycle().size());
    std::int64_t qr = std::int64_t(x.right_cycle().size());
    std::int64_t c0 = std::min<std::int64_t>(0, y.offset());
    std::int64_t c1 = std::max<std::int64_t>(0, x.offset() + std::int64_t(x.core().size()));
    std::vector<std::size_t> left(pl), core, right(qr);
    for (std::int64_t k = 0; k < pl; ++k) left[std::size_t(k)] = y.at(c0 - pl + k);
    for (std::int64_t n = c0; n < c1; ++n) core.push_back(n < 0 ? y.at(n) : x.at(n));
    for (std::int64_t k = 0; k < qr; ++k) right[std::size_t(k)] = x.at(c1 + k);
    return Point(g, std::move(left), std::move(core), std::move(right), c0).canonical(g);
}

}  // namespace sfthom
