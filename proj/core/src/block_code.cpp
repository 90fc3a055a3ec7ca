#include "sfthom/block_code.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "sfthom/decide.hpp"
#include "sfthom/errors.hpp"

namespace sfthom {

BlockCode::BlockCode(Sft source, Sft target, GraphHom hom, std::size_t level)
    : source_(std::move(source)),
      target_(std::move(target)),
      hom_(std::move(hom)),
      level_(level),
      cache_(std::make_shared<detail::PairCache>()) {
    if (!hom_.target().same_presentation(target_.presentation()))
        throw InputError("BlockCode: hom target does not match the target presentation");
    if (level_ == 0) {
        if (!hom_.source().same_presentation(source_.presentation()))
            throw InputError("BlockCode: hom source does not match the source presentation");
    } else {
        auto [rec, canon] = higher_block(source_.presentation(), level_ + 1);
        (void)canon;
        if (!hom_.source().same_presentation(rec))
            throw InputError("BlockCode: hom source is not the level-" + std::to_string(level_) +
                             " block presentation of the source");
    }
}

BlockCode BlockCode::identity(const Sft& s) {
    return BlockCode(s, s, GraphHom::identity(s.presentation()), 0);
}

BlockCode BlockCode::one_block(Sft source, Sft target, GraphHom hom) {
    return BlockCode(std::move(source), std::move(target), std::move(hom), 0);
}

namespace {

std::string join_word(const Graph& g, const std::vector<std::size_t>& word, std::size_t from,
                      std::size_t len) {
    std::string s;
    for (std::size_t k = 0; k < len; ++k) {
        if (k) s += '|';
        s += g.edge(word[from + k]).name;
    }
    return s;
}

}  // namespace

std::size_t BlockCode::edge_image_of_word(const std::vector<std::size_t>& word) const {
    if (word.size() != level_ + 1)
        throw InputError("edge_image_of_word: word length does not match the level");
    if (level_ == 0) return hom_.edge_image(word[0]);
    auto idx = rec_graph().edge_index(join_word(source_.presentation(), word, 0, word.size()));
    if (!idx) throw InputError("edge_image_of_word: word is not a path");
    return hom_.edge_image(*idx);
}

std::size_t BlockCode::vertex_image_of_word(const std::vector<std::size_t>& word) const {
    if (word.size() != level_ || level_ == 0)
        throw InputError("vertex_image_of_word: needs a word of length level >= 1");
    auto idx = rec_graph().vertex_index(join_word(source_.presentation(), word, 0, word.size()));
    if (!idx) throw InputError("vertex_image_of_word: word is not a path");
    return hom_.vertex_image(*idx);
}

BlockCode BlockCode::recode_one_block() const {
    if (level_ == 0) return *this;
    Sft rec_sft(rec_graph(), source_.name() + "[" + std::to_string(level_ + 1) + "]");
    return BlockCode(std::move(rec_sft), target_, hom_, 0);
}

BlockCode BlockCode::lift(std::size_t extra) const {
    if (extra == 0) return *this;
    std::size_t L = level_;
    return from_word_map(source_, target_, L + extra, [&](const std::vector<std::size_t>& w) {
        return edge_image_of_word({w.begin(), w.begin() + std::ptrdiff_t(L + 1)});
    });
}

Point BlockCode::apply(const Point& x) const {
    const Graph& tg = target_.presentation();
    const std::int64_t L = std::int64_t(level_);
    auto window = [&](std::int64_t n) {
        std::vector<std::size_t> w(std::size_t(L) + 1);
        for (std::int64_t k = 0; k <= L; ++k) w[std::size_t(k)] = x.at(n + k);
        return edge_image_of_word(w);
    };
    const std::int64_t p = std::int64_t(x.left_cycle().size());
    const std::int64_t q = std::int64_t(x.right_cycle().size());
    const std::int64_t c0 = x.offset() - L;
    const std::int64_t c1 = x.offset() + std::int64_t(x.core().size());
    std::vector<std::size_t> left(std::size_t(p)), core, right(std::size_t(q));
    for (std::int64_t k = 0; k < p; ++k) left[std::size_t(k)] = window(c0 - p + k);
    for (std::int64_t n = c0; n < c1; ++n) core.push_back(window(n));
    for (std::int64_t k = 0; k < q; ++k) right[std::size_t(k)] = window(c1 + k);
    return Point(tg, std::move(left), std::move(core), std::move(right), c0).canonical(tg);
}

BlockCode BlockCode::compose(const BlockCode& outer, const BlockCode& inner) {
    if (!inner.target_.same_presentation(outer.source_))
        throw InputError("compose: target of the inner code is not the source of the outer code");
    const std::size_t L1 = inner.level_, L2 = outer.level_;
    if (L2 == 0) {
        return from_word_map(inner.source_, outer.target_, L1,
                             [&](const std::vector<std::size_t>& w) {
                                 return outer.hom_.edge_image(inner.edge_image_of_word(w));
                             });
    }
    return from_word_map(inner.source_, outer.target_, L1 + L2,
                         [&](const std::vector<std::size_t>& w) {
                             std::vector<std::size_t> mid(L2 + 1);
                             for (std::size_t j = 0; j <= L2; ++j)
                                 mid[j] = inner.edge_image_of_word(
                                     {w.begin() + std::ptrdiff_t(j),
                                      w.begin() + std::ptrdiff_t(j + L1 + 1)});
                             return outer.edge_image_of_word(mid);
                         });
}

bool BlockCode::code_equal(const BlockCode& a, const BlockCode& b) {
    if (!a.source_.same_presentation(b.source_) || !a.target_.same_presentation(b.target_))
        throw InputError("code_equal: codes do not share source and target presentations");
    std::size_t K = std::max(a.level_, b.level_);
    auto words = a.source_.presentation().paths(K + 1);
    for (const auto& w : words) {
        std::size_t ia =
            a.edge_image_of_word({w.begin(), w.begin() + std::ptrdiff_t(a.level_ + 1)});
        std::size_t ib =
            b.edge_image_of_word({w.begin(), w.begin() + std::ptrdiff_t(b.level_ + 1)});
        if (ia != ib) return false;
    }
    return true;
}

BlockCode BlockCode::shift_code(const Sft& s) {
    return from_word_map(s, s, 1, [](const std::vector<std::size_t>& w) { return w[1]; });
}

BlockCode BlockCode::power(const BlockCode& c, std::size_t n) {
    if (!c.source_.same_presentation(c.target_))
        throw InputError("power: code is not an endomorphism");
    BlockCode acc = identity(c.source_);
    for (std::size_t k = 0; k < n; ++k) acc = compose(c, acc);
    return acc;
}

namespace {

struct TupleHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::string tuple_name(const std::vector<Sft>& comps, const std::vector<std::size_t>& tuple,
                       bool edges) {
    std::string s = "(";
    for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (j) s += ',';
        s += edges ? comps[j].presentation().edge(tuple[j]).name
                   : comps[j].presentation().vertex_name(tuple[j]);
    }
    s += ')';
    return s;
}

}  // namespace

DiagramLimit diagram_limit(const std::vector<Sft>& components_in,
                           const std::vector<Constraint>& constraints_in,
                           const std::string& name) {
    const std::size_t n = components_in.size();
    if (n == 0) throw InputError("diagram_limit: no components");

    // Recode every component high enough that all its constraint codes are
    // edge-wise, then restate the constraints at level 0.
    std::vector<std::size_t> lvl(n, 0);
    for (const auto& c : constraints_in) {
        if (c.a >= n || c.b >= n) throw InputError("diagram_limit: constraint index out of range");
        if (!c.code_a.source().same_presentation(components_in[c.a]) ||
            !c.code_b.source().same_presentation(components_in[c.b]))
            throw InputError("diagram_limit: constraint code source mismatch");
        if (!c.code_a.target().same_presentation(c.code_b.target()))
            throw InputError("diagram_limit: constraint codes do not share a target");
        lvl[c.a] = std::max(lvl[c.a], c.code_a.level());
        lvl[c.b] = std::max(lvl[c.b], c.code_b.level());
    }
    std::vector<Sft> comps(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (lvl[j] == 0) {
            comps[j] = components_in[j];
        } else {
            auto [rec, canon] = higher_block(components_in[j].presentation(), lvl[j] + 1);
            (void)canon;
            comps[j] = Sft(rec, components_in[j].name() + "[" + std::to_string(lvl[j] + 1) + "]");
        }
    }
    struct Flat {
        std::size_t a, b;
        BlockCode ca, cb;  // level-0 codes from comps[a], comps[b]
    };
    std::vector<Flat> cons;
    for (const auto& c : constraints_in) {
        BlockCode ca = c.code_a.lift(lvl[c.a] - c.code_a.level()).recode_one_block();
        BlockCode cb = c.code_b.lift(lvl[c.b] - c.code_b.level()).recode_one_block();
        cons.push_back(Flat{c.a, c.b, std::move(ca), std::move(cb)});
    }

    // Order components so each one (after the first) is constrained against
    // an already placed component whenever the constraint graph allows it.
    std::vector<std::size_t> order;
    std::vector<char> placed(n, 0);
    while (order.size() < n) {
        std::size_t next = n;
        for (const auto& c : cons) {
            if (placed[c.a] && !placed[c.b]) next = std::min(next, c.b);
            if (placed[c.b] && !placed[c.a]) next = std::min(next, c.a);
        }
        if (next == n)
            for (std::size_t j = 0; j < n; ++j)
                if (!placed[j]) {
                    next = j;
                    break;
                }
        placed[next] = 1;
        order.push_back(next);
    }
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;

    // Backtracking enumeration of constrained tuples (vertices or edges).
    auto enumerate = [&](bool edges) {
        std::vector<std::vector<std::size_t>> result;
        std::vector<std::size_t> tuple(n);
        auto image = [&](const BlockCode& code, std::size_t item) {
            return edges ? code.hom().edge_image(item) : code.hom().vertex_image(item);
        };
        auto count = [&](std::size_t j) {
            return edges ? comps[j].presentation().num_edges()
                         : comps[j].presentation().num_vertices();
        };
        auto step = [&](auto&& self, std::size_t k) -> void {
            if (k == n) {
                result.push_back(tuple);
                return;
            }
            std::size_t j = order[k];
            for (std::size_t item = 0; item < count(j); ++item) {
                bool ok = true;
                for (const auto& c : cons) {
                    bool ja = (c.a == j), jb = (c.b == j);
                    if (!ja && !jb) continue;
                    std::size_t ia, ib;
                    if (ja && jb) {
                        ia = ib = item;
                    } else if (ja) {
                        if (pos[c.b] >= k) continue;  // other side not placed yet
                        ia = item;
                        ib = tuple[c.b];
                    } else {
                        if (pos[c.a] >= k) continue;
                        ia = tuple[c.a];
                        ib = item;
                    }
                    if (image(c.ca, ia) != image(c.cb, ib)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                tuple[j] = item;
                self(self, k + 1);
            }
        };
        step(step, 0);
        return result;
    };

    auto vtuples = enumerate(false);
    auto etuples = enumerate(true);

    std::unordered_map<std::vector<std::size_t>, std::size_t, TupleHash> vindex;
    std::vector<std::string> vnames;
    for (const auto& t : vtuples) {
        vindex.emplace(t, vnames.size());
        vnames.push_back(tuple_name(comps, t, false));
    }
    std::vector<Graph::Edge> gedges;
    for (const auto& t : etuples) {
        std::vector<std::size_t> iv(n), tv(n);
        for (std::size_t j = 0; j < n; ++j) {
            iv[j] = comps[j].presentation().edge(t[j]).i;
            tv[j] = comps[j].presentation().edge(t[j]).t;
        }
        auto a = vindex.find(iv), b = vindex.find(tv);
        if (a == vindex.end() || b == vindex.end())
            throw InternalError("diagram_limit: edge tuple with missing endpoint tuple");
        gedges.push_back(Graph::Edge{tuple_name(comps, t, true), a->second, b->second});
    }
    Graph full = Graph::from_indices(std::move(vnames), std::move(gedges));
    Graph trimmed = trim_essential(full);
    Sft product(trimmed, name);

    // Projections read their component straight out of the tuple names; the
    // tuple lists give the indices without re-parsing.
    std::unordered_map<std::string, const std::vector<std::size_t>*> vtuple_of, etuple_of;
    for (std::size_t i = 0; i < vtuples.size(); ++i)
        vtuple_of.emplace(tuple_name(comps, vtuples[i], false), &vtuples[i]);
    for (std::size_t i = 0; i < etuples.size(); ++i)
        etuple_of.emplace(tuple_name(comps, etuples[i], true), &etuples[i]);

    DiagramLimit out;
    out.components = comps;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> vm(trimmed.num_vertices()), em(trimmed.num_edges());
        for (std::size_t v = 0; v < trimmed.num_vertices(); ++v)
            vm[v] = (*vtuple_of.at(trimmed.vertex_name(v)))[j];
        for (std::size_t e = 0; e < trimmed.num_edges(); ++e)
            em[e] = (*etuple_of.at(trimmed.edge(e).name))[j];
        out.projections.push_back(BlockCode::one_block(
            product, comps[j], GraphHom(trimmed, comps[j].presentation(), vm, em)));
    }
    out.product = std::move(product);
    return out;
}

FibreProduct fibre_product(const BlockCode& c1, const BlockCode& c2) {
    if (!c1.target().same_presentation(c2.target()))
        throw InputError("fibre_product: codes do not share a target");
    std::string name = "fib(" + c1.source().name() + "," + c2.source().name() + ")";
    DiagramLimit dl = diagram_limit({c1.source(), c2.source()}, {Constraint{0, c1, 1, c2}}, name);
    return FibreProduct{dl.product, dl.projections[0], dl.projections[1]};
}

NFoldFibre n_fold_fibre(const BlockCode& c, std::size_t N) {
    if (N == 0) throw InputError("n_fold_fibre: N must be positive");
    BlockCode c0 = c.recode_one_block();
    auto build = [&](std::size_t m) {
        std::vector<Sft> comps(m + 1, c0.source());
        std::vector<Constraint> cons;
        for (std::size_t j = 1; j <= m; ++j) cons.push_back(Constraint{0, c0, j, c0});
        return diagram_limit(comps, cons,
                             "Y_" + std::to_string(m) + "(" + c0.source().name() + ")");
    };
    DiagramLimit top = build(N);
    NFoldFibre out;
    out.y_n = top.product;
    out.y_prev = (N == 1) ? c0.source() : build(N - 1).product;
    const Graph& pg = top.product.presentation();
    const Graph& qg = out.y_prev.presentation();
    for (std::size_t drop = 0; drop <= N; ++drop) {
        std::vector<std::size_t> vm(pg.num_vertices()), em(pg.num_edges());
        auto reduced_name = [&](bool edges, std::size_t idx) {
            if (N == 1) {
                std::size_t keep = (drop == 0) ? 1 : 0;
                return edges ? c0.source().presentation().edge(
                                   top.projections[keep].hom().edge_image(idx)).name
                             : c0.source().presentation().vertex_name(
                                   top.projections[keep].hom().vertex_image(idx));
            }
            std::string s = "(";
            bool first = true;
            for (std::size_t j = 0; j <= N; ++j) {
                if (j == drop) continue;
                if (!first) s += ',';
                first = false;
                s += edges ? c0.source().presentation().edge(
                                 top.projections[j].hom().edge_image(idx)).name
                           : c0.source().presentation().vertex_name(
                                 top.projections[j].hom().vertex_image(idx));
            }
            s += ')';
            return s;
        };
        for (std::size_t v = 0; v < pg.num_vertices(); ++v) {
            auto iv = qg.vertex_index(reduced_name(false, v));
            if (!iv) throw InternalError("n_fold_fibre: deleted vertex tuple missing");
            vm[v] = *iv;
        }
        for (std::size_t e = 0; e < pg.num_edges(); ++e) {
            auto ie = qg.edge_index(reduced_name(true, e));
            if (!ie) throw InternalError("n_fold_fibre: deleted edge tuple missing");
            em[e] = *ie;
        }
        out.deltas.push_back(
            BlockCode::one_block(out.y_n, out.y_prev, GraphHom(pg, qg, vm, em)));
    }
    return out;
}

}  // namespace sfthom
