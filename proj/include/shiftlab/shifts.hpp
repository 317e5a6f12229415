#pragma once

// Pattern languages, eventually periodic configurations, the shift action, homoclinicity and
// joinability of patterns.

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "presentation.hpp"
#include "strip.hpp"

namespace shiftlab {

inline coord_t floor_mod(coord_t a, coord_t m) { return ((a % m) + m) % m; }

// ---------------------------------------------------------------------------------------------
// Languages

// Number of words of length n in L(X), d = 1.
inline bigint count_words(const ShiftPresentation& x, coord_t n) {
    const auto& dfa = x.language_dfa();
    std::vector<bigint> cur(dfa.size(), 0);
    cur[0] = 1;
    for (coord_t i = 0; i < n; ++i) {
        std::vector<bigint> nxt(dfa.size(), 0);
        for (std::size_t s = 0; s < dfa.size(); ++s) {
            if (cur[s] == 0) continue;
            for (Symbol a = 0; a < dfa.alphabet_size(); ++a)
                if (int t = dfa.next(static_cast<int>(s), a); t >= 0) nxt[static_cast<std::size_t>(t)] += cur[s];
        }
        cur.swap(nxt);
    }
    bigint total = 0;
    for (const auto& c : cur) total += c;
    return total;
}

inline bool in_language(const ShiftPresentation& x, const std::vector<Symbol>& w) {
    return x.language_dfa().run(w) >= 0;
}

namespace detail {

using DfaSet = std::vector<int>;

inline DfaSet dfa_step(const SubsetAutomaton& dfa, const DfaSet& s, std::optional<Symbol> a) {
    DfaSet out;
    for (int q : s) {
        for (Symbol b = 0; b < dfa.alphabet_size(); ++b) {
            if (a && *a != b) continue;
            if (int t = dfa.next(q, b); t >= 0) out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline void check_2d_box(const Shape& s) {
    require_input(s.is_box(), "d = 2 languages are available on rectangular boxes only");
}

}  // namespace detail

// |pi_shape(X)|. In d = 1 holes are handled by projecting from the convex hull; in d = 2 the
// shape must be a rectangle and the count is of locally admissible patterns.
inline bigint count_language(const ShiftPresentation& x, const Shape& shape) {
    require_input(shape.dim() == x.dim(), "shape dimension does not match the shift");
    if (shape.empty()) return 1;
    if (x.dim() == 2) {
        detail::check_2d_box(shape);
        const Point lo = shape.lower(), hi = shape.upper();
        return StripTransfer(x, hi[1] - lo[1] + 1).count(hi[0] - lo[0] + 1);
    }
    if (shape.is_interval()) return count_words(x, static_cast<coord_t>(shape.size()));
    const auto& dfa = x.language_dfa();
    const coord_t lo = shape.lower()[0], hi = shape.upper()[0];
    // Distinct projections = paths in the layered subset automaton where holes read any symbol.
    std::map<detail::DfaSet, bigint> layer{{{0}, 1}};
    for (coord_t p = lo; p <= hi; ++p) {
        const bool hole = !shape.contains(Point::of(p));
        std::map<detail::DfaSet, bigint> next;
        for (const auto& [set, cnt] : layer) {
            if (hole) {
                auto t = detail::dfa_step(dfa, set, std::nullopt);
                if (!t.empty()) next[t] += cnt;
            } else {
                for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
                    auto t = detail::dfa_step(dfa, set, a);
                    if (!t.empty()) next[t] += cnt;
                }
            }
        }
        layer.swap(next);
    }
    bigint total = 0;
    for (const auto& [set, cnt] : layer) total += cnt;
    return total;
}

// pi_shape(X) itself, refusing to produce more than `cap` patterns.
inline std::vector<Pattern> language(const ShiftPresentation& x, const Shape& shape, std::size_t cap = 1u << 20) {
    require_input(shape.dim() == x.dim(), "shape dimension does not match the shift");
    std::vector<Pattern> out;
    if (shape.empty()) {
        out.emplace_back(shape, std::vector<Symbol>{});
        return out;
    }
    if (x.dim() == 2) {
        detail::check_2d_box(shape);
        const Point lo = shape.lower(), hi = shape.upper();
        const StripTransfer t(x, hi[1] - lo[1] + 1);
        // Row-major enumeration agrees with the shape's canonical (lexicographic) order.
        for (auto& v : t.enumerate(hi[0] - lo[0] + 1, cap)) out.emplace_back(shape, std::move(v));
        return out;
    }
    if (count_language(x, shape) > cap) throw CapExceeded("pattern enumeration exceeds its cap");
    const auto& dfa = x.language_dfa();
    const coord_t lo = shape.lower()[0], hi = shape.upper()[0];
    std::vector<Symbol> vals;
    // Depth-first over the shape cells, tracking the set of DFA states.
    auto rec = [&](auto&& self, coord_t p, const detail::DfaSet& set) -> void {
        if (p > hi) {
            out.emplace_back(shape, vals);
            return;
        }
        if (!shape.contains(Point::of(p))) {
            auto t = detail::dfa_step(dfa, set, std::nullopt);
            if (!t.empty()) self(self, p + 1, t);
            return;
        }
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
            auto t = detail::dfa_step(dfa, set, a);
            if (t.empty()) continue;
            vals.push_back(a);
            self(self, p + 1, t);
            vals.pop_back();
        }
    };
    rec(rec, lo, detail::DfaSet{0});
    std::sort(out.begin(), out.end());
    return out;
}

// Classes of W(omega)^(F) on X, i.e. |pi_{-F + omega}(X)|.
inline bigint cylinder_entourage_classes(const ShiftPresentation& x, const Shape& omega, const Shape& f) {
    require_input(!omega.empty() && !f.empty(), "omega and F must be nonempty");
    return count_language(x, shape_product(reflect(f), omega));
}

// Symbols that actually occur in points of X.
inline std::vector<Symbol> occurring_symbols(const ShiftPresentation& x) {
    std::vector<Symbol> out;
    for (const auto& p : language(x, Shape::box(1, x.dim()))) out.push_back(p.values()[0]);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Configurations

// A periodic configuration: value at q is cells[(q0 mod p0) * p1 + (q1 mod p1)].
struct Background {
    std::array<coord_t, 2> period{1, 1};
    std::vector<Symbol> cells{0};

    Symbol at(const Point& q) const {
        const coord_t r = floor_mod(q[0], period[0]);
        const coord_t c = q.dim == 2 ? floor_mod(q[1], period[1]) : 0;
        return cells[static_cast<std::size_t>(r * period[1] + c)];
    }
    friend bool operator==(const Background&, const Background&) = default;
};

inline coord_t lcm_of(coord_t a, coord_t b) { return std::lcm(a, b); }

// Same bi-infinite configuration (possibly written with different periods).
inline bool same_background(int dim, const Background& a, const Background& b) {
    const coord_t l0 = lcm_of(a.period[0], b.period[0]);
    const coord_t l1 = dim == 2 ? lcm_of(a.period[1], b.period[1]) : 1;
    for (coord_t r = 0; r < l0; ++r)
        for (coord_t c = 0; c < l1; ++c) {
            const Point q = dim == 1 ? Point::of(r) : Point::of(r, c);
            if (a.at(q) != b.at(q)) return false;
        }
    return true;
}

// An eventually periodic configuration: a periodic background, in d = 1 optionally replaced by a
// second periodic background from `split` on, overwritten by a finite patch.
class PointedConfiguration {
public:
    // d = 1: the word w repeated, with w[0] at position 0.
    static PointedConfiguration periodic(const std::vector<Symbol>& w) {
        require_input(!w.empty(), "periodic word must be nonempty");
        PointedConfiguration x(1);
        x.left_ = Background{{static_cast<coord_t>(w.size()), 1}, w};
        return x;
    }
    // d = 2: fundamental domain p0 x p1 (row-major) anchored at the origin.
    static PointedConfiguration periodic2d(coord_t p0, coord_t p1, const std::vector<Symbol>& cells) {
        require_input(p0 >= 1 && p1 >= 1 && static_cast<coord_t>(cells.size()) == p0 * p1,
                      "fundamental domain does not match its periods");
        PointedConfiguration x(2);
        x.left_ = Background{{p0, p1}, cells};
        return x;
    }
    static PointedConfiguration constant(int dim, Symbol s) {
        PointedConfiguration x(dim);
        x.left_ = Background{{1, 1}, {s}};
        return x;
    }
    // d = 1: `left` repeated on (-inf, split), `right` repeated on [split, inf), both with absolute phase.
    static PointedConfiguration spliced(const std::vector<Symbol>& left, coord_t split, const std::vector<Symbol>& right) {
        auto x = periodic(left);
        require_input(!right.empty(), "periodic word must be nonempty");
        x.right_ = Background{{static_cast<coord_t>(right.size()), 1}, right};
        x.split_ = split;
        x.normalize();
        return x;
    }

    PointedConfiguration with_patch(const Pattern& p) const {
        require_input(p.dim() == dim_, "patch dimension does not match");
        PointedConfiguration x = *this;
        for (std::size_t i = 0; i < p.size(); ++i) x.patch_[p.shape()[i]] = p.values()[i];
        x.normalize();
        return x;
    }

    int dim() const { return dim_; }
    const Background& left() const { return left_; }
    const Background& right() const { return right_ ? *right_ : left_; }
    bool is_spliced() const { return right_.has_value(); }
    coord_t split() const { return split_; }
    const std::map<Point, Symbol>& patch_cells() const { return patch_; }
    Pattern patch() const {
        std::vector<Point> pts;
        std::vector<Symbol> vals;
        for (const auto& [p, s] : patch_) {
            pts.push_back(p);
            vals.push_back(s);
        }
        return Pattern(Shape(dim_, std::move(pts)), std::move(vals));
    }

    Symbol background_at(const Point& q) const {
        if (right_ && q[0] >= split_) return right_->at(q);
        return left_.at(q);
    }
    Symbol at(const Point& q) const {
        require_input(q.dim == dim_, "point dimension does not match configuration");
        if (auto it = patch_.find(q); it != patch_.end()) return it->second;
        return background_at(q);
    }
    Symbol at(coord_t i) const { return at(Point::of(i)); }

    // d = 1: smallest interval outside which the configuration is the left / right background.
    std::optional<std::pair<coord_t, coord_t>> core() const {
        std::optional<std::pair<coord_t, coord_t>> r;
        auto add = [&](coord_t a) {
            if (!r)
                r = std::make_pair(a, a);
            else
                r = std::make_pair(std::min(r->first, a), std::max(r->second, a));
        };
        for (const auto& [p, s] : patch_) add(p[0]);
        if (right_) {
            add(split_ - 1);
            add(split_);
        }
        return r;
    }

    // Values on [lo, hi] (d = 1).
    std::vector<Symbol> window(coord_t lo, coord_t hi) const {
        std::vector<Symbol> w;
        for (coord_t i = lo; i <= hi; ++i) w.push_back(at(i));
        return w;
    }

    nlohmann::json to_json(const Alphabet& a) const {
        auto word = [&](const Background& b) {
            std::vector<Symbol> v(b.cells);
            return a.format(v);
        };
        nlohmann::ordered_json j;
        j["period"] = dim_ == 1 ? nlohmann::json(left_.period[0]) : nlohmann::json({left_.period[0], left_.period[1]});
        j["background"] = word(left_);
        if (right_) {
            j["split"] = split_;
            j["right_background"] = word(*right_);
        }
        j["patch"] = patch().to_json(a);
        return j;
    }

    friend bool operator==(const PointedConfiguration& a, const PointedConfiguration& b);

private:
    explicit PointedConfiguration(int dim) : dim_(dim) { require_input(dim == 1 || dim == 2, "bad dimension"); }

    void normalize() {
        if (right_ && same_background(dim_, left_, *right_)) right_.reset();
        for (auto it = patch_.begin(); it != patch_.end();) {
            if (background_at(it->first) == it->second)
                it = patch_.erase(it);
            else
                ++it;
        }
    }

    friend PointedConfiguration shift_apply(const Point& g, const PointedConfiguration& x);

    int dim_;
    Background left_;
    std::optional<Background> right_;
    coord_t split_ = 0;
    std::map<Point, Symbol> patch_;
};

// (g x)(h) = x(h - g)
inline PointedConfiguration shift_apply(const Point& g, const PointedConfiguration& x) {
    require_input(g.dim == x.dim(), "dimension mismatch in shift_apply");
    auto move_bg = [&](const Background& b) {
        Background out = b;
        for (coord_t r = 0; r < b.period[0]; ++r)
            for (coord_t c = 0; c < b.period[1]; ++c) {
                const Point q = x.dim() == 1 ? Point::of(r) : Point::of(r, c);
                out.cells[static_cast<std::size_t>(r * b.period[1] + c)] = b.at(q - g);
            }
        return out;
    };
    PointedConfiguration y = x;
    y.left_ = move_bg(x.left_);
    if (x.right_) y.right_ = move_bg(*x.right_);
    y.split_ = x.split_ + g[0];
    y.patch_.clear();
    for (const auto& [p, s] : x.patch_) y.patch_[p + g] = s;
    return y;
}

namespace detail {

// d = 1 interval outside of which both configurations follow their left / right backgrounds.
inline std::pair<coord_t, coord_t> joint_core(const PointedConfiguration& x, const PointedConfiguration& y) {
    auto a = x.core(), b = y.core();
    if (!a && !b) return {0, -1};
    if (!a) return *b;
    if (!b) return *a;
    return {std::min(a->first, b->first), std::max(a->second, b->second)};
}

inline std::pair<Point, Point> patch_bounds_2d(const PointedConfiguration& x, const PointedConfiguration& y) {
    Point lo = Point::of(0, 0), hi = Point::of(-1, -1);
    bool first = true;
    for (const auto* c : {&x, &y})
        for (const auto& [p, s] : c->patch_cells()) {
            if (first) {
                lo = hi = p;
                first = false;
            }
            for (int i = 0; i < 2; ++i) {
                lo.c[static_cast<std::size_t>(i)] = std::min(lo[i], p[i]);
                hi.c[static_cast<std::size_t>(i)] = std::max(hi[i], p[i]);
            }
        }
    return {lo, hi};
}

}  // namespace detail

// Positions where x and y differ, or nullopt when they differ at infinitely many positions.
inline std::optional<Shape> difference_set(const PointedConfiguration& x, const PointedConfiguration& y) {
    require_input(x.dim() == y.dim(), "dimension mismatch");
    if (!same_background(x.dim(), x.left(), y.left()) || !same_background(x.dim(), x.right(), y.right()))
        return std::nullopt;
    std::vector<Point> diff;
    if (x.dim() == 1) {
        const auto [lo, hi] = detail::joint_core(x, y);
        for (coord_t i = lo; i <= hi; ++i)
            if (x.at(i) != y.at(i)) diff.push_back(Point::of(i));
    } else {
        std::set<Point> cand;
        for (const auto& [p, s] : x.patch_cells()) cand.insert(p);
        for (const auto& [p, s] : y.patch_cells()) cand.insert(p);
        for (const auto& p : cand)
            if (x.at(p) != y.at(p)) diff.push_back(p);
    }
    return Shape(x.dim(), std::move(diff));
}

inline bool operator==(const PointedConfiguration& a, const PointedConfiguration& b) {
    auto d = difference_set(a, b);
    return d && d->empty();
}

struct HomoclinicResult {
    bool homoclinic = false;
    std::optional<Shape> witness;  // the (finite) set where the configurations differ
};

inline HomoclinicResult homoclinic(const PointedConfiguration& x, const PointedConfiguration& y) {
    auto d = difference_set(x, y);
    return {d.has_value(), d};
}

// ---------------------------------------------------------------------------------------------
// Membership

namespace detail {

inline StateSet read_word(const LabeledGraph& g, StateSet s, const std::vector<Symbol>& w) {
    for (Symbol a : w) {
        if (s.empty()) break;
        s = step(g, s, a);
    }
    return s;
}

inline bool member_1d(const ShiftPresentation& x, const PointedConfiguration& c) {
    const auto& g = x.graph();
    const coord_t pl = c.left().period[0], pr = c.right().period[0];
    auto [lo, hi] = c.core().value_or(std::make_pair<coord_t, coord_t>(0, -1));
    const coord_t s = lo - floor_mod(lo, pl);
    coord_t e = hi + 1;
    e += floor_mod(-e, pr);
    // Vertices at which a left-infinite path labeled ...LLL can end.
    std::vector<Symbol> lw(c.left().cells);
    StateSet t = all_vertices(g);
    while (true) {
        StateSet n = read_word(g, t, lw);
        if (n == t) break;
        t = std::move(n);
        if (t.empty()) return false;
    }
    t = read_word(g, t, c.window(s, e - 1));
    std::vector<Symbol> rw(c.right().cells);
    std::set<StateSet> seen;
    while (!t.empty()) {
        if (!seen.insert(t).second) return true;
        t = read_word(g, t, rw);
    }
    return false;
}

inline bool occurs_at(const ShiftPresentation& x, const Pattern& f, const Point& anchor,
                      const std::function<Symbol(const Point&)>& val) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (val(anchor + f.shape()[i]) != f.values()[i]) return false;
    (void)x;
    return true;
}

inline bool member_2d(const ShiftPresentation& x, const PointedConfiguration& c) {
    const Background& bg = c.left();
    std::function<Symbol(const Point&)> bgv = [&](const Point& q) { return bg.at(q); };
    for (const auto& f : x.forbidden())
        for (coord_t r = 0; r < bg.period[0]; ++r)
            for (coord_t k = 0; k < bg.period[1]; ++k)
                if (occurs_at(x, f, Point::of(r, k), bgv)) return false;
    if (c.patch_cells().empty()) return true;
    auto [plo, phi] = patch_bounds_2d(c, c);
    std::function<Symbol(const Point&)> val = [&](const Point& q) { return c.at(q); };
    for (const auto& f : x.forbidden()) {
        const Point fu = f.shape().upper();
        for (coord_t r = plo[0] - fu[0]; r <= phi[0]; ++r)
            for (coord_t k = plo[1] - fu[1]; k <= phi[1]; ++k)
                if (occurs_at(x, f, Point::of(r, k), val)) return false;
    }
    return true;
}

}  // namespace detail

inline bool contains(const ShiftPresentation& x, const PointedConfiguration& c) {
    require_input(x.dim() == c.dim(), "configuration dimension does not match the shift");
    for (const auto* bg : {&c.left(), &c.right()})
        for (Symbol s : bg->cells) require_input(s >= 0 && s < x.alphabet().size(), "symbol outside alphabet");
    for (const auto& [p, s] : c.patch_cells()) require_input(s >= 0 && s < x.alphabet().size(), "symbol outside alphabet");
    return x.dim() == 1 ? detail::member_1d(x, c) : detail::member_2d(x, c);
}

inline void require_member(const ShiftPresentation& x, const PointedConfiguration& c) {
    require_input(contains(x, c), "configuration does not lie in " + (x.name().empty() ? std::string("the shift") : x.name()));
}

// ---------------------------------------------------------------------------------------------
// Joinability (d = 1)

// A word on [lo, hi] in L(X) agreeing with the given cell constraints, if one exists.
inline std::optional<std::vector<Symbol>> extend_partial(const ShiftPresentation& x, coord_t lo, coord_t hi,
                                                         const std::map<coord_t, Symbol>& fixed) {
    const auto& dfa = x.language_dfa();
    if (hi < lo) return std::vector<Symbol>{};
    const auto len = static_cast<std::size_t>(hi - lo + 1);
    // layer[i][state] = (previous state, symbol) for some word of length i + 1 ending in state.
    std::vector<std::map<int, std::pair<int, Symbol>>> layer(len);
    std::map<int, std::pair<int, Symbol>> start{{0, {-1, -1}}};
    const std::map<int, std::pair<int, Symbol>>* prev = &start;
    for (std::size_t i = 0; i < len; ++i) {
        const auto pos = lo + static_cast<coord_t>(i);
        auto f = fixed.find(pos);
        for (const auto& [s, unused] : *prev) {
            for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
                if (f != fixed.end() && f->second != a) continue;
                if (int t = dfa.next(s, a); t >= 0) layer[i].emplace(t, std::make_pair(s, a));
            }
        }
        if (layer[i].empty()) return std::nullopt;
        prev = &layer[i];
    }
    std::vector<Symbol> w(len);
    int s = layer[len - 1].begin()->first;
    for (std::size_t i = len; i-- > 0;) {
        const auto [p, a] = layer[i].at(s);
        w[i] = a;
        s = p;
    }
    return w;
}

// Some x in X with x|_shape(p_i) = p_i for all i; the result is x on the hull of the shapes.
inline std::optional<Pattern> join_patterns(const ShiftPresentation& x, const std::vector<Pattern>& pieces) {
    require_input(x.dim() == 1, "joinability is implemented for d = 1");
    std::map<coord_t, Symbol> fixed;
    for (const auto& p : pieces)
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto [it, fresh] = fixed.emplace(p.shape()[i][0], p.values()[i]);
            if (!fresh && it->second != p.values()[i]) return std::nullopt;
        }
    if (fixed.empty()) return Pattern(Shape(1), {});
    const coord_t lo = fixed.begin()->first, hi = fixed.rbegin()->first;
    auto w = extend_partial(x, lo, hi, fixed);
    if (!w) return std::nullopt;
    return Pattern::word(lo, *w);
}

inline bool joinable(const ShiftPresentation& x, const Pattern& p, const Pattern& q) {
    require_input(x.dim() == 1, "joinable is implemented for d = 1");
    require_input(disjoint(p.shape(), q.shape()), "joinable needs disjoint shapes");
    return join_patterns(x, {p, q}).has_value();
}

// ---------------------------------------------------------------------------------------------
// Expansiveness

// W({0}): configurations are close when they agree at the origin.
struct ExpansivenessEntourage {
    Shape window = Shape::of({0});
};

inline ExpansivenessEntourage expansiveness_entourage(const ShiftPresentation& x) {
    return ExpansivenessEntourage{Shape::box(1, x.dim())};
}

// Some g with (g x)(0) != (g y)(0), i.e. x(-g) != y(-g); nullopt iff x == y.
inline std::optional<Point> separating_element(const PointedConfiguration& x, const PointedConfiguration& y) {
    require_input(x.dim() == y.dim(), "dimension mismatch");
    if (x.dim() == 1) {
        coord_t per = 1;
        for (const auto* c : {&x, &y}) per = lcm_of(per, lcm_of(c->left().period[0], c->right().period[0]));
        auto [lo, hi] = detail::joint_core(x, y);
        if (hi < lo) lo = hi = 0;
        for (coord_t i = lo - per; i <= hi + per; ++i)
            if (x.at(i) != y.at(i)) return Point::of(-i);
        return std::nullopt;
    }
    coord_t p0 = lcm_of(x.left().period[0], y.left().period[0]);
    coord_t p1 = lcm_of(x.left().period[1], y.left().period[1]);
    auto [lo, hi] = detail::patch_bounds_2d(x, y);
    if (hi[0] < lo[0]) lo = hi = Point::of(0, 0);
    for (coord_t r = lo[0] - p0; r <= hi[0] + p0; ++r)
        for (coord_t c = lo[1] - p1; c <= hi[1] + p1; ++c)
            if (x.at(Point::of(r, c)) != y.at(Point::of(r, c))) return Point::of(-r, -c);
    return std::nullopt;
}

// ---------------------------------------------------------------------------------------------
// Language comparison (d = 1)

// Shortest word (lexicographically first among shortest) accepted by `a` but not by `b`, both
// automata reading from their state 0.
inline std::optional<std::vector<Symbol>> automaton_difference(const SubsetAutomaton& a, const SubsetAutomaton& b) {
    require_input(a.alphabet_size() == b.alphabet_size(), "alphabet mismatch");
    std::map<std::pair<int, int>, std::pair<std::pair<int, int>, Symbol>> parent;
    std::vector<std::pair<int, int>> queue{{0, 0}};
    parent[{0, 0}] = {{-1, -1}, -1};
    auto word = [&](std::pair<int, int> s) {
        std::vector<Symbol> w;
        while (parent.at(s).second >= 0) {
            w.push_back(parent.at(s).second);
            s = parent.at(s).first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto cur = queue[head];
        for (Symbol c = 0; c < a.alphabet_size(); ++c) {
            const int sa = a.next(cur.first, c);
            if (sa < 0) continue;
            const int sb = b.next(cur.second, c);
            if (sb < 0) {
                auto w = word(cur);
                w.push_back(c);
                return w;
            }
            if (parent.emplace(std::make_pair(sa, sb), std::make_pair(cur, c)).second) queue.emplace_back(sa, sb);
        }
    }
    return std::nullopt;
}

// Shortest word of L(x) missing from L(y).
inline std::optional<std::vector<Symbol>> language_difference(const ShiftPresentation& x, const ShiftPresentation& y) {
    require_input(x.alphabet() == y.alphabet(), "shifts use different alphabets");
    return automaton_difference(x.language_dfa(), y.language_dfa());
}

inline bool same_language(const ShiftPresentation& x, const ShiftPresentation& y) {
    return !language_difference(x, y) && !language_difference(y, x);
}

}  // namespace shiftlab
