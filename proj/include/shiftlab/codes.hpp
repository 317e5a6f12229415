#pragma once

// Sliding block codes between d = 1 shifts: application, composition, images and the decision
// procedures for surjectivity, injectivity and pre-injectivity.

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "entropy.hpp"
#include "irreducibility.hpp"
#include "shifts.hpp"

namespace shiftlab {

using ShiftPtr = std::shared_ptr<const ShiftPresentation>;

// The domain's higher-block graph through which a code is read: an edge at time i carries the
// domain window x[i+lo .. i+hi], its last cell x(i+hi) and the output y(i).
struct BlockGraph {
    LabeledGraph out_graph;          // labels = output symbols
    std::vector<Symbol> last_input;  // per edge (same order as out_graph edges)
    coord_t lead = 0;                // hi of the neighborhood hull
};

class BlockCode {
public:
    using Rule = std::map<std::vector<Symbol>, Symbol>;

    BlockCode(Shape neighborhood, Rule rule, ShiftPtr domain, ShiftPtr codomain, std::string name = "")
        : n_(std::move(neighborhood)), rule_(std::move(rule)), dom_(std::move(domain)), cod_(std::move(codomain)),
          name_(std::move(name)) {
        require_input(dom_ && cod_, "code needs a domain and a codomain");
        require_input(dom_->dim() == 1 && cod_->dim() == 1, "block codes are supported for d = 1");
        require_input(!n_.empty() && n_.dim() == 1, "neighborhood must be a nonempty shape in Z");
        lo_ = n_.lower()[0];
        hi_ = n_.upper()[0];
        for (const auto& [k, v] : rule_) {
            require_input(k.size() == n_.size(), "rule key does not match the neighborhood");
            require_input(v >= 0 && v < cod_->alphabet().size(), "rule output outside the codomain alphabet");
        }
        for (const auto& p : language(*dom_, n_))
            if (!rule_.count(p.values()))
                throw InputError("rule is not total: no image for " + dom_->alphabet().format(p.values()));
        build_block_graph();
        image_ = std::make_shared<const ShiftPresentation>(
            ShiftPresentation::sofic(cod_->alphabet(), block_.out_graph, name_.empty() ? "image" : name_ + "-image"));
        if (auto w = language_difference(*image_, *cod_))
            throw InputError("image is not contained in the codomain: " + cod_->alphabet().format(*w));
    }

    static BlockCode from_function(Shape neighborhood, ShiftPtr domain, ShiftPtr codomain,
                                   const std::function<Symbol(const std::vector<Symbol>&)>& f, std::string name = "") {
        Rule rule;
        for (const auto& p : language(*domain, neighborhood)) rule[p.values()] = f(p.values());
        return BlockCode(std::move(neighborhood), std::move(rule), std::move(domain), std::move(codomain), std::move(name));
    }

    // Elementary rule on the full 2-shift, neighborhood {-1, 0, 1}.
    static BlockCode elementary(int number, ShiftPtr full2) {
        require_input(number >= 0 && number < 256, "elementary rule number must be in 0..255");
        return from_function(Shape::interval(-1, 1), full2, full2, [number](const std::vector<Symbol>& w) {
            return static_cast<Symbol>((number >> (w[0] * 4 + w[1] * 2 + w[2])) & 1);
        }, "eca" + std::to_string(number));
    }

    const Shape& neighborhood() const { return n_; }
    coord_t lo() const { return lo_; }
    coord_t hi() const { return hi_; }
    const Rule& rule() const { return rule_; }
    const ShiftPresentation& domain() const { return *dom_; }
    const ShiftPresentation& codomain() const { return *cod_; }
    ShiftPtr domain_ptr() const { return dom_; }
    ShiftPtr codomain_ptr() const { return cod_; }
    const std::string& name() const { return name_; }
    const BlockGraph& block_graph() const { return block_; }
    // f(X), as a sofic presentation.
    const ShiftPresentation& image() const { return *image_; }

    // Output for the domain word on the hull [lo, hi] of the neighborhood.
    Symbol eval_hull(const std::vector<Symbol>& window) const {
        std::vector<Symbol> key;
        for (const auto& p : n_) key.push_back(window[static_cast<std::size_t>(p[0] - lo_)]);
        auto it = rule_.find(key);
        if (it == rule_.end()) throw InputError("rule has no image for " + dom_->alphabet().format(key));
        return it->second;
    }

private:
    void build_block_graph() {
        const auto& g = dom_->graph();
        const coord_t w = hi_ - lo_ + 1;
        // Vertices: paths of w - 1 edges in g (plain vertices when w == 1).
        std::map<std::vector<int>, int> id;
        std::vector<std::vector<int>> paths;
        auto intern = [&](const std::vector<int>& p) {
            auto [it, fresh] = id.emplace(p, static_cast<int>(paths.size()));
            if (fresh) paths.push_back(p);
            return it->second;
        };
        // Enumerate paths of w edges; each is a block-graph edge between its prefix and suffix.
        std::vector<std::tuple<int, int, Symbol, Symbol>> edges;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int v, int start) -> void {
            if (static_cast<coord_t>(cur.size()) == w) {
                std::vector<Symbol> word;
                for (int e : cur) word.push_back(g.edge(e).label);
                std::vector<int> pre(cur.begin(), cur.end() - 1), suf(cur.begin() + 1, cur.end());
                if (w == 1) {
                    pre = {-1 - start};
                    suf = {-1 - g.edge(cur[0]).to};
                }
                const int a = intern(pre), b = intern(suf);
                edges.emplace_back(a, b, eval_hull(word), word.back());
                return;
            }
            for (int e : g.out(v)) {
                cur.push_back(e);
                self(self, g.edge(e).to, start);
                cur.pop_back();
            }
        };
        for (int v = 0; v < g.vertex_count(); ++v) rec(rec, v, v);
        if (paths.size() > 2000000) throw CapExceeded("block graph too large");
        block_.out_graph = LabeledGraph(static_cast<int>(paths.size()), cod_->alphabet().size());
        block_.lead = hi_;
        for (const auto& [a, b, out, last] : edges) {
            block_.out_graph.add_edge(a, b, out);
            block_.last_input.push_back(last);
        }
    }

    Shape n_;
    Rule rule_;
    ShiftPtr dom_, cod_;
    std::string name_;
    coord_t lo_ = 0, hi_ = 0;
    BlockGraph block_;
    std::shared_ptr<const ShiftPresentation> image_;
};

// ---------------------------------------------------------------------------------------------
// Code file format:
//   format code-v1
//   neighborhood <ints>
//   domain <shift-file>      (relative to the code file)
//   codomain <shift-file>
//   map <pattern> -> <symbol>   (one per admissible neighborhood pattern)
//   eca <rule number>           (instead of map lines; neighborhood -1 0 1 on binary shifts)

inline BlockCode parse_code(std::istream& in, const std::filesystem::path& base_dir, const std::string& name = "") {
    std::string line, format;
    std::optional<Shape> nb;
    std::optional<std::filesystem::path> dom_path, cod_path;
    std::vector<std::pair<std::string, std::string>> maps;
    std::optional<int> eca;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::string rest;
        std::getline(ls, rest);
        const auto b = rest.find_first_not_of(" \t");
        rest = b == std::string::npos ? "" : rest.substr(b);
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
        if (head == "format") {
            format = rest;
        } else if (head == "neighborhood") {
            std::istringstream ns(rest);
            std::vector<coord_t> pts;
            coord_t v;
            while (ns >> v) pts.push_back(v);
            require_input(ns.eof(), "bad neighborhood line: " + rest);
            nb = Shape::of(pts);
        } else if (head == "domain") {
            dom_path = base_dir / rest;
        } else if (head == "codomain") {
            cod_path = base_dir / rest;
        } else if (head == "map") {
            const auto arrow = rest.find("->");
            require_input(arrow != std::string::npos, "map line needs '->': " + rest);
            maps.emplace_back(rest.substr(0, arrow), rest.substr(arrow + 2));
        } else if (head == "eca") {
            eca = std::stoi(rest);
        } else {
            throw InputError("unknown directive in code file: " + head);
        }
    }
    require_input(format == "code-v1", "unknown or missing format line (expected code-v1)");
    require_input(dom_path && cod_path, "code file needs domain and codomain lines");
    auto dom = std::make_shared<const ShiftPresentation>(load_shift(*dom_path));
    auto cod = *cod_path == *dom_path ? dom : std::make_shared<const ShiftPresentation>(load_shift(*cod_path));
    if (eca) {
        require_input(maps.empty(), "eca and map lines cannot be mixed");
        require_input(!nb || *nb == Shape::interval(-1, 1), "eca codes use the neighborhood -1 0 1");
        require_input(dom->alphabet().size() == 2 && cod->alphabet().size() == 2, "eca codes need binary shifts");
        auto f = BlockCode::elementary(*eca, dom);
        return BlockCode(f.neighborhood(), f.rule(), dom, cod, name);
    }
    require_input(nb.has_value(), "code file needs a neighborhood line");
    BlockCode::Rule rule;
    for (const auto& [k, v] : maps) {
        auto key = dom->alphabet().parse_full_word(k);
        auto val = cod->alphabet().parse_full_word(v);
        require_input(val.size() == 1, "map output must be a single symbol: " + v);
        require_input(rule.emplace(key, val[0]).second, "duplicate map line for " + k);
    }
    return BlockCode(*nb, std::move(rule), dom, cod, name);
}

inline BlockCode load_code(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open code file " + path.string());
    return parse_code(in, path.parent_path(), path.stem().string());
}

// ---------------------------------------------------------------------------------------------
// Application and composition

// y(i) = rule(x|_{i + N}); eventually periodic structure is preserved.
inline PointedConfiguration apply(const BlockCode& f, const PointedConfiguration& x) {
    require_input(x.dim() == 1, "block codes act on d = 1 configurations");
    require_member(f.domain(), x);
    auto out_at = [&](coord_t i) { return f.eval_hull(x.window(i + f.lo(), i + f.hi())); };
    auto bg_image = [&](const Background& b) {
        const auto bx = PointedConfiguration::periodic(b.cells);
        std::vector<Symbol> w;
        for (coord_t i = 0; i < b.period[0]; ++i) w.push_back(f.eval_hull(bx.window(i + f.lo(), i + f.hi())));
        return w;
    };
    const auto lw = bg_image(x.left());
    PointedConfiguration y = x.is_spliced() ? PointedConfiguration::spliced(lw, x.split(), bg_image(x.right()))
                                            : PointedConfiguration::periodic(lw);
    if (auto c = x.core()) {
        // Outputs whose window touches the core; everything else follows the backgrounds.
        const coord_t a = c->first - f.hi(), b = c->second - f.lo();
        std::vector<Symbol> vals;
        for (coord_t i = a; i <= b; ++i) vals.push_back(out_at(i));
        y = y.with_patch(Pattern::word(a, vals));
    }
    return y;
}

// f after g, defined on the domain of g.
inline BlockCode compose(const BlockCode& f, const BlockCode& g) {
    require_input(f.domain().alphabet() == g.codomain().alphabet() && same_language(f.domain(), g.codomain()),
                  "codomain of the inner code differs from the domain of the outer code");
    const Shape nb = shape_product(f.neighborhood(), g.neighborhood());
    const coord_t lo = nb.lower()[0], hi = nb.upper()[0];
    BlockCode::Rule rule;
    for (const auto& p : language(g.domain(), Shape::interval(lo, hi))) {
        const auto& w = p.values();
        // y(j) = g(x|j + N_g) for j in the hull of N_f.
        std::vector<Symbol> y;
        for (coord_t j = f.lo(); j <= f.hi(); ++j) {
            std::vector<Symbol> win(w.begin() + (j + g.lo() - lo), w.begin() + (j + g.hi() - lo + 1));
            y.push_back(g.eval_hull(win));
        }
        std::vector<Symbol> key;
        for (const auto& q : nb) key.push_back(w[static_cast<std::size_t>(q[0] - lo)]);
        rule[key] = f.eval_hull(y);
    }
    const std::string name = f.name().empty() || g.name().empty() ? "" : f.name() + "*" + g.name();
    return BlockCode(nb, std::move(rule), g.domain_ptr(), f.codomain_ptr(), name);
}

inline const ShiftPresentation& image_presentation(const BlockCode& f) { return f.image(); }

// ---------------------------------------------------------------------------------------------
// Decision procedures

struct SurjectivityResult {
    bool surjective = false;
    std::optional<std::vector<Symbol>> missing_word;  // shortest word of L(codomain) \ L(image)
};

inline SurjectivityResult is_surjective(const BlockCode& f) {
    auto w = language_difference(f.codomain(), f.image());
    return {!w.has_value(), w};
}

// Two distinct domain points with the same image.
struct CollisionPair {
    PointedConfiguration x, y;
};

namespace detail {

// Pairs of block-graph edges with equal outputs.
struct PairGraph {
    int m = 0;               // block-graph vertex count; pair vertex = s * m + t
    LabeledGraph g;          // label 1 = the last input symbols differ
    std::vector<std::pair<int, int>> origin;  // per pair edge: (block edge of x, block edge of y)
};

inline PairGraph pair_graph(const BlockCode& f) {
    const auto& bg = f.block_graph();
    const auto& og = bg.out_graph;
    PairGraph p;
    p.m = og.vertex_count();
    const auto mm = static_cast<std::size_t>(p.m) * static_cast<std::size_t>(p.m);
    if (mm > 4000000) throw CapExceeded("pair graph too large");
    p.g = LabeledGraph(static_cast<int>(mm), 2);
    for (int s = 0; s < p.m; ++s)
        for (int t = 0; t < p.m; ++t)
            for (int e1 : og.out(s))
                for (int e2 : og.out(t)) {
                    if (og.edge(e1).label != og.edge(e2).label) continue;
                    const int differ = bg.last_input[static_cast<std::size_t>(e1)] != bg.last_input[static_cast<std::size_t>(e2)];
                    p.g.add_edge(s * p.m + t, og.edge(e1).to * p.m + og.edge(e2).to, differ);
                    p.origin.emplace_back(e1, e2);
                }
    return p;
}

// Vertices lying on a cycle of the subgraph given by the edge filter.
inline std::vector<bool> on_cycle(const LabeledGraph& g, const std::vector<bool>& edge_ok) {
    LabeledGraph h(g.vertex_count(), g.alphabet_size());
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        if (edge_ok[i]) h.add_edge(g.edges()[i].from, g.edges()[i].to, g.edges()[i].label);
    const auto c = strongly_connected(h);
    const auto nt = nontrivial_components(h, c);
    std::vector<bool> out(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) out[static_cast<std::size_t>(v)] = nt[static_cast<std::size_t>(c.comp[static_cast<std::size_t>(v)])];
    return out;
}

// BFS over allowed edges from the sources to a vertex satisfying `target`. The edges come back in
// chronological order in both directions: backward searches return the path from the target.
inline std::optional<std::vector<int>> edge_path(const LabeledGraph& g, const std::vector<bool>& edge_ok,
                                                 const std::vector<int>& sources,
                                                 const std::function<bool(int)>& target, bool backward = false) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> via(n, -2);
    std::queue<int> q;
    for (int s : sources) {
        if (via[static_cast<std::size_t>(s)] != -2) continue;
        via[static_cast<std::size_t>(s)] = -1;
        q.push(s);
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        if (target(v)) {
            std::vector<int> path;
            for (int u = v; via[static_cast<std::size_t>(u)] >= 0;) {
                const int e = via[static_cast<std::size_t>(u)];
                path.push_back(e);
                u = backward ? g.edge(e).to : g.edge(e).from;
            }
            if (!backward) std::reverse(path.begin(), path.end());
            return path;
        }
        for (int e : backward ? g.in(v) : g.out(v)) {
            if (!edge_ok[static_cast<std::size_t>(e)]) continue;
            const int w = backward ? g.edge(e).from : g.edge(e).to;
            if (via[static_cast<std::size_t>(w)] != -2) continue;
            via[static_cast<std::size_t>(w)] = e;
            q.push(w);
        }
    }
    return std::nullopt;
}

// Path from `v` (forward or backward) to a cycle vertex, preferring vertices with a loop so
// witnesses get constant tails when possible.
inline std::vector<int> path_to_cycle(const LabeledGraph& g, const std::vector<bool>& edge_ok, int v,
                                      const std::vector<bool>& cyc, bool backward) {
    auto looped = [&](int u) {
        for (int e : g.out(u))
            if (edge_ok[static_cast<std::size_t>(e)] && g.edge(e).to == u) return true;
        return false;
    };
    if (auto p = edge_path(g, edge_ok, {v}, looped, backward)) return *p;
    return *edge_path(g, edge_ok, {v}, [&](int u) { return static_cast<bool>(cyc[static_cast<std::size_t>(u)]); },
                      backward);
}

// A cycle through v using allowed edges.
inline std::vector<int> cycle_through(const LabeledGraph& g, const std::vector<bool>& edge_ok, int v) {
    for (int e : g.out(v))
        if (edge_ok[static_cast<std::size_t>(e)] && g.edge(e).to == v) return {e};
    for (int e : g.out(v)) {
        if (!edge_ok[static_cast<std::size_t>(e)]) continue;
        const int w = g.edge(e).to;
        auto rest = edge_path(g, edge_ok, {w}, [v](int u) { return u == v; });
        if (rest) {
            std::vector<int> c{e};
            c.insert(c.end(), rest->begin(), rest->end());
            return c;
        }
    }
    throw std::logic_error("vertex is not on a cycle");
}

// Turn pair-graph edge sequences (left cycle, middle, right cycle) into two configurations.
inline CollisionPair realize(const BlockCode& f, const PairGraph& p, const std::vector<int>& left_cycle,
                             const std::vector<int>& middle, const std::vector<int>& right_cycle) {
    const auto& bg = f.block_graph();
    auto labels = [&](const std::vector<int>& es, int side) {
        std::vector<Symbol> w;
        for (int e : es) {
            const auto [a, b] = p.origin[static_cast<std::size_t>(e)];
            w.push_back(bg.last_input[static_cast<std::size_t>(side == 0 ? a : b)]);
        }
        return w;
    };
    const auto mid = static_cast<coord_t>(middle.size());
    auto build = [&](int side) {
        const auto lw = labels(left_cycle, side), rw0 = labels(right_cycle, side);
        // Right background has period |rw0| with rw0[0] at time mid.
        const auto pr = static_cast<coord_t>(rw0.size());
        std::vector<Symbol> rw(rw0.size());
        for (coord_t k = 0; k < pr; ++k) rw[static_cast<std::size_t>(floor_mod(mid + k, pr))] = rw0[static_cast<std::size_t>(k)];
        auto c = PointedConfiguration::spliced(lw, mid, rw);
        if (mid > 0) c = c.with_patch(Pattern::word(0, labels(middle, side)));
        // Time t carries the input at position t + lead.
        return shift_apply(Point::of(bg.lead), c);
    };
    return {build(0), build(1)};
}

}  // namespace detail

struct InjectivityResult {
    bool injective = false;
    std::optional<CollisionPair> witness;
};

// Injective iff no bi-infinite path of the pair graph uses an edge with differing inputs.
inline InjectivityResult is_injective(const BlockCode& f) {
    const auto p = detail::pair_graph(f);
    const auto& g = p.g;
    const std::vector<bool> all(g.edges().size(), true);
    const auto cyc = detail::on_cycle(g, all);
    std::vector<int> cyc_vertices;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cyc[static_cast<std::size_t>(v)]) cyc_vertices.push_back(v);
    // from[v]: reachable from a cycle; to[v]: reaches a cycle.
    auto closure = [&](bool backward) {
        std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
        std::vector<int> stack = cyc_vertices;
        for (int v : stack) seen[static_cast<std::size_t>(v)] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int e : backward ? g.in(v) : g.out(v)) {
                const int w = backward ? g.edge(e).from : g.edge(e).to;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    };
    const auto from = closure(false), to = closure(true);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        if (e.label != 1 || !from[static_cast<std::size_t>(e.from)] || !to[static_cast<std::size_t>(e.to)]) continue;
        const auto back = detail::path_to_cycle(g, all, e.from, cyc, true);
        const int c1 = back.empty() ? e.from : g.edge(back.front()).from;
        std::vector<int> middle(back.begin(), back.end());
        middle.push_back(static_cast<int>(i));
        const auto fwd = detail::path_to_cycle(g, all, e.to, cyc, false);
        middle.insert(middle.end(), fwd.begin(), fwd.end());
        const int c2 = fwd.empty() ? e.to : g.edge(fwd.back()).to;
        auto pair = detail::realize(f, p, detail::cycle_through(g, all, c1), middle, detail::cycle_through(g, all, c2));
        if (pair.x == pair.y || !(apply(f, pair.x) == apply(f, pair.y)))
            throw TheoremViolation("injectivity witness does not replay");
        return {false, pair};
    }
    return {true, std::nullopt};
}

struct PreinjectivityResult {
    bool pre_injective = false;
    std::optional<CollisionPair> witness;  // almost equal, distinct, same image
    std::optional<Shape> difference;
};

// Not pre-injective iff some pair path leaves an equal-input cycle, uses a differing edge and
// comes back to an equal-input cycle.
inline PreinjectivityResult is_preinjective(const BlockCode& f) {
    const auto p = detail::pair_graph(f);
    const auto& g = p.g;
    const std::size_t ne = g.edges().size();
    const auto nv = static_cast<std::size_t>(g.vertex_count());
    std::vector<bool> eq(ne), all(ne, true);
    for (std::size_t i = 0; i < ne; ++i) eq[i] = g.edges()[i].label == 0;
    const auto cyc = detail::on_cycle(g, eq);
    std::vector<int> cyc_vertices;
    for (std::size_t v = 0; v < nv; ++v)
        if (cyc[v]) cyc_vertices.push_back(static_cast<int>(v));
    // Layered product (vertex, differed): flag flips on a differing edge.
    LabeledGraph layered(static_cast<int>(2 * nv), 1);
    std::vector<int> base_edge;
    for (std::size_t i = 0; i < ne; ++i) {
        const auto& e = g.edges()[i];
        for (int flag = 0; flag < 2; ++flag) {
            const int nf = flag | e.label;
            layered.add_edge(2 * e.from + flag, 2 * e.to + nf, 0);
            base_edge.push_back(static_cast<int>(i));
        }
    }
    // Sources: (v, 0) for v reachable by equal-input edges from an equal-input cycle.
    std::vector<int> sources;
    {
        std::vector<bool> seen(nv, false);
        std::vector<int> stack = cyc_vertices;
        for (int v : stack) seen[static_cast<std::size_t>(v)] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int e : g.out(v))
                if (eq[static_cast<std::size_t>(e)] && !seen[static_cast<std::size_t>(g.edge(e).to)]) {
                    seen[static_cast<std::size_t>(g.edge(e).to)] = true;
                    stack.push_back(g.edge(e).to);
                }
        }
        for (std::size_t v = 0; v < nv; ++v)
            if (seen[v]) sources.push_back(static_cast<int>(2 * v));
    }
    // Targets: (v, 1) with v reaching an equal-input cycle by equal-input edges.
    std::vector<bool> reaches(nv, false);
    {
        std::vector<int> stack = cyc_vertices;
        for (int v : stack) reaches[static_cast<std::size_t>(v)] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int e : g.in(v))
                if (eq[static_cast<std::size_t>(e)] && !reaches[static_cast<std::size_t>(g.edge(e).from)]) {
                    reaches[static_cast<std::size_t>(g.edge(e).from)] = true;
                    stack.push_back(g.edge(e).from);
                }
        }
    }
    const std::vector<bool> lay_ok(layered.edges().size(), true);
    auto hit = detail::edge_path(layered, lay_ok, sources,
                                 [&](int u) { return (u & 1) && reaches[static_cast<std::size_t>(u >> 1)]; });
    if (!hit) return {true, std::nullopt, std::nullopt};
    std::vector<int> middle;
    int start = -1, end = -1;
    for (int le : *hit) middle.push_back(base_edge[static_cast<std::size_t>(le)]);
    if (hit->empty()) throw std::logic_error("empty departure path");
    start = g.edge(middle.front()).from;
    end = g.edge(middle.back()).to;
    const auto back = detail::path_to_cycle(g, eq, start, cyc, true);
    const int c1 = back.empty() ? start : g.edge(back.front()).from;
    std::vector<int> full(back.begin(), back.end());
    full.insert(full.end(), middle.begin(), middle.end());
    const auto fwd = detail::path_to_cycle(g, eq, end, cyc, false);
    full.insert(full.end(), fwd.begin(), fwd.end());
    const int c2 = fwd.empty() ? end : g.edge(fwd.back()).to;
    auto pair = detail::realize(f, p, detail::cycle_through(g, eq, c1), full, detail::cycle_through(g, eq, c2));
    auto diff = difference_set(pair.x, pair.y);
    if (!diff || diff->empty() || !(apply(f, pair.x) == apply(f, pair.y)))
        throw TheoremViolation("pre-injectivity witness does not replay");
    return {false, pair, diff};
}

// ---------------------------------------------------------------------------------------------

struct MyhillVerdict {
    bool pre_injective = false;
    bool surjective = false;
    bool pass = false;
    bool vacuous = false;  // not pre-injective
    coord_t si_gap = 0;
    std::optional<std::vector<Symbol>> missing_word;
    std::optional<CollisionPair> collision;
};

// Pre-injective endomorphisms of a strongly irreducible shift are surjective.
inline MyhillVerdict myhill_check(const BlockCode& f) {
    if (!(f.domain().alphabet() == f.codomain().alphabet()) || !same_language(f.domain(), f.codomain()))
        throw HypothesisError("hypothesis violated: the code is not an endomorphism");
    const auto cert = strong_irreducibility(f.domain());
    if (cert.status != SiStatus::strongly_irreducible)
        throw HypothesisError("hypothesis violated: domain is not certified strongly irreducible");
    MyhillVerdict v;
    v.si_gap = cert.gap;
    const auto pre = is_preinjective(f);
    const auto sur = is_surjective(f);
    v.pre_injective = pre.pre_injective;
    v.surjective = sur.surjective;
    v.collision = pre.witness;
    v.missing_word = sur.missing_word;
    v.vacuous = !v.pre_injective;
    v.pass = !v.pre_injective || v.surjective;
    return v;
}

struct DropWitness {
    double h_domain, h_image;
    CollisionPair pair;
    Shape difference;
};

// When the image has smaller entropy than a strongly irreducible domain, f collapses some
// homoclinic pair.
inline DropWitness preinjectivity_failure_on_drop(const BlockCode& f) {
    const auto cert = strong_irreducibility(f.domain());
    if (cert.status != SiStatus::strongly_irreducible)
        throw HypothesisError("hypothesis violated: domain is not certified strongly irreducible");
    const double hd = *entropy_exact(f.domain(), 0).value;
    const double hi = *entropy_exact(f.image(), 0).value;
    if (!(hi < hd - 1e-9)) throw HypothesisError("hypothesis violated: no strict drop in entropy");
    auto r = is_preinjective(f);
    if (r.pre_injective || !r.witness)
        throw TheoremViolation("entropy drops but no homoclinic pair with equal images was found");
    return DropWitness{hd, hi, *r.witness, *r.difference};
}

}  // namespace shiftlab
