#pragma once

// Edge-labeled directed graphs: the common substrate for one-dimensional shifts. A shift is the
// set of label sequences of bi-infinite paths; presentations are kept essential (every vertex
// lies on a bi-infinite path) and, after loading, right-resolving (deterministic in labels).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "error.hpp"

namespace shiftlab {

using Symbol = int;

struct Edge {
    int from = 0;
    int to = 0;
    Symbol label = 0;
};

class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(int vertices, int alphabet) : alphabet_(alphabet), out_(static_cast<std::size_t>(vertices)),
                                               in_(static_cast<std::size_t>(vertices)) {}

    int add_vertex() {
        out_.emplace_back();
        in_.emplace_back();
        return vertex_count() - 1;
    }
    void add_edge(int from, int to, Symbol label) {
        require_input(from >= 0 && from < vertex_count() && to >= 0 && to < vertex_count(), "edge endpoint out of range");
        require_input(label >= 0 && label < alphabet_, "edge label outside the alphabet");
        out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()));
        in_[static_cast<std::size_t>(to)].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({from, to, label});
    }

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int alphabet_size() const { return alphabet_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<int>& out(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& in(int v) const { return in_[static_cast<std::size_t>(v)]; }

    bool deterministic() const {
        for (const auto& es : out_) {
            std::vector<bool> seen(static_cast<std::size_t>(alphabet_), false);
            for (int e : es) {
                auto l = static_cast<std::size_t>(edge(e).label);
                if (seen[l]) return false;
                seen[l] = true;
            }
        }
        return true;
    }

    // Successor of v under label a in a deterministic graph, or -1.
    int next(int v, Symbol a) const {
        for (int e : out(v))
            if (edge(e).label == a) return edge(e).to;
        return -1;
    }

private:
    int alphabet_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_, in_;
};

inline LabeledGraph reversed(const LabeledGraph& g) {
    LabeledGraph r(g.vertex_count(), g.alphabet_size());
    for (const auto& e : g.edges()) r.add_edge(e.to, e.from, e.label);
    return r;
}

// Subgraph on the kept vertices, renumbered in increasing order.
inline LabeledGraph induced(const LabeledGraph& g, const std::vector<bool>& keep) {
    std::vector<int> id(static_cast<std::size_t>(g.vertex_count()), -1);
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep[static_cast<std::size_t>(v)]) id[static_cast<std::size_t>(v)] = k++;
    LabeledGraph out(k, g.alphabet_size());
    for (const auto& e : g.edges()) {
        const int a = id[static_cast<std::size_t>(e.from)], b = id[static_cast<std::size_t>(e.to)];
        if (a >= 0 && b >= 0) out.add_edge(a, b, e.label);
    }
    return out;
}

// Repeatedly drop vertices without incoming or outgoing edges. What is left is exactly the set of
// vertices on bi-infinite paths.
inline LabeledGraph trim_essential(const LabeledGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<bool> alive(n, true);
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& e : g.edges()) {
        ++outdeg[static_cast<std::size_t>(e.from)];
        ++indeg[static_cast<std::size_t>(e.to)];
    }
    std::queue<int> dead;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0 || outdeg[v] == 0) {
            alive[v] = false;
            dead.push(static_cast<int>(v));
        }
    while (!dead.empty()) {
        const int v = dead.front();
        dead.pop();
        for (int e : g.out(v)) {
            const auto w = static_cast<std::size_t>(g.edge(e).to);
            if (alive[w] && --indeg[w] == 0) {
                alive[w] = false;
                dead.push(static_cast<int>(w));
            }
        }
        for (int e : g.in(v)) {
            const auto w = static_cast<std::size_t>(g.edge(e).from);
            if (alive[w] && --outdeg[w] == 0) {
                alive[w] = false;
                dead.push(static_cast<int>(w));
            }
        }
    }
    return induced(g, alive);
}

using StateSet = std::vector<int>;  // sorted vertex list

inline StateSet all_vertices(const LabeledGraph& g) {
    StateSet s(static_cast<std::size_t>(g.vertex_count()));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

inline StateSet step(const LabeledGraph& g, const StateSet& s, Symbol a) {
    StateSet out;
    for (int v : s)
        for (int e : g.out(v))
            if (g.edge(e).label == a) out.push_back(g.edge(e).to);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Deterministic automaton on the nonempty vertex subsets reachable from `start`. Each state
// remembers a shortest word reaching it (BFS tree), so every state carries a witness.
class SubsetAutomaton {
public:
    SubsetAutomaton(const LabeledGraph& g, StateSet start, std::size_t max_states = 200000)
        : alphabet_(g.alphabet_size()) {
        require_input(!start.empty(), "subset automaton needs a nonempty start set");
        add(std::move(start), -1, -1);
        for (std::size_t head = 0; head < states_.size(); ++head) {
            for (Symbol a = 0; a < alphabet_; ++a) {
                StateSet t = step(g, states_[head], a);
                int target = -1;
                if (!t.empty()) {
                    auto it = index_.find(t);
                    if (it == index_.end()) {
                        if (states_.size() >= max_states)
                            throw CapExceeded("subset construction exceeds " + std::to_string(max_states) + " states");
                        target = add(std::move(t), static_cast<int>(head), a);
                    } else {
                        target = it->second;
                    }
                }
                delta_[head][static_cast<std::size_t>(a)] = target;
            }
        }
    }

    std::size_t size() const { return states_.size(); }
    int alphabet_size() const { return alphabet_; }
    const StateSet& state(int s) const { return states_[static_cast<std::size_t>(s)]; }
    // -1 means the empty set (the word dies).
    int next(int s, Symbol a) const { return delta_[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)]; }

    std::vector<Symbol> word_to(int s) const {
        std::vector<Symbol> w;
        while (parent_[static_cast<std::size_t>(s)] >= 0) {
            w.push_back(via_[static_cast<std::size_t>(s)]);
            s = parent_[static_cast<std::size_t>(s)];
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

    // -1 if the word cannot be read from the start set.
    int run(const std::vector<Symbol>& w, int s = 0) const {
        for (Symbol a : w) {
            if (s < 0) return -1;
            s = next(s, a);
        }
        return s;
    }

private:
    int add(StateSet s, int parent, Symbol via) {
        const int id = static_cast<int>(states_.size());
        index_.emplace(s, id);
        states_.push_back(std::move(s));
        delta_.emplace_back(static_cast<std::size_t>(alphabet_), -1);
        parent_.push_back(parent);
        via_.push_back(via);
        return id;
    }

    int alphabet_;
    std::vector<StateSet> states_;
    std::map<StateSet, int> index_;
    std::vector<std::vector<int>> delta_;
    std::vector<int> parent_;
    std::vector<Symbol> via_;
};

// Right-resolving essential presentation of the shift presented by g.
inline LabeledGraph determinize(const LabeledGraph& g) {
    const LabeledGraph core = trim_essential(g);
    if (core.vertex_count() == 0) return core;
    if (core.deterministic()) return core;
    const SubsetAutomaton dfa(core, all_vertices(core));
    LabeledGraph out(static_cast<int>(dfa.size()), core.alphabet_size());
    for (int s = 0; s < static_cast<int>(dfa.size()); ++s)
        for (Symbol a = 0; a < core.alphabet_size(); ++a)
            if (int t = dfa.next(s, a); t >= 0) out.add_edge(s, t, a);
    return trim_essential(out);
}

// Strongly connected components (Tarjan, iterative). comp[v] is the component id.
struct Components {
    std::vector<int> comp;
    int count = 0;
};

inline Components strongly_connected(const LabeledGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Components c;
    c.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<int, std::size_t>> call{{static_cast<int>(root), 0}};
        index[root] = low[root] = counter++;
        stack.push_back(static_cast<int>(root));
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            const auto& outs = g.out(v);
            if (pos < outs.size()) {
                const auto w = static_cast<std::size_t>(g.edge(outs[pos++]).to);
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(static_cast<int>(w));
                    on_stack[w] = true;
                    call.emplace_back(static_cast<int>(w), 0);
                } else if (on_stack[w]) {
                    low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[w]);
                }
                continue;
            }
            const auto vv = static_cast<std::size_t>(v);
            if (low[vv] == index[vv]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    c.comp[static_cast<std::size_t>(w)] = c.count;
                } while (w != v);
                ++c.count;
            }
            const int finished = v;
            call.pop_back();
            if (!call.empty()) {
                const auto parent = static_cast<std::size_t>(call.back().first);
                low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
            }
        }
    }
    return c;
}

// A component is nontrivial if it carries a cycle.
inline std::vector<bool> nontrivial_components(const LabeledGraph& g, const Components& c) {
    std::vector<bool> nt(static_cast<std::size_t>(c.count), false);
    for (const auto& e : g.edges())
        if (c.comp[static_cast<std::size_t>(e.from)] == c.comp[static_cast<std::size_t>(e.to)])
            nt[static_cast<std::size_t>(c.comp[static_cast<std::size_t>(e.from)])] = true;
    return nt;
}

// gcd of cycle lengths of an irreducible graph (assumes g strongly connected and nonempty).
inline int period(const LabeledGraph& g) {
    std::vector<int> level(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    level[0] = 0;
    q.push(0);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int e : g.out(v)) {
            const auto w = static_cast<std::size_t>(g.edge(e).to);
            if (level[w] < 0) {
                level[w] = level[static_cast<std::size_t>(v)] + 1;
                q.push(static_cast<int>(w));
            }
        }
    }
    int p = 0;
    for (const auto& e : g.edges())
        p = std::gcd(p, std::abs(level[static_cast<std::size_t>(e.from)] + 1 - level[static_cast<std::size_t>(e.to)]));
    return p;
}

// Square boolean matrix with bit-packed rows.
class BoolMatrix {
public:
    explicit BoolMatrix(std::size_t n = 0) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    static BoolMatrix adjacency(const LabeledGraph& g) {
        BoolMatrix m(static_cast<std::size_t>(g.vertex_count()));
        for (const auto& e : g.edges()) m.set(static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to));
        return m;
    }

    std::size_t size() const { return n_; }
    bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

    bool all_positive() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!get(i, j)) return false;
        return true;
    }

    friend BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
        BoolMatrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k)
                if (a.get(i, k))
                    for (std::size_t w = 0; w < a.words_; ++w) c.bits_[i * c.words_ + w] |= b.bits_[k * b.words_ + w];
        return c;
    }
    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
    friend bool operator<(const BoolMatrix& a, const BoolMatrix& b) { return a.bits_ < b.bits_; }

private:
    std::size_t n_, words_;
    std::vector<std::uint64_t> bits_;
};

// Smallest k with A^k > 0, or 0 if A is not primitive (checked up to the Wielandt bound).
inline std::size_t primitivity_index(const LabeledGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (n == 0) return 0;
    const BoolMatrix a = BoolMatrix::adjacency(g);
    BoolMatrix p = a;
    const std::size_t wielandt = (n - 1) * (n - 1) + 1;
    for (std::size_t k = 1; k <= wielandt; ++k) {
        if (p.all_positive()) return k;
        p = p * a;
    }
    return 0;
}

struct PerronOptions {
    double rel_tol = 1e-12;
    std::size_t max_iter = 1000000;
};

// Spectral radius of a nonnegative integer matrix given as successor lists (repeats = multiplicity).
// Each nontrivial strongly connected block is handled separately by power iteration on A + I,
// which is primitive on an irreducible block; the Collatz-Wielandt quotients bracket the root.
inline double spectral_radius(const std::vector<std::vector<int>>& succ, const PerronOptions& opt = {}) {
    const int n = static_cast<int>(succ.size());
    LabeledGraph g(n, 1);
    for (int v = 0; v < n; ++v)
        for (int w : succ[static_cast<std::size_t>(v)]) g.add_edge(v, w, 0);
    const Components c = strongly_connected(g);
    const auto nt = nontrivial_components(g, c);
    double best = 0.0;
    for (int k = 0; k < c.count; ++k) {
        if (!nt[static_cast<std::size_t>(k)]) continue;
        std::vector<int> members, local(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < n; ++v)
            if (c.comp[static_cast<std::size_t>(v)] == k) {
                local[static_cast<std::size_t>(v)] = static_cast<int>(members.size());
                members.push_back(v);
            }
        const std::size_t m = members.size();
        std::vector<std::vector<int>> block(m);
        for (std::size_t i = 0; i < m; ++i)
            for (int w : succ[static_cast<std::size_t>(members[i])])
                if (local[static_cast<std::size_t>(w)] >= 0) block[i].push_back(local[static_cast<std::size_t>(w)]);
        std::vector<double> v(m, 1.0), w(m);
        double rho = 0.0;
        bool converged = false;
        for (std::size_t it = 0; it < opt.max_iter; ++it) {
            for (std::size_t i = 0; i < m; ++i) {
                double s = v[i];
                for (int j : block[i]) s += v[static_cast<std::size_t>(j)];
                w[i] = s;
            }
            double lo = w[0] / v[0], hi = lo, top = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double r = w[i] / v[i];
                lo = std::min(lo, r);
                hi = std::max(hi, r);
                top = std::max(top, w[i]);
            }
            rho = 0.5 * (lo + hi) - 1.0;
            if (hi - lo <= opt.rel_tol * hi) {
                converged = true;
                break;
            }
            for (std::size_t i = 0; i < m; ++i) v[i] = w[i] / top;
        }
        if (!converged) throw CapExceeded("power iteration did not reach the requested tolerance");
        best = std::max(best, rho);
    }
    return best;
}

inline double spectral_radius(const LabeledGraph& g, const PerronOptions& opt = {}) {
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& e : g.edges()) succ[static_cast<std::size_t>(e.from)].push_back(e.to);
    return spectral_radius(succ, opt);
}

}  // namespace shiftlab
