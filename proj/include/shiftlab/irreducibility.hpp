#pragma once

// Delta-irreducibility and strong irreducibility of d = 1 shifts, specification subsets and a
// finite-scale checker for the weak specification property.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shifts.hpp"

namespace shiftlab {

// `left` followed by `gap` free cells followed by `right` has no completion in L(X).
// gap == -1 means both patterns sit on the same cell.
struct JoinFailure {
    std::vector<Symbol> left, right;
    coord_t gap = 0;
    // The same pair also fails at gap + k * recurrence for every k >= 0 (0 = not recurrent).
    coord_t recurrence = 0;
};

namespace detail {

// End-vertex sets of words (forward) and start-vertex sets (backward), each with a witness word.
// Only inclusion-minimal sets matter: a failure for P implies one for every subset of P.
struct JoinTables {
    std::vector<StateSet> ends, starts;
    std::vector<std::vector<Symbol>> end_words, start_words;
};

inline void keep_minimal(std::vector<StateSet>& sets, std::vector<std::vector<Symbol>>& words) {
    std::vector<std::size_t> order(sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sets[a].size() < sets[b].size(); });
    std::vector<StateSet> s2;
    std::vector<std::vector<Symbol>> w2;
    for (auto i : order) {
        bool dominated = false;
        for (const auto& t : s2)
            if (std::includes(sets[i].begin(), sets[i].end(), t.begin(), t.end())) dominated = true;
        if (dominated) continue;
        s2.push_back(sets[i]);
        w2.push_back(words[i]);
    }
    sets = std::move(s2);
    words = std::move(w2);
}

inline JoinTables join_tables(const ShiftPresentation& x) {
    const auto& g = x.graph();
    JoinTables t;
    const SubsetAutomaton fwd(g, all_vertices(g));
    for (int s = 1; s < static_cast<int>(fwd.size()); ++s) {
        t.ends.push_back(fwd.state(s));
        t.end_words.push_back(fwd.word_to(s));
    }
    const LabeledGraph rg = reversed(g);
    const SubsetAutomaton bwd(rg, all_vertices(rg));
    for (int s = 1; s < static_cast<int>(bwd.size()); ++s) {
        t.starts.push_back(bwd.state(s));
        auto w = bwd.word_to(s);
        std::reverse(w.begin(), w.end());
        t.start_words.push_back(std::move(w));
    }
    keep_minimal(t.ends, t.end_words);
    keep_minimal(t.starts, t.start_words);
    return t;
}

// Pairs (P, Q) with no p in P, q in Q such that b[p][q].
inline std::vector<std::pair<std::size_t, std::size_t>> failing_pairs(const JoinTables& t, const BoolMatrix& b,
                                                                      bool first_only) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < t.ends.size(); ++i) {
        std::vector<char> reach(n, 0);
        for (int p : t.ends[i])
            for (std::size_t q = 0; q < n; ++q)
                if (b.get(static_cast<std::size_t>(p), q)) reach[q] = 1;
        for (std::size_t j = 0; j < t.starts.size(); ++j) {
            bool ok = false;
            for (int q : t.starts[j]) ok = ok || reach[static_cast<std::size_t>(q)];
            if (!ok) {
                out.emplace_back(i, j);
                if (first_only) return out;
            }
        }
    }
    return out;
}

inline BoolMatrix identity_matrix(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

// A^0, A^1, ... up to and excluding the first repeat; `loop_start` is where the cycle begins.
struct PowerSequence {
    std::vector<BoolMatrix> powers;
    std::size_t loop_start = 0;
};

inline PowerSequence power_sequence(const LabeledGraph& g) {
    const BoolMatrix a = BoolMatrix::adjacency(g);
    PowerSequence s;
    std::map<BoolMatrix, std::size_t> seen;
    BoolMatrix cur = identity_matrix(a.size());
    while (true) {
        auto [it, fresh] = seen.emplace(cur, s.powers.size());
        if (!fresh) {
            s.loop_start = it->second;
            return s;
        }
        s.powers.push_back(cur);
        cur = cur * a;
    }
}

inline coord_t power_at(const PowerSequence& s, coord_t m, std::size_t* index) {
    const auto len = static_cast<coord_t>(s.powers.size());
    const auto ls = static_cast<coord_t>(s.loop_start);
    const coord_t i = m < len ? m : ls + (m - ls) % (len - ls);
    *index = static_cast<std::size_t>(i);
    return i;
}

}  // namespace detail

// First failure at some gap m >= g, or nullopt if every pair of words joins at every such gap.
inline std::optional<JoinFailure> join_failure_from(const ShiftPresentation& x, coord_t g) {
    require_input(x.dim() == 1, "irreducibility checks are implemented for d = 1");
    require_input(g >= 0, "gap must be nonnegative");
    const auto t = detail::join_tables(x);
    const auto seq = detail::power_sequence(x.graph());
    const auto len = static_cast<coord_t>(seq.powers.size());
    const auto ls = static_cast<coord_t>(seq.loop_start);
    // Gaps from g on visit every power with index >= min(g, ...) once we go one full loop past g.
    const coord_t last = std::max(g, ls) + (len - ls) - 1;
    for (coord_t m = g; m <= last; ++m) {
        std::size_t idx;
        detail::power_at(seq, m, &idx);
        auto f = detail::failing_pairs(t, seq.powers[idx], true);
        if (!f.empty()) {
            const auto [i, j] = f.front();
            return JoinFailure{t.end_words[i], t.start_words[j], m, m >= ls ? len - ls : 0};
        }
    }
    return std::nullopt;
}

// A pair of words failing at arbitrarily large gaps, or nullopt if X is strongly irreducible.
// Among such pairs the one failing at the most gaps in one period of the power sequence is chosen.
inline std::optional<JoinFailure> persistent_join_failure(const ShiftPresentation& x) {
    require_input(x.dim() == 1, "irreducibility checks are implemented for d = 1");
    const auto t = detail::join_tables(x);
    const auto seq = detail::power_sequence(x.graph());
    const std::size_t len = seq.powers.size(), ls = seq.loop_start;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<coord_t>> fails;
    for (std::size_t m = 0; m < len; ++m)
        for (const auto& pq : detail::failing_pairs(t, seq.powers[m], false)) fails[pq].push_back(static_cast<coord_t>(m));
    std::optional<JoinFailure> best;
    std::size_t best_count = 0;
    for (const auto& [pq, gaps] : fails) {
        auto recurrent = std::find_if(gaps.begin(), gaps.end(), [&](coord_t m) { return m >= static_cast<coord_t>(ls); });
        if (recurrent == gaps.end()) continue;
        if (best && gaps.size() <= best_count) continue;
        best_count = gaps.size();
        best = JoinFailure{t.end_words[pq.first], t.start_words[pq.second], *recurrent, static_cast<coord_t>(len - ls)};
    }
    return best;
}

struct DeltaCheck {
    bool irreducible = false;
    std::optional<JoinFailure> counterexample;
};

// Patterns on shapes with omega1 and omega2 + delta disjoint always co-occur. delta must be an
// interval [-l, r]; the condition then reduces to joining words across at least min(l, r) cells.
inline DeltaCheck delta_irreducible(const ShiftPresentation& x, const Shape& delta) {
    require_input(x.dim() == 1, "irreducibility checks are implemented for d = 1");
    if (!delta.contains(Point::of(0))) {
        // Even one-cell shapes at the same place must agree: only a one-symbol shift passes.
        const auto syms = occurring_symbols(x);
        if (syms.size() <= 1) return {true, std::nullopt};
        return {false, JoinFailure{{syms[0]}, {syms[1]}, -1, 0}};
    }
    require_input(delta.is_interval(), "delta must be an interval of Z containing 0");
    const coord_t g = std::min(-delta.lower()[0], delta.upper()[0]);
    auto f = join_failure_from(x, g);
    return {!f.has_value(), f};
}

enum class SiStatus { strongly_irreducible, not_strongly_irreducible, unknown };
enum class SiMethod { primitivity, filler_search };

inline const char* to_string(SiStatus s) {
    switch (s) {
        case SiStatus::strongly_irreducible: return "strongly_irreducible";
        case SiStatus::not_strongly_irreducible: return "not_strongly_irreducible";
        default: return "unknown";
    }
}
inline const char* to_string(SiMethod m) { return m == SiMethod::primitivity ? "primitivity" : "filler_search"; }

struct IrreducibilityCertificate {
    SiStatus status = SiStatus::unknown;
    SiMethod method = SiMethod::primitivity;
    coord_t gap = 0;                      // minimal uniform gap when strongly irreducible
    std::optional<Shape> delta;           // [-gap, gap]
    std::size_t primitivity_index = 0;    // 0 when not primitive or not computed
    std::string structure;                // why the recoded graph is not primitive
    std::optional<JoinFailure> witness;
    std::vector<coord_t> failing_gaps;    // gaps <= bound at which the witness pair fails joinable
    coord_t bound = 0;
};

namespace detail {

inline std::vector<coord_t> replay_failing_gaps(const ShiftPresentation& x, const JoinFailure& f, coord_t bound) {
    std::vector<coord_t> out;
    const auto lw = static_cast<coord_t>(f.left.size());
    for (coord_t m = 0; m <= bound; ++m)
        if (!joinable(x, Pattern::word(0, f.left), Pattern::word(lw + m, f.right))) out.push_back(m);
    return out;
}

inline std::string graph_structure(const LabeledGraph& g) {
    const auto c = strongly_connected(g);
    if (c.count > 1) return "reducible: " + std::to_string(c.count) + " strongly connected components";
    return "irreducible with period " + std::to_string(period(g));
}

}  // namespace detail

inline IrreducibilityCertificate strong_irreducibility(const ShiftPresentation& x, coord_t bound = 16) {
    require_input(x.dim() == 1, "strong irreducibility is decided for d = 1 only");
    require_input(bound >= 0, "bound must be nonnegative");
    IrreducibilityCertificate cert;
    cert.bound = bound;
    auto set_si = [&](coord_t g) {
        cert.status = SiStatus::strongly_irreducible;
        cert.gap = g;
        cert.delta = Shape::interval(-g, g);
    };
    auto set_not = [&](JoinFailure f) {
        cert.status = SiStatus::not_strongly_irreducible;
        cert.bound = std::max(bound, f.gap);
        cert.failing_gaps = detail::replay_failing_gaps(x, f, cert.bound);
        cert.witness = std::move(f);
    };
    if (x.kind() == ShiftKind::sft) {
        cert.method = SiMethod::primitivity;
        const auto& g = x.graph();
        cert.primitivity_index = primitivity_index(g);
        if (cert.primitivity_index > 0) {
            const auto k = static_cast<coord_t>(cert.primitivity_index);
            for (coord_t gap = 0; gap <= k; ++gap)
                if (!join_failure_from(x, gap)) {
                    set_si(gap);
                    return cert;
                }
            throw TheoremViolation("primitive recoded graph but words fail to join beyond the primitivity index");
        }
        cert.structure = detail::graph_structure(g);
        auto f = persistent_join_failure(x);
        if (!f) throw TheoremViolation("non-primitive recoded graph but no persistent join failure");
        set_not(*f);
        return cert;
    }
    cert.method = SiMethod::filler_search;
    for (coord_t gap = 0; gap <= bound; ++gap)
        if (!join_failure_from(x, gap)) {
            set_si(gap);
            return cert;
        }
    if (auto f = persistent_join_failure(x)) {
        set_not(*f);
        return cert;
    }
    cert.status = SiStatus::unknown;
    return cert;
}

// Omega - Delta - Omega
inline Shape specification_subset(const Shape& omega, const Shape& delta) {
    return shape_product(shape_difference(omega, delta), reflect(omega));
}

// ---------------------------------------------------------------------------------------------
// Weak specification at finite scale (entourage W(omega))

struct WspPiece {
    Shape elements;  // Omega_i
    Pattern target;  // x_i restricted to -Omega_i + omega
};

// Positions constrained by (x, x_i) in W(omega)^(Omega_i).
inline Shape wsp_positions(const Shape& elements, const Shape& omega) {
    return shape_product(reflect(elements), omega);
}

// Omega_j and lambda + Omega_k disjoint for all j != k.
inline bool wsp_separated(const std::vector<WspPiece>& pieces, const Shape& lambda) {
    for (std::size_t j = 0; j < pieces.size(); ++j)
        for (std::size_t k = 0; k < pieces.size(); ++k)
            if (j != k && !disjoint(pieces[j].elements, shape_product(lambda, pieces[k].elements))) return false;
    return true;
}

// A point of X (given on the hull of all constrained positions) shadowing every piece.
inline std::optional<Pattern> wsp_solve(const ShiftPresentation& x, const Shape& lambda, const Shape& omega,
                                        const std::vector<WspPiece>& pieces) {
    require_input(x.dim() == 1, "weak specification checks are implemented for d = 1");
    require_input(wsp_separated(pieces, lambda), "pieces violate the lambda-separation hypothesis");
    std::vector<Pattern> targets;
    for (const auto& p : pieces) {
        require_input(p.target.shape() == wsp_positions(p.elements, omega), "piece target has the wrong shape");
        require_input(count_language(x, p.target.shape()) > 0 && join_patterns(x, {p.target}).has_value(),
                      "piece target is not a pattern of X");
        targets.push_back(p.target);
    }
    return join_patterns(x, targets);
}

struct WspSweepOptions {
    int max_pieces = 3;
    coord_t window = 16;
    coord_t max_piece_len = 3;
};

struct WspSweepReport {
    std::size_t families = 0, instances = 0, violations = 0;
    bool two_piece_ok = true;
    bool multi_piece_ok = true;
    std::optional<std::vector<Pattern>> first_violation;
};

// Exhaustive sweep over families of interval pieces inside [0, window) for omega = {0}: piece i
// constrains cells [a_i, a_i + len_i) and so has Omega_i = -[a_i, a_i + len_i).
inline WspSweepReport wsp_sweep(const ShiftPresentation& x, const Shape& lambda, const WspSweepOptions& opt = {}) {
    require_input(x.dim() == 1, "weak specification checks are implemented for d = 1");
    require_input(opt.max_pieces >= 1 && opt.max_pieces <= 4 && opt.window <= 24 && opt.max_piece_len >= 1,
                  "weak specification sweep limits: at most 4 pieces in a window of 24 cells");
    const Shape omega = Shape::of({0});
    std::map<coord_t, std::vector<Pattern>> words;
    for (coord_t l = 1; l <= opt.max_piece_len; ++l) words[l] = language(x, Shape::interval(0, l - 1));
    WspSweepReport rep;
    std::vector<std::pair<coord_t, coord_t>> family;  // (start, length)

    auto run_family = [&]() {
        std::vector<WspPiece> pieces;
        for (auto [a, l] : family) pieces.push_back({reflect(Shape::interval(a, a + l - 1)), Pattern()});
        if (!wsp_separated(pieces, lambda)) return;
        ++rep.families;
        std::vector<std::size_t> choice(family.size(), 0);
        while (true) {
            std::vector<Pattern> targets;
            for (std::size_t i = 0; i < family.size(); ++i)
                targets.push_back(words[family[i].second][choice[i]].translated(Point::of(family[i].first)));
            ++rep.instances;
            if (!join_patterns(x, targets)) {
                ++rep.violations;
                (family.size() == 2 ? rep.two_piece_ok : rep.multi_piece_ok) = false;
                if (!rep.first_violation) rep.first_violation = targets;
            }
            std::size_t i = 0;
            while (i < choice.size() && ++choice[i] == words[family[i].second].size()) choice[i++] = 0;
            if (i == choice.size()) break;
        }
    };
    auto rec = [&](auto&& self, coord_t from) -> void {
        if (family.size() >= 2) run_family();
        if (static_cast<int>(family.size()) == opt.max_pieces) return;
        for (coord_t a = from; a < opt.window; ++a)
            for (coord_t l = 1; l <= opt.max_piece_len && a + l <= opt.window; ++l) {
                family.emplace_back(a, l);
                self(self, a + l);
                family.pop_back();
            }
    };
    rec(rec, 0);
    return rep;
}

}  // namespace shiftlab
