#pragma once

// Topological entropy of subshifts: exact values in d = 1, box-count traces, separated /
// spanning / cover rates for cylinder entourages, and the entropy theorems as checked reports.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "irreducibility.hpp"
#include "shifts.hpp"
#include "strip.hpp"

namespace shiftlab {

inline double log_big(const bigint& v) {
    if (v <= 0) return -INFINITY;
    // Keep ~60 significant bits and add the exponent back.
    const auto bits = static_cast<long>(boost::multiprecision::msb(v));
    if (bits < 60) return std::log(v.convert_to<double>());
    const bigint top = v >> static_cast<unsigned>(bits - 60);
    return std::log(top.convert_to<double>()) + static_cast<double>(bits - 60) * std::log(2.0);
}

struct TraceEntry {
    coord_t n = 0;
    bigint count = 0;
    double rate = 0.0;  // log count / |box(n)|
};

enum class EntropyMethod { perron, pattern_limit, strip_bounds };

inline const char* to_string(EntropyMethod m) {
    switch (m) {
        case EntropyMethod::perron: return "perron";
        case EntropyMethod::pattern_limit: return "pattern_limit";
        default: return "strip_bounds";
    }
}

struct StripBound {
    coord_t width = 0;
    double log_radius = 0.0;
    double upper = 0.0;          // log rho / width
    double running_upper = 0.0;  // min over widths so far
    std::optional<double> lower; // log rho / (width + separator), when a safe symbol exists
};

struct EntropyReport {
    EntropyMethod method = EntropyMethod::perron;
    std::optional<double> value;
    double lo = 0.0, hi = 0.0;
    std::vector<TraceEntry> trace;
    std::vector<coord_t> net;
    std::vector<StripBound> strips;
    // perron only: rate at the largest trace n against the exact value.
    bool cross_check_ok = true;
    double cross_check_gap = 0.0;
    int dim = 1;
};

// ---------------------------------------------------------------------------------------------

inline std::vector<TraceEntry> box_trace(const ShiftPresentation& x, const FolnerBoxes& net) {
    require_input(net.dim() == x.dim(), "net dimension does not match the shift");
    std::vector<TraceEntry> out;
    for (coord_t n : net.sizes()) {
        TraceEntry e;
        e.n = n;
        e.count = count_language(x, net.box(n));
        e.rate = log_big(e.count) / static_cast<double>(net.volume(n));
        out.push_back(std::move(e));
    }
    return out;
}

inline EntropyReport entropy_exact(const ShiftPresentation& x, coord_t check_n = 32, const PerronOptions& opt = {}) {
    require_input(x.dim() == 1, "exact entropy is available for d = 1");
    EntropyReport r;
    r.method = EntropyMethod::perron;
    const double rho = spectral_radius(x.graph(), opt);
    const double h = std::log(std::max(rho, 1.0));
    r.value = h;
    r.lo = r.hi = h;
    if (check_n > 0) {
        const auto net = FolnerBoxes::up_to(1, check_n);
        r.net = net.sizes();
        r.trace = box_trace(x, net);
        const double last = r.trace.back().rate;
        r.cross_check_gap = last - h;
        r.cross_check_ok = std::abs(r.cross_check_gap) <= 0.05;
        // log N(n) / n never drops below the limit (subadditivity).
        for (const auto& e : r.trace)
            if (e.rate < h - 1e-9)
                throw TheoremViolation("pattern-count rate " + std::to_string(e.rate) + " at n = " + std::to_string(e.n) +
                                       " is below the spectral value " + std::to_string(h));
    }
    return r;
}

namespace detail {

// max over n <= n_max and vertices v of log (A^n)_vv / n, a lower bound for log rho(A).
inline double closed_walk_lower_bound(const LabeledGraph& g, coord_t n_max) {
    const int n = g.vertex_count();
    if (n == 0 || n > 256) return 0.0;
    double best = 0.0;
    for (int v = 0; v < n; ++v) {
        std::vector<bigint> cur(static_cast<std::size_t>(n), 0);
        cur[static_cast<std::size_t>(v)] = 1;
        for (coord_t k = 1; k <= n_max; ++k) {
            std::vector<bigint> nxt(static_cast<std::size_t>(n), 0);
            for (const auto& e : g.edges()) nxt[static_cast<std::size_t>(e.to)] += cur[static_cast<std::size_t>(e.from)];
            cur.swap(nxt);
            const auto& back = cur[static_cast<std::size_t>(v)];
            if (back > 0) best = std::max(best, log_big(back) / static_cast<double>(k));
        }
    }
    return best;
}

}  // namespace detail

// Strip bounds for a d = 2 SFT at the given widths.
inline std::vector<StripBound> strip_bounds(const ShiftPresentation& x, const std::vector<coord_t>& widths,
                                            const StripOptions& sopt = {}) {
    require_input(x.dim() == 2, "strip bounds need a d = 2 shift");
    coord_t sep = 0;
    for (const auto& f : x.forbidden()) sep = std::max(sep, f.shape().upper()[1]);
    const bool safe = x.safe_symbol().has_value();
    std::vector<StripBound> out;
    double running = INFINITY;
    for (coord_t p : widths) {
        const StripTransfer t(x, p, sopt);
        StripBound b;
        b.width = p;
        b.log_radius = std::log(std::max(t.spectral_radius(), 1.0));
        b.upper = b.log_radius / static_cast<double>(p);
        running = std::min(running, b.upper);
        b.running_upper = running;
        if (safe) b.lower = b.log_radius / static_cast<double>(p + sep);
        out.push_back(b);
    }
    return out;
}

// Box-count trace with a certified interval: the trace minimum bounds the entropy from above
// (subadditivity); lower bounds come from closed walks (d = 1) or separated strips (d = 2).
inline EntropyReport entropy_pattern_limit(const ShiftPresentation& x, const FolnerBoxes& net, coord_t strip_max = 0) {
    EntropyReport r;
    r.dim = x.dim();
    r.net = net.sizes();
    r.trace = box_trace(x, net);
    r.hi = INFINITY;
    for (const auto& e : r.trace) r.hi = std::min(r.hi, e.rate);
    if (x.dim() == 1) {
        r.method = EntropyMethod::pattern_limit;
        r.lo = detail::closed_walk_lower_bound(x.graph(), net.sizes().back());
    } else {
        r.method = EntropyMethod::strip_bounds;
        const coord_t top = strip_max > 0 ? strip_max : net.sizes().back();
        std::vector<coord_t> widths;
        for (coord_t p = 1; p <= top; ++p) widths.push_back(p);
        r.strips = strip_bounds(x, widths);
        r.lo = 0.0;
        for (const auto& b : r.strips) {
            r.hi = std::min(r.hi, b.upper);
            if (b.lower) r.lo = std::max(r.lo, *b.lower);
        }
    }
    if (r.lo > r.hi + 1e-12) throw TheoremViolation("entropy lower bound exceeds the upper bound");
    return r;
}

// ---------------------------------------------------------------------------------------------

struct QuantityRow {
    coord_t n = 0;
    bigint sep = 0, spa = 0, cov = 0;
    double rate = 0.0;
    double limsup = 0.0;  // running max of the rate over the tail seen so far
};

// sep / spa / cov for W(omega) along boxes; all three equal the class count of W(omega)^(F).
inline std::vector<QuantityRow> entropy_quantities(const ShiftPresentation& x, const Shape& omega, const FolnerBoxes& net) {
    require_input(x.dim() == 1, "entropy quantities are tabulated for d = 1");
    std::vector<QuantityRow> rows;
    for (coord_t n : net.sizes()) {
        QuantityRow q;
        q.n = n;
        q.sep = q.spa = q.cov = cylinder_entourage_classes(x, omega, net.box(n));
        q.rate = log_big(q.cov) / static_cast<double>(net.volume(n));
        rows.push_back(q);
    }
    // Sequential limsup at desk scale: max over the remaining tail, read from the back.
    double tail = -INFINITY;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        tail = std::max(tail, it->rate);
        it->limsup = tail;
    }
    return rows;
}

// ---------------------------------------------------------------------------------------------

struct DropReport {
    double h_x = 0.0, h_y = 0.0, margin = 0.0;
    std::vector<Symbol> word_missing_from_y;  // shortest word of L(X) \ L(Y)
    coord_t si_gap = 0;
};

// h(Y) < h(X) for a proper subshift Y of a strongly irreducible X.
inline DropReport strict_drop_check(const ShiftPresentation& x, const ShiftPresentation& y) {
    require_input(x.dim() == 1 && y.dim() == 1, "strict drop check is implemented for d = 1");
    if (auto w = language_difference(y, x))
        throw InputError("Y is not contained in X: " + y.alphabet().format(*w) + " occurs in Y only");
    auto missing = language_difference(x, y);
    if (!missing) throw InputError("Y equals X");
    const auto cert = strong_irreducibility(x);
    if (cert.status != SiStatus::strongly_irreducible)
        throw HypothesisError("hypothesis violated: X is not certified strongly irreducible");
    DropReport r;
    r.h_x = *entropy_exact(x, 0).value;
    r.h_y = *entropy_exact(y, 0).value;
    r.margin = r.h_x - r.h_y;
    r.word_missing_from_y = *missing;
    r.si_gap = cert.gap;
    if (!(r.margin > 1e-9))
        throw TheoremViolation("entropy of a proper subshift did not drop (margin " + std::to_string(r.margin) + ")");
    return r;
}

struct PositivityReport {
    double entropy = 0.0, bound = 0.0;
    std::size_t lambda_size = 0;
    bool holds = false;
};

// h(X) >= log 2 / |lambda| for a certified specification subset lambda at W({0}).
inline PositivityReport positivity_bound_check(const ShiftPresentation& x, const Shape& lambda) {
    require_input(x.dim() == 1, "positivity bound check is implemented for d = 1");
    require_input(!lambda.empty(), "lambda must be nonempty");
    if (occurring_symbols(x).size() < 2)
        throw HypothesisError("hypothesis violated: X must have more than one point");
    // For omega = {0}, lambda = -delta; certify X is (-lambda)-irreducible.
    const Shape delta = reflect(lambda);
    if (!delta.contains(Point::of(0)) || !delta.is_interval() || !delta_irreducible(x, delta).irreducible)
        throw HypothesisError("hypothesis violated: lambda is not a certified specification subset");
    PositivityReport r;
    const Shape sym = shape_union(lambda, reflect(lambda));
    r.lambda_size = sym.size();
    r.entropy = *entropy_exact(x, 0).value;
    r.bound = std::log(2.0) / static_cast<double>(r.lambda_size);
    r.holds = r.entropy >= r.bound - 1e-12;
    if (!r.holds) throw TheoremViolation("entropy is below log 2 / |lambda|");
    return r;
}

}  // namespace shiftlab
