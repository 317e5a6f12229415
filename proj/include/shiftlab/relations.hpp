#pragma once

// Finite dynamical systems with explicit entourages. Every quantity here is computed by
// exhaustive search, so this header doubles as the oracle the subshift code is checked against.

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace shiftlab {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxRelationSize = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

// A subset of X x X for |X| <= 64, stored as one row mask per x: row(x) = U[x].
class Relation {
public:
    explicit Relation(std::size_t n = 0) : n_(n), rows_(n, 0) {
        require_input(n <= kMaxRelationSize, "relations are limited to 64 points");
    }

    static Relation identity(std::size_t n) {
        Relation r(n);
        for (std::size_t x = 0; x < n; ++x) r.rows_[x] = bit(x);
        return r;
    }
    static Relation full(std::size_t n) {
        Relation r(n);
        for (auto& row : r.rows_) row = low_bits(n);
        return r;
    }
    static Relation from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
        Relation r(n);
        for (auto [x, y] : pairs) r.set(x, y);
        return r;
    }
    // Graph of the equivalence relation whose classes are given by `label`.
    static Relation from_partition(const std::vector<int>& label) {
        Relation r(label.size());
        for (std::size_t x = 0; x < label.size(); ++x)
            for (std::size_t y = 0; y < label.size(); ++y)
                if (label[x] == label[y]) r.set(x, y);
        return r;
    }

    std::size_t size() const { return n_; }
    bool test(std::size_t x, std::size_t y) const { return (rows_.at(x) >> y) & 1U; }
    void set(std::size_t x, std::size_t y, bool on = true) {
        require_input(x < n_ && y < n_, "pair outside the ground set");
        if (on)
            rows_[x] |= bit(y);
        else
            rows_[x] &= ~bit(y);
    }
    Mask row(std::size_t x) const { return rows_.at(x); }

    bool reflexive() const {
        for (std::size_t x = 0; x < n_; ++x)
            if (!test(x, x)) return false;
        return true;
    }
    bool symmetric() const;
    bool transitive() const;
    bool is_equivalence() const { return reflexive() && symmetric() && transitive(); }
    bool subset_of(const Relation& o) const {
        check_same(o);
        for (std::size_t x = 0; x < n_; ++x)
            if (rows_[x] & ~o.rows_[x]) return false;
        return true;
    }
    std::size_t pair_count() const {
        std::size_t c = 0;
        for (auto r : rows_) c += static_cast<std::size_t>(std::popcount(r));
        return c;
    }

    friend Relation operator&(const Relation& a, const Relation& b) {
        a.check_same(b);
        Relation r(a.n_);
        for (std::size_t x = 0; x < a.n_; ++x) r.rows_[x] = a.rows_[x] & b.rows_[x];
        return r;
    }
    friend Relation operator|(const Relation& a, const Relation& b) {
        a.check_same(b);
        Relation r(a.n_);
        for (std::size_t x = 0; x < a.n_; ++x) r.rows_[x] = a.rows_[x] | b.rows_[x];
        return r;
    }
    friend bool operator==(const Relation&, const Relation&) = default;

    void check_same(const Relation& o) const {
        require_input(n_ == o.n_, "relations live on ground sets of different sizes");
    }

private:
    std::size_t n_;
    std::vector<Mask> rows_;
};

// U o V = {(x,y) : exists z with (x,z) in V and (z,y) in U}.
inline Relation compose(const Relation& u, const Relation& v) {
    u.check_same(v);
    Relation out(u.size());
    for (std::size_t x = 0; x < u.size(); ++x) {
        Mask acc = 0;
        for (Mask zs = v.row(x); zs; zs &= zs - 1) acc |= u.row(static_cast<std::size_t>(std::countr_zero(zs)));
        for (Mask ys = acc; ys; ys &= ys - 1) out.set(x, static_cast<std::size_t>(std::countr_zero(ys)));
    }
    return out;
}

inline Relation inverse(const Relation& u) {
    Relation out(u.size());
    for (std::size_t x = 0; x < u.size(); ++x)
        for (std::size_t y = 0; y < u.size(); ++y)
            if (u.test(x, y)) out.set(y, x);
    return out;
}

inline bool Relation::symmetric() const { return inverse(*this) == *this; }
inline bool Relation::transitive() const { return compose(*this, *this).subset_of(*this); }

// Number of classes of an equivalence relation.
inline std::size_t class_count(const Relation& r) {
    require_input(r.is_equivalence(), "class_count needs an equivalence relation");
    Mask seen = 0;
    std::size_t classes = 0;
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (seen & bit(x)) continue;
        seen |= r.row(x);
        ++classes;
    }
    return classes;
}

using Perm = std::vector<int>;
using GroupElem = std::int64_t;

enum class GroupKind { finite, integers };

// A finite set {0..n-1} with a group acting by permutations. For GroupKind::integers the group
// is Z acting through the powers of a single permutation and a GroupElem is the exponent; for
// GroupKind::finite the generated permutation group is materialized and a GroupElem indexes it
// (0 is the identity).
class FiniteDynSystem {
public:
    static FiniteDynSystem integers(std::size_t n, Perm gen, std::string name = "s") {
        FiniteDynSystem s(n, GroupKind::integers);
        s.check_perm(gen);
        s.names_.push_back(std::move(name));
        s.gens_.push_back(std::move(gen));
        s.z_order_ = s.perm_order(s.gens_[0]);
        return s;
    }

    static FiniteDynSystem finite(std::size_t n, std::vector<Perm> gens, std::vector<std::string> names = {},
                                  std::size_t max_order = 5040) {
        FiniteDynSystem s(n, GroupKind::finite);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            s.check_perm(gens[i]);
            s.names_.push_back(i < names.size() ? names[i] : "g" + std::to_string(i));
        }
        s.gens_ = std::move(gens);
        Perm id(n);
        for (std::size_t x = 0; x < n; ++x) id[x] = static_cast<int>(x);
        s.elements_.push_back(id);
        s.index_[id] = 0;
        for (std::size_t head = 0; head < s.elements_.size(); ++head) {
            for (const auto& g : s.gens_) {
                Perm p = s.mul(g, s.elements_[head]);
                if (s.index_.count(p)) continue;
                if (s.elements_.size() >= max_order)
                    throw CapExceeded("generated group exceeds the order cap of " + std::to_string(max_order));
                s.index_[p] = static_cast<GroupElem>(s.elements_.size());
                s.elements_.push_back(std::move(p));
            }
        }
        return s;
    }

    std::size_t size() const { return n_; }
    GroupKind kind() const { return kind_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<std::string>& generator_names() const { return names_; }
    std::size_t group_order() const { return kind_ == GroupKind::finite ? elements_.size() : 0; }
    // Order of the generating permutation (Z-actions only).
    std::size_t period() const { return z_order_; }

    GroupElem identity() const { return 0; }

    Perm element(GroupElem g) const {
        if (kind_ == GroupKind::finite) {
            if (g < 0 || static_cast<std::size_t>(g) >= elements_.size())
                throw InputError("unknown group element " + std::to_string(g));
            return elements_[static_cast<std::size_t>(g)];
        }
        const auto k = static_cast<GroupElem>(z_order_);
        GroupElem e = ((g % k) + k) % k;
        Perm p(n_);
        for (std::size_t x = 0; x < n_; ++x) p[x] = static_cast<int>(x);
        for (GroupElem i = 0; i < e; ++i) p = mul(gens_[0], p);
        return p;
    }

    int act(GroupElem g, int x) const { return element(g).at(static_cast<std::size_t>(x)); }

    // g*h, acting as x -> g(h(x)).
    GroupElem multiply(GroupElem g, GroupElem h) const {
        if (kind_ == GroupKind::integers) return g + h;
        return index_.at(mul(element(g), element(h)));
    }

    // Whole group for finite kinds; one full period 0..order-1 for Z.
    std::vector<GroupElem> default_horizon() const {
        std::vector<GroupElem> out;
        const std::size_t m = kind_ == GroupKind::finite ? elements_.size() : z_order_;
        for (std::size_t i = 0; i < m; ++i) out.push_back(static_cast<GroupElem>(i));
        return out;
    }

private:
    FiniteDynSystem(std::size_t n, GroupKind k) : n_(n), kind_(k) {
        require_input(n >= 1 && n <= kMaxRelationSize, "finite systems need 1..64 points");
    }

    void check_perm(const Perm& p) const {
        require_input(p.size() == n_, "generator has the wrong length");
        std::vector<bool> hit(n_, false);
        for (int v : p) {
            require_input(v >= 0 && static_cast<std::size_t>(v) < n_ && !hit[static_cast<std::size_t>(v)],
                          "generator is not a bijection");
            hit[static_cast<std::size_t>(v)] = true;
        }
    }
    Perm mul(const Perm& a, const Perm& b) const {
        Perm r(n_);
        for (std::size_t x = 0; x < n_; ++x) r[x] = a[static_cast<std::size_t>(b[x])];
        return r;
    }
    std::size_t perm_order(const Perm& p) const {
        Perm id(n_), cur = p;
        for (std::size_t x = 0; x < n_; ++x) id[x] = static_cast<int>(x);
        std::size_t k = 1;
        while (cur != id) {
            cur = mul(p, cur);
            ++k;
        }
        return k;
    }

    std::size_t n_;
    GroupKind kind_;
    std::vector<std::string> names_;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
    std::map<Perm, GroupElem> index_;
    std::size_t z_order_ = 1;
};

// U^(F) = intersection over g in F of g^{-1}U, i.e. pairs with (gx, gy) in U for every g in F.
inline Relation pullback(const Relation& u, const std::vector<GroupElem>& f, const FiniteDynSystem& sys) {
    require_input(!f.empty(), "pullback needs a nonempty F");
    require_input(u.size() == sys.size(), "entourage and system have different sizes");
    Relation out = Relation::full(u.size());
    for (GroupElem g : f) {
        const Perm p = sys.element(g);
        Relation pulled(u.size());
        for (std::size_t x = 0; x < u.size(); ++x)
            for (std::size_t y = 0; y < u.size(); ++y)
                if (u.test(static_cast<std::size_t>(p[x]), static_cast<std::size_t>(p[y]))) pulled.set(x, y);
        out = out & pulled;
    }
    return out;
}

// F g
inline std::vector<GroupElem> right_translate(const std::vector<GroupElem>& f, GroupElem g, const FiniteDynSystem& sys) {
    std::vector<GroupElem> out;
    for (GroupElem h : f) out.push_back(sys.multiply(h, g));
    return out;
}

struct SearchLimits {
    std::size_t max_points = 16;
};

namespace detail {

inline void check_cap(std::size_t n, const SearchLimits& lim) {
    if (n > lim.max_points)
        throw CapExceeded("instance too large: |X| = " + std::to_string(n) + " exceeds the exact-search cap of " +
                          std::to_string(lim.max_points));
}

// Maximum independent set of the graph given by adjacency masks.
inline std::size_t max_independent_set(const std::vector<Mask>& adj) {
    std::size_t best = 0;
    auto rec = [&](auto&& self, Mask cand, std::size_t taken) -> void {
        if (taken + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
        if (cand == 0) {
            best = taken;
            return;
        }
        const auto v = static_cast<std::size_t>(std::countr_zero(cand));
        self(self, cand & ~adj[v] & ~bit(v), taken + 1);
        self(self, cand & ~bit(v), taken);
    };
    rec(rec, low_bits(adj.size()), 0);
    return best;
}

// Fewest sets (from `sets`) whose union is `universe`. Branches on the lowest uncovered element.
inline std::size_t min_set_cover(Mask universe, const std::vector<Mask>& sets) {
    std::size_t biggest = 1;
    for (Mask s : sets) biggest = std::max(biggest, static_cast<std::size_t>(std::popcount(s & universe)));
    std::size_t best = static_cast<std::size_t>(std::popcount(universe)) + 1;
    auto rec = [&](auto&& self, Mask uncovered, std::size_t used) -> void {
        if (uncovered == 0) {
            best = std::min(best, used);
            return;
        }
        const std::size_t need = (static_cast<std::size_t>(std::popcount(uncovered)) + biggest - 1) / biggest;
        if (used + need >= best) return;
        const Mask x = uncovered & (~uncovered + 1);
        for (Mask s : sets)
            if (s & x) self(self, uncovered & ~s, used + 1);
    };
    rec(rec, universe, 0);
    return best;
}

// Maximal cliques (Bron-Kerbosch with pivoting).
inline std::vector<Mask> maximal_cliques(const std::vector<Mask>& adj) {
    std::vector<Mask> out;
    auto rec = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
        if (p == 0 && x == 0) {
            out.push_back(r);
            return;
        }
        const Mask px = p | x;
        const auto pivot = static_cast<std::size_t>(std::countr_zero(px));
        for (Mask cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(cand));
            self(self, r | bit(v), p & adj[v], x & adj[v]);
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    rec(rec, 0, low_bits(adj.size()), 0);
    return out;
}

}  // namespace detail

// Largest Z such that distinct z, z' in Z are never related by r in either order.
inline std::size_t max_separated(const Relation& r, const SearchLimits& lim = {}) {
    detail::check_cap(r.size(), lim);
    std::vector<Mask> conflict(r.size(), 0);
    for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < r.size(); ++y)
            if (x != y && (r.test(x, y) || r.test(y, x))) conflict[x] |= bit(y);
    return detail::max_independent_set(conflict);
}

// Smallest Z with: every x has some z in Z with (z, x) in r.
inline std::size_t min_spanning(const Relation& r, const SearchLimits& lim = {}) {
    detail::check_cap(r.size(), lim);
    std::vector<Mask> sets;
    for (std::size_t z = 0; z < r.size(); ++z) sets.push_back(r.row(z));
    return detail::min_set_cover(low_bits(r.size()), sets);
}

// Fewest blocks covering X with every block r-related to itself in both orders.
inline std::size_t min_cover(const Relation& r, const SearchLimits& lim = {}) {
    detail::check_cap(r.size(), lim);
    require_input(r.reflexive(), "covers are defined for reflexive relations");
    std::vector<Mask> sym(r.size(), 0);
    for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < r.size(); ++y)
            if (x != y && r.test(x, y) && r.test(y, x)) sym[x] |= bit(y);
    return detail::min_set_cover(low_bits(r.size()), detail::maximal_cliques(sym));
}

inline std::size_t sep(const FiniteDynSystem& sys, const std::vector<GroupElem>& f, const Relation& u,
                       const SearchLimits& lim = {}) {
    require_input(u.reflexive(), "entourages must be reflexive");
    return max_separated(pullback(u, f, sys), lim);
}
inline std::size_t spa(const FiniteDynSystem& sys, const std::vector<GroupElem>& f, const Relation& u,
                       const SearchLimits& lim = {}) {
    require_input(u.reflexive(), "entourages must be reflexive");
    return min_spanning(pullback(u, f, sys), lim);
}
inline std::size_t cov(const FiniteDynSystem& sys, const std::vector<GroupElem>& f, const Relation& u,
                       const SearchLimits& lim = {}) {
    require_input(u.reflexive(), "entourages must be reflexive");
    return min_cover(pullback(u, f, sys), lim);
}

struct ChainReport {
    // cov(V o V) <= spa(V) <= sep(V) <= spa(U) <= cov(U)
    std::array<std::size_t, 5> values{};
    std::array<bool, 4> holds{};
    bool all_hold() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

inline ChainReport check_chain(const FiniteDynSystem& sys, const std::vector<GroupElem>& f, const Relation& u,
                               const Relation& v, const SearchLimits& lim = {}) {
    if (!u.reflexive()) throw HypothesisError("hypothesis violated: U is not reflexive");
    if (!v.symmetric()) throw HypothesisError("hypothesis violated: V is not symmetric");
    if (!compose(u, inverse(u)).subset_of(v)) throw HypothesisError("hypothesis violated: U o U* is not inside V");
    ChainReport r;
    r.values = {cov(sys, f, compose(v, v), lim), spa(sys, f, v, lim), sep(sys, f, v, lim), spa(sys, f, u, lim),
                cov(sys, f, u, lim)};
    for (std::size_t i = 0; i < 4; ++i) r.holds[i] = r.values[i] <= r.values[i + 1];
    return r;
}

// True iff the intersection of g^{-1}U0 over the horizon is the diagonal.
inline bool is_expansive(const FiniteDynSystem& sys, const Relation& u0,
                         const std::optional<std::vector<GroupElem>>& horizon = std::nullopt) {
    const auto h = horizon ? *horizon : sys.default_horizon();
    return pullback(u0, h, sys) == Relation::identity(sys.size());
}

// Homoclinicity on a finite discrete system. For an infinite group (Z) two points are homoclinic
// iff their orbits eventually coincide, which for a permutation action means x == y. For a finite
// group the complement of the whole group is empty, so every pair is homoclinic.
inline bool finite_homoclinic(const FiniteDynSystem& sys, int x, int y) {
    return sys.kind() == GroupKind::finite || x == y;
}

struct FiniteMapReport {
    bool equivariant = false;
    bool injective = false;
    bool pre_injective = false;
    bool surjective = false;
};

inline FiniteMapReport analyze_map(const FiniteDynSystem& sys, const std::vector<int>& f) {
    require_input(f.size() == sys.size(), "map has the wrong length");
    for (int v : f) require_input(v >= 0 && static_cast<std::size_t>(v) < sys.size(), "map leaves the ground set");
    FiniteMapReport r;
    r.equivariant = true;
    for (const auto& g : sys.generators())
        for (std::size_t x = 0; x < sys.size(); ++x)
            if (f[static_cast<std::size_t>(g[x])] != g[static_cast<std::size_t>(f[x])]) r.equivariant = false;
    r.injective = true;
    r.pre_injective = true;
    std::vector<bool> hit(sys.size(), false);
    for (std::size_t x = 0; x < sys.size(); ++x) {
        hit[static_cast<std::size_t>(f[x])] = true;
        for (std::size_t y = x + 1; y < sys.size(); ++y) {
            if (f[x] != f[y]) continue;
            r.injective = false;
            if (finite_homoclinic(sys, static_cast<int>(x), static_cast<int>(y))) r.pre_injective = false;
        }
    }
    r.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return r;
}

// X = {x1, x2} with Z acting trivially and f(x1) = f(x2) = x1.
inline FiniteMapReport two_point_counterexample() {
    const auto sys = FiniteDynSystem::integers(2, Perm{0, 1}, "trivial");
    return analyze_map(sys, {0, 0});
}

// Text format:
//   n=<int>
//   group finite|z            (optional, default finite)
//   gen <name> <cycles>       e.g. gen a (0 1 2)(3 4)
//   entourage <name> <pairs>  e.g. entourage U (0,1) (1,0); the diagonal is always added
struct FiniteSystemFile {
    FiniteDynSystem system;
    std::map<std::string, Relation> entourages;
};

namespace detail {

inline Perm parse_cycles(std::size_t n, const std::string& text) {
    Perm p(n);
    for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<int>(x);
    std::vector<int> cycle;
    bool open = false;
    std::string num;
    auto flush_num = [&] {
        if (num.empty()) return;
        cycle.push_back(std::stoi(num));
        num.clear();
    };
    for (char ch : text) {
        if (ch == '(') {
            require_input(!open, "nested cycle in " + text);
            open = true;
            cycle.clear();
        } else if (ch == ')') {
            require_input(open, "unbalanced cycle in " + text);
            flush_num();
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
                require_input(from >= 0 && static_cast<std::size_t>(from) < n && to >= 0 &&
                                  static_cast<std::size_t>(to) < n,
                              "cycle entry out of range in " + text);
                p[static_cast<std::size_t>(from)] = to;
            }
            open = false;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            num += ch;
        } else if (ch == ' ' || ch == ',' || ch == '\t') {
            flush_num();
        } else {
            throw InputError("unexpected character in cycle list: " + text);
        }
    }
    require_input(!open, "unterminated cycle in " + text);
    return p;
}

inline std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::string cleaned;
    for (char ch : text) cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
    std::istringstream in(cleaned);
    long a = 0, b = 0;
    while (in >> a) {
        require_input(static_cast<bool>(in >> b), "odd number of entries in pair list");
        require_input(a >= 0 && b >= 0, "negative point in pair list");
        out.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
    require_input(in.eof(), "bad pair list: " + text);
    return out;
}

}  // namespace detail

inline FiniteSystemFile parse_finite_system(std::istream& in) {
    std::size_t n = 0;
    std::string kind = "finite";
    std::vector<std::pair<std::string, std::string>> gens, ents;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::string rest;
        std::getline(ls, rest);
        if (head.rfind("n=", 0) == 0) {
            n = static_cast<std::size_t>(std::stoul(head.substr(2)));
        } else if (head == "group") {
            std::istringstream(rest) >> kind;
            require_input(kind == "finite" || kind == "z", "group must be finite or z");
        } else if (head == "gen" || head == "entourage") {
            std::istringstream rs(rest);
            std::string name;
            rs >> name;
            std::string body;
            std::getline(rs, body);
            (head == "gen" ? gens : ents).emplace_back(name, body);
        } else {
            throw InputError("unknown directive in finite system: " + head);
        }
    }
    require_input(n > 0, "finite system needs n=<int>");
    std::vector<Perm> perms;
    std::vector<std::string> names;
    for (const auto& [name, body] : gens) {
        names.push_back(name);
        perms.push_back(detail::parse_cycles(n, body));
    }
    std::optional<FiniteDynSystem> sys;
    if (kind == "z") {
        require_input(perms.size() == 1, "a Z-action needs exactly one generator");
        sys = FiniteDynSystem::integers(n, perms[0], names[0]);
    } else {
        sys = FiniteDynSystem::finite(n, perms, names);
    }
    FiniteSystemFile out{*sys, {}};
    for (const auto& [name, body] : ents) {
        Relation r = Relation::identity(n) | Relation::from_pairs(n, detail::parse_pairs(body));
        out.entourages.emplace(name, std::move(r));
    }
    return out;
}

// Randomized sweeps over small systems. Outcomes depend only on the seed.
struct SweepReport {
    std::size_t instances = 0;
    std::size_t chain_violations = 0;
    std::size_t right_invariance_violations = 0;
    std::size_t monotonicity_violations = 0;
    std::size_t submultiplicativity_violations = 0;
    std::size_t total_violations() const {
        return chain_violations + right_invariance_violations + monotonicity_violations +
               submultiplicativity_violations;
    }
};

namespace detail {

inline std::size_t rand_below(std::mt19937_64& rng, std::size_t k) { return static_cast<std::size_t>(rng() % k); }

inline Perm random_perm(std::mt19937_64& rng, std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rand_below(rng, i)]);
    return p;
}

inline FiniteDynSystem random_system(std::mt19937_64& rng, std::size_t n) {
    if (rand_below(rng, 2) == 0) return FiniteDynSystem::integers(n, random_perm(rng, n));
    std::vector<Perm> gens{random_perm(rng, n)};
    if (rand_below(rng, 2) == 0) gens.push_back(random_perm(rng, n));
    try {
        return FiniteDynSystem::finite(n, gens, {}, 720);
    } catch (const CapExceeded&) {
        return FiniteDynSystem::integers(n, gens[0]);
    }
}

inline Relation random_reflexive(std::mt19937_64& rng, std::size_t n, std::size_t density_pct) {
    Relation r = Relation::identity(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (rand_below(rng, 100) < density_pct) r.set(x, y);
    return r;
}

inline std::vector<GroupElem> random_elements(std::mt19937_64& rng, const FiniteDynSystem& sys) {
    const std::size_t k = 1 + rand_below(rng, 3);
    std::vector<GroupElem> out;
    for (std::size_t i = 0; i < k; ++i) {
        if (sys.kind() == GroupKind::integers)
            out.push_back(static_cast<GroupElem>(rand_below(rng, 7)) - 3);
        else
            out.push_back(static_cast<GroupElem>(rand_below(rng, sys.group_order())));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// Chain inequality, right invariance, monotonicity in U and submultiplicativity of cov on random
// systems with |X| <= max_points.
inline SweepReport chain_sweep(std::size_t instances, std::uint64_t seed, std::size_t max_points = 10) {
    std::mt19937_64 rng(seed);
    SweepReport rep;
    for (std::size_t i = 0; i < instances; ++i) {
        const std::size_t n = 2 + detail::rand_below(rng, max_points - 1);
        const auto sys = detail::random_system(rng, n);
        const Relation u = detail::random_reflexive(rng, n, 10 + detail::rand_below(rng, 40));
        Relation v = compose(u, inverse(u));
        const Relation extra = detail::random_reflexive(rng, n, detail::rand_below(rng, 20));
        v = v | extra | inverse(extra);
        const auto f = detail::random_elements(rng, sys);
        const auto e = detail::random_elements(rng, sys);
        const GroupElem g = detail::random_elements(rng, sys).front();

        const auto chain = check_chain(sys, f, u, v);
        if (!chain.all_hold()) ++rep.chain_violations;

        const auto fg = right_translate(f, g, sys);
        if (sep(sys, fg, u) != sep(sys, f, u) || spa(sys, fg, u) != spa(sys, f, u) ||
            cov(sys, fg, u) != cov(sys, f, u))
            ++rep.right_invariance_violations;

        // A larger entourage makes more points close, so every count can only shrink.
        const Relation bigger = u | detail::random_reflexive(rng, n, 15);
        if (sep(sys, f, bigger) > sep(sys, f, u) || spa(sys, f, bigger) > spa(sys, f, u) ||
            cov(sys, f, bigger) > cov(sys, f, u))
            ++rep.monotonicity_violations;

        std::vector<GroupElem> ef(e);
        ef.insert(ef.end(), f.begin(), f.end());
        std::sort(ef.begin(), ef.end());
        ef.erase(std::unique(ef.begin(), ef.end()), ef.end());
        if (cov(sys, ef, u) > cov(sys, e, u) * cov(sys, f, u)) ++rep.submultiplicativity_violations;
        ++rep.instances;
    }
    return rep;
}

struct EquivalenceSweepReport {
    std::size_t instances = 0;
    std::size_t mismatches = 0;
};

// sep = spa = cov = number of classes whenever U^(F) is an equivalence relation.
inline EquivalenceSweepReport equivalence_sweep(std::size_t instances, std::uint64_t seed,
                                                std::size_t max_points = 12) {
    std::mt19937_64 rng(seed);
    EquivalenceSweepReport rep;
    for (std::size_t i = 0; i < instances; ++i) {
        const std::size_t n = 2 + detail::rand_below(rng, max_points - 1);
        const auto sys = detail::random_system(rng, n);
        std::vector<int> label(n);
        const std::size_t blocks = 1 + detail::rand_below(rng, n);
        for (auto& l : label) l = static_cast<int>(detail::rand_below(rng, blocks));
        const Relation u = Relation::from_partition(label);
        const auto f = detail::random_elements(rng, sys);
        const Relation uf = pullback(u, f, sys);
        const std::size_t k = class_count(uf);
        if (sep(sys, f, u) != k || spa(sys, f, u) != k || cov(sys, f, u) != k) ++rep.mismatches;
        ++rep.instances;
    }
    return rep;
}

}  // namespace shiftlab
