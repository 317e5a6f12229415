#pragma once

// Alphabets, patterns and shift presentations (SFT by forbidden patterns, or sofic by a labeled
// graph in d = 1), plus the text file formats `sft-v1` and `sofic-v1`.

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "graph.hpp"
#include "lattice.hpp"

namespace shiftlab {

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
        require_input(!tokens_.empty(), "alphabet must be nonempty");
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            require_input(!tokens_[i].empty(), "empty alphabet token");
            require_input(tokens_[i].find_first_of("./ \t") == std::string::npos,
                          "alphabet tokens may not contain '.', '/' or whitespace");
            require_input(index_.emplace(tokens_[i], static_cast<Symbol>(i)).second,
                          "duplicate alphabet token " + tokens_[i]);
        }
    }
    static Alphabet binary() { return Alphabet({"0", "1"}); }

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(Symbol s) const { return tokens_.at(static_cast<std::size_t>(s)); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    Symbol symbol(const std::string& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) throw InputError("symbol '" + t + "' is not in the alphabet");
        return it->second;
    }
    // All tokens are one character long, so words can be written without separators.
    bool compact() const {
        for (const auto& t : tokens_)
            if (t.size() != 1) return false;
        return true;
    }

    std::string format(const std::vector<Symbol>& w) const {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!compact() && i) out += ' ';
            out += token(w[i]);
        }
        return out;
    }

    // Letters, with '.' for an unconstrained cell.
    std::vector<std::optional<Symbol>> parse_word(const std::string& text) const {
        std::vector<std::optional<Symbol>> out;
        if (compact()) {
            for (char ch : text) {
                if (ch == ' ' || ch == '\t') continue;
                if (ch == '.')
                    out.emplace_back(std::nullopt);
                else
                    out.emplace_back(symbol(std::string(1, ch)));
            }
        } else {
            std::istringstream in(text);
            std::string t;
            while (in >> t) {
                if (t == ".")
                    out.emplace_back(std::nullopt);
                else
                    out.emplace_back(symbol(t));
            }
        }
        return out;
    }

    std::vector<Symbol> parse_full_word(const std::string& text) const {
        std::vector<Symbol> out;
        for (const auto& s : parse_word(text)) {
            require_input(s.has_value(), "holes are not allowed here: " + text);
            out.push_back(*s);
        }
        return out;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::map<std::string, Symbol> index_;
};

// An assignment of symbols to a finite shape; values follow the shape's canonical order.
class Pattern {
public:
    Pattern() = default;
    Pattern(Shape shape, std::vector<Symbol> values) : shape_(std::move(shape)), values_(std::move(values)) {
        require_input(shape_.size() == values_.size(), "pattern values do not match its shape");
    }
    // The word w placed at start, start+1, ...
    static Pattern word(coord_t start, const std::vector<Symbol>& w) {
        return Pattern(Shape::interval(start, start + static_cast<coord_t>(w.size()) - 1), w);
    }

    const Shape& shape() const { return shape_; }
    const std::vector<Symbol>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    int dim() const { return shape_.dim(); }

    std::optional<Symbol> at(const Point& p) const {
        const auto i = shape_.index_of(p);
        if (i < 0) return std::nullopt;
        return values_[static_cast<std::size_t>(i)];
    }

    Pattern translated(const Point& g) const { return Pattern(translate(shape_, g), values_); }

    // Restriction to a subshape (which must lie inside the pattern's shape).
    Pattern restrict_to(const Shape& s) const {
        std::vector<Symbol> v;
        for (const auto& p : s) {
            auto a = at(p);
            require_input(a.has_value(), "restriction outside the pattern's shape");
            v.push_back(*a);
        }
        return Pattern(s, std::move(v));
    }

    nlohmann::json to_json(const Alphabet& a) const {
        std::vector<std::string> toks;
        for (Symbol s : values_) toks.push_back(a.token(s));
        return {{"shape", shape_.to_json()}, {"values", toks}};
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend bool operator<(const Pattern& a, const Pattern& b) {
        if (a.shape_ == b.shape_) return a.values_ < b.values_;
        return a.shape_ < b.shape_;
    }

private:
    Shape shape_;
    std::vector<Symbol> values_;
};

// Two-dimensional pattern text: rows separated by '/', first coordinate = row index.
inline Pattern parse_pattern(const Alphabet& a, int dim, const std::string& text) {
    std::vector<Point> pts;
    std::vector<Symbol> vals;
    std::vector<std::string> rows;
    if (dim == 1) {
        rows.push_back(text);
    } else {
        std::string cur;
        for (char ch : text) {
            if (ch == '/') {
                rows.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        rows.push_back(cur);
    }
    std::vector<std::pair<Point, Symbol>> cells;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto w = a.parse_word(rows[r]);
        for (std::size_t c = 0; c < w.size(); ++c) {
            if (!w[c]) continue;
            const Point p = dim == 1 ? Point::of(static_cast<coord_t>(c))
                                     : Point::of(static_cast<coord_t>(r), static_cast<coord_t>(c));
            cells.emplace_back(p, *w[c]);
        }
    }
    require_input(!cells.empty(), "pattern has no constrained cell: " + text);
    std::sort(cells.begin(), cells.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [p, s] : cells) {
        pts.push_back(p);
        vals.push_back(s);
    }
    return Pattern(Shape(dim, std::move(pts)), std::move(vals));
}

enum class ShiftKind { sft, sofic };

// A subshift of A^(Z^d). In d = 1 every presentation is compiled to a right-resolving essential
// labeled graph (`graph()`), SFTs through higher-block recoding and sofic graphs through subset
// construction, and the factor-language automaton (`language_dfa()`) is built alongside.
class ShiftPresentation {
public:
    static ShiftPresentation sft(Alphabet alphabet, int dim, std::vector<Pattern> forbidden, std::string name = "") {
        ShiftPresentation x(std::move(alphabet), dim, ShiftKind::sft, std::move(name));
        for (auto& p : forbidden) {
            require_input(p.dim() == dim, "forbidden pattern has the wrong dimension");
            for (Symbol s : p.values()) require_input(s >= 0 && s < x.alphabet_.size(), "symbol outside alphabet");
            p = p.translated(-p.shape().lower());  // anchor at the origin
        }
        x.forbidden_ = std::move(forbidden);
        x.window_ = Shape(dim);
        for (const auto& p : x.forbidden_) x.window_ = shape_union(x.window_, p.shape());
        if (dim == 1) {
            x.build_sft_graph();
        } else {
            x.check_nonempty_2d();
        }
        return x;
    }

    static ShiftPresentation sofic(Alphabet alphabet, const LabeledGraph& g, std::string name = "") {
        require_input(g.alphabet_size() == alphabet.size(), "graph labels do not match the alphabet");
        ShiftPresentation x(std::move(alphabet), 1, ShiftKind::sofic, std::move(name));
        x.raw_graph_ = g;
        x.graph_ = std::make_shared<const LabeledGraph>(determinize(g));
        x.finish_1d();
        return x;
    }

    static ShiftPresentation full(Alphabet alphabet, int dim = 1, std::string name = "full") {
        return sft(std::move(alphabet), dim, {}, std::move(name));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int dim() const { return dim_; }
    ShiftKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::vector<Pattern>& forbidden() const { return forbidden_; }
    // Union of the anchored forbidden shapes.
    const Shape& window() const { return window_; }
    // Recoding memory (length of the vertex words) for d = 1 SFTs.
    int memory() const { return memory_; }
    const LabeledGraph& raw_graph() const { return raw_graph_; }

    const LabeledGraph& graph() const {
        require_input(dim_ == 1, "graph presentations exist only for d = 1");
        return *graph_;
    }
    // Automaton of the factor language L(X): reads w from the set of all vertices.
    const SubsetAutomaton& language_dfa() const {
        require_input(dim_ == 1, "language automata exist only for d = 1");
        return *dfa_;
    }

    // True if no forbidden pattern occurs fully inside the finite pattern.
    bool locally_admissible(const Pattern& p) const {
        for (const auto& f : forbidden_) {
            const Point fl = f.shape().lower();
            (void)fl;
            for (const auto& anchor : p.shape()) {
                bool match = true;
                for (std::size_t i = 0; i < f.size() && match; ++i) {
                    const auto v = p.at(anchor + f.shape()[i]);
                    match = v && *v == f.values()[i];
                }
                if (match) return false;
            }
        }
        return true;
    }

    // A symbol that occurs in no forbidden pattern; inserting it never creates a violation.
    std::optional<Symbol> safe_symbol() const {
        for (Symbol s = 0; s < alphabet_.size(); ++s) {
            bool used = false;
            for (const auto& f : forbidden_)
                for (Symbol v : f.values()) used = used || v == s;
            if (!used) return s;
        }
        return std::nullopt;
    }

private:
    ShiftPresentation(Alphabet a, int dim, ShiftKind k, std::string name)
        : alphabet_(std::move(a)), dim_(dim), kind_(k), name_(std::move(name)), window_(dim) {
        require_input(dim == 1 || dim == 2, "only d = 1 and d = 2 are supported");
    }

    static constexpr std::size_t kMaxRecodedVertices = 1u << 20;

    bool word_clean(const std::vector<Symbol>& w) const {
        for (const auto& f : forbidden_) {
            const coord_t len = f.shape().upper()[0] + 1;
            for (coord_t s = 0; s + len <= static_cast<coord_t>(w.size()); ++s) {
                bool match = true;
                for (std::size_t i = 0; i < f.size() && match; ++i)
                    match = w[static_cast<std::size_t>(s + f.shape()[i][0])] == f.values()[i];
                if (match) return false;
            }
        }
        return true;
    }

    void build_sft_graph() {
        coord_t longest = 1;
        for (const auto& f : forbidden_) longest = std::max(longest, f.shape().upper()[0] + 1);
        memory_ = static_cast<int>(std::max<coord_t>(1, longest - 1));
        const auto k = static_cast<std::size_t>(alphabet_.size());
        std::size_t count = 1;
        for (int i = 0; i < memory_; ++i) {
            count *= k;
            if (count > kMaxRecodedVertices) throw CapExceeded("higher-block recoding is too large");
        }
        auto decode = [&](std::size_t code) {
            std::vector<Symbol> w(static_cast<std::size_t>(memory_));
            for (int i = memory_ - 1; i >= 0; --i) {
                w[static_cast<std::size_t>(i)] = static_cast<Symbol>(code % k);
                code /= k;
            }
            return w;
        };
        LabeledGraph g(static_cast<int>(count), alphabet_.size());
        for (std::size_t u = 0; u < count; ++u) {
            const auto wu = decode(u);
            if (!word_clean(wu)) continue;
            for (std::size_t a = 0; a < k; ++a) {
                auto w = wu;
                w.push_back(static_cast<Symbol>(a));
                if (!word_clean(w)) continue;
                const std::size_t v = (u * k + a) % count;
                g.add_edge(static_cast<int>(u), static_cast<int>(v), static_cast<Symbol>(a));
            }
        }
        raw_graph_ = g;
        graph_ = std::make_shared<const LabeledGraph>(trim_essential(g));
        finish_1d();
    }

    void finish_1d() {
        if (graph_->vertex_count() == 0) throw InputError("the presented shift is empty");
        dfa_ = std::make_shared<const SubsetAutomaton>(*graph_, all_vertices(*graph_));
    }

    // Nonemptiness of a d = 2 SFT is undecidable in general; accept it once some doubly periodic
    // point with periods up to 3 x 3 is found.
    void check_nonempty_2d() {
        const auto k = static_cast<std::size_t>(alphabet_.size());
        for (coord_t p0 = 1; p0 <= 3; ++p0)
            for (coord_t p1 = 1; p1 <= 3; ++p1) {
                const auto cells = static_cast<std::size_t>(p0 * p1);
                std::size_t total = 1;
                for (std::size_t i = 0; i < cells; ++i) total *= k;
                for (std::size_t code = 0; code < total; ++code) {
                    std::vector<Symbol> fund(cells);
                    std::size_t c = code;
                    for (auto& s : fund) {
                        s = static_cast<Symbol>(c % k);
                        c /= k;
                    }
                    if (torus_admissible(p0, p1, fund)) return;
                }
            }
        throw InputError("could not certify that the d = 2 shift is nonempty (no periodic point up to 3x3)");
    }

public:
    // Doubly periodic configuration with fundamental domain p0 x p1 (row-major) avoids all forbidden patterns.
    bool torus_admissible(coord_t p0, coord_t p1, const std::vector<Symbol>& fund) const {
        auto at = [&](coord_t r, coord_t c) {
            r = ((r % p0) + p0) % p0;
            c = ((c % p1) + p1) % p1;
            return fund[static_cast<std::size_t>(r * p1 + c)];
        };
        for (const auto& f : forbidden_)
            for (coord_t r = 0; r < p0; ++r)
                for (coord_t c = 0; c < p1; ++c) {
                    bool match = true;
                    for (std::size_t i = 0; i < f.size() && match; ++i)
                        match = at(r + f.shape()[i][0], c + f.shape()[i][1]) == f.values()[i];
                    if (match) return false;
                }
        return true;
    }

private:
    Alphabet alphabet_;
    int dim_;
    ShiftKind kind_;
    std::string name_;
    std::vector<Pattern> forbidden_;
    Shape window_;
    int memory_ = 0;
    LabeledGraph raw_graph_;
    std::shared_ptr<const LabeledGraph> graph_;
    std::shared_ptr<const SubsetAutomaton> dfa_;
};

// File format:
//   format sft-v1 | sofic-v1
//   dim 1|2
//   alphabet <tokens>
//   forbidden <word>          (sft; '.' = any symbol, '/' separates rows in d = 2)
//   vertex <name>             (sofic)
//   edge <from> <to> <label>  (sofic)
inline ShiftPresentation parse_shift(std::istream& in, const std::string& name = "") {
    std::string format, line;
    int dim = 1;
    std::optional<Alphabet> alphabet;
    std::vector<std::string> forbidden_text;
    std::vector<std::string> vertices;
    std::vector<std::array<std::string, 3>> edges;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::string rest;
        std::getline(ls, rest);
        const auto b = rest.find_first_not_of(" \t");
        rest = b == std::string::npos ? "" : rest.substr(b);
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r')) rest.pop_back();
        if (head == "format") {
            format = rest;
        } else if (head == "dim") {
            dim = std::stoi(rest);
        } else if (head == "alphabet") {
            std::istringstream ts(rest);
            std::vector<std::string> toks;
            std::string t;
            while (ts >> t) toks.push_back(t);
            alphabet = Alphabet(toks);
        } else if (head == "forbidden") {
            forbidden_text.push_back(rest);
        } else if (head == "vertex") {
            vertices.push_back(rest);
        } else if (head == "edge") {
            std::istringstream es(rest);
            std::array<std::string, 3> e;
            require_input(static_cast<bool>(es >> e[0] >> e[1] >> e[2]), "edge needs <from> <to> <label>");
            edges.push_back(e);
        } else {
            throw InputError("unknown directive in shift file: " + head);
        }
    }
    require_input(alphabet.has_value(), "shift file needs an alphabet line");
    if (format == "sft-v1") {
        require_input(vertices.empty() && edges.empty(), "sft files may not contain vertex/edge lines");
        std::vector<Pattern> pats;
        for (const auto& t : forbidden_text) pats.push_back(parse_pattern(*alphabet, dim, t));
        return ShiftPresentation::sft(*alphabet, dim, std::move(pats), name);
    }
    if (format == "sofic-v1") {
        require_input(dim == 1, "sofic presentations are supported only for d = 1");
        require_input(forbidden_text.empty(), "sofic files may not contain forbidden lines");
        std::map<std::string, int> id;
        LabeledGraph g(0, alphabet->size());
        for (const auto& v : vertices) {
            require_input(!id.count(v), "duplicate vertex " + v);
            id[v] = g.add_vertex();
        }
        for (const auto& e : edges) {
            require_input(id.count(e[0]) && id.count(e[1]), "edge uses an undeclared vertex");
            g.add_edge(id[e[0]], id[e[1]], alphabet->symbol(e[2]));
        }
        return ShiftPresentation::sofic(*alphabet, g, name);
    }
    throw InputError("unknown or missing format line (expected sft-v1 or sofic-v1)");
}

inline ShiftPresentation load_shift(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open shift file " + path.string());
    return parse_shift(in, path.stem().string());
}

inline ShiftPresentation shift_from_string(const std::string& text, const std::string& name = "") {
    std::istringstream in(text);
    return parse_shift(in, name);
}

}  // namespace shiftlab
