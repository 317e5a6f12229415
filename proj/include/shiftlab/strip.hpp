#pragma once

// Row-by-row transfer for d = 2 SFTs on strips of fixed width. Patterns are locally admissible
// rectangles (no forbidden pattern fully inside); rows are the first coordinate.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

#include "graph.hpp"
#include "presentation.hpp"

namespace shiftlab {

using bigint = boost::multiprecision::cpp_int;

struct StripOptions {
    std::size_t max_states = 1u << 17;
    bool cyclic = false;  // columns wrap around (horizontally periodic points)
};

class StripTransfer {
public:
    StripTransfer(const ShiftPresentation& x, coord_t cols, StripOptions opt = {})
        : k_(x.alphabet().size()), cols_(cols), opt_(opt) {
        require_input(x.dim() == 2, "strip transfer needs a d = 2 shift");
        require_input(cols >= 1, "strip width must be positive");
        for (const auto& f : x.forbidden()) {
            Forb g;
            const Point hi = f.shape().upper();
            g.height = hi[0] + 1;
            g.width = hi[1] + 1;
            for (std::size_t i = 0; i < f.size(); ++i) g.cells.push_back({f.shape()[i][0], f.shape()[i][1], f.values()[i]});
            height_ = std::max(height_, g.height);
            if (!opt_.cyclic && g.width > cols_) continue;  // never fits
            forb_.push_back(std::move(g));
        }
        enumerate_rows();
        build_states();
    }

    coord_t cols() const { return cols_; }
    // Number of rows a forbidden pattern can span.
    coord_t height() const { return height_; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t state_count() const { return stacks_.size(); }
    const std::vector<std::vector<int>>& successors() const { return succ_; }

    // Locally admissible rows x cols rectangles (or cylinders when cyclic).
    bigint count(coord_t rows) const {
        require_input(rows >= 0, "negative row count");
        if (rows == 0) return 1;
        const coord_t h = height_ - 1;
        if (rows <= h) return count_short(rows);
        std::vector<bigint> cur(stacks_.size(), 1);
        for (coord_t r = h; r < rows; ++r) {
            std::vector<bigint> nxt(stacks_.size(), 0);
            for (std::size_t s = 0; s < stacks_.size(); ++s) {
                if (cur[s] == 0) continue;
                for (int t : succ_[s]) nxt[static_cast<std::size_t>(t)] += cur[s];
            }
            cur.swap(nxt);
        }
        bigint total = 0;
        for (const auto& c : cur) total += c;
        return total;
    }

    double spectral_radius(const PerronOptions& opt = {}) const { return shiftlab::spectral_radius(succ_, opt); }

    // All admissible rectangles with the given number of rows, row-major values.
    std::vector<std::vector<Symbol>> enumerate(coord_t rows, std::size_t cap) const {
        std::vector<std::vector<Symbol>> out;
        std::vector<int> stack;
        enumerate_rec(rows, stack, out, cap);
        return out;
    }

private:
    struct Cell {
        coord_t r, c;
        Symbol s;
    };
    struct Forb {
        coord_t height = 1, width = 1;
        std::vector<Cell> cells;
    };

    Symbol cell(int row, coord_t c) const {
        if (opt_.cyclic) c = ((c % cols_) + cols_) % cols_;
        return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
    }

    // Does some forbidden pattern occur with its bottom row on the last row of `window`?
    bool bottom_violation(const std::vector<int>& window) const {
        const auto n = static_cast<coord_t>(window.size());
        for (const auto& f : forb_) {
            if (f.height > n) continue;
            const coord_t top = n - f.height;
            const coord_t last_anchor = opt_.cyclic ? cols_ - 1 : cols_ - f.width;
            for (coord_t a = 0; a <= last_anchor; ++a) {
                bool match = true;
                for (const auto& cl : f.cells) {
                    if (cell(window[static_cast<std::size_t>(top + cl.r)], a + cl.c) != cl.s) {
                        match = false;
                        break;
                    }
                }
                if (match) return true;
            }
        }
        return false;
    }

    void enumerate_rows() {
        std::size_t total = 1;
        for (coord_t i = 0; i < cols_; ++i) {
            total *= static_cast<std::size_t>(k_);
            if (total > opt_.max_states * 8) throw CapExceeded("strip width too large for row enumeration");
        }
        std::vector<Symbol> row(static_cast<std::size_t>(cols_));
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (coord_t i = cols_ - 1; i >= 0; --i) {
                row[static_cast<std::size_t>(i)] = static_cast<Symbol>(c % static_cast<std::size_t>(k_));
                c /= static_cast<std::size_t>(k_);
            }
            rows_.push_back(row);
            if (bottom_violation({static_cast<int>(rows_.size() - 1)})) rows_.pop_back();
        }
    }

    // States are stacks of height - 1 consecutive admissible rows.
    void build_states() {
        const coord_t h = height_ - 1;
        std::vector<int> stack;
        collect_stacks(h, stack);
        std::map<std::vector<int>, int> id;
        for (std::size_t i = 0; i < stacks_.size(); ++i) id[stacks_[i]] = static_cast<int>(i);
        succ_.assign(stacks_.size(), {});
        for (std::size_t s = 0; s < stacks_.size(); ++s) {
            std::vector<int> window = stacks_[s];
            window.push_back(0);
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                window.back() = static_cast<int>(r);
                if (bottom_violation(window)) continue;
                std::vector<int> next(window.begin() + 1, window.end());
                succ_[s].push_back(id.at(next));
            }
        }
    }

    void collect_stacks(coord_t h, std::vector<int>& stack) {
        if (static_cast<coord_t>(stack.size()) == h) {
            if (stacks_.size() >= opt_.max_states) throw CapExceeded("strip state space exceeds its cap");
            stacks_.push_back(stack);
            return;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            stack.push_back(static_cast<int>(r));
            if (!bottom_violation(stack)) collect_stacks(h, stack);
            stack.pop_back();
        }
    }

    bigint count_short(coord_t rows) const {
        std::vector<int> stack;
        return count_rec(rows, stack);
    }
    bigint count_rec(coord_t rows, std::vector<int>& stack) const {
        if (static_cast<coord_t>(stack.size()) == rows) return 1;
        bigint total = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            stack.push_back(static_cast<int>(r));
            if (!bottom_violation(stack)) total += count_rec(rows, stack);
            stack.pop_back();
        }
        return total;
    }

    void enumerate_rec(coord_t rows, std::vector<int>& stack, std::vector<std::vector<Symbol>>& out,
                       std::size_t cap) const {
        if (static_cast<coord_t>(stack.size()) == rows) {
            if (out.size() >= cap) throw CapExceeded("pattern enumeration exceeds its cap");
            std::vector<Symbol> v;
            for (int r : stack) v.insert(v.end(), rows_[static_cast<std::size_t>(r)].begin(), rows_[static_cast<std::size_t>(r)].end());
            out.push_back(std::move(v));
            return;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            stack.push_back(static_cast<int>(r));
            if (!bottom_violation(stack)) enumerate_rec(rows, stack, out, cap);
            stack.pop_back();
        }
    }

    int k_;
    coord_t cols_;
    StripOptions opt_;
    coord_t height_ = 1;
    std::vector<Forb> forb_;
    std::vector<std::vector<Symbol>> rows_;
    std::vector<std::vector<int>> stacks_;
    std::vector<std::vector<int>> succ_;
};

}  // namespace shiftlab
