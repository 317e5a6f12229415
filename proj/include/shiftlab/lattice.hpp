#pragma once

// The acting group Z^d (d = 1 or 2), finite shapes in it and box Folner sequences.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "error.hpp"

namespace shiftlab {

using coord_t = std::int64_t;

struct Point {
    int dim = 1;
    std::array<coord_t, 2> c{0, 0};

    static Point of(coord_t x) { return Point{1, {x, 0}}; }
    static Point of(coord_t x, coord_t y) { return Point{2, {x, y}}; }
    static Point zero(int dim) { return Point{dim, {0, 0}}; }

    coord_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    friend Point operator+(const Point& a, const Point& b) {
        require_input(a.dim == b.dim, "dimension mismatch");
        return Point{a.dim, {a.c[0] + b.c[0], a.c[1] + b.c[1]}};
    }
    friend Point operator-(const Point& a, const Point& b) {
        require_input(a.dim == b.dim, "dimension mismatch");
        return Point{a.dim, {a.c[0] - b.c[0], a.c[1] - b.c[1]}};
    }
    Point operator-() const { return Point{dim, {-c[0], -c[1]}}; }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b) {
        if (auto r = a.dim <=> b.dim; r != 0) return r;
        return a.c <=> b.c;
    }
};

// Exact |num/den| with den > 0, reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t n, std::int64_t d) {
        require_input(d != 0, "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const auto g = std::gcd(n < 0 ? -n : n, d);
        return Rational{n / (g ? g : 1), d / (g ? g : 1)};
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
};

// A finite subset of Z^d, kept sorted and duplicate-free so equality is structural.
class Shape {
public:
    explicit Shape(int dim = 1) : dim_(dim) { check_dim(dim); }
    Shape(int dim, std::vector<Point> pts) : dim_(dim), pts_(std::move(pts)) {
        check_dim(dim);
        for (const auto& p : pts_) require_input(p.dim == dim, "point dimension does not match shape");
        std::sort(pts_.begin(), pts_.end());
        pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    }

    static Shape of(std::initializer_list<coord_t> xs) {
        std::vector<Point> pts;
        for (auto x : xs) pts.push_back(Point::of(x));
        return Shape(1, std::move(pts));
    }
    static Shape of(const std::vector<coord_t>& xs) {
        std::vector<Point> pts;
        for (auto x : xs) pts.push_back(Point::of(x));
        return Shape(1, std::move(pts));
    }
    // {lo, ..., hi} in Z; empty when hi < lo.
    static Shape interval(coord_t lo, coord_t hi) {
        std::vector<Point> pts;
        for (coord_t x = lo; x <= hi; ++x) pts.push_back(Point::of(x));
        return Shape(1, std::move(pts));
    }
    // {0, ..., n-1}^dim
    static Shape box(coord_t n, int dim) {
        require_input(n >= 0, "box size must be nonnegative");
        if (dim == 1) return interval(0, n - 1);
        std::vector<Point> pts;
        for (coord_t x = 0; x < n; ++x)
            for (coord_t y = 0; y < n; ++y) pts.push_back(Point::of(x, y));
        return Shape(2, std::move(pts));
    }
    // rows x cols rectangle anchored at the origin (first coordinate = row).
    static Shape rect(coord_t rows, coord_t cols) {
        std::vector<Point> pts;
        for (coord_t x = 0; x < rows; ++x)
            for (coord_t y = 0; y < cols; ++y) pts.push_back(Point::of(x, y));
        return Shape(2, std::move(pts));
    }

    int dim() const { return dim_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<Point>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }

    bool contains(const Point& p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }
    // Position of p in the canonical order, or -1.
    std::ptrdiff_t index_of(const Point& p) const {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
        return (it != pts_.end() && *it == p) ? it - pts_.begin() : -1;
    }

    // Axis-aligned bounds; undefined on an empty shape.
    Point lower() const {
        Point lo = pts_.front();
        for (const auto& p : pts_)
            for (int i = 0; i < dim_; ++i) lo.c[i] = std::min(lo.c[i], p.c[i]);
        return lo;
    }
    Point upper() const {
        Point hi = pts_.front();
        for (const auto& p : pts_)
            for (int i = 0; i < dim_; ++i) hi.c[i] = std::max(hi.c[i], p.c[i]);
        return hi;
    }

    // Convex hull in Z (d = 1 only).
    Shape hull() const {
        require_input(dim_ == 1, "hull is only defined for d = 1");
        if (empty()) return *this;
        return interval(lower()[0], upper()[0]);
    }
    bool is_interval() const {
        return dim_ == 1 && !empty() && static_cast<coord_t>(size()) == upper()[0] - lower()[0] + 1;
    }
    bool is_box() const {
        if (empty()) return false;
        const Point lo = lower(), hi = upper();
        std::size_t expect = 1;
        for (int i = 0; i < dim_; ++i) expect *= static_cast<std::size_t>(hi.c[i] - lo.c[i] + 1);
        return expect == size();
    }

    friend bool operator==(const Shape&, const Shape&) = default;
    friend bool operator<(const Shape& a, const Shape& b) {
        return std::tie(a.dim_, a.pts_) < std::tie(b.dim_, b.pts_);
    }

    nlohmann::json to_json() const {
        auto arr = nlohmann::json::array();
        for (const auto& p : pts_) {
            if (dim_ == 1)
                arr.push_back(p.c[0]);
            else
                arr.push_back({p.c[0], p.c[1]});
        }
        return arr;
    }
    std::string str() const { return to_json().dump(); }

private:
    static void check_dim(int d) { require_input(d == 1 || d == 2, "only Z and Z^2 are supported"); }

    int dim_;
    std::vector<Point> pts_;
};

inline Shape translate(const Shape& s, const Point& g) {
    require_input(s.dim() == g.dim, "dimension mismatch between shape and translation");
    std::vector<Point> out;
    out.reserve(s.size());
    for (const auto& p : s) out.push_back(p + g);
    return Shape(s.dim(), std::move(out));
}

// {-p : p in s}
inline Shape reflect(const Shape& s) {
    std::vector<Point> out;
    for (const auto& p : s) out.push_back(-p);
    return Shape(s.dim(), std::move(out));
}

// Sumset E + F.
inline Shape shape_product(const Shape& e, const Shape& f) {
    require_input(e.dim() == f.dim(), "dimension mismatch in shape product");
    std::vector<Point> out;
    out.reserve(e.size() * f.size());
    for (const auto& a : e)
        for (const auto& b : f) out.push_back(a + b);
    return Shape(e.dim(), std::move(out));
}

// Difference set E - F = {e - f}.
inline Shape shape_difference(const Shape& e, const Shape& f) { return shape_product(e, reflect(f)); }

inline Shape shape_union(const Shape& a, const Shape& b) {
    require_input(a.dim() == b.dim(), "dimension mismatch in union");
    std::vector<Point> out(a.points());
    out.insert(out.end(), b.begin(), b.end());
    return Shape(a.dim(), std::move(out));
}

inline Shape shape_intersection(const Shape& a, const Shape& b) {
    require_input(a.dim() == b.dim(), "dimension mismatch in intersection");
    std::vector<Point> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Shape(a.dim(), std::move(out));
}

inline bool disjoint(const Shape& a, const Shape& b) { return shape_intersection(a, b).empty(); }

// |E F \ F| / |F|
inline Rational folner_defect(const Shape& e, const Shape& f) {
    require_input(!f.empty(), "folner_defect needs a nonempty F");
    const Shape ef = shape_product(e, f);
    std::int64_t outside = 0;
    for (const auto& p : ef) outside += f.contains(p) ? 0 : 1;
    return Rational::make(outside, static_cast<std::int64_t>(f.size()));
}

// The box family {0..n-1}^d along strictly increasing sizes.
class FolnerBoxes {
public:
    FolnerBoxes(int dim, std::vector<coord_t> sizes) : dim_(dim), sizes_(std::move(sizes)) {
        require_input(dim == 1 || dim == 2, "only Z and Z^2 are supported");
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            require_input(sizes_[i] > 0, "box sizes must be positive");
            require_input(i == 0 || sizes_[i] > sizes_[i - 1], "box sizes must be strictly increasing");
        }
    }
    // 1, 2, ..., n_max
    static FolnerBoxes up_to(int dim, coord_t n_max) {
        std::vector<coord_t> s;
        for (coord_t n = 1; n <= n_max; ++n) s.push_back(n);
        return FolnerBoxes(dim, std::move(s));
    }
    int dim() const { return dim_; }
    const std::vector<coord_t>& sizes() const { return sizes_; }
    Shape box(coord_t n) const { return Shape::box(n, dim_); }
    std::size_t volume(coord_t n) const {
        return dim_ == 1 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n * n);
    }

private:
    int dim_;
    std::vector<coord_t> sizes_;
};

// Accepts `[0,1,2]`, `[[0,0],[1,0]]`, `a..b` (an interval in Z) or a bare comma list `-1,0,1`.
inline Shape parse_shape(const std::string& text) {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        try {
            return Shape::interval(std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2)));
        } catch (const std::logic_error&) {
            throw InputError("bad interval shape: " + text);
        }
    }
    std::string src = text;
    if (src.empty() || src.front() != '[') src = "[" + src + "]";
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(src);
    } catch (const nlohmann::json::exception&) {
        throw InputError("bad shape: " + text);
    }
    require_input(j.is_array(), "shape must be a list");
    if (j.empty()) return Shape(1);
    std::vector<Point> pts;
    const bool two_d = j.front().is_array();
    for (const auto& e : j) {
        if (two_d) {
            require_input(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
                          "bad 2d point in shape: " + text);
            pts.push_back(Point::of(e[0].get<coord_t>(), e[1].get<coord_t>()));
        } else {
            require_input(e.is_number_integer(), "bad point in shape: " + text);
            pts.push_back(Point::of(e.get<coord_t>()));
        }
    }
    return Shape(two_d ? 2 : 1, std::move(pts));
}

}  // namespace shiftlab
