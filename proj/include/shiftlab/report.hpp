#pragma once

// JSON run reports: canonical field order, 12 significant digits, FNV-1a hashes of inputs.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "entropy.hpp"
#include "irreducibility.hpp"
#include "relations.hpp"

namespace shiftlab {

using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline std::string fmt12(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// v rounded to 12 significant digits, so reports are byte-stable across platforms.
inline ojson num(double v) {
    if (!std::isfinite(v)) return fmt12(v);
    return std::stod(fmt12(v));
}

inline ojson big(const bigint& v) {
    if (v <= bigint(std::numeric_limits<std::int64_t>::max())) return v.convert_to<std::int64_t>();
    return v.str();
}

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string file_hash(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InputError("cannot open " + p.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return fnv1a_hex(data);
}

inline ojson report_header(const std::string& command) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = ojson::object();
    return j;
}

inline ojson word_json(const Alphabet& a, const std::vector<Symbol>& w) { return a.format(w); }

inline ojson config_json(const Alphabet& a, const PointedConfiguration& c) {
    ojson j;
    j["period"] = c.left().period[0];
    j["background"] = a.format(c.left().cells);
    if (c.is_spliced()) {
        j["split"] = c.split();
        j["right_period"] = c.right().period[0];
        j["right_background"] = a.format(c.right().cells);
    }
    ojson patch = ojson::array();
    for (const auto& [p, s] : c.patch_cells()) patch.push_back({p[0], a.token(s)});
    j["patch"] = patch;
    return j;
}

inline ojson entropy_json(const EntropyReport& r) {
    ojson j;
    j["method"] = to_string(r.method);
    if (r.value) {
        j["value"] = num(*r.value);
        j["value_log2"] = num(*r.value / std::log(2.0));
    } else {
        j["interval"] = {num(r.lo), num(r.hi)};
        j["width"] = num(r.hi - r.lo);
    }
    if (r.method == EntropyMethod::perron && !r.trace.empty()) {
        j["cross_check"] = {{"n", r.trace.back().n}, {"gap", num(r.cross_check_gap)}, {"within_0.05", r.cross_check_ok}};
    }
    ojson tr = ojson::array();
    for (const auto& e : r.trace) tr.push_back({{"n", e.n}, {"count", big(e.count)}, {"rate", num(e.rate)}});
    j["trace"] = tr;
    if (!r.strips.empty()) {
        ojson st = ojson::array();
        for (const auto& b : r.strips) {
            ojson s;
            s["width"] = b.width;
            s["upper"] = num(b.upper);
            s["running_upper"] = num(b.running_upper);
            s["lower"] = b.lower ? num(*b.lower) : ojson(nullptr);
            st.push_back(s);
        }
        j["strips"] = st;
    }
    return j;
}

inline ojson join_failure_json(const Alphabet& a, const JoinFailure& f) {
    ojson j;
    j["left"] = a.format(f.left);
    j["right"] = a.format(f.right);
    j["gap"] = f.gap;
    j["recurrence"] = f.recurrence;
    return j;
}

inline ojson certificate_json(const Alphabet& a, const IrreducibilityCertificate& c) {
    ojson j;
    j["status"] = to_string(c.status);
    j["method"] = to_string(c.method);
    if (c.status == SiStatus::strongly_irreducible) {
        j["gap"] = c.gap;
        j["delta"] = c.delta->to_json();
    }
    if (c.primitivity_index) j["primitivity_index"] = c.primitivity_index;
    if (!c.structure.empty()) j["structure"] = c.structure;
    if (c.witness) {
        j["witness"] = join_failure_json(a, *c.witness);
        j["failing_gaps"] = c.failing_gaps;
    }
    j["bound"] = c.bound;
    return j;
}

inline ojson collision_json(const Alphabet& a, const CollisionPair& p) {
    return {{"x", config_json(a, p.x)}, {"y", config_json(a, p.y)}};
}

}  // namespace shiftlab
