#pragma once

#include <memory>
#include <string>

#include <shiftlab/shiftlab.hpp>

namespace testing_util {

inline std::filesystem::path catalog_path(const std::string& file) {
    return std::filesystem::path(SHIFTLAB_CATALOG_DIR) / file;
}

inline shiftlab::ShiftPresentation catalog_shift(const std::string& file) {
    return shiftlab::load_shift(catalog_path(file));
}

inline shiftlab::ShiftPtr catalog_ptr(const std::string& file) {
    return std::make_shared<const shiftlab::ShiftPresentation>(catalog_shift(file));
}

inline shiftlab::BlockCode catalog_code(const std::string& file) { return shiftlab::load_code(catalog_path(file)); }

// "0110" -> {0, 1, 1, 0}
inline std::vector<shiftlab::Symbol> w(const std::string& s) {
    std::vector<shiftlab::Symbol> out;
    for (char c : s) out.push_back(static_cast<shiftlab::Symbol>(c - '0'));
    return out;
}

inline std::string str(const std::vector<shiftlab::Symbol>& v) {
    std::string out;
    for (auto s : v) out += static_cast<char>('0' + s);
    return out;
}

}  // namespace testing_util
