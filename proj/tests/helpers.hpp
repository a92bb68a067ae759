#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "algebra.hpp"

namespace ttr_test {

inline std::string data_path(const std::string& name) {
    return std::string(TTR_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline ttr::Algebra load_algebra(const std::string& name) {
    return ttr::build_algebra(read_file(data_path(name)));
}

}  // namespace ttr_test
