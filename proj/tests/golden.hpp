#pragma once

/* Golden corpus access shared by the unit tests and the acceptance runner. */

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ym/closedforms.hpp"

namespace golden {

struct Case {
    std::string file;
    ym::GroupSpec group;
    long topclass = 0;
};

/* Each corpus file with the group and class its series belongs to. */
inline const std::vector<Case>& cases() {
    using ym::Family;
    static const std::vector<Case> all = {
        {"u2_even", {Family::U, 2}, 0},      {"u2_odd", {Family::U, 2}, 1},
        {"su2", {Family::SU, 2}, 0},         {"su3", {Family::SU, 3}, 0},
        {"su4", {Family::SU, 4}, 0},         {"so3_plus", {Family::SOodd, 1}, 0},
        {"so3_minus", {Family::SOodd, 1}, 1}, {"so5_plus", {Family::SOodd, 2}, 0},
        {"so5_minus", {Family::SOodd, 2}, 1}, {"sp1", {Family::Sp, 1}, 0},
        {"sp2", {Family::Sp, 2}, 0},         {"sp3", {Family::Sp, 3}, 0},
        {"so4_plus", {Family::SOeven, 2}, 0}, {"so4_minus", {Family::SOeven, 2}, 1},
        {"so6_plus", {Family::SOeven, 3}, 0}, {"so6_minus", {Family::SOeven, 3}, 1},
    };
    return all;
}

/* genus -> canonical text, read from lines "l=<genus>: <text>"; '#' lines are comments. */
inline std::map<long, std::string> load(const std::string& file) {
    std::ifstream in(std::string(YM_TESTDATA_DIR) + "/" + file + ".txt");
    if (!in) throw std::runtime_error("cannot open golden file " + file);
    std::map<long, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto colon = line.find(':');
        if (line.rfind("l=", 0) != 0 || colon == std::string::npos) throw std::runtime_error("bad golden line: " + line);
        out[std::stol(line.substr(2, colon - 2))] = line.substr(colon + 2);
    }
    return out;
}

inline ym::FlatSeriesRequest request(const Case& c, long genus) { return {c.group, {c.topclass}, {genus, 0}}; }

}  // namespace golden
