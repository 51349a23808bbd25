#pragma once

#include <stdexcept>
#include <string>

namespace pretop {

enum class Errc {
    size_mismatch,
    carrier_mismatch,
    point_out_of_range,
    empty_carrier,
    empty_list,
    size_overflow,
    not_an_interior_cover,
    space_mismatch,
    not_a_topology,
    section_not_continuous,
    index_mismatch,
    index_out_of_range,
    bound_exceeded,
    unknown_theorem_id,
    unknown_predicate,
    parse_error,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
    Errc code;
    int detail; // offending point/index where applicable, -1 otherwise

    Error(Errc c, const std::string& msg, int det = -1)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c), detail(det) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg, int det = -1) {
    throw Error(c, msg, det);
}

} // namespace pretop
