#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

enum class errc {
    out_of_range,      // gap or block index outside the model
    non_essential,     // loop bounds a puncture-free disk
    too_short,         // fewer crossings than requested prefix
    depth_mismatch,    // operands live at different depths
    resource_limit,    // configured cap exceeded (depth, enumeration, ...)
    parse_error,       // malformed file or line
    invalid_argument,  // bad operation input (splice point, budget, ...)
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::out_of_range: return "out_of_range";
        case errc::non_essential: return "non_essential";
        case errc::too_short: return "too_short";
        case errc::depth_mismatch: return "depth_mismatch";
        case errc::resource_limit: return "resource_limit";
        case errc::parse_error: return "parse_error";
        case errc::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace curvelab
