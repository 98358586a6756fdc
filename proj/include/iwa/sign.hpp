#pragma once

#include <string>

#include "iwa/errors.hpp"

namespace iwa {

/// The sign epsilon selecting a signed theory: plus/minus at supersingular
/// primes, none in the ordinary case.
enum class Eps { none, plus, minus };

inline int parity_of(Eps e) { return e == Eps::plus ? +1 : -1; }

inline std::string eps_str(Eps e) {
    switch (e) {
        case Eps::plus: return "+";
        case Eps::minus: return "-";
        default: return "none";
    }
}

inline Eps eps_from_str(const std::string& s) {
    if (s == "+" || s == "plus") return Eps::plus;
    if (s == "-" || s == "minus") return Eps::minus;
    if (s == "none" || s.empty()) return Eps::none;
    throw SchemaError("unrecognized sign: " + s);
}

}  // namespace iwa
