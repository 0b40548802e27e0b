#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "scomp/errors.hpp"

namespace scomp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
struct FieldSpec {
    unsigned characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }

    static FieldSpec prime(unsigned p) {
        if (!is_prime(p)) throw InputError("field characteristic must be prime, got " + std::to_string(p));
        return FieldSpec{p};
    }

    bool is_rational() const { return characteristic == 0; }

    std::string name() const {
        return is_rational() ? "q" : "f" + std::to_string(characteristic);
    }

    /// Parses "q", "f2", "f7", ... (the CLI --field syntax).
    static FieldSpec parse(const std::string& text) {
        if (text == "q" || text == "Q") return rationals();
        if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
            unsigned p = 0;
            for (std::size_t i = 1; i < text.size(); ++i) {
                if (text[i] < '0' || text[i] > '9') throw InputError("bad field spec: " + text);
                p = p * 10 + static_cast<unsigned>(text[i] - '0');
                if (p > 2147483647u) throw InputError("field characteristic too large: " + text);
            }
            return prime(p);
        }
        throw InputError("bad field spec: " + text + " (expected q, f2, f3, ...)");
    }

    static bool is_prime(unsigned p) {
        if (p < 2) return false;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    bool operator==(const FieldSpec&) const = default;
};

}  // namespace scomp
