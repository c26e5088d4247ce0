#ifndef ECLRC_TESTS_SUPPORT_HPP
#define ECLRC_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <random>

#include "eclrc/lrc.hpp"

#define CHECK_KIND(expr, k)                                   \
    do {                                                      \
        bool thrown_ = false;                                 \
        try {                                                 \
            (void)(expr);                                     \
        } catch (const ::eclrc::Error& e_) {                  \
            thrown_ = true;                                   \
            CHECK_MESSAGE(e_.kind() == (k), std::string(e_.what()));     \
        }                                                     \
        CHECK_MESSAGE(thrown_, "expected an error: " #expr); \
    } while (0)

namespace testsupport {

inline eclrc::CurvePtr y2y_x3(std::uint32_t a) { return eclrc::Curve::parse(eclrc::make_field(2, a), "y2+y=x3"); }

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240601);
    return g;
}

inline eclrc::Element random_element(const eclrc::Field& f) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
    return f.element(d(rng()));
}

}  // namespace testsupport

#endif
