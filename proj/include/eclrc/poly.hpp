#ifndef ECLRC_POLY_HPP
#define ECLRC_POLY_HPP

// Dense univariate polynomials over a Field, coefficients stored as raw
// element indices, lowest degree first, with no trailing zeros.

#include <cstdint>
#include <utility>
#include <vector>

#include "eclrc/gf.hpp"

namespace eclrc {

class Poly {
public:
    Poly() = default;
    explicit Poly(const Field& field) : field_(&field) {}
    Poly(const Field& field, std::vector<std::uint32_t> coeffs);

    static Poly constant(const Element& c);
    static Poly x(const Field& field);
    /// (X - root)
    static Poly linear(const Element& root);

    const Field* field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
    Element coeff(int i) const;
    Element lead() const;
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    Element eval(const Element& at) const;
    Poly monic() const;
    Poly scaled(const Element& s) const;
    /// this(g(X))
    Poly compose(const Poly& g) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

private:
    void trim();
    const Field* field_ = nullptr;
    std::vector<std::uint32_t> c_;
};

/// Quotient and remainder; throws DivisionByZero when den is zero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace eclrc

#endif
