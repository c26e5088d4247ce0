#ifndef ECLRC_GF_HPP
#define ECLRC_GF_HPP

// Exact arithmetic in small finite fields GF(p^a).
//
// Elements use the polynomial-basis representation modulo a fixed monic
// irreducible polynomial: the element c_0 + c_1 w + ... + c_{a-1} w^{a-1}
// has integer index sum c_i p^i. The modulus is the lexicographically
// smallest monic irreducible of degree a, comparing coefficient tuples
// (c_0, c_1, ..., c_{a-1}) from the constant term up, so serialized indices
// are unambiguous across runs.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "eclrc/error.hpp"

namespace eclrc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 16;

/// An element of a Field. Cheap to copy; refers to its field by address, so
/// the owning Field must outlive it (hold the FieldPtr).
class Element {
public:
    Element() = default;
    Element(const Field& field, std::uint32_t index);

    const Field* field() const noexcept { return field_; }
    std::uint32_t index() const noexcept { return index_; }
    bool is_zero() const noexcept { return index_ == 0; }
    bool is_one() const noexcept;

    Element inv() const;
    Element pow(std::int64_t e) const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Element& o);
    Element& operator/=(const Element& o);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Element& b) { return a *= b; }
    friend Element operator/(Element a, const Element& b) { return a /= b; }
    Element operator-() const;

    friend bool operator==(const Element& a, const Element& b) noexcept {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }
    // Orders by index within one field.
    friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
        return a.index_ <=> b.index_;
    }

private:
    const Field* field_ = nullptr;
    std::uint32_t index_ = 0;
};

/// GF(p^a) with tables for multiplication (discrete logs against a primitive
/// element found by scan). Immutable once built.
class Field {
public:
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t a() const noexcept { return a_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic modulus, low degree first, length a+1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Element zero() const { return Element(*this, 0); }
    Element one() const { return Element(*this, 1); }
    Element element(std::uint64_t index) const;
    /// Image of an integer under Z -> GF(p).
    Element from_int(std::int64_t n) const;
    Element from_coefficients(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coefficients(const Element& x) const;
    /// A fixed generator of the multiplicative group.
    Element primitive() const { return Element(*this, exp_[1]); }

    // Raw index arithmetic; no field checks.
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg_[y]); }
    std::uint32_t neg(std::uint32_t x) const { return neg_[x]; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        if (x == 0 || y == 0) return 0;
        return exp_[log_[x] + log_[y]];
    }
    std::uint32_t pow(std::uint32_t x, std::int64_t e) const;

private:
    friend FieldPtr make_field(std::uint32_t p, std::uint32_t a, std::uint64_t cap);
    Field(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus);

    std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y) const;

    std::uint32_t p_;
    std::uint32_t a_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1)
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint16_t> add_table_;  // q*q, only for small odd q
};

/// Builds GF(p^a). Throws NotPrime or FieldTooLarge (p^a > cap).
FieldPtr make_field(std::uint32_t p, std::uint32_t a, std::uint64_t cap = kDefaultFieldCap);

/// Builds GF(q) for a prime power q.
FieldPtr make_field_of_order(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap);

/// All q elements in ascending index order.
std::vector<Element> enumerate(const Field& field);

/// All x with x^n = 1.
std::vector<Element> roots_of_unity(const Field& field, std::uint64_t n);

/// All roots in the field of sum coeffs[i] X^i, by exhaustive evaluation.
std::vector<Element> solve_poly(const Field& field, std::span<const Element> coeffs);

bool is_prime(std::uint64_t n);

/// q = p^a decomposition; false when q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& a);

}  // namespace eclrc

#endif
