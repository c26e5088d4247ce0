#include "eclrc/poly.hpp"

#include <algorithm>

namespace eclrc {

namespace {
const Field& same_field(const Poly& a, const Poly& b) {
    if (a.field() == nullptr || a.field() != b.field())
        fail(ErrorKind::FieldMismatch, "polynomials over different fields");
    return *a.field();
}
}  // namespace

Poly::Poly(const Field& field, std::vector<std::uint32_t> coeffs) : field_(&field), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (c >= field.q()) fail(ErrorKind::InvalidArgument, "polynomial coefficient out of range");
    trim();
}

Poly Poly::constant(const Element& c) {
    if (!c.field()) fail(ErrorKind::FieldMismatch, "element has no field");
    return Poly(*c.field(), {c.index()});
}

Poly Poly::x(const Field& field) { return Poly(field, {0, 1}); }

Poly Poly::linear(const Element& root) {
    if (!root.field()) fail(ErrorKind::FieldMismatch, "element has no field");
    return Poly(*root.field(), {root.field()->neg(root.index()), 1});
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Element Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return field_->zero();
    return Element(*field_, c_[static_cast<std::size_t>(i)]);
}

Element Poly::lead() const {
    if (c_.empty()) return field_->zero();
    return Element(*field_, c_.back());
}

Element Poly::eval(const Element& at) const {
    if (at.field() != field_) fail(ErrorKind::FieldMismatch, "evaluation point from another field");
    std::uint32_t acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = field_->add(field_->mul(acc, at.index()), c_[k]);
    return Element(*field_, acc);
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return scaled(lead().inv());
}

Poly Poly::scaled(const Element& s) const {
    if (s.field() != field_) fail(ErrorKind::FieldMismatch, "scalar from another field");
    Poly out(*field_);
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = field_->mul(c_[i], s.index());
    out.trim();
    return out;
}

Poly Poly::compose(const Poly& g) const {
    same_field(*this, g);
    Poly acc(*field_);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * g + Poly(*field_, {c_[k]});
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    const Field& f = same_field(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f.add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    const Field& f = same_field(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f.sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = field_->neg(c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    const Field& f = same_field(a, b);
    Poly out(f);
    if (a.c_.empty() || b.c_.empty()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out.c_[i + j] = f.add(out.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    out.trim();
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    const Field& f = same_field(num, den);
    if (den.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<std::uint32_t> r = num.coeffs();
    const auto& d = den.coeffs();
    const int dd = den.degree();
    if (num.degree() < dd) return {Poly(f), num};
    std::vector<std::uint32_t> quo(static_cast<std::size_t>(num.degree() - dd + 1), 0);
    const std::uint32_t lead_inv = f.pow(d.back(), -1);
    for (int i = num.degree(); i >= dd; --i) {
        const std::uint32_t c = r[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const std::uint32_t factor = f.mul(c, lead_inv);
        quo[static_cast<std::size_t>(i - dd)] = factor;
        for (int j = 0; j <= dd; ++j) {
            auto& slot = r[static_cast<std::size_t>(i - dd + j)];
            slot = f.sub(slot, f.mul(factor, d[static_cast<std::size_t>(j)]));
        }
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Poly(f, std::move(quo)), Poly(f, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

}  // namespace eclrc
