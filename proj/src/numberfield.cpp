#include "fgc/numberfield.hpp"

#include <sstream>

namespace fgc::exact {

NumberField::NumberField(std::vector<Int> min_poly) : f_(std::move(min_poly)) {
    while (!f_.empty() && f_.back() == 0) f_.pop_back();
    if (int(f_.size()) - 1 < 1) throw UnsupportedInput("defining polynomial must have degree >= 1");
    if (f_.back() != 1) throw UnsupportedInput("defining polynomial must be monic");
    if (!irreducible_monic(f_))
        throw UnsupportedInput("defining polynomial is reducible over Q");
    fq_ = RatPoly::from_int(f_);
    disc_ = discriminant(f_);
}

NfElement::NfElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    coords_.resize(field_->degree(), Rat(0));
}

NfElement NfElement::from_rat(FieldPtr field, const Rat& r) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[0] = r;
    return NfElement(std::move(field), std::move(c));
}

NfElement NfElement::generator(FieldPtr field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    if (field->degree() < 2) throw UnsupportedInput("generator needs degree >= 2");
    c[1] = 1;
    return NfElement(std::move(field), std::move(c));
}

bool NfElement::is_zero() const {
    for (auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool NfElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

void NfElement::check_compatible(const NfElement& o) const {
    if (!field_ || !o.field_ || field_->poly() != o.field_->poly())
        throw UnsupportedInput("number field elements from different fields");
}

NfElement NfElement::operator+(const NfElement& o) const {
    check_compatible(o);
    std::vector<Rat> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
    return NfElement(field_, std::move(c));
}

NfElement NfElement::operator-(const NfElement& o) const {
    check_compatible(o);
    std::vector<Rat> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - o.coords_[i];
    return NfElement(field_, std::move(c));
}

NfElement NfElement::operator-() const {
    std::vector<Rat> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return NfElement(field_, std::move(c));
}

NfElement NfElement::operator*(const NfElement& o) const {
    check_compatible(o);
    const int n = field_->degree();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (coords_[i] == 0) continue;
        for (int j = 0; j < n; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    }
    const std::vector<Int>& f = field_->poly();
    for (int k = 2 * n - 2; k >= n; --k) {
        if (prod[k] == 0) continue;
        Rat c = prod[k];
        prod[k] = 0;
        for (int j = 0; j < n; ++j) prod[k - n + j] -= c * Rat(f[j]);
    }
    prod.resize(n);
    return NfElement(field_, std::move(prod));
}

NfElement NfElement::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    // extended euclid in Q[x]: s*a + t*f = 1
    RatPoly a{std::vector<Rat>(coords_)};
    RatPoly f = field_->poly_q();
    RatPoly r0 = f, r1 = a;
    RatPoly s0 = RatPoly(), s1 = RatPoly::constant(Rat(1));
    while (r1.deg() > 0) {
        auto [q, r2] = r0.divrem(r1);
        RatPoly s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r1.is_zero()) throw Error("element not invertible");
    RatPoly inv = s1.scaled(1 / r1.coeff(0));
    std::vector<Rat> c(field_->degree(), Rat(0));
    for (int i = 0; i <= inv.deg(); ++i) c[i] = inv.coeff(i);
    return NfElement(field_, std::move(c));
}

NfElement NfElement::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    NfElement base = *this;
    NfElement acc = from_rat(field_, Rat(1));
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

bool NfElement::operator==(const NfElement& o) const {
    return field_ && o.field_ && field_->poly() == o.field_->poly() && coords_ == o.coords_;
}

namespace {

RatMat mult_matrix(const NfElement& a) {
    const int n = a.field()->degree();
    RatMat m(n, n);
    NfElement xpow = NfElement::from_rat(a.field(), Rat(1));
    NfElement gen = n >= 2 ? NfElement::generator(a.field()) : NfElement();
    for (int j = 0; j < n; ++j) {
        NfElement col = a * xpow;
        for (int i = 0; i < n; ++i) m.at(i, j) = col.coords()[i];
        if (j + 1 < n) xpow = xpow * gen;
    }
    return m;
}

} // namespace

Rat NfElement::norm() const {
    if (field_->degree() == 1) return coords_[0];
    return det(mult_matrix(*this));
}

Rat NfElement::trace() const {
    RatMat m = mult_matrix(*this);
    Rat t(0);
    for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

bool NfElement::is_unit() const {
    for (auto& c : coords_)
        if (c.get_den() != 1) return false;
    Rat n = norm();
    return n == 1 || n == -1;
}

std::string NfElement::to_string() const {
    RatPoly p{std::vector<Rat>(coords_)};
    return p.to_string();
}

} // namespace fgc::exact
