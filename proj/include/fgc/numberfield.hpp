#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fgc/intmat.hpp"
#include "fgc/poly.hpp"

namespace fgc::exact {

// Q[x]/(f) for monic irreducible integer f
class NumberField {
public:
    explicit NumberField(std::vector<Int> min_poly);

    int degree() const { return int(f_.size()) - 1; }
    const std::vector<Int>& poly() const { return f_; }
    const RatPoly& poly_q() const { return fq_; }
    const Rat& disc() const { return disc_; }
    std::string to_string() const { return fq_.to_string(); }

private:
    std::vector<Int> f_;
    RatPoly fq_;
    Rat disc_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NfElement {
public:
    NfElement() = default;
    NfElement(FieldPtr field, std::vector<Rat> coords);
    static NfElement from_rat(FieldPtr field, const Rat& r);
    static NfElement generator(FieldPtr field); // the class of x

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;

    NfElement operator+(const NfElement& o) const;
    NfElement operator-(const NfElement& o) const;
    NfElement operator*(const NfElement& o) const;
    NfElement operator-() const;
    NfElement inverse() const;
    NfElement pow(const Int& e) const;
    bool operator==(const NfElement& o) const;

    Rat norm() const;
    Rat trace() const;

    // integral coordinates and |norm| == 1, i.e. a unit of Z[x]/(f)
    bool is_unit() const;

    std::string to_string() const;

private:
    void check_compatible(const NfElement& o) const;
    FieldPtr field_;
    std::vector<Rat> coords_;
};

} // namespace fgc::exact
