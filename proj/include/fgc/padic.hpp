#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgc/int.hpp"

namespace fgc::padic {

// element of Z_p known modulo p^n
struct PadicInt {
    Int p;
    long n = 1; // absolute precision exponent
    Int r;      // representative in [0, p^n)

    PadicInt() : p(2), r(0) {}
    PadicInt(Int prime, long prec, Int value);

    Int modulus() const { return pow_int(p, static_cast<unsigned long>(n)); }
    bool is_zero() const { return r == 0; } // zero to working precision
    bool is_unit() const { return r % p != 0; }
    // v_p of the representative, clamped to n for an apparent zero
    long valuation() const;
    PadicInt with_precision(long m) const; // lower precision view
    // exact division by p^k; the valuation must be at least k
    PadicInt shift_down(long k) const;

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    PadicInt operator-() const;
    PadicInt inverse() const; // unit only

    std::string to_string() const;
};

// equality to the coarser of the two precisions
bool agrees(const PadicInt& a, const PadicInt& b);

// reduction of a rational with p-free denominator
PadicInt padic_from_rat(const Rat& x, const Int& p, long n);

// unique (p-1)-st root of unity congruent to a mod p (the sign part for p = 2)
PadicInt teichmuller(const PadicInt& a);

// Iwasawa-branch logarithm of a unit: log(a^(p-1))/(p-1); for p = 2 computed
// from a^2 with a documented two-bit precision penalty
PadicInt padic_log_unit(const PadicInt& a);

// exponential on its convergence domain: v(x) >= 1 for odd p, >= 2 for p = 2
PadicInt padic_exp(const PadicInt& x);

// multiplicative order of a unit residue mod p (divides p - 1)
Int unit_order_mod_p(const Int& u, const Int& p);

// the completely split embeddings K -> Q_p given by the roots of the
// defining polynomial mod p^n
struct SplitEmbeddingSet {
    std::vector<Int> poly; // monic integer minimal polynomial
    Int p;
    long n = 1;
    std::vector<PadicInt> roots;
};

// quadratic Newton lifting of the roots of a monic squarefree-mod-p
// polynomial that splits completely; otherwise explains the refusal
struct HenselOutcome {
    std::optional<SplitEmbeddingSet> set;
    std::string refusal; // non-empty when set is absent
};

HenselOutcome hensel_lift_roots(const std::vector<Int>& poly, const Int& p, long n);

// value of sum c_i * root^i in Z_p; fails if a denominator is divisible by p
std::optional<PadicInt> embed_at_root(const SplitEmbeddingSet& s, int root_index,
                                      const std::vector<Rat>& coords);

} // namespace fgc::padic
