#pragma once

#include "critline/arith.hpp"
#include "critline/numeric.hpp"

#include <vector>

namespace critline {

int kronecker(i64 d, i64 n);

bool is_fundamental_or_one(i64 d);

// chi_d for a signed fundamental discriminant d (d = 1 allowed), tabulated over one period.
class RealCharacter {
public:
    explicit RealCharacter(i64 d);

    i64 disc() const { return d_; }
    i64 modulus() const { return q_; }
    int operator()(i64 n) const { return table_[static_cast<std::size_t>(mod(n, q_))]; }

private:
    i64 d_;
    i64 q_;
    std::vector<int> table_;
};

struct DiscriminantSplit {
    i64 d1;
    i64 d2;
};

std::vector<DiscriminantSplit> splits(i64 disc);

// Exact value i^unit * sqrt(radicand), radicand > 0 squarefree-free form not required.
struct ExactSurd {
    int unit = 0;  // power of i, mod 4
    i64 radicand = 1;

    ExactSurd operator*(const ExactSurd& o) const { return {(unit + o.unit) % 4, radicand * o.radicand}; }
    ExactSurd times_sign(int s) const { return s >= 0 ? *this : ExactSurd{(unit + 2) % 4, radicand}; }
    ExactSurd conj() const { return {(4 - unit) % 4, radicand}; }
    bool operator==(const ExactSurd&) const = default;
    cplx value() const;
};

struct GaussSum {
    ExactSurd exact;
    cplx numeric;
};

GaussSum gauss_sum(i64 d);

// L(s, chi_d) by Euler-Maclaurin on the Hurwitz decomposition. Throws PoleError at s = 1 for d = 1.
cplx l_chi(const RealCharacter& chi, cplx s);

cplx hurwitz_zeta(cplx s, double w, int corrections = 8);

// e^{i theta(t)} L(1/2 + it, chi) for primitive real chi (zeta for d = 1); real-valued.
double hardy_Z_chi(const RealCharacter& chi, double t);

}  // namespace critline
