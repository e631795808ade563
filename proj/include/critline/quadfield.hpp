#pragma once

#include "critline/arith.hpp"

#include <compare>
#include <complex>
#include <ostream>
#include <vector>

namespace critline {

// Negative fundamental discriminant -D.
class Discriminant {
public:
    explicit Discriminant(i64 value);  // throws std::invalid_argument
    i64 value() const { return value_; }
    i64 abs() const { return -value_; }

private:
    i64 value_;
};

// Fundamental discriminant test for either sign; 1 is not fundamental.
bool is_fundamental(i64 d);

struct QuadForm {
    i64 a = 1, b = 0, c = 1;

    i64 disc() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    i64 eval(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
    auto operator<=>(const QuadForm&) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuadForm& f);

QuadForm reduce(QuadForm f);  // throws on non-positive-definite input
QuadForm compose_forms(const QuadForm& f, const QuadForm& g);
QuadForm principal_form(i64 disc);
QuadForm inverse_form(const QuadForm& f);

class ClassGroup {
public:
    explicit ClassGroup(Discriminant d);

    const Discriminant& disc() const { return disc_; }
    int h() const { return static_cast<int>(forms_.size()); }
    const std::vector<QuadForm>& forms() const { return forms_; }
    int identity() const { return identity_; }
    int compose(int i, int j) const { return table_[i][j]; }
    int inverse(int i) const;
    int order(int i) const;
    int index_of(const QuadForm& f) const;  // reduces first; -1 if absent
    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    Discriminant disc_;
    std::vector<QuadForm> forms_;
    int identity_ = 0;
    std::vector<std::vector<int>> table_;
};

inline ClassGroup class_group(Discriminant d) { return ClassGroup(d); }

struct HeckeCharacter {
    int h = 1;
    std::vector<int> exponents;  // psi(C_j) = exp(2 pi i k_j / h)
    bool is_real = true;
    bool is_principal = true;

    std::complex<double> value(int cls) const;
    int real_value(int cls) const;  // +-1, only for real characters
};

std::vector<HeckeCharacter> characters(const ClassGroup& g);

int epsilon_units(const Discriminant& d);

// Representation counts R_Q(n), n = 0..n_max, by lattice enumeration (R_Q(0) = 1).
std::vector<i64> representation_counts(const QuadForm& f, i64 n_max);

// r_psi(n) for 1 <= n <= n_max. Exact storage: r_psi(n) = sum_k cos_coeff(n)[k] cos(2 pi k / h),
// k = 0..h/2, with integer coefficients.
class CoefficientTable {
public:
    CoefficientTable(const ClassGroup& g, const HeckeCharacter& psi, i64 n_max);

    i64 n_max() const { return static_cast<i64>(values_.size()) - 1; }
    int h() const { return h_; }
    double operator[](i64 n) const { return values_[static_cast<std::size_t>(n)]; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<i64>& cos_coeffs(i64 n) const { return exact_[static_cast<std::size_t>(n)]; }
    // Exact integer value; only meaningful for real characters.
    i64 exact_int(i64 n) const;
    bool is_real() const { return real_; }

private:
    int h_;
    bool real_;
    std::vector<double> values_;
    std::vector<std::vector<i64>> exact_;
};

inline CoefficientTable r_psi(const ClassGroup& g, const HeckeCharacter& psi, i64 n_max) {
    return CoefficientTable(g, psi, n_max);
}

}  // namespace critline
