#include "critline/quadfield.hpp"

#include "critline/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace critline {

namespace {

using i128 = __int128;

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// g = gcd(a, b) = x a + y b
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const i64 q = floor_div(a, b);
        i64 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

QuadForm normalize(QuadForm f) {
    const i64 disc = f.disc();
    const i64 k = floor_div(f.a - f.b, 2 * f.a);
    f.b += 2 * f.a * k;
    f.c = (f.b * f.b - disc) / (4 * f.a);
    return f;
}

}  // namespace

Discriminant::Discriminant(i64 value) : value_(value) {
    if (value >= 0 || !is_fundamental(value))
        throw std::invalid_argument("not a negative fundamental discriminant: " + std::to_string(value));
}

bool is_fundamental(i64 d) {
    if (d == 0 || d == 1) return false;
    const i64 r = mod(d, 4);
    if (r == 1) return is_squarefree(d);
    if (r != 0) return false;
    const i64 m = d / 4;
    const i64 rm = mod(m, 4);
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

bool QuadForm::is_reduced() const {
    if (a <= 0 || c <= 0) return false;
    if (!(-a < b && b <= a && a <= c)) return false;
    if ((a == c || a == std::abs(b)) && b < 0) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const QuadForm& f) {
    return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
}

QuadForm reduce(QuadForm f) {
    if (f.a <= 0 || f.disc() >= 0)
        throw std::invalid_argument("reduce: form is not positive definite");
    f = normalize(f);
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        f = normalize(f);
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

QuadForm compose_forms(const QuadForm& f, const QuadForm& g) {
    const i64 disc = f.disc();
    if (g.disc() != disc) throw std::invalid_argument("compose: discriminants differ");
    const i64 beta = (f.b + g.b) / 2;
    i64 u, v, w, x;
    const i64 e1 = ext_gcd(f.a, g.a, u, v);
    const i64 e = ext_gcd(e1, beta, w, x);
    // e = (w u) a1 + (w v) a2 + x beta
    const i128 cx = static_cast<i128>(w) * u, cy = static_cast<i128>(w) * v, cz = x;
    const i64 A = f.a / e * (g.a / e);
    const i128 num = cx * f.a * g.b + cy * g.a * f.b +
                     cz * ((static_cast<i128>(f.b) * g.b + disc) / 2);
    i128 B = (num / e) % (2 * static_cast<i128>(A));
    QuadForm h{A, static_cast<i64>(B), 0};
    h.c = static_cast<i64>((static_cast<i128>(h.b) * h.b - disc) / (4 * static_cast<i128>(A)));
    return reduce(h);
}

QuadForm principal_form(i64 disc) {
    const i64 b = mod(disc, 2);
    return QuadForm{1, b, (b * b - disc) / 4};
}

QuadForm inverse_form(const QuadForm& f) { return reduce(QuadForm{f.a, -f.b, f.c}); }

ClassGroup::ClassGroup(Discriminant d) : disc_(d) {
    const i64 D = d.abs();
    for (i64 a = 1; 3 * a * a <= D; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if (mod(b, 2) != mod(D, 2)) continue;
            const i64 num = b * b + D;
            if (num % (4 * a)) continue;
            const QuadForm f{a, b, num / (4 * a)};
            if (f.is_reduced() && std::gcd(std::gcd(a, b), f.c) == 1) forms_.push_back(f);
        }
    }
    std::sort(forms_.begin(), forms_.end());
    identity_ = index_of(principal_form(d.value()));
    const int n = h();
    table_.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table_[i][j] = index_of(compose_forms(forms_[i], forms_[j]));
}

int ClassGroup::index_of(const QuadForm& f) const {
    const QuadForm r = reduce(f);
    auto it = std::lower_bound(forms_.begin(), forms_.end(), r);
    if (it == forms_.end() || *it != r) return -1;
    return static_cast<int>(it - forms_.begin());
}

int ClassGroup::inverse(int i) const {
    for (int j = 0; j < h(); ++j)
        if (table_[i][j] == identity_) return j;
    throw std::logic_error("class group: no inverse");
}

int ClassGroup::order(int i) const {
    int k = 1;
    for (int x = i; x != identity_; x = table_[x][i]) ++k;
    return k;
}

std::complex<double> HeckeCharacter::value(int cls) const {
    const double ang = 2.0 * kPi * exponents[cls] / h;
    return {std::cos(ang), std::sin(ang)};
}

int HeckeCharacter::real_value(int cls) const {
    const int k = exponents[cls];
    if (k == 0) return 1;
    if (2 * k == h) return -1;
    throw std::logic_error("real_value on a complex character");
}

std::vector<HeckeCharacter> characters(const ClassGroup& g) {
    const int h = g.h();
    // Greedy generating chain H_0 < H_1 < ... with H_i = <H_{i-1}, g_i>.
    std::vector<int> in_sub(h, 0);
    std::vector<int> sub{g.identity()};
    in_sub[g.identity()] = 1;
    struct Step {
        int gen;
        int m;        // least m with gen^m in previous subgroup
        int landing;  // gen^m
        std::vector<int> prev;
    };
    std::vector<Step> steps;
    for (int x = 0; x < h; ++x) {
        if (in_sub[x]) continue;
        int m = 1, y = x;
        while (!in_sub[y]) {
            y = g.compose(y, x);
            ++m;
        }
        steps.push_back({x, m, y, sub});
        std::vector<int> next;
        int pw = g.identity();
        for (int j = 0; j < m; ++j) {
            for (int u : sub) next.push_back(g.compose(pw, u));
            pw = g.compose(pw, x);
        }
        sub = next;
        for (int u : sub) in_sub[u] = 1;
    }
    // Extend characters step by step: m k_i == e(landing) (mod h).
    std::vector<std::vector<int>> partial(1, std::vector<int>(h, -1));
    partial[0][g.identity()] = 0;
    for (const auto& st : steps) {
        std::vector<std::vector<int>> next;
        for (const auto& chi : partial) {
            const int target = chi[st.landing];
            for (int k = 0; k < h; ++k) {
                if ((static_cast<i64>(st.m) * k - target) % h != 0) continue;
                std::vector<int> ext = chi;
                int pw = g.identity();
                for (int j = 0; j < st.m; ++j) {
                    for (int u : st.prev) ext[g.compose(pw, u)] = static_cast<int>(mod(static_cast<i64>(j) * k + chi[u], h));
                    pw = g.compose(pw, st.gen);
                }
                next.push_back(std::move(ext));
            }
        }
        partial = std::move(next);
    }
    std::vector<HeckeCharacter> out;
    for (auto& ex : partial) {
        HeckeCharacter c;
        c.h = h;
        c.exponents = ex;
        c.is_principal = std::all_of(ex.begin(), ex.end(), [](int k) { return k == 0; });
        c.is_real = std::all_of(ex.begin(), ex.end(), [h](int k) { return k == 0 || 2 * k == h; });
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const HeckeCharacter& x, const HeckeCharacter& y) {
        return x.exponents < y.exponents;
    });
    return out;
}

int epsilon_units(const Discriminant& d) {
    if (d.value() == -3) return 6;
    if (d.value() == -4) return 4;
    return 2;
}

std::vector<i64> representation_counts(const QuadForm& f, i64 n_max) {
    const i64 D = -f.disc();
    if (D <= 0 || f.a <= 0) throw std::invalid_argument("representation_counts: form not positive definite");
    std::vector<i64> r(static_cast<std::size_t>(n_max) + 1, 0);
    const i64 ymax = static_cast<i64>(std::sqrt(4.0 * f.a * n_max / D)) + 1;
    for (i64 y = -ymax; y <= ymax; ++y) {
        const double disc = 4.0 * f.a * n_max - static_cast<double>(D) * y * y;
        if (disc < 0) continue;
        const double sq = std::sqrt(disc);
        const i64 lo = static_cast<i64>(std::floor((-f.b * y - sq) / (2.0 * f.a))) - 1;
        const i64 hi = static_cast<i64>(std::ceil((-f.b * y + sq) / (2.0 * f.a))) + 1;
        for (i64 x = lo; x <= hi; ++x) {
            const i64 v = f.eval(x, y);
            if (v >= 0 && v <= n_max) ++r[static_cast<std::size_t>(v)];
        }
    }
    return r;
}

CoefficientTable::CoefficientTable(const ClassGroup& g, const HeckeCharacter& psi, i64 n_max)
    : h_(g.h()), real_(psi.is_real) {
    const int eps = epsilon_units(g.disc());
    const int half = h_ / 2;
    exact_.assign(static_cast<std::size_t>(n_max) + 1, std::vector<i64>(half + 1, 0));
    std::vector<std::vector<i64>> buckets(h_, std::vector<i64>(static_cast<std::size_t>(n_max) + 1, 0));
    for (int j = 0; j < h_; ++j) {
        const auto counts = representation_counts(g.forms()[j], n_max);
        auto& b = buckets[psi.exponents[j]];
        for (i64 n = 1; n <= n_max; ++n) b[n] += counts[n] / eps;
    }
    values_.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (i64 n = 1; n <= n_max; ++n) {
        auto& e = exact_[n];
        for (int k = 0; k <= half; ++k) {
            const i64 nk = buckets[k][n];
            if (k == 0 || 2 * k == h_) e[k] = nk;
            else e[k] = nk + buckets[h_ - k][n];
        }
        double v = 0.0;
        for (int k = 0; k <= half; ++k) v += e[k] * std::cos(2.0 * kPi * k / h_);
        values_[n] = v;
    }
}

i64 CoefficientTable::exact_int(i64 n) const {
    const auto& e = exact_[n];
    i64 v = e[0];
    if (h_ % 2 == 0 && h_ > 1) v -= e[h_ / 2];
    return v;
}

}  // namespace critline
