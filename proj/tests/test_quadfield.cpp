#include <doctest.h>

#include "critline/dirchar.hpp"
#include "critline/quadfield.hpp"

#include <algorithm>
#include <numeric>

using namespace critline;

namespace {

// Reduced forms counted straight from |b| <= a <= c, b >= 0 when |b| = a or a = c.
int count_reduced(i64 disc) {
    int h = 0;
    for (i64 a = 1; 3 * a * a <= -disc; ++a)
        for (i64 b = -a + 1; b <= a; ++b) {
            const i64 num = b * b - disc;
            if (num % (4 * a)) continue;
            const i64 c = num / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++h;
        }
    return h;
}

}  // namespace

TEST_CASE("discriminant validation") {
    CHECK_NOTHROW(Discriminant(-4));
    CHECK_NOTHROW(Discriminant(-23));
    CHECK_THROWS_AS(Discriminant(-16), std::invalid_argument);
    CHECK_THROWS_AS(Discriminant(-12), std::invalid_argument);
    CHECK_THROWS_AS(Discriminant(5), std::invalid_argument);
    CHECK(is_fundamental(5));
    CHECK(is_fundamental(-8));
    CHECK_FALSE(is_fundamental(1));
}

TEST_CASE("class numbers") {
    for (i64 d = -3; d >= -400; --d) {
        if (!is_fundamental(d)) continue;
        const ClassGroup g{Discriminant(d)};
        REQUIRE(g.h() == count_reduced(d));
        for (const auto& f : g.forms()) {
            CHECK(f.is_reduced());
            CHECK(f.disc() == d);
        }
    }
    CHECK(ClassGroup(Discriminant(-23)).h() == 3);
    CHECK(ClassGroup(Discriminant(-71)).h() == 7);
    CHECK(ClassGroup(Discriminant(-84)).h() == 4);
}

TEST_CASE("composition is a group law") {
    for (i64 d : {-23, -56, -84, -71, -260}) {
        const ClassGroup g{Discriminant(d)};
        const int h = g.h(), e = g.identity();
        CHECK(g.forms()[static_cast<std::size_t>(e)] == principal_form(d));
        for (int i = 0; i < h; ++i) {
            CHECK(g.compose(i, e) == i);
            CHECK(g.compose(i, g.inverse(i)) == e);
            CHECK(h % g.order(i) == 0);
            for (int j = 0; j < h; ++j) {
                CHECK(g.compose(i, j) == g.compose(j, i));
                for (int k = 0; k < h; ++k) CHECK(g.compose(g.compose(i, j), k) == g.compose(i, g.compose(j, k)));
            }
        }
    }
    // (2,1,3) has order 3 for -23
    const ClassGroup g{Discriminant(-23)};
    CHECK(g.order(g.index_of(QuadForm{2, 1, 3})) == 3);
    CHECK(reduce(QuadForm{6, 5, 2}) == QuadForm{2, -1, 3});
    CHECK(reduce(QuadForm{3, 1, 2}).is_reduced());
}

TEST_CASE("representation counts by brute force and by the class-number formula") {
    for (i64 d : {-4, -3, -15, -23, -20}) {
        const ClassGroup g{Discriminant(d)};
        const int w = epsilon_units(Discriminant(d));
        const RealCharacter chi(d);
        std::vector<i64> total(301, 0);
        for (const auto& f : g.forms()) {
            const auto R = representation_counts(f, 300);
            std::vector<i64> brute(301, 0);
            for (i64 x = -40; x <= 40; ++x)
                for (i64 y = -40; y <= 40; ++y) {
                    const i64 v = f.eval(x, y);
                    if (v <= 300) ++brute[static_cast<std::size_t>(v)];
                }
            for (i64 n = 0; n <= 300; ++n) CHECK(R[static_cast<std::size_t>(n)] == brute[static_cast<std::size_t>(n)]);
            for (i64 n = 1; n <= 300; ++n) total[static_cast<std::size_t>(n)] += R[static_cast<std::size_t>(n)];
        }
        // sum over classes of R_Q(n) = w sum_{k | n} chi(k)
        for (i64 n = 1; n <= 300; ++n) {
            i64 s = 0;
            for (i64 k : divisors(n)) s += chi(k);
            CHECK(total[static_cast<std::size_t>(n)] == w * s);
        }
    }
    CHECK(epsilon_units(Discriminant(-3)) == 6);
    CHECK(epsilon_units(Discriminant(-4)) == 4);
    CHECK(epsilon_units(Discriminant(-23)) == 2);
}

TEST_CASE("Hecke coefficients") {
    const ClassGroup g{Discriminant(-23)};
    const auto chars = characters(g);
    REQUIRE(chars.size() == 3);
    // principal character: r(n) = sum_{k|n} chi(k)
    const RealCharacter chi(-23);
    const auto principal = std::find_if(chars.begin(), chars.end(), [](const auto& c) { return c.is_principal; });
    REQUIRE(principal != chars.end());
    const CoefficientTable r(g, *principal, 500);
    for (i64 n = 1; n <= 500; ++n) {
        i64 s = 0;
        for (i64 k : divisors(n)) s += chi(k);
        CHECK(r.exact_int(n) == s);
    }
    // orthogonality: sum over psi of r_psi(n) = h R_{principal}(n) / w
    std::vector<double> sum(501, 0.0);
    for (const auto& psi : chars) {
        const CoefficientTable t(g, psi, 500);
        for (i64 n = 1; n <= 500; ++n) sum[static_cast<std::size_t>(n)] += t[n];
    }
    const auto R = representation_counts(principal_form(-23), 500);
    for (i64 n = 1; n <= 500; ++n) CHECK(sum[static_cast<std::size_t>(n)] == doctest::Approx(3.0 * R[static_cast<std::size_t>(n)] / 2.0));
}
