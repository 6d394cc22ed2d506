#include <doctest.h>

#include "galrank/ring_linalg.hpp"
#include "test_util.hpp"

using namespace galrank;
using galrank::testing::random_poly;
using galrank::testing::random_vector;
using galrank::testing::tower;

namespace {

// Exhaustive minimal monic annihilator over the residue field: enumerates
// monic polynomials with coefficients in the Teichmueller-free residue set
// {0,...,p-1}^(sm) by ascending degree and checks vanishing mod p.
SkewPoly residue_annihilator(const GaloisTower& t, std::span<const RingElement> pts) {
    const unsigned w = t.words(Level::S);
    const std::uint64_t p = t.params().p;
    for (unsigned d = 0;; ++d) {
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(d) * w, 0);
        for (;;) {
            std::vector<RingElement> coeffs;
            for (unsigned i = 0; i < d; ++i)
                coeffs.push_back(t.element(
                    Level::S, std::vector<std::uint64_t>(
                                  digits.begin() + static_cast<std::ptrdiff_t>(i) * w,
                                  digits.begin() + static_cast<std::ptrdiff_t>(i + 1) * w)));
            coeffs.push_back(t.one(Level::S));
            SkewPoly cand(&t, std::move(coeffs));
            bool ok = true;
            for (const auto& pt : pts)
                if (!t.residue(evaluate(cand, pt)).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) return cand;
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
            if (pos == digits.size()) break;
            if (d == 0) break;
        }
    }
}

}  // namespace

TEST_CASE("skew multiplication") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const auto alpha = t.generator(Level::S);
    const auto e = [&](std::uint64_t a, std::uint64_t b) { return t.element(Level::S, {a, b}); };

    SUBCASE("twist rule x * a = sigma(a) x") {
        auto xa = SkewPoly::x(t) * SkewPoly::constant(t, alpha);
        CHECK(xa == SkewPoly::monomial(t, e(3, 3), 1));
        CHECK_FALSE(xa == SkewPoly::constant(t, alpha) * SkewPoly::x(t));
    }
    SUBCASE("unit element") {
        std::mt19937_64 rng(2);
        auto f = random_poly(t, 4, rng);
        CHECK(f * SkewPoly::one(t) == f);
        CHECK(SkewPoly::one(t) * f == f);
    }
    SUBCASE("worked product") {
        auto f1 = SkewPoly::x(t) + SkewPoly::constant(t, e(3, 3));
        auto f2 = SkewPoly::x(t) + SkewPoly::constant(t, e(0, 3));
        auto prod = f1 * f2;
        CHECK(prod.degree() == 2);
        CHECK(prod.coeff(0) == e(3, 0));
        CHECK(prod.coeff(1).is_zero());
        CHECK(prod.coeff(2) == t.one(Level::S));
    }
    SUBCASE("valuation-degenerate degree drop") {
        auto two_x = SkewPoly::monomial(t, t.from_int(Level::S, 2), 1);
        CHECK((two_x * two_x).is_zero());
    }
    SUBCASE("tower mismatch throws") {
        const GaloisTower& t2 = tower(3, 2, 1, 2);
        CHECK_THROWS_AS(SkewPoly::one(t) * SkewPoly::one(t2), ring_error);
    }
}

TEST_CASE("primitivity") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const auto two = t.from_int(Level::S, 2);
    CHECK_FALSE(is_primitive(SkewPoly(&t, {two, two})));            // 2x + 2
    CHECK(is_primitive(SkewPoly(&t, {t.one(Level::S), two})));      // 2x + 1
    CHECK_FALSE(is_primitive(SkewPoly::zero(t)));
}

TEST_CASE("monicization") {
    const GaloisTower& t = tower(2, 2, 1, 2);

    SUBCASE("already monic") {
        auto g = SkewPoly::x(t) + SkewPoly::constant(t, t.generator(Level::S));
        auto mo = monicize(g);
        CHECK(mo.unit == SkewPoly::one(t));
        CHECK(mo.monic == g);
    }
    SUBCASE("unit scaling: 3x + 1") {
        SkewPoly g(&t, {t.one(Level::S), t.from_int(Level::S, 3)});
        auto mo = monicize(g);
        CHECK(mo.unit == SkewPoly::constant(t, t.from_int(Level::S, 3)));
        CHECK(mo.monic == SkewPoly(&t, {t.from_int(Level::S, 3), t.one(Level::S)}));
    }
    SUBCASE("nilpotent head: 2x^2 + x over Z_4 with trivial twist") {
        const GaloisTower& t1 = tower(2, 2, 1, 1);
        SkewPoly g(&t1, {t1.zero(Level::S), t1.one(Level::S), t1.from_int(Level::S, 2)});
        auto mo = monicize(g);
        CHECK(mo.monic == SkewPoly::x(t1));  // deg mu g = 1
        CHECK(mo.unit * g == mo.monic);
    }
    SUBCASE("non-primitive input throws") {
        CHECK_THROWS_AS(monicize(SkewPoly::constant(t, t.from_int(Level::S, 2))),
                        ring_error);
    }
}

TEST_CASE("division") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const auto e = [&](std::uint64_t a, std::uint64_t b) { return t.element(Level::S, {a, b}); };

    SUBCASE("worked example: x^2 by x + 3a") {
        auto x2 = SkewPoly::monomial(t, t.one(Level::S), 2);
        auto g = SkewPoly::x(t) + SkewPoly::constant(t, e(0, 3));
        auto dv = right_divide(x2, g);
        CHECK(dv.quotient == SkewPoly::x(t) + SkewPoly::constant(t, e(3, 3)));
        CHECK(dv.remainder == SkewPoly::one(t));
    }
    SUBCASE("small degree passthrough") {
        auto g = SkewPoly::monomial(t, t.one(Level::S), 3);
        auto f = SkewPoly::constant(t, e(1, 2));
        auto dr = right_divide(f, g);
        CHECK(dr.quotient.is_zero());
        CHECK(dr.remainder == f);
        auto dl = left_divide(f, g);
        CHECK(dl.quotient.is_zero());
        CHECK(dl.remainder == f);
        // f = g case
        auto de = left_divide(g, g);
        CHECK(de.quotient == SkewPoly::one(t));
        CHECK(de.remainder.is_zero());
    }
    SUBCASE("errors") {
        auto f = SkewPoly::one(t);
        CHECK_THROWS_AS(right_divide(f, SkewPoly::zero(t)), ring_error);
        CHECK_THROWS_AS(right_divide(f, SkewPoly::constant(t, t.from_int(Level::S, 2))),
                        ring_error);
        CHECK_THROWS_AS(left_divide(f, SkewPoly::zero(t)), ring_error);
    }
}

TEST_CASE("evaluation") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const auto alpha = t.generator(Level::S);
    const auto e = [&](std::uint64_t a, std::uint64_t b) { return t.element(Level::S, {a, b}); };

    CHECK(evaluate(SkewPoly::x(t) + SkewPoly::constant(t, e(0, 3)), alpha).is_zero());
    CHECK(evaluate(SkewPoly::monomial(t, t.one(Level::S), 2), alpha) == alpha);
    CHECK(evaluate(SkewPoly::constant(t, e(3, 2)), alpha) == t.mul(e(3, 2), alpha));
    // R-linearity in the argument
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        auto f = random_poly(t, 4, rng);
        auto a = t.random_element(Level::S, rng);
        auto b = t.random_element(Level::S, rng);
        auto c = t.embed(t.random_element(Level::R, rng), Level::S);
        CHECK(evaluate(f, t.add(a, b)) == t.add(evaluate(f, a), evaluate(f, b)));
        CHECK(evaluate(f, t.mul(c, a)) == t.mul(c, evaluate(f, a)));
    }
}

TEST_CASE("annihilators of independent points") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const auto alpha = t.generator(Level::S);
    const auto e = [&](std::uint64_t a, std::uint64_t b) { return t.element(Level::S, {a, b}); };

    std::vector<RingElement> p1{t.one(Level::S)};
    CHECK(annihilator_free(t, p1) == SkewPoly(&t, {e(3, 0), t.one(Level::S)}));
    std::vector<RingElement> p2{alpha};
    CHECK(annihilator_free(t, p2) == SkewPoly(&t, {e(0, 3), t.one(Level::S)}));
    std::vector<RingElement> p3{t.one(Level::S), alpha};
    auto lam = annihilator_free(t, p3);
    CHECK(lam == SkewPoly(&t, {e(3, 0), t.zero(Level::S), t.one(Level::S)}));
    CHECK(evaluate(lam, t.one(Level::S)).is_zero());
    CHECK(evaluate(lam, alpha).is_zero());

    std::vector<RingElement> dep{t.one(Level::S), e(3, 0)};
    CHECK_THROWS_WITH_AS(annihilator_free(t, dep), "non-unit evaluation", ring_error);
}

TEST_CASE("general annihilator degree equals the rank") {
    const GaloisTower& t = tower(2, 2, 1, 2);

    SUBCASE("examples") {
        std::vector<RingElement> z{t.zero(Level::S), t.zero(Level::S)};
        CHECK(annihilator_general(t, z) == SkewPoly::one(t));
        std::vector<RingElement> v{t.from_int(Level::S, 2), t.zero(Level::S)};
        auto lam = annihilator_general(t, v);
        CHECK(lam.degree() == 1);
        CHECK(is_primitive(lam));
        CHECK(evaluate(lam, v[0]).is_zero());
        // independent entries: agrees with the free construction
        std::vector<RingElement> p3{t.one(Level::S), t.generator(Level::S)};
        CHECK(annihilator_general(t, p3) == annihilator_free(t, p3));
    }

    SUBCASE("random vectors across towers") {
        std::mt19937_64 rng(7);
        for (const auto* tp : {&tower(2, 2, 1, 3), &tower(3, 2, 1, 2), &tower(2, 3, 1, 3)}) {
            const GaloisTower& T = *tp;
            for (int i = 0; i < 120; ++i) {
                auto v = random_vector(T, 1 + rng() % 5, rng);
                auto lam = annihilator_general(T, v);
                CHECK(lam.degree() == static_cast<int>(vector_rank(T, v).rank));
                CHECK(is_primitive(lam));
                for (const auto& pt : v) CHECK(evaluate(lam, pt).is_zero());
            }
        }
    }

    SUBCASE("residue image matches the residue-field annihilator") {
        std::mt19937_64 rng(11);
        const GaloisTower& T = tower(2, 2, 1, 2);
        for (int i = 0; i < 15; ++i) {
            // independent points so the free construction applies
            std::vector<RingElement> pts;
            const unsigned n = 1 + rng() % 2;
            for (;;) {
                pts = random_vector(T, n, rng);
                if (vector_rank(T, pts).free_rank == n) break;
            }
            auto lam = annihilator_free(T, pts);
            auto expected = residue_annihilator(T, pts);
            // compare coefficientwise mod p
            CHECK(lam.degree() == expected.degree());
            for (int j = 0; j <= lam.degree(); ++j)
                CHECK(T.residue(lam.coeff(static_cast<std::size_t>(j))) ==
                      T.residue(expected.coeff(static_cast<std::size_t>(j))));
        }
    }
}

TEST_CASE("interpolation") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const auto alpha = t.generator(Level::S);
    const auto e = [&](std::uint64_t a, std::uint64_t b) { return t.element(Level::S, {a, b}); };

    std::vector<RingElement> pts{t.one(Level::S), alpha};
    std::vector<RingElement> vals{t.one(Level::S), e(3, 3)};
    CHECK(interpolate(t, pts, vals) == SkewPoly::x(t));
    std::vector<RingElement> zero2{t.zero(Level::S), t.zero(Level::S)};
    CHECK(interpolate(t, pts, zero2).is_zero());
    CHECK(interpolate(t, pts, pts) == SkewPoly::one(t));
    CHECK_THROWS_AS(interpolate(t, pts, std::span<const RingElement>(pts.data(), 1)),
                    ring_error);

    SUBCASE("round trip with evaluation on random data") {
        std::mt19937_64 rng(13);
        for (const auto* tp : {&tower(2, 2, 1, 4), &tower(3, 2, 1, 3)}) {
            const GaloisTower& T = *tp;
            const unsigned m = T.params().m;
            for (int it = 0; it < 60; ++it) {
                const unsigned n = 1 + rng() % m;
                std::vector<RingElement> p;
                for (;;) {
                    p = random_vector(T, n, rng);
                    auto vr = vector_rank(T, p);
                    if (vr.free_rank == n) break;
                }
                auto v = random_vector(T, n, rng);
                auto f = interpolate(T, p, v);
                CHECK(f.degree() < static_cast<int>(n));
                CHECK(multipoint_evaluate(f, p) == v);
            }
        }
    }
}

TEST_CASE("algebraic laws on random polynomials") {
    std::mt19937_64 rng(23);
    for (const auto* tp : {&tower(2, 2, 1, 2), &tower(3, 2, 1, 3), &tower(2, 3, 1, 4),
                           &tower(2, 2, 2, 2)}) {
        const GaloisTower& T = *tp;
        for (int it = 0; it < 80; ++it) {
            auto f = random_poly(T, 5, rng);
            auto g = random_poly(T, 4, rng);
            auto h = random_poly(T, 3, rng);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK((g + h) * f == g * f + h * f);
            const auto s = T.random_element(Level::S, rng);
            CHECK(evaluate(f * g, s) == evaluate(f, evaluate(g, s)));
            if (!is_primitive(g)) continue;
            auto dr = right_divide(f, g);
            CHECK(dr.quotient * g + dr.remainder == f);
            CHECK(dr.remainder.degree() < g.degree());
            auto dl = left_divide(f, g);
            CHECK(g * dl.quotient + dl.remainder == f);
            CHECK(dl.remainder.degree() < g.degree());
            // exact round trips
            CHECK(right_divide(h * g, g).remainder.is_zero());
            CHECK(right_divide(h * g, g).quotient == h);
            CHECK(left_divide(g * h, g).remainder.is_zero());
            CHECK(left_divide(g * h, g).quotient == h);
            auto mo = monicize(g);
            CHECK(mo.monic == mo.unit * g);
            CHECK(mo.monic.leading_coeff() == T.one(Level::S));
            CHECK(T.is_unit(mo.unit.coeff(0)));
            for (int i = 1; i <= mo.unit.degree(); ++i)
                CHECK_FALSE(T.is_unit(mo.unit.coeff(static_cast<std::size_t>(i))));
        }
    }
}
