#include <doctest.h>

#include "test_util.hpp"

using namespace galrank;
using galrank::testing::tower;

namespace {

// plain modular polynomial product, least degree first
std::vector<std::uint64_t> poly_mul_mod(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b,
                                        std::uint64_t mod) {
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % mod;
    return out;
}

std::vector<std::uint64_t> flat_poly(const std::vector<RingElement>& p) {
    std::vector<std::uint64_t> out;
    for (const auto& c : p) out.push_back(c.coeffs()[0]);
    return out;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(GaloisTower::auto_params(4, 2, 1, 2), ring_error);  // not prime
    CHECK_THROWS_AS(GaloisTower::auto_params(2, 40, 1, 2), ring_error); // p^r too big
    CHECK_THROWS_AS(GaloisTower::auto_params(2, 0, 1, 2), ring_error);

    TowerParams bad = GaloisTower::auto_params(2, 2, 1, 2);
    bad.modulus_S[2] = {2};  // not monic
    CHECK_THROWS_AS(GaloisTower(bad), ring_error);

    TowerParams red = GaloisTower::auto_params(2, 2, 1, 2);
    red.modulus_S = {{0}, {0}, {1}};  // x^2, reducible
    CHECK_THROWS_AS(GaloisTower(red), ring_error);

    // irreducible lift that does not divide x^(q^m) - x: x^2+x+3 over Z_4
    TowerParams nd = GaloisTower::auto_params(2, 2, 1, 2);
    nd.modulus_S = {{3}, {1}, {1}};
    CHECK_THROWS_AS(GaloisTower(nd), ring_error);
}

TEST_CASE("auto parameters are deterministic and canonical") {
    auto a = GaloisTower::auto_params(2, 2, 1, 4);
    auto b = GaloisTower::auto_params(2, 2, 1, 4);
    CHECK(a.modulus_R == b.modulus_R);
    CHECK(a.modulus_S == b.modulus_S);
    // GR(4,2) picks x^2+x+1
    auto c = GaloisTower::auto_params(2, 2, 1, 2);
    CHECK(c.modulus_S == std::vector<std::vector<std::uint64_t>>{{1}, {1}, {1}});
    // the lift of x^3+x+1 to Z_4 acquires a middle term: x^3+2x^2+x+3
    auto d = GaloisTower::auto_params(2, 2, 1, 3);
    CHECK(d.modulus_S == std::vector<std::vector<std::uint64_t>>{{3}, {1}, {2}, {1}});
}

TEST_CASE("base arithmetic and valuation in Z_4") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    CHECK(t.valuation(t.from_int(Level::base, 1)) == 0);
    CHECK(t.valuation(t.from_int(Level::base, 2)) == 1);
    CHECK(t.valuation(t.from_int(Level::base, 0)) == 2);
    CHECK(t.is_unit(t.from_int(Level::base, 3)));
    CHECK_FALSE(t.is_unit(t.from_int(Level::base, 2)));
}

TEST_CASE("GR(4,2) examples") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const auto alpha = t.generator(Level::S);

    SUBCASE("frobenius generator") {
        CHECK(t.frobenius(alpha, 1) == t.element(Level::S, {3, 3}));
        // sigma(a + b alpha) = (a + 3b) + 3b alpha
        std::mt19937_64 rng(1);
        for (int i = 0; i < 20; ++i) {
            const std::uint64_t a = rng() % 4, b = rng() % 4;
            CHECK(t.frobenius(t.element(Level::S, {a, b}), 1) ==
                  t.element(Level::S, {a + 3 * b, 3 * b}));
        }
        CHECK(t.frobenius(t.one(Level::S), 1) == t.one(Level::S));
        // order exactly m
        CHECK(t.frobenius(t.frobenius(alpha, 1), 1) == alpha);
        CHECK_FALSE(t.frobenius(alpha, 1) == alpha);
    }

    SUBCASE("inverse of 3+2a is itself") {
        const auto u = t.element(Level::S, {3, 2});
        CHECK(t.invert(u) == u);
        CHECK_THROWS_AS(t.invert(t.element(Level::S, {2, 2})), ring_error);
    }

    SUBCASE("valuation via unit factorization") {
        CHECK(t.valuation(t.element(Level::S, {2, 2})) == 1);
        const auto w = t.divide_by_p_power(t.element(Level::S, {2, 2}), 1);
        CHECK(w == t.element(Level::S, {1, 1}));
        CHECK(t.is_unit(w));
        CHECK_THROWS_AS(t.divide_by_p_power(t.one(Level::S), 1), ring_error);
    }

    SUBCASE("automorphism objects") {
        const auto sigma = t.automorphism(1);
        CHECK(sigma.power == 1);
        CHECK(t.apply(sigma, alpha) == t.frobenius(alpha, 1));
        const auto id = t.compose(sigma, t.inverse(sigma));
        CHECK(id.power == 0);
        CHECK(t.apply(id, alpha) == alpha);
        std::mt19937_64 rng(7);
        const auto x = t.random_element(Level::S, rng);
        CHECK(t.apply(t.automorphism(0), x) == x);
        // multiplicativity of the action
        const auto y = t.random_element(Level::S, rng);
        CHECK(t.apply(sigma, t.mul(x, y)) == t.mul(t.apply(sigma, x), t.apply(sigma, y)));
    }
}

TEST_CASE("ring axioms, characteristic and frobenius homomorphism") {
    std::mt19937_64 rng(99);
    for (const auto* tp : {&tower(2, 2, 1, 2), &tower(3, 2, 1, 3), &tower(2, 3, 1, 4),
                           &tower(2, 2, 2, 2), &tower(5, 1, 1, 3)}) {
        const GaloisTower& t = *tp;
        const unsigned m = t.params().m;
        for (Level lv : {Level::base, Level::R, Level::S}) {
            for (int i = 0; i < 40; ++i) {
                const auto a = t.random_element(lv, rng);
                const auto b = t.random_element(lv, rng);
                const auto c = t.random_element(lv, rng);
                CHECK(t.add(a, b) == t.add(b, a));
                CHECK(t.mul(a, b) == t.mul(b, a));
                CHECK(t.mul(a, t.mul(b, c)) == t.mul(t.mul(a, b), c));
                CHECK(t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c)));
                CHECK(t.add(a, t.neg(a)).is_zero());
                // p^r * x = 0
                CHECK(t.mul(t.from_int(lv, t.characteristic_mod()), a).is_zero());
                // is_unit xor v >= 1
                CHECK(t.is_unit(a) == (t.valuation(a) == 0));
                if (t.is_unit(a)) CHECK(t.mul(a, t.invert(a)) == t.one(lv));
            }
        }
        for (int i = 0; i < 40; ++i) {
            const auto a = t.random_element(Level::S, rng);
            const auto b = t.random_element(Level::S, rng);
            CHECK(t.frobenius(t.add(a, b), 1) ==
                  t.add(t.frobenius(a, 1), t.frobenius(b, 1)));
            CHECK(t.frobenius(t.mul(a, b), 1) ==
                  t.mul(t.frobenius(a, 1), t.frobenius(b, 1)));
            CHECK(t.frobenius(t.frobenius(a, 1), m - 1) == a);  // sigma^m = id
            // sigma fixes R pointwise
            const auto r_elem = t.embed(t.random_element(Level::R, rng), Level::S);
            CHECK(t.frobenius(r_elem, 1) == r_elem);
        }
    }
}

TEST_CASE("hensel lifting") {
    SUBCASE("GR(4,2): f = x^2+x+1, g = x^2+3x") {
        const GaloisTower& t = tower(2, 2, 1, 2);
        const auto one = t.one(Level::R);
        const auto hf = t.hensel_lift(std::vector<RingElement>{one, one, one});
        CHECK(flat_poly(hf.f) == std::vector<std::uint64_t>{1, 1, 1});
        CHECK(flat_poly(hf.g) == std::vector<std::uint64_t>{0, 3, 1});
        // witness: f * g = x^4 - x exactly over Z_4
        const auto prod = poly_mul_mod(flat_poly(hf.f), flat_poly(hf.g), 4);
        CHECK(prod == std::vector<std::uint64_t>{0, 3, 0, 0, 1});
    }

    SUBCASE("r = 1 lifting is the identity") {
        const GaloisTower& t = tower(5, 1, 1, 3);
        std::vector<RingElement> fbar;
        for (const auto& c : t.params().modulus_S)
            fbar.push_back(t.element(Level::R, {c[0] % 5}));
        const auto hf = t.hensel_lift(fbar);
        CHECK(hf.f == fbar);
        // exact product over F_5: x^125 - x
        auto prod = poly_mul_mod(flat_poly(hf.f), flat_poly(hf.g), 5);
        std::vector<std::uint64_t> expect(126, 0);
        expect[125] = 1;
        expect[1] = 4;
        CHECK(prod == expect);
    }

    SUBCASE("Z_9 lift of x^2+1 against a brute-force search") {
        const GaloisTower& t = tower(3, 2, 1, 2);
        const auto fb =
            std::vector<RingElement>{t.one(Level::R), t.zero(Level::R), t.one(Level::R)};
        const auto hf = t.hensel_lift(fb);
        // oracle: the unique monic lift of x^2+1 dividing x^9 - x over Z_9
        std::vector<std::uint64_t> expect_n(10, 0);
        expect_n[9] = 1;
        expect_n[1] = 8;
        int hits = 0;
        std::vector<std::uint64_t> found;
        for (std::uint64_t a : {0, 3, 6})
            for (std::uint64_t b : {1, 4, 7}) {
                std::vector<std::uint64_t> rem = expect_n;
                const std::vector<std::uint64_t> cand{b, a, 1};
                for (int d = 9; d >= 2; --d) {
                    const std::uint64_t c = rem[static_cast<std::size_t>(d)];
                    if (c == 0) continue;
                    rem[static_cast<std::size_t>(d)] = 0;
                    for (int j = 0; j < 2; ++j) {
                        auto& w = rem[static_cast<std::size_t>(d - 2 + j)];
                        w = (w + 9 - (c * cand[static_cast<std::size_t>(j)]) % 9) % 9;
                    }
                }
                if (rem[0] == 0 && rem[1] == 0) {
                    ++hits;
                    found = cand;
                }
            }
        REQUIRE(hits == 1);
        CHECK(flat_poly(hf.f) == found);
        const auto prod = poly_mul_mod(flat_poly(hf.f), flat_poly(hf.g), 9);
        CHECK(prod == expect_n);
    }

    SUBCASE("errors") {
        const GaloisTower& t = tower(2, 2, 1, 2);
        // x^2 does not divide x^4 - x over F_2 (and is not irreducible)
        const auto bad =
            std::vector<RingElement>{t.zero(Level::R), t.zero(Level::R), t.one(Level::R)};
        CHECK_THROWS_AS(t.hensel_lift(bad), ring_error);
        const auto nm = std::vector<RingElement>{t.one(Level::R), t.element(Level::R, {2})};
        CHECK_THROWS_AS(t.hensel_lift(nm), ring_error);
    }
}

TEST_CASE("coordinates and embedding") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const auto x = t.element(Level::S, {2, 3});
    const auto coords = t.s_coords(x);
    REQUIRE(coords.size() == 2);
    CHECK(coords[0] == t.element(Level::R, {2}));
    CHECK(coords[1] == t.element(Level::R, {3}));
    CHECK(t.from_s_coords(coords) == x);
    CHECK(t.embed(t.from_int(Level::base, 3), Level::S) == t.from_int(Level::S, 3));
    CHECK_THROWS_AS(t.embed(x, Level::R), ring_error);
    CHECK_THROWS_AS(t.mul(x, t.one(Level::R)), ring_error);  // level mismatch
}

TEST_CASE("s-multiplication counter") {
    const GaloisTower& t = tower(2, 2, 1, 4);
    std::mt19937_64 rng(5);
    const auto a = t.random_element(Level::S, rng);
    const auto b = t.random_element(Level::S, rng);
    t.reset_smul_count();
    (void)t.mul(a, b);
    CHECK(t.smul_count() == 1);
    (void)t.add(a, b);
    (void)t.frobenius(a, 1);
    CHECK(t.smul_count() == 1);  // additions and sigma applications not counted
    t.reset_smul_count();
    CHECK(t.smul_count() == 0);
}
