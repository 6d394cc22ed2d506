#include <doctest.h>

#include <set>

#include "galrank/ring_linalg.hpp"
#include "test_util.hpp"

using namespace galrank;
using galrank::testing::tower;

namespace {

RingMatrix mat(const GaloisTower& t, std::size_t rows, std::size_t cols,
               std::initializer_list<std::uint64_t> vals) {
    RingMatrix m(t, Level::base, rows, cols);
    auto it = vals.begin();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, t.from_int(Level::base, *it++));
    return m;
}

// Brute-force rank invariants of the row space of a matrix over Z_4: if the
// row space is isomorphic to Z_4^a x Z_2^b then its size is 4^a 2^b and its
// 2-torsion has size 2^(a+b), so rank = a+b and free rank = a.
std::pair<unsigned, unsigned> brute_rank_z4(const GaloisTower& t, const RingMatrix& m) {
    std::set<std::vector<std::uint64_t>> space;
    std::vector<std::uint64_t> combo(m.rows(), 0);
    for (;;) {
        std::vector<std::uint64_t> v(m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                v[j] = (v[j] + combo[i] * m(i, j).coeffs()[0]) % 4;
        space.insert(v);
        std::size_t pos = 0;
        while (pos < combo.size() && ++combo[pos] == 4) combo[pos++] = 0;
        if (pos == combo.size()) break;
    }
    unsigned log_size = 0, log_torsion = 0;
    for (std::size_t sz = space.size(); sz > 1; sz /= 2) ++log_size;
    std::size_t torsion = 0;
    for (const auto& v : space) {
        bool tor = true;
        for (auto w : v)
            if ((2 * w) % 4 != 0) tor = false;
        if (tor) ++torsion;
    }
    for (std::size_t sz = torsion; sz > 1; sz /= 2) ++log_torsion;
    (void)t;
    const unsigned rk = log_torsion;            // a + b
    const unsigned frk = log_size - log_torsion;  // a
    return {rk, frk};
}

}  // namespace

TEST_CASE("smith normal form examples over Z_4") {
    const GaloisTower& t = tower(2, 2, 1, 2);

    SUBCASE("diag(2,1) normalizes to (1,2)") {
        auto a = mat(t, 2, 2, {2, 0, 0, 1});
        auto s = smith_normal_form(a);
        CHECK(s.diag_valuations == std::vector<unsigned>{0, 1});
        CHECK(s.diag[0] == t.one(Level::base));
        CHECK(s.diag[1] == t.from_int(Level::base, 2));
        auto d = matmul(matmul(s.left, a), s.right);
        CHECK(d(0, 0) == s.diag[0]);
        CHECK(d(1, 1) == s.diag[1]);
        CHECK(d(0, 1).is_zero());
        CHECK(d(1, 0).is_zero());
        CHECK(rank(a) == 2);
        CHECK(free_rank(a) == 1);
        CHECK(rank_profile(a).to_string() == "1+x");
    }

    SUBCASE("unit determinant gives all-unit diagonal") {
        auto a = mat(t, 2, 2, {2, 1, 3, 2});
        auto s = smith_normal_form(a);
        CHECK(s.diag_valuations == std::vector<unsigned>{0, 0});
    }

    SUBCASE("zero matrix") {
        RingMatrix z23(t, Level::base, 2, 3);
        auto s = smith_normal_form(z23);
        CHECK(s.diag[0].is_zero());
        CHECK(s.diag[1].is_zero());
        CHECK(s.left == RingMatrix::identity(t, Level::base, 2));
        CHECK(s.right == RingMatrix::identity(t, Level::base, 3));
        CHECK(rank(z23) == 0);
        CHECK(free_rank(z23) == 0);
        CHECK(rank_profile(z23).to_string() == "0");
    }

    SUBCASE("identity") {
        auto i3 = RingMatrix::identity(t, Level::base, 3);
        CHECK(rank(i3) == 3);
        CHECK(free_rank(i3) == 3);
        CHECK(rank_profile(i3).to_string() == "3");
    }
}

TEST_CASE("rank agrees with a brute-force module computation over Z_4") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
        RingMatrix a(t, Level::base, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                a.set(i, j, t.from_int(Level::base, rng() % 4));
        const auto [rk, frk] = brute_rank_z4(t, a);
        CHECK(rank(a) == rk);
        CHECK(free_rank(a) == frk);
        const auto profile = rank_profile(a);
        CHECK(profile.rank() == rk);
        CHECK(profile.free_rank() == frk);
    }
}

TEST_CASE("expand and vector rank") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const auto alpha = t.generator(Level::S);

    SUBCASE("basis vectors expand to the identity") {
        std::vector<RingElement> v{t.one(Level::S), alpha};
        CHECK(expand(t, v) == RingMatrix::identity(t, Level::R, 2));
        auto vr = vector_rank(t, v);
        CHECK(vr.rank == 2);
        CHECK(vr.free_rank == 2);
    }
    SUBCASE("zero vector") {
        std::vector<RingElement> v{t.zero(Level::S), t.zero(Level::S)};
        CHECK(expand(t, v).is_zero());
        CHECK(vector_rank(t, v).rank == 0);
    }
    SUBCASE("coordinate read-off") {
        std::vector<RingElement> v{t.element(Level::S, {2, 3})};
        auto e = expand(t, v);
        CHECK(e(0, 0) == t.element(Level::R, {2}));
        CHECK(e(1, 0) == t.element(Level::R, {3}));
    }
    SUBCASE("torsion vector") {
        std::vector<RingElement> v{t.from_int(Level::S, 2), t.zero(Level::S)};
        auto vr = vector_rank(t, v);
        CHECK(vr.rank == 1);
        CHECK(vr.free_rank == 0);
        CHECK(vr.profile.to_string() == "x");
    }
}

TEST_CASE("kernel basis") {
    const GaloisTower& t = tower(2, 2, 1, 2);

    SUBCASE("identity has trivial kernel") {
        auto kb = kernel_basis(RingMatrix::identity(t, Level::base, 2));
        CHECK(kb.rows() == 0);
    }
    SUBCASE("[2] over Z_4") {
        auto kb = kernel_basis(mat(t, 1, 1, {2}));
        REQUIRE(kb.rows() == 1);
        CHECK(kb(0, 0) == t.from_int(Level::base, 2));
    }
    SUBCASE("[[1, alpha]] over GR(4,2) has a unit-coordinate generator") {
        RingMatrix a(t, Level::S, 1, 2);
        a.set(0, 0, t.one(Level::S));
        a.set(0, 1, t.generator(Level::S));
        auto kb = kernel_basis(a);
        REQUIRE(kb.rows() >= 1);
        CHECK(matmul(a, transpose(kb)).is_zero());
        bool unit = false;
        for (std::size_t j = 0; j < 2; ++j)
            if (t.is_unit(kb(0, j))) unit = true;
        CHECK(unit);
    }
    SUBCASE("kernel generates the full solution set (brute force over Z_4)") {
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + rng() % 2, cols = 1 + rng() % 3;
            RingMatrix a(t, Level::base, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    a.set(i, j, t.from_int(Level::base, rng() % 4));
            // brute force {x : A x = 0}
            std::set<std::vector<std::uint64_t>> truth;
            std::vector<std::uint64_t> x(cols, 0);
            for (;;) {
                bool ok = true;
                for (std::size_t i = 0; i < rows && ok; ++i) {
                    std::uint64_t acc = 0;
                    for (std::size_t j = 0; j < cols; ++j)
                        acc = (acc + a(i, j).coeffs()[0] * x[j]) % 4;
                    ok = acc == 0;
                }
                if (ok) truth.insert(x);
                std::size_t pos = 0;
                while (pos < cols && ++x[pos] == 4) x[pos++] = 0;
                if (pos == cols) break;
            }
            // module generated by the kernel rows
            auto kb = kernel_basis(a);
            std::set<std::vector<std::uint64_t>> gen;
            std::vector<std::uint64_t> combo(kb.rows(), 0);
            for (;;) {
                std::vector<std::uint64_t> v(cols, 0);
                for (std::size_t i = 0; i < kb.rows(); ++i)
                    for (std::size_t j = 0; j < cols; ++j)
                        v[j] = (v[j] + combo[i] * kb(i, j).coeffs()[0]) % 4;
                gen.insert(v);
                if (kb.rows() == 0) break;
                std::size_t pos = 0;
                while (pos < combo.size() && ++combo[pos] == 4) combo[pos++] = 0;
                if (pos == combo.size()) break;
            }
            CHECK(gen == truth);
        }
    }
}

TEST_CASE("linear solving") {
    const GaloisTower& t = tower(2, 2, 1, 2);

    SUBCASE("identity system") {
        auto i2 = RingMatrix::identity(t, Level::base, 2);
        std::vector<RingElement> b{t.from_int(Level::base, 3), t.from_int(Level::base, 1)};
        auto x = solve(i2, b);
        REQUIRE(x.has_value());
        CHECK((*x)[0] == b[0]);
        CHECK((*x)[1] == b[1]);
    }
    SUBCASE("divisibility obstruction") {
        std::vector<RingElement> b1{t.one(Level::base)};
        CHECK_FALSE(solve(mat(t, 1, 1, {2}), b1).has_value());
        std::vector<RingElement> b2{t.from_int(Level::base, 2)};
        auto x = solve(mat(t, 1, 1, {2}), b2);
        REQUIRE(x.has_value());
        CHECK(t.mul((*x)[0], t.from_int(Level::base, 2)) == b2[0]);
    }
}

TEST_CASE("random decomposition properties at base and S level") {
    const GaloisTower& t = tower(2, 2, 1, 2);
    const GaloisTower& t9 = tower(3, 2, 1, 2);
    std::mt19937_64 rng(31);
    for (const GaloisTower* tp : {&t, &t9}) {
        const GaloisTower& T = *tp;
        for (int trial = 0; trial < 60; ++trial) {
            const Level lv = trial % 2 ? Level::base : Level::S;
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
            RingMatrix a(T, lv, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    a.set(i, j, T.random_element(lv, rng));
            auto s = smith_normal_form(a);
            // exact reconstruction
            auto d = matmul(matmul(s.left, a), s.right);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    if (i == j && i < s.diag.size())
                        CHECK(d(i, j) == s.diag[i]);
                    else
                        CHECK(d(i, j).is_zero());
                }
            // nondecreasing valuations
            for (std::size_t i = 1; i < s.diag_valuations.size(); ++i)
                CHECK(s.diag_valuations[i - 1] <= s.diag_valuations[i]);
            // transforms invertible
            CHECK(free_rank(s.left) == rows);
            CHECK(free_rank(s.right) == cols);
            // kernel annihilates
            auto kb = kernel_basis(a);
            if (kb.rows() > 0) CHECK(matmul(a, transpose(kb)).is_zero());
            // solvable system round trip
            std::vector<RingElement> x0, b(rows, T.zero(lv));
            for (std::size_t j = 0; j < cols; ++j) x0.push_back(T.random_element(lv, rng));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    b[i] = T.add(b[i], T.mul(a(i, j), x0[j]));
            auto xs = solve(a, b);
            REQUIRE(xs.has_value());
            for (std::size_t i = 0; i < rows; ++i) {
                RingElement acc = T.zero(lv);
                for (std::size_t j = 0; j < cols; ++j)
                    acc = T.add(acc, T.mul(a(i, j), (*xs)[j]));
                CHECK(acc == b[i]);
            }
        }
    }
}

TEST_CASE("moore matrix") {
    const GaloisTower& t = tower(2, 2, 1, 4);
    const auto g = GabidulinCode::power_basis_support(t, 3);
    auto m = moore_matrix(t, g, 2);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(m(0, j) == g[j]);
        CHECK(m(1, j) == t.frobenius(g[j], 1));
    }
}
