#include "galrank/galois_ring.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace galrank {

namespace {

constexpr std::uint64_t kMaxBaseMod = (std::uint64_t{1} << 32);   // p^r < 2^32
constexpr std::uint64_t kMaxResidue = (std::uint64_t{1} << 62);   // q = p^s bound
constexpr std::uint64_t kMaxWitness = (std::uint64_t{1} << 22);   // materialized cofactor degree

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// p^e with overflow guard; returns 0 on overflow past `limit`.
std::uint64_t checked_pow(std::uint64_t p, unsigned e, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (v > limit / p) return 0;
        v *= p;
    }
    return v;
}

std::uint64_t modpow_u64(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t res = 1 % mod;
    a %= mod;
    while (e > 0) {
        if (e & 1) res = (res * a) % mod;
        a = (a * a) % mod;
        e >>= 1;
    }
    return res;
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

// Access to raw kernels for the file-local polynomial toolkits.
struct TowerInternal {
    static void r_mul(const GaloisTower& t, std::uint64_t* dst, const std::uint64_t* a,
                      const std::uint64_t* b) {
        t.raw_r_mul(dst, a, b);
    }
    static std::uint64_t bmul(const GaloisTower& t, std::uint64_t a, std::uint64_t b) {
        return t.bmul(a, b);
    }
    static std::uint64_t badd(const GaloisTower& t, std::uint64_t a, std::uint64_t b) {
        return t.badd(a, b);
    }
    static std::uint64_t bsub(const GaloisTower& t, std::uint64_t a, std::uint64_t b) {
        return t.bsub(a, b);
    }
};

namespace {

// ---------------------------------------------------------------------------
// Polynomial toolkit over the residue field k (coefficients stored as fixed
// size word chunks with all words reduced mod p). Two coefficient contexts:
// KBase (k = F_p, one word) and KExt (k = F_{p^s}, s words mod modulus_R).
// Used only during tower construction and Hensel lifting.
// ---------------------------------------------------------------------------

struct KBase {
    const GaloisTower* t;
    std::uint64_t p;
    unsigned chunk_words() const { return 1; }
    void mul(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b) const {
        dst[0] = (a[0] * b[0]) % p;
    }
    void add(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b) const {
        dst[0] = (a[0] + b[0]) % p;
    }
    void sub(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b) const {
        dst[0] = (a[0] + p - b[0]) % p;
    }
    void inv(std::uint64_t* dst, const std::uint64_t* a) const {
        dst[0] = modpow_u64(a[0], p - 2, p);
    }
    void scale(std::uint64_t* dst, const std::uint64_t* a, std::uint64_t c) const {
        dst[0] = (a[0] * (c % p)) % p;
    }
};

struct KExt {
    const GaloisTower* t;
    std::uint64_t p;
    unsigned s;
    unsigned chunk_words() const { return s; }
    void mul(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b) const {
        TowerInternal::r_mul(*t, dst, a, b);
        for (unsigned i = 0; i < s; ++i) dst[i] %= p;
    }
    void add(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b) const {
        for (unsigned i = 0; i < s; ++i) dst[i] = (a[i] + b[i]) % p;
    }
    void sub(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b) const {
        for (unsigned i = 0; i < s; ++i) dst[i] = (a[i] + p - b[i]) % p;
    }
    // Inverse in F_{p^s} via a^(p^s - 2), computed digit by digit in base p.
    void inv(std::uint64_t* dst, const std::uint64_t* a) const {
        std::vector<std::uint64_t> res(s, 0), pw(s), tmp(s);
        res[0] = 1;
        // cache a^(p-1) and a^(p-2)
        std::vector<std::uint64_t> ap1(s), ap2(s);
        pow_small(ap1.data(), a, p - 1);
        pow_small(ap2.data(), a, p >= 2 ? p - 2 : 0);
        for (unsigned digit = 0; digit < s; ++digit) {
            // res = res^p
            pow_small(tmp.data(), res.data(), p);
            std::copy(tmp.begin(), tmp.end(), res.begin());
            const std::uint64_t dv = (digit + 1 == s) ? (p - 2) : (p - 1);
            const std::uint64_t* f = (dv == p - 1) ? ap1.data() : ap2.data();
            if (dv > 0) {
                mul(tmp.data(), res.data(), f);
                std::copy(tmp.begin(), tmp.end(), res.begin());
            }
        }
        std::copy(res.begin(), res.end(), dst);
    }
    void scale(std::uint64_t* dst, const std::uint64_t* a, std::uint64_t c) const {
        for (unsigned i = 0; i < s; ++i) dst[i] = (a[i] * (c % p)) % p;
    }

  private:
    void pow_small(std::uint64_t* dst, const std::uint64_t* a, std::uint64_t e) const {
        std::vector<std::uint64_t> res(s, 0), base(a, a + s), tmp(s);
        res[0] = 1;
        while (e > 0) {
            if (e & 1) {
                mul(tmp.data(), res.data(), base.data());
                std::copy(tmp.begin(), tmp.end(), res.begin());
            }
            mul(tmp.data(), base.data(), base.data());
            std::copy(tmp.begin(), tmp.end(), base.begin());
            e >>= 1;
        }
        std::copy(res.begin(), res.end(), dst);
    }
};

// Dense polynomials over k as flat chunk vectors, least degree first.
template <class K>
struct KPoly {
    const K& k;
    unsigned cw;
    explicit KPoly(const K& ctx) : k(ctx), cw(ctx.chunk_words()) {}

    using P = std::vector<std::uint64_t>;

    static bool chunk_zero(const std::uint64_t* c, unsigned cw) {
        for (unsigned i = 0; i < cw; ++i)
            if (c[i] != 0) return false;
        return true;
    }

    int deg(const P& f) const {
        for (int d = static_cast<int>(f.size() / cw) - 1; d >= 0; --d)
            if (!chunk_zero(f.data() + static_cast<size_t>(d) * cw, cw)) return d;
        return -1;
    }

    void trim(P& f) const {
        int d = deg(f);
        f.resize(static_cast<size_t>(d + 1) * cw);
    }

    P x() const {
        P f(2 * cw, 0);
        f[cw] = 1;
        return f;
    }

    P mul(const P& a, const P& b) const {
        int da = deg(a), db = deg(b);
        if (da < 0 || db < 0) return P{};
        P out(static_cast<size_t>(da + db + 1) * cw, 0);
        std::vector<std::uint64_t> t(cw);
        for (int i = 0; i <= da; ++i) {
            if (chunk_zero(a.data() + static_cast<size_t>(i) * cw, cw)) continue;
            for (int j = 0; j <= db; ++j) {
                k.mul(t.data(), a.data() + static_cast<size_t>(i) * cw,
                      b.data() + static_cast<size_t>(j) * cw);
                std::uint64_t* o = out.data() + static_cast<size_t>(i + j) * cw;
                k.add(o, o, t.data());
            }
        }
        return out;
    }

    // f mod g (g nonzero; normalizes by the inverse of lc(g)).
    P rem(P f, const P& g) const {
        int dg = deg(g);
        if (dg < 0) throw ring_error("kpoly: division by zero");
        std::vector<std::uint64_t> lcinv(cw), c(cw), t(cw);
        k.inv(lcinv.data(), g.data() + static_cast<size_t>(dg) * cw);
        int df = deg(f);
        while (df >= dg) {
            k.mul(c.data(), f.data() + static_cast<size_t>(df) * cw, lcinv.data());
            const int shift = df - dg;
            for (int j = 0; j <= dg; ++j) {
                k.mul(t.data(), c.data(), g.data() + static_cast<size_t>(j) * cw);
                std::uint64_t* o = f.data() + static_cast<size_t>(j + shift) * cw;
                k.sub(o, o, t.data());
            }
            df = deg(f);
        }
        trim(f);
        return f;
    }

    P mulmod(const P& a, const P& b, const P& g) const { return rem(mul(a, b), g); }

    // a^(p) mod g, then iterated: a^(p^steps) mod g.
    P pow_p_steps(P a, std::uint64_t p, unsigned steps, const P& g) const {
        for (unsigned i = 0; i < steps; ++i) {
            P res(cw, 0);
            res[0] = 1;
            P base = a;
            std::uint64_t e = p;
            while (e > 0) {
                if (e & 1) res = mulmod(res, base, g);
                base = mulmod(base, base, g);
                e >>= 1;
            }
            a = std::move(res);
        }
        return a;
    }

    P gcd(P a, P b) const {
        trim(a);
        trim(b);
        while (deg(b) >= 0) {
            P r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    bool is_irreducible(const P& f, std::uint64_t p, unsigned s_steps) const {
        const int d = deg(f);
        if (d < 1) return false;
        if (d == 1) return true;
        // t_i := x^(q^i) mod f, q = p^s_steps
        P t = x();
        t = rem(t, f);
        std::vector<P> powers(static_cast<size_t>(d) + 1);
        for (int i = 1; i <= d; ++i) {
            t = pow_p_steps(t, p, s_steps, f);
            powers[static_cast<size_t>(i)] = t;
        }
        // x^(q^d) == x mod f
        P xm = rem(x(), f);
        if (powers[static_cast<size_t>(d)] != xm) return false;
        for (unsigned ell : prime_divisors(static_cast<unsigned>(d))) {
            P diff = powers[static_cast<size_t>(d) / ell];
            P xx = xm;
            const size_t len = std::max(diff.size(), xx.size());
            diff.resize(len, 0);
            xx.resize(len, 0);
            for (size_t c = 0; c < len / cw; ++c)
                k.sub(diff.data() + c * cw, diff.data() + c * cw, xx.data() + c * cw);
            P g = gcd(f, diff);
            if (deg(g) != 0) return false;
        }
        return true;
    }
};

// Searches the lexicographically smallest monic irreducible of degree d over
// k, enumerating coefficient tuples as base-|k| integers (constant term is
// the least significant digit). Coefficients of k are themselves encoded as
// base-p integers of their F_p coordinates.
template <class K>
std::vector<std::uint64_t> find_irreducible(const K& k, unsigned d, std::uint64_t p,
                                            unsigned s_steps, std::uint64_t field_size) {
    KPoly<K> kp(k);
    const unsigned cw = k.chunk_words();
    typename KPoly<K>::P f(static_cast<size_t>(d + 1) * cw, 0);
    f[static_cast<size_t>(d) * cw] = 1;  // monic
    for (std::uint64_t n = 0;; ++n) {
        // digits of n in base |k|, decoded into chunks
        std::uint64_t v = n;
        for (unsigned i = 0; i < d; ++i) {
            std::uint64_t digit = v % field_size;
            v /= field_size;
            std::uint64_t* c = f.data() + static_cast<size_t>(i) * cw;
            for (unsigned w = 0; w < cw; ++w) {
                c[w] = digit % p;
                digit /= p;
            }
        }
        if (v != 0) throw ring_error("irreducible search exhausted");  // unreachable
        if (kp.is_irreducible(f, p, s_steps)) return f;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// base helpers
// ---------------------------------------------------------------------------

std::uint64_t GaloisTower::badd(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t c = a + b;
    return c >= q0_ ? c - q0_ : c;
}

std::uint64_t GaloisTower::bsub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + q0_ - b;
}

std::uint64_t GaloisTower::bmul(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t c = a * b;
    return mask_ ? (c & mask_) : (c % q0_);
}

unsigned GaloisTower::words(Level level) const {
    switch (level) {
        case Level::base: return 1;
        case Level::R: return params_.s;
        case Level::S: return params_.s * params_.m;
    }
    return 1;
}

void GaloisTower::check_level(const RingElement& a, Level level) const {
    if (a.level() != level || a.coeffs_.size() != words(level))
        throw ring_error("element level mismatch");
}

void GaloisTower::check_same(const RingElement& a, const RingElement& b) const {
    if (a.level() != b.level()) throw ring_error("operands at different levels");
    check_level(a, a.level());
    check_level(b, b.level());
}

// ---------------------------------------------------------------------------
// raw kernels
// ---------------------------------------------------------------------------

void GaloisTower::raw_r_mul(std::uint64_t* dst, const std::uint64_t* a,
                            const std::uint64_t* b) const {
    const unsigned s = params_.s;
    if (s == 1) {
        dst[0] = bmul(a[0], b[0]);
        return;
    }
    thread_local std::vector<std::uint64_t> tmp;
    tmp.assign(2 * s - 1, 0);
    for (unsigned i = 0; i < s; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < s; ++j)
            tmp[i + j] = badd(tmp[i + j], bmul(a[i], b[j]));
    }
    for (unsigned d = 2 * s - 2; d >= s; --d) {
        const std::uint64_t c = tmp[d];
        if (c == 0) continue;
        tmp[d] = 0;
        for (unsigned j = 0; j < s; ++j)
            tmp[d - s + j] = bsub(tmp[d - s + j], bmul(c, mod_r_[j]));
    }
    std::copy(tmp.begin(), tmp.begin() + s, dst);
}

void GaloisTower::raw_s_mul(std::uint64_t* dst, const std::uint64_t* a,
                            const std::uint64_t* b) const {
    const unsigned s = params_.s, m = params_.m;
    if (s == 1) {
        thread_local std::vector<std::uint64_t> tmp;
        tmp.assign(2 * m - 1, 0);
        for (unsigned i = 0; i < m; ++i) {
            if (a[i] == 0) continue;
            const std::uint64_t ai = a[i];
            for (unsigned j = 0; j < m; ++j)
                tmp[i + j] = badd(tmp[i + j], bmul(ai, b[j]));
        }
        for (unsigned d = 2 * m - 2; d >= m; --d) {
            const std::uint64_t c = tmp[d];
            if (c == 0) continue;
            tmp[d] = 0;
            for (unsigned j = 0; j < m; ++j)
                tmp[d - m + j] = bsub(tmp[d - m + j], bmul(c, mod_s_[j]));
        }
        std::copy(tmp.begin(), tmp.begin() + m, dst);
        return;
    }
    thread_local std::vector<std::uint64_t> tmp, prod;
    tmp.assign(static_cast<size_t>(2 * m - 1) * s, 0);
    prod.assign(s, 0);
    for (unsigned i = 0; i < m; ++i) {
        const std::uint64_t* ai = a + static_cast<size_t>(i) * s;
        if (std::all_of(ai, ai + s, [](std::uint64_t w) { return w == 0; })) continue;
        for (unsigned j = 0; j < m; ++j) {
            raw_r_mul(prod.data(), ai, b + static_cast<size_t>(j) * s);
            std::uint64_t* o = tmp.data() + static_cast<size_t>(i + j) * s;
            for (unsigned w = 0; w < s; ++w) o[w] = badd(o[w], prod[w]);
        }
    }
    for (unsigned d = 2 * m - 2; d >= m; --d) {
        std::uint64_t* c = tmp.data() + static_cast<size_t>(d) * s;
        if (std::all_of(c, c + s, [](std::uint64_t w) { return w == 0; })) continue;
        std::vector<std::uint64_t> csave(c, c + s);
        std::fill(c, c + s, 0);
        for (unsigned j = 0; j < m; ++j) {
            raw_r_mul(prod.data(), csave.data(), mod_s_.data() + static_cast<size_t>(j) * s);
            std::uint64_t* o = tmp.data() + static_cast<size_t>(d - m + j) * s;
            for (unsigned w = 0; w < s; ++w) o[w] = bsub(o[w], prod[w]);
        }
    }
    std::copy(tmp.begin(), tmp.begin() + static_cast<size_t>(m) * s, dst);
}

void GaloisTower::raw_mul_level(Level level, std::uint64_t* dst, const std::uint64_t* a,
                                const std::uint64_t* b) const {
    switch (level) {
        case Level::base: dst[0] = bmul(a[0], b[0]); return;
        case Level::R: raw_r_mul(dst, a, b); return;
        case Level::S: raw_s_mul(dst, a, b); return;
    }
}

void GaloisTower::raw_frobenius(std::uint64_t* dst, const std::uint64_t* x,
                                unsigned power) const {
    const unsigned s = params_.s, m = params_.m;
    power %= m;
    if (power == 0) {
        std::copy(x, x + static_cast<size_t>(m) * s, dst);
        return;
    }
    const std::uint64_t* M = frob_[power].data();
    if (s == 1) {
        for (unsigned i = 0; i < m; ++i) {
            std::uint64_t acc = 0;
            const std::uint64_t* row = M + static_cast<size_t>(i) * m;
            for (unsigned j = 0; j < m; ++j)
                if (x[j] != 0) acc = badd(acc, bmul(row[j], x[j]));
            dst[i] = acc;
        }
        return;
    }
    thread_local std::vector<std::uint64_t> prod;
    prod.assign(s, 0);
    for (unsigned i = 0; i < m; ++i) {
        std::uint64_t* out = dst + static_cast<size_t>(i) * s;
        std::fill(out, out + s, 0);
        for (unsigned j = 0; j < m; ++j) {
            const std::uint64_t* mij = M + (static_cast<size_t>(i) * m + j) * s;
            raw_r_mul(prod.data(), mij, x + static_cast<size_t>(j) * s);
            for (unsigned w = 0; w < s; ++w) out[w] = badd(out[w], prod[w]);
        }
    }
}

// ---------------------------------------------------------------------------
// element factories and arithmetic
// ---------------------------------------------------------------------------

RingElement GaloisTower::zero(Level level) const {
    return RingElement(level, std::vector<std::uint64_t>(words(level), 0));
}

RingElement GaloisTower::one(Level level) const {
    std::vector<std::uint64_t> c(words(level), 0);
    c[0] = 1 % q0_;
    return RingElement(level, std::move(c));
}

RingElement GaloisTower::from_int(Level level, std::uint64_t value) const {
    std::vector<std::uint64_t> c(words(level), 0);
    c[0] = value % q0_;
    return RingElement(level, std::move(c));
}

RingElement GaloisTower::element(Level level, std::vector<std::uint64_t> flat) const {
    if (flat.size() != words(level)) throw ring_error("element: wrong coefficient count");
    for (auto& w : flat) w %= q0_;
    return RingElement(level, std::move(flat));
}

RingElement GaloisTower::generator(Level level) const {
    std::vector<std::uint64_t> c(words(level), 0);
    switch (level) {
        case Level::base: c[0] = 1 % q0_; break;
        case Level::R:
            if (params_.s == 1) throw ring_error("generator: R equals the base ring");
            c[1] = 1;
            break;
        case Level::S:
            if (params_.m == 1) throw ring_error("generator: S equals R");
            c[params_.s] = 1;
            break;
    }
    return RingElement(level, std::move(c));
}

RingElement GaloisTower::embed(const RingElement& x, Level target) const {
    check_level(x, x.level());
    if (static_cast<int>(x.level()) > static_cast<int>(target))
        throw ring_error("embed: cannot embed downward");
    std::vector<std::uint64_t> c(words(target), 0);
    std::copy(x.coeffs_.begin(), x.coeffs_.end(), c.begin());
    return RingElement(target, std::move(c));
}

RingElement GaloisTower::random_element(Level level, std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, q0_ - 1);
    std::vector<std::uint64_t> c(words(level));
    for (auto& w : c) w = dist(rng);
    return RingElement(level, std::move(c));
}

RingElement GaloisTower::random_unit(Level level, std::mt19937_64& rng) const {
    for (;;) {
        RingElement x = random_element(level, rng);
        if (is_unit(x)) return x;
    }
}

RingElement GaloisTower::add(const RingElement& a, const RingElement& b) const {
    check_same(a, b);
    std::vector<std::uint64_t> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = badd(a.coeffs_[i], b.coeffs_[i]);
    return RingElement(a.level(), std::move(c));
}

RingElement GaloisTower::sub(const RingElement& a, const RingElement& b) const {
    check_same(a, b);
    std::vector<std::uint64_t> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = bsub(a.coeffs_[i], b.coeffs_[i]);
    return RingElement(a.level(), std::move(c));
}

RingElement GaloisTower::neg(const RingElement& a) const {
    check_level(a, a.level());
    std::vector<std::uint64_t> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = bsub(0, a.coeffs_[i]);
    return RingElement(a.level(), std::move(c));
}

RingElement GaloisTower::mul_impl(const RingElement& a, const RingElement& b,
                                  bool reduce_mod_p) const {
    check_same(a, b);
    if (a.level() == Level::S) smul_count_.fetch_add(1, std::memory_order_relaxed);
    std::vector<std::uint64_t> c(a.coeffs_.size());
    raw_mul_level(a.level(), c.data(), a.coeffs_.data(), b.coeffs_.data());
    if (reduce_mod_p)
        for (auto& w : c) w %= params_.p;
    return RingElement(a.level(), std::move(c));
}

RingElement GaloisTower::mul(const RingElement& a, const RingElement& b) const {
    return mul_impl(a, b, false);
}

RingElement GaloisTower::pow(const RingElement& a, std::uint64_t e) const {
    RingElement res = one(a.level());
    RingElement base = a;
    while (e > 0) {
        if (e & 1) res = mul(res, base);
        base = mul(base, base);
        e >>= 1;
    }
    return res;
}

unsigned GaloisTower::valuation(const RingElement& a) const {
    check_level(a, a.level());
    unsigned best = params_.r;
    for (auto w : a.coeffs_) {
        if (w == 0) continue;  // zero words contribute r
        unsigned v = 0;
        while (w % params_.p == 0) {
            w /= params_.p;
            ++v;
        }
        if (v < best) best = v;
        if (best == 0) return 0;
    }
    return best;
}

RingElement GaloisTower::divide_by_p_power(const RingElement& a, unsigned v) const {
    check_level(a, a.level());
    if (v == 0) return a;
    if (v > params_.r) throw ring_error("divide_by_p_power: exponent exceeds nilpotency");
    const std::uint64_t pv = checked_pow(params_.p, v, q0_);
    std::vector<std::uint64_t> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (a.coeffs_[i] % pv != 0) throw ring_error("divide_by_p_power: not divisible");
        c[i] = a.coeffs_[i] / pv;
    }
    return RingElement(a.level(), std::move(c));
}

RingElement GaloisTower::residue(const RingElement& a) const {
    check_level(a, a.level());
    std::vector<std::uint64_t> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] % params_.p;
    return RingElement(a.level(), std::move(c));
}

// ---------------------------------------------------------------------------
// inversion
// ---------------------------------------------------------------------------

namespace {

// Extended Euclid in F_p[y]: inverse of a (degree < d) modulo fmod (degree d).
// All words already reduced mod p.
std::vector<std::uint64_t> euclid_inverse_fp(std::span<const std::uint64_t> a,
                                             std::span<const std::uint64_t> fmod,
                                             std::uint64_t p) {
    using P = std::vector<std::uint64_t>;
    auto deg = [](const P& f) {
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
            if (f[static_cast<size_t>(i)] != 0) return i;
        return -1;
    };
    P r0(fmod.begin(), fmod.end()), r1(a.begin(), a.end());
    P t0{0}, t1{1};
    int d1 = deg(r1);
    if (d1 < 0) throw ring_error("residue inverse of zero");
    while (true) {
        int d0 = deg(r0);
        d1 = deg(r1);
        if (d1 < 0) throw ring_error("residue inverse: element not invertible");
        if (d1 == 0) break;
        // r0 -= q * r1 (polynomial division step by step)
        const std::uint64_t lcinv = modpow_u64(r1[static_cast<size_t>(d1)], p - 2, p);
        while (d0 >= d1) {
            const std::uint64_t c = (r0[static_cast<size_t>(d0)] * lcinv) % p;
            const int shift = d0 - d1;
            if (c != 0) {
                for (int j = 0; j <= d1; ++j) {
                    auto& w = r0[static_cast<size_t>(j + shift)];
                    w = (w + p - (c * r1[static_cast<size_t>(j)]) % p) % p;
                }
                // t0 -= (c x^shift) * t1
                if (t0.size() < t1.size() + static_cast<size_t>(shift))
                    t0.resize(t1.size() + static_cast<size_t>(shift), 0);
                for (size_t j = 0; j < t1.size(); ++j) {
                    auto& w = t0[j + static_cast<size_t>(shift)];
                    w = (w + p - (c * t1[j]) % p) % p;
                }
            }
            d0 = deg(r0);
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
    // r1 is a nonzero constant: inverse = t1 / r1
    const std::uint64_t cinv = modpow_u64(r1[0], p - 2, p);
    P out(fmod.size() - 1, 0);
    for (size_t i = 0; i < t1.size() && i < out.size(); ++i) out[i] = (t1[i] * cinv) % p;
    return out;
}

}  // namespace

RingElement GaloisTower::residue_inverse(const RingElement& a) const {
    const Level level = a.level();
    const unsigned d = words(level);
    const std::uint64_t p = params_.p;
    std::vector<std::uint64_t> aw(a.coeffs_.begin(), a.coeffs_.end());
    for (auto& w : aw) w %= p;
    if (d == 1) {
        std::vector<std::uint64_t> c{modpow_u64(aw[0], p - 2, p)};
        return RingElement(level, std::move(c));
    }
    if (level == Level::R || (level == Level::S && params_.s == 1)) {
        const auto& mod = (level == Level::R) ? mod_r_ : mod_s_;
        std::vector<std::uint64_t> fm(mod.begin(), mod.end());
        for (auto& w : fm) w %= p;
        auto inv = euclid_inverse_fp(aw, fm, p);
        inv.resize(d, 0);
        return RingElement(level, std::move(inv));
    }
    // Generic path: a^(p^d - 2) with digits of the exponent in base p.
    RingElement res = one(level);
    for (auto& w : res.coeffs_) w %= p;
    const RingElement ar(level, aw);
    auto pow_mod_p = [&](const RingElement& x, std::uint64_t e) {
        RingElement acc = one(level);
        for (auto& w : acc.coeffs_) w %= p;
        RingElement base = x;
        while (e > 0) {
            if (e & 1) acc = mul_impl(acc, base, true);
            base = mul_impl(base, base, true);
            e >>= 1;
        }
        return acc;
    };
    const RingElement ap1 = pow_mod_p(ar, p - 1);
    const RingElement ap2 = pow_mod_p(ar, p - 2);
    for (unsigned digit = 0; digit < d; ++digit) {
        res = pow_mod_p(res, p);
        const bool last = (digit + 1 == d);
        const RingElement& f = last ? ap2 : ap1;
        const std::uint64_t dv = last ? p - 2 : p - 1;
        if (dv > 0) res = mul_impl(res, f, true);
    }
    return res;
}

RingElement GaloisTower::invert(const RingElement& a) const {
    if (!is_unit(a)) throw ring_error("invert: element is not a unit");
    RingElement y = residue_inverse(a);
    const RingElement two = from_int(a.level(), 2);
    for (unsigned prec = 1; prec < params_.r; prec *= 2) {
        RingElement t = sub(two, mul(a, y));
        y = mul(y, t);
    }
    if (!(mul(a, y) == one(a.level()))) throw ring_error("invert: lifting failed");
    return y;
}

// ---------------------------------------------------------------------------
// Frobenius
// ---------------------------------------------------------------------------

RingElement GaloisTower::frobenius(const RingElement& x, unsigned power) const {
    check_level(x, Level::S);
    power %= params_.m;
    if (power == 0) return x;
    std::vector<std::uint64_t> c(x.coeffs_.size());
    raw_frobenius(c.data(), x.coeffs_.data(), power);
    return RingElement(Level::S, std::move(c));
}

Automorphism GaloisTower::automorphism(unsigned power) const {
    const unsigned m = params_.m, s = params_.s;
    power %= m;
    Automorphism aut;
    aut.power = power;
    aut.dim = m;
    aut.matrix.reserve(static_cast<size_t>(m) * m);
    const std::uint64_t* M = frob_[power].data();
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) {
            const std::uint64_t* e = M + (static_cast<size_t>(i) * m + j) * s;
            aut.matrix.emplace_back(Level::R, std::vector<std::uint64_t>(e, e + s));
        }
    return aut;
}

RingElement GaloisTower::apply(const Automorphism& aut, const RingElement& x) const {
    check_level(x, Level::S);
    if (aut.dim != params_.m || aut.matrix.size() != static_cast<size_t>(aut.dim) * aut.dim)
        throw ring_error("apply: automorphism dimension mismatch");
    const unsigned m = params_.m, s = params_.s;
    std::vector<std::uint64_t> out(static_cast<size_t>(m) * s, 0);
    std::vector<std::uint64_t> prod(s);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) {
            raw_r_mul(prod.data(), aut.matrix[static_cast<size_t>(i) * m + j].coeffs_.data(),
                      x.coeffs_.data() + static_cast<size_t>(j) * s);
            for (unsigned w = 0; w < s; ++w) {
                auto& o = out[static_cast<size_t>(i) * s + w];
                o = badd(o, prod[w]);
            }
        }
    return RingElement(Level::S, std::move(out));
}

Automorphism GaloisTower::compose(const Automorphism& a, const Automorphism& b) const {
    return automorphism((a.power + b.power) % params_.m);
}

Automorphism GaloisTower::inverse(const Automorphism& a) const {
    return automorphism((params_.m - a.power % params_.m) % params_.m);
}

std::vector<RingElement> GaloisTower::s_coords(const RingElement& x) const {
    check_level(x, Level::S);
    const unsigned m = params_.m, s = params_.s;
    std::vector<RingElement> out;
    out.reserve(m);
    for (unsigned j = 0; j < m; ++j) {
        const auto* c = x.coeffs_.data() + static_cast<size_t>(j) * s;
        out.emplace_back(Level::R, std::vector<std::uint64_t>(c, c + s));
    }
    return out;
}

RingElement GaloisTower::from_s_coords(std::span<const RingElement> coords) const {
    const unsigned m = params_.m, s = params_.s;
    if (coords.size() != m) throw ring_error("from_s_coords: need m coordinates");
    std::vector<std::uint64_t> flat(static_cast<size_t>(m) * s);
    for (unsigned j = 0; j < m; ++j) {
        check_level(coords[j], Level::R);
        std::copy(coords[j].coeffs_.begin(), coords[j].coeffs_.end(),
                  flat.begin() + static_cast<size_t>(j) * s);
    }
    return RingElement(Level::S, std::move(flat));
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

namespace {

// Dense polynomial helpers over R, full precision mod p^r, flat chunks of s
// words. Only used at construction / lifting scale.
struct RPolyCtx {
    const GaloisTower& t;
    unsigned s;
    std::uint64_t q0;

    using P = std::vector<std::uint64_t>;

    bool chunk_zero(const std::uint64_t* c) const {
        for (unsigned i = 0; i < s; ++i)
            if (c[i] != 0) return false;
        return true;
    }

    int deg(const P& f) const {
        for (int d = static_cast<int>(f.size() / s) - 1; d >= 0; --d)
            if (!chunk_zero(f.data() + static_cast<size_t>(d) * s)) return d;
        return -1;
    }

    P mul(const P& a, const P& b) const {
        const int da = deg(a), db = deg(b);
        if (da < 0 || db < 0) return P{};
        P out(static_cast<size_t>(da + db + 1) * s, 0);
        std::vector<std::uint64_t> prod(s);
        for (int i = 0; i <= da; ++i) {
            const std::uint64_t* ai = a.data() + static_cast<size_t>(i) * s;
            if (chunk_zero(ai)) continue;
            for (int j = 0; j <= db; ++j) {
                TowerInternal::r_mul(t, prod.data(), ai, b.data() + static_cast<size_t>(j) * s);
                std::uint64_t* o = out.data() + static_cast<size_t>(i + j) * s;
                for (unsigned w = 0; w < s; ++w) o[w] = TowerInternal::badd(t, o[w], prod[w]);
            }
        }
        return out;
    }

    // remainder of f modulo a monic g
    P rem(P f, const P& g) const {
        const int dg = deg(g);
        std::vector<std::uint64_t> prod(s);
        int df = deg(f);
        while (df >= dg) {
            const std::uint64_t* c = f.data() + static_cast<size_t>(df) * s;
            std::vector<std::uint64_t> csave(c, c + s);
            const int shift = df - dg;
            for (int j = 0; j <= dg; ++j) {
                TowerInternal::r_mul(t, prod.data(), csave.data(),
                                     g.data() + static_cast<size_t>(j) * s);
                std::uint64_t* o = f.data() + static_cast<size_t>(j + shift) * s;
                for (unsigned w = 0; w < s; ++w) o[w] = TowerInternal::bsub(t, o[w], prod[w]);
            }
            df = deg(f);
        }
        int d = deg(f);
        f.resize(static_cast<size_t>(std::max(d + 1, 1)) * s, 0);
        return f;
    }

    // quotient of f by a monic g, requiring an exact division
    P exact_div(P f, const P& g) const {
        const int dg = deg(g);
        int df = deg(f);
        if (df < dg) {
            if (deg(f) >= 0) throw ring_error("exact_div: not divisible");
            return P{};
        }
        P q(static_cast<size_t>(df - dg + 1) * s, 0);
        std::vector<std::uint64_t> prod(s);
        while (df >= dg) {
            const std::uint64_t* c = f.data() + static_cast<size_t>(df) * s;
            std::vector<std::uint64_t> csave(c, c + s);
            const int shift = df - dg;
            std::copy(csave.begin(), csave.end(), q.begin() + static_cast<size_t>(shift) * s);
            for (int j = 0; j <= dg; ++j) {
                TowerInternal::r_mul(t, prod.data(), csave.data(),
                                     g.data() + static_cast<size_t>(j) * s);
                std::uint64_t* o = f.data() + static_cast<size_t>(j + shift) * s;
                for (unsigned w = 0; w < s; ++w) o[w] = TowerInternal::bsub(t, o[w], prod[w]);
            }
            df = deg(f);
        }
        if (deg(f) >= 0) throw ring_error("exact_div: nonzero remainder");
        return q;
    }

    P mulmod(const P& a, const P& b, const P& g) const { return rem(mul(a, b), g); }

    // x^(p^steps) mod g
    P frobenius_power_x(std::uint64_t p, unsigned steps, const P& g) const {
        P h(2 * s, 0);
        h[s] = 1;  // x
        h = rem(std::move(h), g);
        for (unsigned i = 0; i < steps; ++i) {
            P res(s, 0);
            res[0] = 1;
            P base = h;
            std::uint64_t e = p;
            while (e > 0) {
                if (e & 1) res = mulmod(res, base, g);
                base = mulmod(base, base, g);
                e >>= 1;
            }
            h = std::move(res);
        }
        return h;
    }
};

}  // namespace

void GaloisTower::init_base_fields() {
    q0_ = checked_pow(params_.p, params_.r, kMaxBaseMod - 1);
    if (q0_ == 0) throw ring_error("p^r must be below 2^32");
    q_ = checked_pow(params_.p, params_.s, kMaxResidue);
    if (q_ == 0) throw ring_error("p^s too large");
    mask_ = (q0_ & (q0_ - 1)) == 0 ? q0_ - 1 : 0;
}

std::vector<std::uint64_t> GaloisTower::lift_modulus(const std::vector<std::uint64_t>& fbar,
                                                     unsigned d) const {
    const unsigned s = params_.s;
    const std::uint64_t p = params_.p;
    RPolyCtx rp{*this, s, q0_};

    std::vector<std::uint64_t> f = fbar;  // words already in [0, p)
    if (params_.r == 1) return f;

    // derivative of fbar over the residue field, negated
    std::vector<std::uint64_t> minus_deriv(static_cast<size_t>(d) * s, 0);
    for (unsigned j = 1; j <= d; ++j) {
        const std::uint64_t jc = j % p;
        for (unsigned w = 0; w < s; ++w) {
            const std::uint64_t v = (fbar[static_cast<size_t>(j) * s + w] * jc) % p;
            minus_deriv[static_cast<size_t>(j - 1) * s + w] = (p - v) % p;
        }
    }

    // k-level context for the correction computation
    KExt kext{this, p, s};
    KBase kbase{this, p};

    auto k_correction = [&](const std::vector<std::uint64_t>& eps) {
        // (eps * (-fbar')) mod fbar over the residue field
        if (s == 1) {
            KPoly<KBase> kp(kbase);
            auto prod = kp.mul(eps, minus_deriv);
            return kp.rem(std::move(prod), fbar);
        }
        KPoly<KExt> kp(kext);
        auto prod = kp.mul(eps, minus_deriv);
        return kp.rem(std::move(prod), fbar);
    };

    std::uint64_t pj = 1;
    for (unsigned j = 1; j < params_.r; ++j) {
        pj *= p;
        // e := (x^(q^d) - x) mod f over R
        auto h = rp.frobenius_power_x(p, params_.s * d, f);
        h.resize(std::max<size_t>(h.size(), 2 * s), 0);
        h[s] = bsub(h[s], 1);  // subtract x ...
        h = rp.rem(std::move(h), f);  // ... and reduce (deg f may be 1)
        if (rp.deg(h) < 0) break;
        h.resize(static_cast<size_t>(std::max(d, 1u)) * s, 0);
        // e must vanish mod p^j; divide and reduce mod p
        std::vector<std::uint64_t> eps(h.size());
        for (size_t i = 0; i < h.size(); ++i) {
            if (h[i] % pj != 0) throw ring_error("hensel: unexpected error term");
            eps[i] = (h[i] / pj) % p;
        }
        auto u = k_correction(eps);
        u.resize(static_cast<size_t>(d) * s, 0);
        for (size_t i = 0; i < u.size(); ++i)
            f[i] = badd(f[i], bmul(u[i], pj));
    }

    // final exactness check
    auto h = rp.frobenius_power_x(p, params_.s * d, f);
    h.resize(std::max<size_t>(h.size(), 2 * s), 0);
    h[s] = bsub(h[s], 1);
    h = rp.rem(std::move(h), f);
    if (rp.deg(h) >= 0) throw ring_error("hensel: lift did not converge");
    return f;
}

HenselFactors GaloisTower::hensel_lift(std::span<const RingElement> fbar) const {
    const unsigned s = params_.s;
    const std::uint64_t p = params_.p;
    if (fbar.size() < 2) throw ring_error("hensel_lift: degree must be at least 1");
    const unsigned d = static_cast<unsigned>(fbar.size() - 1);

    std::vector<std::uint64_t> fb(static_cast<size_t>(d + 1) * s, 0);
    for (unsigned i = 0; i <= d; ++i) {
        check_level(fbar[i], Level::R);
        for (unsigned w = 0; w < s; ++w)
            fb[static_cast<size_t>(i) * s + w] = fbar[i].coeffs()[w] % p;
    }
    // monic over the residue field
    if (fb[static_cast<size_t>(d) * s] != 1 ||
        !std::all_of(fb.begin() + static_cast<size_t>(d) * s + 1, fb.end(),
                     [](std::uint64_t w) { return w == 0; }))
        throw ring_error("hensel_lift: fbar must be monic");

    // fbar must divide x^(q^d) - x over the residue field
    {
        KExt kext{this, p, s};
        KBase kbase{this, p};
        bool divides;
        if (s == 1) {
            KPoly<KBase> kp(kbase);
            auto h = kp.pow_p_steps(kp.rem(kp.x(), fb), p, params_.s * d, fb);
            h.resize(std::max<size_t>(h.size(), 2 * s), 0);
            h[s] = (h[s] + p - 1) % p;
            h = kp.rem(std::move(h), fb);
            divides = kp.deg(h) < 0;
        } else {
            KPoly<KExt> kp(kext);
            auto h = kp.pow_p_steps(kp.rem(kp.x(), fb), p, params_.s * d, fb);
            h.resize(std::max<size_t>(h.size(), 2 * s), 0);
            h[s] = (h[s] + p - 1) % p;
            h = kp.rem(std::move(h), fb);
            divides = kp.deg(h) < 0;
        }
        if (!divides)
            throw ring_error("hensel_lift: fbar does not divide x^(q^d) - x over the residue field");
    }

    auto f = lift_modulus(fb, d);

    const std::uint64_t qd = checked_pow(q_, d, kMaxWitness);
    if (qd == 0) throw ring_error("hensel_lift: cofactor too large to materialize");

    // N = x^(q^d) - x over R
    RPolyCtx rp{*this, s, q0_};
    std::vector<std::uint64_t> N(static_cast<size_t>(qd + 1) * s, 0);
    N[static_cast<size_t>(qd) * s] = 1;
    N[1 * s] = bsub(0, 1);
    auto g = rp.exact_div(std::move(N), f);

    HenselFactors out;
    for (unsigned i = 0; i <= d; ++i)
        out.f.emplace_back(Level::R,
                           std::vector<std::uint64_t>(f.begin() + static_cast<size_t>(i) * s,
                                                      f.begin() + static_cast<size_t>(i + 1) * s));
    const size_t gchunks = g.size() / s;
    for (size_t i = 0; i < gchunks; ++i)
        out.g.emplace_back(Level::R,
                           std::vector<std::uint64_t>(g.begin() + i * s, g.begin() + (i + 1) * s));
    return out;
}

void GaloisTower::build_frobenius() {
    const unsigned m = params_.m, s = params_.s;
    frob_.assign(m, std::vector<std::uint64_t>(static_cast<size_t>(m) * m * s, 0));

    // identity
    for (unsigned j = 0; j < m; ++j) frob_[0][(static_cast<size_t>(j) * m + j) * s] = 1;
    if (m == 1) return;

    const size_t sw = static_cast<size_t>(m) * s;
    std::vector<std::uint64_t> alpha(sw, 0);
    alpha[s] = 1;

    // delta = alpha^q via repeated p-th powers
    std::vector<std::uint64_t> delta = alpha, tmp(sw);
    for (unsigned step = 0; step < params_.s; ++step) {
        // delta^p
        std::vector<std::uint64_t> res(sw, 0);
        res[0] = 1;
        std::vector<std::uint64_t> base = delta;
        std::uint64_t e = params_.p;
        while (e > 0) {
            if (e & 1) {
                raw_s_mul(tmp.data(), res.data(), base.data());
                res = tmp;
            }
            raw_s_mul(tmp.data(), base.data(), base.data());
            base = tmp;
            e >>= 1;
        }
        delta = std::move(res);
    }

    // fill matrix of sigma^i from powers of delta_i, then advance delta
    for (unsigned i = 1; i < m; ++i) {
        auto& M = frob_[i];
        std::vector<std::uint64_t> pw(sw, 0);
        pw[0] = 1;
        for (unsigned j = 0; j < m; ++j) {
            for (unsigned row = 0; row < m; ++row)
                std::copy(pw.begin() + static_cast<size_t>(row) * s,
                          pw.begin() + static_cast<size_t>(row + 1) * s,
                          M.begin() + (static_cast<size_t>(row) * m + j) * s);
            if (j + 1 < m) {
                raw_s_mul(tmp.data(), pw.data(), delta.data());
                pw = tmp;
            }
        }
        if (i + 1 < m) {
            raw_frobenius(tmp.data(), delta.data(), 1);
            delta = tmp;
        } else {
            // order check: sigma^m(alpha) must equal alpha
            raw_frobenius(tmp.data(), delta.data(), 1);
            if (!std::equal(tmp.begin(), tmp.end(), alpha.begin()))
                throw ring_error("frobenius generator does not have order m");
        }
    }
    // exact order: sigma^i(alpha) != alpha for 0 < i < m
    for (unsigned i = 1; i < m; ++i) {
        raw_frobenius(tmp.data(), alpha.data(), i);
        if (std::equal(tmp.begin(), tmp.end(), alpha.begin()))
            throw ring_error("frobenius generator has order smaller than m");
    }
}

GaloisTower::GaloisTower(TowerParams params) : params_(std::move(params)) {
    if (!is_prime_u64(params_.p)) throw ring_error("p must be prime");
    if (params_.r < 1 || params_.s < 1 || params_.m < 1)
        throw ring_error("r, s, m must be positive");
    init_base_fields();

    const unsigned s = params_.s, m = params_.m;
    if (params_.modulus_R.size() != static_cast<size_t>(s) + 1)
        throw ring_error("modulus_R must have degree s");
    mod_r_.assign(params_.modulus_R.begin(), params_.modulus_R.end());
    for (auto& w : mod_r_) w %= q0_;
    if (mod_r_[s] != 1) throw ring_error("modulus_R must be monic");
    std::copy(mod_r_.begin(), mod_r_.end(), params_.modulus_R.begin());

    if (params_.modulus_S.size() != static_cast<size_t>(m) + 1)
        throw ring_error("modulus_S must have degree m");
    mod_s_.assign(static_cast<size_t>(m + 1) * s, 0);
    for (unsigned i = 0; i <= m; ++i) {
        if (params_.modulus_S[i].size() != s)
            throw ring_error("modulus_S coefficients must have s words");
        for (unsigned w = 0; w < s; ++w) {
            mod_s_[static_cast<size_t>(i) * s + w] = params_.modulus_S[i][w] % q0_;
            params_.modulus_S[i][w] = mod_s_[static_cast<size_t>(i) * s + w];
        }
    }
    if (mod_s_[static_cast<size_t>(m) * s] != 1 ||
        !std::all_of(mod_s_.begin() + static_cast<size_t>(m) * s + 1, mod_s_.end(),
                     [](std::uint64_t w) { return w == 0; }))
        throw ring_error("modulus_S must be monic");

    // modulus_R irreducible mod p
    {
        KBase kb{this, params_.p};
        KPoly<KBase> kp(kb);
        std::vector<std::uint64_t> fb(mod_r_.size());
        for (size_t i = 0; i < fb.size(); ++i) fb[i] = mod_r_[i] % params_.p;
        if (!kp.is_irreducible(fb, params_.p, 1))
            throw ring_error("modulus_R is not irreducible modulo p");
    }
    // modulus_S irreducible over the residue field of R
    {
        std::vector<std::uint64_t> fb(mod_s_.size());
        for (size_t i = 0; i < fb.size(); ++i) fb[i] = mod_s_[i] % params_.p;
        bool irred;
        if (s == 1) {
            KBase kb{this, params_.p};
            KPoly<KBase> kp(kb);
            irred = kp.is_irreducible(fb, params_.p, 1);
        } else {
            KExt ke{this, params_.p, s};
            KPoly<KExt> kp(ke);
            irred = kp.is_irreducible(fb, params_.p, s);
        }
        if (!irred) throw ring_error("modulus_S is not irreducible over the residue field");
    }
    // modulus_S must divide x^(q^m) - x over R
    {
        RPolyCtx rp{*this, s, q0_};
        auto h = rp.frobenius_power_x(params_.p, s * m, mod_s_);
        h.resize(std::max<size_t>(h.size(), 2 * s), 0);
        h[s] = bsub(h[s], 1);
        h = rp.rem(std::move(h), mod_s_);
        if (rp.deg(h) >= 0)
            throw ring_error("modulus_S does not divide x^(q^m) - x over R");
    }

    build_frobenius();
}

TowerParams GaloisTower::auto_params(std::uint64_t p, unsigned r, unsigned s, unsigned m) {
    if (!is_prime_u64(p)) throw ring_error("p must be prime");
    if (r < 1 || s < 1 || m < 1) throw ring_error("r, s, m must be positive");

    GaloisTower t;
    t.params_.p = p;
    t.params_.r = r;
    t.params_.s = s;
    t.params_.m = m;
    t.init_base_fields();

    // modulus_R: lexicographically smallest irreducible over F_p, lifted as is
    KBase kb{&t, p};
    auto fr = find_irreducible(kb, s, p, 1, p);
    t.params_.modulus_R.assign(fr.begin(), fr.end());
    t.mod_r_ = t.params_.modulus_R;

    // modulus_S: lexicographically smallest irreducible over F_{p^s}, lifted
    std::vector<std::uint64_t> fs;
    if (s == 1) {
        fs = find_irreducible(kb, m, p, 1, p);
    } else {
        KExt ke{&t, p, s};
        fs = find_irreducible(ke, m, p, s, t.q_);
    }
    auto lifted = t.lift_modulus(fs, m);

    t.params_.modulus_S.assign(m + 1, std::vector<std::uint64_t>(s, 0));
    for (unsigned i = 0; i <= m; ++i)
        for (unsigned w = 0; w < s; ++w)
            t.params_.modulus_S[i][w] = lifted[static_cast<size_t>(i) * s + w];
    return t.params_;
}

}  // namespace galrank
