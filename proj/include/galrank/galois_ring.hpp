#pragma once

#include <atomic>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace galrank {

/// Level of an element inside the ring tower Z_{p^r} ⊆ R ⊆ S.
enum class Level : std::uint8_t { base = 0, R = 1, S = 2 };

/// Parameters of the tower Z_{p^r} ⊆ R = GR(p^r, s) ⊆ S = GR(p^r, s*m).
///
/// R is represented as Z_{p^r}[xi]/(modulus_R) and S as R[alpha]/(modulus_S).
/// modulus_R must be monic of degree s and irreducible mod p; modulus_S must
/// be monic of degree m, irreducible over the residue field of R, and must
/// divide x^(q^m) - x over R with q = p^s. The last condition is what makes
/// alpha -> alpha^q a ring automorphism of S fixing R.
struct TowerParams {
    std::uint64_t p = 2;
    unsigned r = 1;
    unsigned s = 1;
    unsigned m = 1;
    /// Coefficients in [0, p^r), least degree first, length s+1, monic.
    std::vector<std::uint64_t> modulus_R;
    /// Coefficients are R-elements (length-s word vectors), length m+1, monic.
    std::vector<std::vector<std::uint64_t>> modulus_S;
};

/// An element of one tower level. Coefficients are stored as a flat word
/// vector over Z_{p^r}: length 1 at base level, s at level R, s*m at level S
/// (the j-th R-coefficient of an S-element occupies words [j*s, (j+1)*s)).
/// Elements are immutable values; all arithmetic goes through GaloisTower.
class RingElement {
  public:
    RingElement() : level_(Level::base), coeffs_(1, 0) {}
    RingElement(Level level, std::vector<std::uint64_t> coeffs)
        : level_(level), coeffs_(std::move(coeffs)) {}

    Level level() const { return level_; }
    std::span<const std::uint64_t> coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (auto c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const RingElement&, const RingElement&) = default;

  private:
    Level level_;
    std::vector<std::uint64_t> coeffs_;
    friend class GaloisTower;
    friend struct TowerInternal;
};

/// A power of the Frobenius generator of Gal_R(S), materialized as an m x m
/// matrix over R acting on the coefficient vectors of S-elements w.r.t. the
/// basis {1, alpha, ..., alpha^(m-1)}.
struct Automorphism {
    unsigned power = 0;                 // in [0, m)
    unsigned dim = 1;                   // m
    std::vector<RingElement> matrix;    // row-major m*m, level R
};

/// Result of Hensel-lifting a coprime factorization of x^(q^d) - x.
struct HenselFactors {
    std::vector<RingElement> f;   // monic lift of fbar, level R
    std::vector<RingElement> g;   // cofactor with f*g = x^(q^d) - x over R
};

/// Thrown on malformed tower parameters or invalid operands.
struct ring_error : std::runtime_error {
    explicit ring_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact arithmetic in the tower Z_{p^r} ⊆ R = GR(p^r,s) ⊆ S = GR(p^r,sm),
/// together with the generator sigma of Gal_R(S) and its precomputed power
/// matrices. A tower is immutable after construction and safe to share
/// between threads; the only mutable member is a relaxed atomic counter of
/// S-level multiplications used by the benchmark harness.
class GaloisTower {
  public:
    /// Validates the parameters (primality, moduli shape, irreducibility of
    /// both residue images, divisibility of x^(q^m) - x by modulus_S) and
    /// precomputes the matrices of sigma^i for all i in [0, m).
    explicit GaloisTower(TowerParams params);

    GaloisTower(const GaloisTower&) = delete;
    GaloisTower& operator=(const GaloisTower&) = delete;

    /// Deterministic parameter generation: picks the lexicographically
    /// smallest irreducible residue polynomials (coefficient tuples ordered
    /// as base-|k| integers, constant term least significant) and Hensel
    /// lifts the S-modulus so that it divides x^(q^m) - x over R.
    static TowerParams auto_params(std::uint64_t p, unsigned r, unsigned s, unsigned m);

    const TowerParams& params() const { return params_; }
    std::uint64_t characteristic_mod() const { return q0_; }   // p^r
    std::uint64_t residue_size() const { return q_; }          // q = p^s
    unsigned nilpotency() const { return params_.r; }

    /// Number of base words in an element of the given level.
    unsigned words(Level level) const;
    /// Degree of the given level over the base ring (1, s, or s*m).
    unsigned degree(Level level) const { return words(level); }

    // --- element factories -------------------------------------------------
    RingElement zero(Level level) const;
    RingElement one(Level level) const;
    RingElement from_int(Level level, std::uint64_t value) const;
    /// Builds an element from a flat word vector (reduced mod p^r).
    RingElement element(Level level, std::vector<std::uint64_t> flat) const;
    /// xi (level R) or alpha (level S); the base generator is 1.
    RingElement generator(Level level) const;
    RingElement embed(const RingElement& x, Level target) const;
    RingElement random_element(Level level, std::mt19937_64& rng) const;
    RingElement random_unit(Level level, std::mt19937_64& rng) const;

    // --- arithmetic ---------------------------------------------------------
    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement pow(const RingElement& a, std::uint64_t e) const;

    /// v(x): the unique v with x in m^v \ m^(v+1); v(0) = r.
    unsigned valuation(const RingElement& a) const;
    bool is_unit(const RingElement& a) const { return valuation(a) == 0; }
    /// Inverse of a unit. Residue-field inverse plus Newton lifting.
    RingElement invert(const RingElement& a) const;
    /// Exact quotient by p^v for elements with valuation >= v. Returns the
    /// canonical representative with base coefficients in [0, p^(r-v)).
    RingElement divide_by_p_power(const RingElement& a, unsigned v) const;
    /// Image under the residue map (coefficients reduced mod p).
    RingElement residue(const RingElement& a) const;

    // --- Frobenius ----------------------------------------------------------
    /// sigma^power applied to an S-element via the precomputed matrix.
    RingElement frobenius(const RingElement& x, unsigned power = 1) const;
    Automorphism automorphism(unsigned power) const;
    RingElement apply(const Automorphism& aut, const RingElement& x) const;
    Automorphism compose(const Automorphism& a, const Automorphism& b) const;
    Automorphism inverse(const Automorphism& a) const;

    /// R-coordinates of an S-element w.r.t. {1, alpha, ..., alpha^(m-1)}.
    std::vector<RingElement> s_coords(const RingElement& x) const;
    RingElement from_s_coords(std::span<const RingElement> coords) const;

    /// Hensel lifting of a monic irreducible fbar over the residue field of
    /// R (coefficients given mod p) along the factorization
    /// x^(q^d) - x = fbar * gbar, d = deg fbar. Returns exact factors over R.
    /// Throws if fbar does not divide x^(q^d) - x over the residue field, or
    /// if the cofactor is too large to materialize (q^d > 2^22).
    HenselFactors hensel_lift(std::span<const RingElement> fbar) const;

    // --- instrumentation ----------------------------------------------------
    std::uint64_t smul_count() const { return smul_count_.load(std::memory_order_relaxed); }
    void reset_smul_count() const { smul_count_.store(0, std::memory_order_relaxed); }

    bool same_tower(const GaloisTower& other) const { return this == &other; }

  private:
    GaloisTower() = default;   // partial tower used by auto_params

    TowerParams params_;
    std::uint64_t q0_ = 2;     // p^r
    std::uint64_t q_ = 2;      // p^s
    std::uint64_t mask_ = 0;   // q0-1 when q0 is a power of two, else 0
    std::vector<std::uint64_t> mod_r_;                // s+1 words
    std::vector<std::uint64_t> mod_s_;                // (m+1)*s words
    std::vector<std::vector<std::uint64_t>> frob_;    // m matrices, m*m*s words each
    mutable std::atomic<std::uint64_t> smul_count_{0};

    void init_base_fields();
    void check_level(const RingElement& a, Level level) const;
    void check_same(const RingElement& a, const RingElement& b) const;

    std::uint64_t badd(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t bsub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t bmul(std::uint64_t a, std::uint64_t b) const;

    void raw_r_mul(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b) const;
    void raw_s_mul(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b) const;
    void raw_mul_level(Level level, std::uint64_t* dst, const std::uint64_t* a,
                       const std::uint64_t* b) const;
    void raw_frobenius(std::uint64_t* dst, const std::uint64_t* x, unsigned power) const;

    RingElement mul_impl(const RingElement& a, const RingElement& b, bool reduce_mod_p) const;
    RingElement residue_inverse(const RingElement& a) const;
    std::vector<std::uint64_t> lift_modulus(const std::vector<std::uint64_t>& fbar,
                                            unsigned d) const;
    void build_frobenius();

    friend struct TowerInternal;
};

}  // namespace galrank
