#pragma once

#include "galrank/ring_linalg.hpp"
#include "galrank/skew_poly.hpp"

namespace galrank {

/// Requested rank profile and PRNG seed for error sampling.
struct ErrorSpec {
    RankProfile profile;
    std::uint64_t seed = 0;
};

/// A sampled error e = a * B together with its decomposition: the entries of
/// a form a minimal generating set of <e_1, ..., e_n> and B has linearly
/// independent rows over R.
struct SampledError {
    std::vector<RingElement> error;        // e, length n
    std::vector<RingElement> generators;   // a, length t
    RingMatrix coords;                     // B in R^(t x n)
};

/// Derives a parity support h for the code with support g and dimension k:
/// h_j = sigma^(-(n-k-1))(y_j) where y generates the free part of the kernel
/// of the (n-1) x n Moore matrix of g. The Moore matrix of h annihilates the
/// Moore matrix of g.
std::vector<RingElement> parity_support(const GaloisTower& tower,
                                        std::span<const RingElement> g, unsigned k);

/// Rank distance: the rank of x - y over R.
unsigned rank_distance(const GaloisTower& tower, std::span<const RingElement> x,
                       std::span<const RingElement> y);

/// Samples an error vector of exactly the requested rank profile (verified by
/// Smith normal form; resampled on degenerate draws, at most 64 attempts).
SampledError sample_error(const GaloisTower& tower, unsigned n, const ErrorSpec& spec);

/// Gabidulin code over S: codewords are multipoint evaluations of skew
/// polynomials of degree < k on a support with linearly independent entries.
/// Construction validates the support, derives the parity support and caches
/// everything the decoder's hot path needs (syndrome rows, the support
/// annihilator chain and the inverted Newton denominators).
class GabidulinCode {
  public:
    GabidulinCode(const GaloisTower& tower, std::vector<RingElement> support, unsigned k);

    /// Power basis support [1, alpha, ..., alpha^(n-1)].
    static std::vector<RingElement> power_basis_support(const GaloisTower& tower,
                                                        unsigned n);

    const GaloisTower& tower() const { return *tower_; }
    unsigned length() const { return static_cast<unsigned>(g_.size()); }
    unsigned dimension() const { return k_; }
    unsigned decoding_radius() const { return (length() - k_) / 2; }
    unsigned min_rank_distance() const { return length() - k_ + 1; }
    const std::vector<RingElement>& support() const { return g_; }
    const std::vector<RingElement>& parity() const { return h_; }

    /// Codeword [f(g_1), ..., f(g_n)] for deg f < k.
    std::vector<RingElement> encode(const SkewPoly& message) const;

    /// Syndrome polynomial sum_i (sum_j sigma^i(h_j) r_j) x^i of degree < n-k;
    /// vanishes exactly on codewords.
    SkewPoly syndrome_poly(std::span<const RingElement> word) const;

    /// Monic annihilator of the support (degree n).
    const SkewPoly& support_annihilator() const { return ann_chain_.back(); }

    /// Unique interpolation polynomial of degree < n through
    /// (g_i -> word_i), using the cached annihilator chain.
    SkewPoly interpolate_received(std::span<const RingElement> word) const;

    RingMatrix generator_matrix() const { return moore_matrix(*tower_, g_, k_); }
    RingMatrix parity_check_matrix() const {
        return moore_matrix(*tower_, h_, length() - k_);
    }

  private:
    const GaloisTower* tower_;
    std::vector<RingElement> g_, h_;
    unsigned k_;
    std::vector<std::vector<RingElement>> sigma_h_;  // sigma^i(h_j), i < n-k
    std::vector<SkewPoly> ann_chain_;                // annihilators of g prefixes
    std::vector<RingElement> beta_inv_;              // 1 / ann_chain_[i](g_i)
};

}  // namespace galrank
