#pragma once

#include <iosfwd>

#include "galrank/skew_poly.hpp"

namespace galrank {

enum class LeadSide : std::uint8_t { left, right };

/// One basis pair (f, g) of the solution module together with its leading
/// monomial metadata. The leading monomial is (p^lead_val x^lead_deg, 0) for
/// lead_side == left, and (0, p^lead_val x^lead_deg) otherwise; the algorithm
/// preserves the (side, valuation class) identity of every pair.
struct SolutionPair {
    SkewPoly f, g;
    LeadSide lead_side = LeadSide::left;
    unsigned lead_val = 0;
    unsigned lead_deg = 0;

    /// Term order key: (1,0) < (0,1) < (x,0) < (0,x) < ...
    unsigned long term_key() const {
        return 2ul * lead_deg + (lead_side == LeadSide::right ? 1ul : 0ul);
    }
};

/// Left Groebner basis of {(f,g) : f*u = g mod x^depth}, exactly 2r pairs,
/// one per (side, valuation class).
struct SolutionBasis {
    std::vector<SolutionPair> pairs;
    unsigned depth = 0;

    const SolutionPair* find(LeadSide side, unsigned val_class) const {
        for (const auto& p : pairs)
            if (p.lead_side == side && p.lead_val == val_class) return &p;
        return nullptr;
    }
};

struct BfOptions {
    std::ostream* trace = nullptr;  // one line per step: exponent vectors
    bool check_invariants = false;  // assert basis shape and exponent growth
};

/// The k-th coefficient of f*u - g for a pair satisfying the congruence to
/// depth k.
RingElement discrepancy(const SolutionPair& pair, const SkewPoly& u, unsigned k);

/// One outer step: pairs with zero discrepancy are kept; pairs reducible by
/// an eligible smaller-term pair are reduced (their leading monomial is
/// preserved); the rest are shifted by x. Reads the snapshot only.
std::vector<SolutionPair> reduce_or_shift(std::span<const SolutionPair> pairs,
                                          std::span<const RingElement> discrepancies);

/// Computes a left Groebner basis of {(f, g) : f*u = g mod x^depth} with
/// O(r * depth^2) operations in S.
SolutionBasis skew_byrne_fitzpatrick(const SkewPoly& u, unsigned depth,
                                     const BfOptions& options = {});

}  // namespace galrank
