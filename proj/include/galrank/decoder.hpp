#pragma once

#include <optional>

#include "galrank/gabidulin.hpp"
#include "galrank/key_equation.hpp"

namespace galrank {

struct DecodeDiagnostics {
    int lambda_degree = -1;        // degree of the selected key-equation factor
    int omega_degree = -1;
    int error_rank_estimate = -1;  // deg lambda within the decoding radius
    bool residual_zero = false;    // left-division residual rho == 0
    bool degree_ok = false;        // deg f < k
    bool within_radius = false;    // rank distance <= (n-k)/2
};

struct DecodeResult {
    std::optional<SkewPoly> message;
    DecodeDiagnostics diagnostics;
    bool success() const { return message.has_value(); }
};

struct KeyPair {
    SkewPoly lambda, omega;
    unsigned val_class = 0;
};

/// Among basis pairs (u, v) with u primitive and deg u > deg v, picks one of
/// minimal deg u (ties: lower valuation class, then left side). Returns
/// nullopt when no pair qualifies.
std::optional<KeyPair> select_key_pair(const SolutionBasis& basis);

/// Two-step decoder: syndrome key equation via the skew Byrne-Fitzpatrick
/// solver, then message recovery through interpolation and two divisions.
/// Returns the unique message polynomial whenever a codeword within rank
/// distance (n-k)/2 of the received word exists; a failure outcome otherwise.
/// O(r n^2) operations in S per call.
DecodeResult decode(const GabidulinCode& code, std::span<const RingElement> received,
                    const BfOptions& options = {});

/// Baseline decoder in the style of Welch-Berlekamp: solves the homogeneous
/// linear system V(r_i) = N(g_i) over S by a kernel computation (cubic cost)
/// and recovers the message by left division. Same outward contract as
/// decode; used for cross-validation.
DecodeResult welch_berlekamp_decode(const GabidulinCode& code,
                                    std::span<const RingElement> received);

}  // namespace galrank
