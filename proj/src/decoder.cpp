#include "galrank/decoder.hpp"

#include <tuple>

namespace galrank {

std::optional<KeyPair> select_key_pair(const SolutionBasis& basis) {
    const SolutionPair* best = nullptr;
    for (const auto& pair : basis.pairs) {
        if (pair.f.is_zero() || !is_primitive(pair.f)) continue;
        if (pair.f.degree() <= pair.g.degree()) continue;
        if (!best) {
            best = &pair;
            continue;
        }
        const auto key = [](const SolutionPair& p) {
            return std::tuple<int, unsigned, int>(
                p.f.degree(), p.lead_val, p.lead_side == LeadSide::right ? 1 : 0);
        };
        if (key(pair) < key(*best)) best = &pair;
    }
    if (!best) return std::nullopt;
    return KeyPair{best->f, best->g, best->lead_val};
}

namespace {

DecodeResult finish(const GabidulinCode& code, std::span<const RingElement> received,
                    const SkewPoly& lambda, const SkewPoly& omega,
                    DecodeDiagnostics diag) {
    const GaloisTower& t = code.tower();
    diag.lambda_degree = lambda.degree();
    diag.omega_degree = omega.degree();
    diag.error_rank_estimate = lambda.degree();

    const SkewPoly product = lambda * code.interpolate_received(received);
    const SkewPoly psi = right_divide(product, code.support_annihilator()).remainder;
    const SkewDivision div = left_divide(psi, lambda);

    diag.residual_zero = div.remainder.is_zero();
    diag.degree_ok = div.quotient.degree() < static_cast<int>(code.dimension());
    if (diag.residual_zero && diag.degree_ok) {
        const auto codeword = code.encode(div.quotient);
        diag.within_radius =
            rank_distance(t, received, codeword) <= code.decoding_radius();
        if (diag.within_radius) return {div.quotient, diag};
    }
    return {std::nullopt, diag};
}

}  // namespace

DecodeResult decode(const GabidulinCode& code, std::span<const RingElement> received,
                    const BfOptions& options) {
    const GaloisTower& t = code.tower();
    const unsigned n = code.length(), k = code.dimension();
    if (received.size() != n) throw ring_error("decode: word length mismatch");

    if (n == k)  // zero redundancy: accept exact codewords only
        return finish(code, received, SkewPoly::one(t), SkewPoly::zero(t), {});

    const SkewPoly syndrome = code.syndrome_poly(received);
    const SolutionBasis basis = skew_byrne_fitzpatrick(syndrome, n - k, options);
    const auto selected = select_key_pair(basis);
    if (!selected) return {std::nullopt, {}};
    return finish(code, received, selected->lambda, selected->omega, {});
}

DecodeResult welch_berlekamp_decode(const GabidulinCode& code,
                                    std::span<const RingElement> received) {
    const GaloisTower& t = code.tower();
    const unsigned n = code.length(), k = code.dimension();
    if (received.size() != n) throw ring_error("decode: word length mismatch");
    const unsigned radius = code.decoding_radius();
    const unsigned nv = radius + 1;      // coefficients of V, deg V <= radius
    const unsigned nn = k + radius;      // coefficients of N, deg N < k + radius

    // rows: V(r_i) - N(g_i) = 0
    RingMatrix sys(t, Level::S, n, nv + nn);
    for (unsigned i = 0; i < n; ++i) {
        RingElement cur = received[i];
        for (unsigned a = 0; a < nv; ++a) {
            sys.set(i, a, cur);
            cur = t.frobenius(cur, 1);
        }
        RingElement gg = code.support()[i];
        for (unsigned b = 0; b < nn; ++b) {
            sys.set(i, nv + b, t.neg(gg));
            gg = t.frobenius(gg, 1);
        }
    }

    const RingMatrix kern = kernel_basis(sys);
    DecodeDiagnostics diag;
    for (std::size_t row = 0; row < kern.rows(); ++row) {
        std::vector<RingElement> vc, ncoef;
        vc.reserve(nv);
        ncoef.reserve(nn);
        for (unsigned a = 0; a < nv; ++a) vc.push_back(kern(row, a));
        for (unsigned b = 0; b < nn; ++b) ncoef.push_back(kern(row, nv + b));
        SkewPoly locator(&t, std::move(vc));
        if (!is_primitive(locator)) continue;
        SkewPoly numerator(&t, std::move(ncoef));

        const SkewDivision div = left_divide(numerator, locator);
        diag.lambda_degree = locator.degree();
        diag.error_rank_estimate = locator.degree();
        diag.residual_zero = div.remainder.is_zero();
        diag.degree_ok = div.quotient.degree() < static_cast<int>(k);
        if (!diag.residual_zero || !diag.degree_ok) continue;
        const auto codeword = code.encode(div.quotient);
        diag.within_radius = rank_distance(t, received, codeword) <= radius;
        if (diag.within_radius) return {div.quotient, diag};
    }
    return {std::nullopt, diag};
}

}  // namespace galrank
