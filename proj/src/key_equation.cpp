#include "galrank/key_equation.hpp"

#include <algorithm>
#include <ostream>

namespace galrank {

namespace {

const GaloisTower& pair_tower(const SolutionPair& p) {
    const GaloisTower* t = p.f.tower() ? p.f.tower() : p.g.tower();
    if (!t) throw ring_error("solution pair without tower handle");
    return *t;
}

std::uint64_t p_power(const GaloisTower& t, unsigned v) {
    std::uint64_t x = 1;
    for (unsigned i = 0; i < v; ++i) x *= t.params().p;
    return x;
}

// Actual leading monomial of a pair: (side, valuation class, exponent).
struct Lm {
    LeadSide side;
    unsigned val;
    unsigned deg;
};

Lm actual_lm(const GaloisTower& t, const SolutionPair& p) {
    const long kf = p.f.is_zero() ? -1 : 2l * p.f.degree();
    const long kg = p.g.is_zero() ? -1 : 2l * p.g.degree() + 1;
    if (kf < 0 && kg < 0) throw ring_error("zero pair has no leading monomial");
    if (kf > kg)
        return {LeadSide::left, t.valuation(p.f.leading_coeff()),
                static_cast<unsigned>(p.f.degree())};
    return {LeadSide::right, t.valuation(p.g.leading_coeff()),
            static_cast<unsigned>(p.g.degree())};
}

void check_shape(const GaloisTower& t, std::span<const SolutionPair> pairs,
                 const std::vector<unsigned>* prev_deg) {
    const unsigned r = t.nilpotency();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const Lm lm = actual_lm(t, p);
        if (lm.side != p.lead_side || lm.deg != p.lead_deg)
            throw ring_error("basis invariant violated: leading term mismatch");
        const RingElement& lc =
            lm.side == LeadSide::left ? p.f.leading_coeff() : p.g.leading_coeff();
        if (!(lc == t.from_int(Level::S, p_power(t, p.lead_val))))
            throw ring_error("basis invariant violated: leading coefficient");
        if (prev_deg) {
            const unsigned before = (*prev_deg)[i];
            if (p.lead_deg != before && p.lead_deg != before + 1)
                throw ring_error("basis invariant violated: exponent growth");
        }
    }
    // exponents nonincreasing in the valuation class, per side
    for (LeadSide side : {LeadSide::left, LeadSide::right}) {
        long prev = -1;
        for (unsigned v = 0; v < r; ++v) {
            const SolutionPair* p = nullptr;
            for (const auto& cand : pairs)
                if (cand.lead_side == side && cand.lead_val == v) p = &cand;
            if (!p) throw ring_error("basis invariant violated: missing class");
            if (prev >= 0 && static_cast<long>(p->lead_deg) > prev)
                throw ring_error("basis invariant violated: exponents not sorted");
            prev = static_cast<long>(p->lead_deg);
        }
    }
}

}  // namespace

RingElement discrepancy(const SolutionPair& pair, const SkewPoly& u, unsigned k) {
    const GaloisTower& t = pair_tower(pair);
    RingElement acc = t.zero(Level::S);
    const auto fc = pair.f.coeffs();
    for (std::size_t j = 0; j < fc.size() && j <= k; ++j) {
        if (fc[j].is_zero()) continue;
        const RingElement uk = u.coeff(k - j);
        if (uk.is_zero()) continue;
        acc = t.add(acc, t.mul(fc[j], t.frobenius(uk, static_cast<unsigned>(j))));
    }
    return t.sub(acc, pair.g.coeff(k));
}

std::vector<SolutionPair> reduce_or_shift(std::span<const SolutionPair> pairs,
                                          std::span<const RingElement> discrepancies) {
    if (pairs.empty()) return {};
    if (pairs.size() != discrepancies.size())
        throw ring_error("reduce_or_shift: discrepancy count mismatch");
    const GaloisTower& t = pair_tower(pairs[0]);
    const unsigned r = t.nilpotency();

    std::vector<unsigned> zval(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) zval[i] = t.valuation(discrepancies[i]);

    std::vector<SolutionPair> next;
    next.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        if (zval[i] >= r) {  // zero discrepancy
            next.push_back(p);
            continue;
        }
        // eligible reducer: strictly smaller leading term, dividing discrepancy
        std::size_t best = pairs.size();
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (j == i) continue;
            if (pairs[j].term_key() >= p.term_key()) continue;
            if (zval[j] > zval[i]) continue;  // v(zeta_j) <= v(zeta_i) iff divisible
            if (best == pairs.size() || pairs[j].term_key() < pairs[best].term_key() ||
                (pairs[j].term_key() == pairs[best].term_key() &&
                 pairs[j].lead_val < pairs[best].lead_val))
                best = j;
        }
        if (best < pairs.size()) {
            const auto& pj = pairs[best];
            const RingElement wi = t.divide_by_p_power(discrepancies[i], zval[i]);
            const RingElement wj = t.divide_by_p_power(discrepancies[best], zval[best]);
            RingElement q = t.mul(t.from_int(Level::S, p_power(t, zval[i] - zval[best])),
                                  t.mul(wi, t.invert(wj)));
            SolutionPair upd;
            upd.f = p.f - scale_left(q, pj.f);
            upd.g = p.g - scale_left(q, pj.g);
            upd.lead_side = p.lead_side;
            upd.lead_val = p.lead_val;
            upd.lead_deg = p.lead_deg;
            next.push_back(std::move(upd));
        } else {
            SolutionPair upd;
            upd.f = shift_x(p.f);
            upd.g = shift_x(p.g);
            upd.lead_side = p.lead_side;
            upd.lead_val = p.lead_val;
            upd.lead_deg = p.lead_deg + 1;
            next.push_back(std::move(upd));
        }
    }
    return next;
}

SolutionBasis skew_byrne_fitzpatrick(const SkewPoly& u, unsigned depth,
                                     const BfOptions& options) {
    if (u.tower() == nullptr) throw ring_error("skew_byrne_fitzpatrick: missing tower");
    const GaloisTower& t = *u.tower();
    const unsigned r = t.nilpotency();

    SolutionBasis basis;
    basis.depth = depth;
    basis.pairs.reserve(2 * r);
    for (unsigned i = 0; i < r; ++i) {
        SolutionPair p;
        p.f = SkewPoly::constant(t, t.from_int(Level::S, p_power(t, i)));
        p.g = SkewPoly::zero(t);
        p.lead_side = LeadSide::left;
        p.lead_val = i;
        p.lead_deg = 0;
        basis.pairs.push_back(std::move(p));
    }
    for (unsigned i = 0; i < r; ++i) {
        SolutionPair p;
        p.f = SkewPoly::zero(t);
        p.g = SkewPoly::constant(t, t.from_int(Level::S, p_power(t, i)));
        p.lead_side = LeadSide::right;
        p.lead_val = i;
        p.lead_deg = 0;
        basis.pairs.push_back(std::move(p));
    }

    // window[j] = sigma^j(u_{k-j}) for the current step k
    std::vector<RingElement> window;
    window.reserve(depth);

    for (unsigned k = 0; k < depth; ++k) {
        window.push_back(t.zero(Level::S));
        for (std::size_t j = window.size() - 1; j > 0; --j)
            window[j] = t.frobenius(window[j - 1], 1);
        window[0] = u.coeff(k);

        std::vector<RingElement> zetas;
        zetas.reserve(basis.pairs.size());
        for (const auto& p : basis.pairs) {
            RingElement acc = t.zero(Level::S);
            const auto fc = p.f.coeffs();
            const std::size_t lim = std::min<std::size_t>(fc.size(), k + 1);
            for (std::size_t j = 0; j < lim; ++j) {
                if (fc[j].is_zero() || window[j].is_zero()) continue;
                acc = t.add(acc, t.mul(fc[j], window[j]));
            }
            zetas.push_back(t.sub(acc, p.g.coeff(k)));
        }

        std::vector<unsigned> prev_deg;
        if (options.check_invariants) {
            prev_deg.reserve(basis.pairs.size());
            for (const auto& p : basis.pairs) prev_deg.push_back(p.lead_deg);
        }

        basis.pairs = reduce_or_shift(basis.pairs, zetas);

        if (options.check_invariants) check_shape(t, basis.pairs, &prev_deg);
        if (options.trace) {
            *options.trace << "k=" << k << " lambda=[";
            for (unsigned v = 0; v < r; ++v) {
                const auto* p = basis.find(LeadSide::left, v);
                *options.trace << (v ? "," : "") << (p ? static_cast<long>(p->lead_deg) : -1);
            }
            *options.trace << "] mu=[";
            for (unsigned v = 0; v < r; ++v) {
                const auto* p = basis.find(LeadSide::right, v);
                *options.trace << (v ? "," : "") << (p ? static_cast<long>(p->lead_deg) : -1);
            }
            *options.trace << "]\n";
        }
    }
    if (options.check_invariants) check_shape(t, basis.pairs, nullptr);
    return basis;
}

}  // namespace galrank
