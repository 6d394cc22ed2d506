#include "galrank/gabidulin.hpp"

#include <algorithm>

namespace galrank {

std::vector<RingElement> parity_support(const GaloisTower& tower,
                                        std::span<const RingElement> g, unsigned k) {
    const unsigned n = static_cast<unsigned>(g.size());
    const unsigned m = tower.params().m;
    if (n == 0 || k == 0 || k > n) throw ring_error("parity_support: bad dimension");

    RingMatrix moore = moore_matrix(tower, g, n - 1);
    RingMatrix kern = kernel_basis(moore);
    const std::size_t pick = [&] {
        for (std::size_t i = 0; i < kern.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (tower.is_unit(kern(i, j))) return i;
        throw ring_error("parity_support: no unit-coordinate kernel generator");
    }();

    // h_j = sigma^(-(n-k-1))(y_j); for k = n this twists by sigma^(+1)
    const long d = static_cast<long>(n) - static_cast<long>(k) - 1;
    const long mm = static_cast<long>(m);
    const unsigned power = static_cast<unsigned>(((-d) % mm + mm) % mm);
    std::vector<RingElement> h;
    h.reserve(n);
    for (std::size_t j = 0; j < n; ++j) h.push_back(tower.frobenius(kern(pick, j), power));

    auto vr = vector_rank(tower, h);
    if (vr.rank != n || vr.free_rank != n)
        throw ring_error("parity_support: derived support is not independent");
    return h;
}

unsigned rank_distance(const GaloisTower& tower, std::span<const RingElement> x,
                       std::span<const RingElement> y) {
    if (x.size() != y.size()) throw ring_error("rank_distance: length mismatch");
    std::vector<RingElement> diff;
    diff.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff.push_back(tower.sub(x[i], y[i]));
    return vector_rank(tower, diff).rank;
}

SampledError sample_error(const GaloisTower& tower, unsigned n, const ErrorSpec& spec) {
    const unsigned r = tower.nilpotency();
    const unsigned m = tower.params().m;

    RankProfile profile = spec.profile;
    if (profile.counts.size() > r) {
        for (std::size_t i = r; i < profile.counts.size(); ++i)
            if (profile.counts[i] != 0)
                throw ring_error("sample_error: profile exponent exceeds nilpotency");
        profile.counts.resize(r);
    }
    profile.counts.resize(r, 0);

    const unsigned t_rank = profile.rank();
    if (t_rank > std::min(n, m)) throw ring_error("sample_error: unrealizable profile");

    SampledError out;
    out.coords = RingMatrix(tower, Level::R, t_rank, n);
    if (t_rank == 0) {
        out.error.assign(n, tower.zero(Level::S));
        return out;
    }

    std::vector<unsigned> exponents;
    for (unsigned v = 0; v < r; ++v)
        for (unsigned c = 0; c < profile.counts[v]; ++c) exponents.push_back(v);

    std::mt19937_64 rng(spec.seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        // unit parts with independent residues
        std::vector<RingElement> units;
        units.reserve(t_rank);
        for (unsigned l = 0; l < t_rank; ++l) units.push_back(tower.random_unit(Level::S, rng));
        if (vector_rank(tower, units).free_rank != t_rank) continue;

        std::vector<RingElement> gens;
        gens.reserve(t_rank);
        for (unsigned l = 0; l < t_rank; ++l) {
            std::uint64_t pv = 1;
            for (unsigned i = 0; i < exponents[l]; ++i) pv *= tower.params().p;
            gens.push_back(tower.mul(tower.from_int(Level::S, pv), units[l]));
        }

        RingMatrix b(tower, Level::R, t_rank, n);
        for (unsigned l = 0; l < t_rank; ++l)
            for (unsigned j = 0; j < n; ++j)
                b.set(l, j, tower.random_element(Level::R, rng));
        if (free_rank(b) != t_rank) continue;

        std::vector<RingElement> e(n, tower.zero(Level::S));
        for (unsigned j = 0; j < n; ++j)
            for (unsigned l = 0; l < t_rank; ++l) {
                if (b(l, j).is_zero()) continue;
                e[j] = tower.add(e[j], tower.mul(gens[l], tower.embed(b(l, j), Level::S)));
            }

        if (!(vector_rank(tower, e).profile == profile)) continue;
        out.error = std::move(e);
        out.generators = std::move(gens);
        out.coords = std::move(b);
        return out;
    }
    throw ring_error("sample_error: no admissible sample after 64 attempts");
}

std::vector<RingElement> GabidulinCode::power_basis_support(const GaloisTower& tower,
                                                            unsigned n) {
    if (n == 0) throw ring_error("power_basis_support: empty support");
    if (n > tower.params().m) throw ring_error("power_basis_support: n exceeds m");
    std::vector<RingElement> g;
    g.reserve(n);
    g.push_back(tower.one(Level::S));
    if (n > 1) {
        const RingElement alpha = tower.generator(Level::S);
        for (unsigned i = 1; i < n; ++i) g.push_back(tower.mul(g.back(), alpha));
    }
    return g;
}

GabidulinCode::GabidulinCode(const GaloisTower& tower, std::vector<RingElement> support,
                             unsigned k)
    : tower_(&tower), g_(std::move(support)), k_(k) {
    const unsigned n = static_cast<unsigned>(g_.size());
    if (n == 0 || k_ == 0 || k_ > n) throw ring_error("gabidulin: need 0 < k <= n");
    if (n > tower.params().m) throw ring_error("gabidulin: length exceeds m");
    auto vr = vector_rank(tower, g_);
    if (vr.rank != n || vr.free_rank != n) throw ring_error("gabidulin: dependent support");

    h_ = parity_support(tower, g_, k_);

    // syndrome rows sigma^i(h_j)
    sigma_h_.reserve(n - k_);
    std::vector<RingElement> row = h_;
    for (unsigned i = 0; i < n - k_; ++i) {
        if (i > 0)
            for (auto& e : row) e = tower.frobenius(e, 1);
        sigma_h_.push_back(row);
    }

    // annihilator chain over support prefixes plus inverted Newton denominators
    ann_chain_.reserve(n + 1);
    beta_inv_.reserve(n);
    ann_chain_.push_back(SkewPoly::one(tower));
    for (unsigned i = 0; i < n; ++i) {
        const RingElement beta = evaluate(ann_chain_.back(), g_[i]);
        if (!tower.is_unit(beta)) throw ring_error("gabidulin: non-unit evaluation");
        beta_inv_.push_back(tower.invert(beta));
        const RingElement twist = tower.mul(tower.frobenius(beta, 1), beta_inv_.back());
        ann_chain_.push_back((SkewPoly::x(tower) - SkewPoly::constant(tower, twist)) *
                             ann_chain_.back());
    }
}

std::vector<RingElement> GabidulinCode::encode(const SkewPoly& message) const {
    if (message.tower() != tower_ && !message.is_zero())
        throw ring_error("encode: message over a different tower");
    if (message.degree() >= static_cast<int>(k_))
        throw ring_error("encode: message degree too large");
    return multipoint_evaluate(message, g_);
}

SkewPoly GabidulinCode::syndrome_poly(std::span<const RingElement> word) const {
    const unsigned n = length();
    if (word.size() != n) throw ring_error("syndrome: word length mismatch");
    const GaloisTower& t = *tower_;
    std::vector<RingElement> coeffs;
    coeffs.reserve(sigma_h_.size());
    for (const auto& row : sigma_h_) {
        RingElement acc = t.zero(Level::S);
        for (unsigned j = 0; j < n; ++j) {
            if (row[j].is_zero() || word[j].is_zero()) continue;
            acc = t.add(acc, t.mul(row[j], word[j]));
        }
        coeffs.push_back(std::move(acc));
    }
    return SkewPoly(tower_, std::move(coeffs));
}

SkewPoly GabidulinCode::interpolate_received(std::span<const RingElement> word) const {
    const unsigned n = length();
    if (word.size() != n) throw ring_error("interpolate: word length mismatch");
    const GaloisTower& t = *tower_;
    SkewPoly interp = SkewPoly::zero(t);
    for (unsigned i = 0; i < n; ++i) {
        const RingElement deficit = t.sub(word[i], evaluate(interp, g_[i]));
        if (deficit.is_zero()) continue;
        interp = interp + scale_left(t.mul(deficit, beta_inv_[i]), ann_chain_[i]);
    }
    return interp;
}

}  // namespace galrank
