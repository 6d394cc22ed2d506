#include "galrank/skew_poly.hpp"

#include <algorithm>

#include "galrank/ring_linalg.hpp"

namespace galrank {

namespace {

const GaloisTower& require_tower(const SkewPoly& f) {
    if (f.tower() == nullptr) throw ring_error("skew poly without tower handle");
    return *f.tower();
}

const GaloisTower& require_same(const SkewPoly& a, const SkewPoly& b) {
    const GaloisTower& t = require_tower(a);
    if (b.tower() != &t) throw ring_error("skew polys over different towers");
    return t;
}

}  // namespace

SkewPoly::SkewPoly(const GaloisTower* tower, std::vector<RingElement> coeffs)
    : tower_(tower), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.level() != Level::S || (tower_ && c.coeffs().size() != tower_->words(Level::S)))
            throw ring_error("skew poly coefficients must live in S");
    trim();
}

void SkewPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::one(const GaloisTower& tower) {
    return SkewPoly(&tower, {tower.one(Level::S)});
}

SkewPoly SkewPoly::constant(const GaloisTower& tower, RingElement c) {
    return SkewPoly(&tower, {std::move(c)});
}

SkewPoly SkewPoly::monomial(const GaloisTower& tower, RingElement c, unsigned e) {
    std::vector<RingElement> v(e + 1, tower.zero(Level::S));
    v[e] = std::move(c);
    return SkewPoly(&tower, std::move(v));
}

SkewPoly SkewPoly::x(const GaloisTower& tower) {
    return monomial(tower, tower.one(Level::S), 1);
}

RingElement SkewPoly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return tower_ ? tower_->zero(Level::S) : RingElement(Level::S, {});
}

const RingElement& SkewPoly::leading_coeff() const {
    if (coeffs_.empty()) throw ring_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    const GaloisTower& t = require_same(a, b);
    std::vector<RingElement> c(std::max(a.coeffs().size(), b.coeffs().size()),
                               t.zero(Level::S));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs().size() && i < b.coeffs().size())
            c[i] = t.add(a.coeffs()[i], b.coeffs()[i]);
        else if (i < a.coeffs().size())
            c[i] = a.coeffs()[i];
        else
            c[i] = b.coeffs()[i];
    }
    return SkewPoly(&t, std::move(c));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    const GaloisTower& t = require_same(a, b);
    std::vector<RingElement> c(std::max(a.coeffs().size(), b.coeffs().size()),
                               t.zero(Level::S));
    for (std::size_t i = 0; i < c.size(); ++i) {
        const RingElement ai = i < a.coeffs().size() ? a.coeffs()[i] : t.zero(Level::S);
        const RingElement bi = i < b.coeffs().size() ? b.coeffs()[i] : t.zero(Level::S);
        c[i] = t.sub(ai, bi);
    }
    return SkewPoly(&t, std::move(c));
}

SkewPoly operator-(const SkewPoly& a) {
    const GaloisTower& t = require_tower(a);
    std::vector<RingElement> c;
    c.reserve(a.coeffs().size());
    for (const auto& e : a.coeffs()) c.push_back(t.neg(e));
    return SkewPoly(&t, std::move(c));
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    const GaloisTower& t = require_same(a, b);
    if (a.is_zero() || b.is_zero()) return SkewPoly::zero(t);
    const std::size_t na = a.coeffs().size(), nb = b.coeffs().size();
    std::vector<RingElement> out(na + nb - 1, t.zero(Level::S));
    // tb holds sigma^j(b_i) for the current j
    std::vector<RingElement> tb(b.coeffs().begin(), b.coeffs().end());
    for (std::size_t j = 0; j < na; ++j) {
        if (j > 0)
            for (auto& e : tb) e = t.frobenius(e, 1);
        const RingElement& aj = a.coeffs()[j];
        if (aj.is_zero()) continue;
        for (std::size_t i = 0; i < nb; ++i) {
            if (tb[i].is_zero()) continue;
            out[j + i] = t.add(out[j + i], t.mul(aj, tb[i]));
        }
    }
    return SkewPoly(&t, std::move(out));
}

SkewPoly scale_left(const RingElement& c, const SkewPoly& f) {
    const GaloisTower& t = require_tower(f);
    std::vector<RingElement> out;
    out.reserve(f.coeffs().size());
    for (const auto& e : f.coeffs()) out.push_back(t.mul(c, e));
    return SkewPoly(&t, std::move(out));
}

SkewPoly shift_x(const SkewPoly& f) {
    const GaloisTower& t = require_tower(f);
    if (f.is_zero()) return f;
    std::vector<RingElement> out;
    out.reserve(f.coeffs().size() + 1);
    out.push_back(t.zero(Level::S));
    for (const auto& e : f.coeffs()) out.push_back(t.frobenius(e, 1));
    return SkewPoly(&t, std::move(out));
}

SkewPoly truncate(const SkewPoly& f, unsigned k) {
    const GaloisTower& t = require_tower(f);
    std::vector<RingElement> out(f.coeffs().begin(),
                                 f.coeffs().begin() +
                                     std::min<std::size_t>(k, f.coeffs().size()));
    return SkewPoly(&t, std::move(out));
}

bool is_primitive(const SkewPoly& f) {
    const GaloisTower& t = require_tower(f);
    for (const auto& c : f.coeffs())
        if (t.is_unit(c)) return true;
    return false;
}

Monicized monicize(const SkewPoly& g) {
    const GaloisTower& t = require_tower(g);
    if (!is_primitive(g)) throw ring_error("monicize: polynomial is not primitive");
    // d = deg(mu g): highest index with a unit coefficient
    int d = -1;
    for (int i = g.degree(); i >= 0; --i)
        if (t.is_unit(g.coeffs()[static_cast<std::size_t>(i)])) {
            d = i;
            break;
        }
    SkewPoly u = SkewPoly::constant(t, t.invert(g.coeffs()[static_cast<std::size_t>(d)]));
    SkewPoly h = u * g;
    // cancel nilpotent leading monomials; valuations above d strictly rise
    long guard = 4l * (t.nilpotency() + 1) * (g.degree() - d + 1) + 16;
    while (h.degree() > d) {
        const RingElement& c = h.leading_coeff();
        const unsigned e = static_cast<unsigned>(h.degree());
        SkewPoly u1 = SkewPoly::one(t) - SkewPoly::monomial(t, c, e - static_cast<unsigned>(d));
        h = u1 * h;
        u = u1 * u;
        if (--guard < 0) throw ring_error("monicize: cancellation did not terminate");
    }
    // cancellations may have perturbed the top coefficient by nilpotents
    if (!(h.leading_coeff() == t.one(Level::S))) {
        SkewPoly fix = SkewPoly::constant(t, t.invert(h.leading_coeff()));
        h = fix * h;
        u = fix * u;
    }
    return {std::move(u), std::move(h)};
}

namespace {

// f = q*h + rem for a monic h.
SkewDivision divide_monic_right(const SkewPoly& f, const SkewPoly& h) {
    const GaloisTower& t = require_same(f, h);
    const int d = h.degree();
    if (f.degree() < d) return {SkewPoly::zero(t), f};
    std::vector<RingElement> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<RingElement> q(static_cast<std::size_t>(f.degree() - d + 1),
                               t.zero(Level::S));
    for (int e = f.degree() - d; e >= 0; --e) {
        const RingElement c = rem[static_cast<std::size_t>(e + d)];
        if (c.is_zero()) continue;
        q[static_cast<std::size_t>(e)] = c;
        // rem -= (c x^e) * h ; ((c x^e) h)_{e+j} = c sigma^e(h_j)
        for (int j = 0; j <= d; ++j) {
            const RingElement& hj = h.coeffs()[static_cast<std::size_t>(j)];
            if (hj.is_zero()) continue;
            auto& target = rem[static_cast<std::size_t>(e + j)];
            target = t.sub(target, t.mul(c, t.frobenius(hj, static_cast<unsigned>(e))));
        }
    }
    rem.resize(static_cast<std::size_t>(d));
    return {SkewPoly(&t, std::move(q)), SkewPoly(&t, std::move(rem))};
}

// f = h*q + rem for a monic h.
SkewDivision divide_monic_left(const SkewPoly& f, const SkewPoly& h) {
    const GaloisTower& t = require_same(f, h);
    const int d = h.degree();
    if (f.degree() < d) return {SkewPoly::zero(t), f};
    const unsigned m = t.params().m;
    const unsigned inv_d = (m - static_cast<unsigned>(d) % m) % m;
    std::vector<RingElement> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<RingElement> q(static_cast<std::size_t>(f.degree() - d + 1),
                               t.zero(Level::S));
    for (int e = f.degree() - d; e >= 0; --e) {
        const RingElement c = rem[static_cast<std::size_t>(e + d)];
        if (c.is_zero()) continue;
        const RingElement qe = t.frobenius(c, inv_d);  // sigma^-d(c)
        q[static_cast<std::size_t>(e)] = qe;
        // rem -= h * (qe x^e) ; (h (qe x^e))_{j+e} = h_j sigma^j(qe)
        for (int j = 0; j <= d; ++j) {
            const RingElement& hj = h.coeffs()[static_cast<std::size_t>(j)];
            if (hj.is_zero()) continue;
            auto& target = rem[static_cast<std::size_t>(j + e)];
            target = t.sub(target, t.mul(hj, t.frobenius(qe, static_cast<unsigned>(j))));
        }
    }
    rem.resize(static_cast<std::size_t>(d));
    return {SkewPoly(&t, std::move(q)), SkewPoly(&t, std::move(rem))};
}

// Right monicization: a unit v with g*v monic (mirror of monicize).
Monicized monicize_right(const SkewPoly& g) {
    const GaloisTower& t = require_tower(g);
    if (!is_primitive(g)) throw ring_error("monicize: polynomial is not primitive");
    int d = -1;
    for (int i = g.degree(); i >= 0; --i)
        if (t.is_unit(g.coeffs()[static_cast<std::size_t>(i)])) {
            d = i;
            break;
        }
    const unsigned m = t.params().m;
    const unsigned inv_d = (m - static_cast<unsigned>(d) % m) % m;
    // constant c with g_d sigma^d(c) = 1
    SkewPoly v = SkewPoly::constant(
        t, t.frobenius(t.invert(g.coeffs()[static_cast<std::size_t>(d)]), inv_d));
    SkewPoly h = g * v;
    long guard = 4l * (t.nilpotency() + 1) * (g.degree() - d + 1) + 16;
    while (h.degree() > d) {
        const RingElement& c = h.leading_coeff();
        const unsigned e = static_cast<unsigned>(h.degree());
        // (g1 * (c' x^{e-d}))_e = sigma^d(c'); cancel with c' = sigma^-d(lc)
        SkewPoly v1 = SkewPoly::one(t) -
                      SkewPoly::monomial(t, t.frobenius(c, inv_d),
                                         e - static_cast<unsigned>(d));
        h = h * v1;
        v = v * v1;
        if (--guard < 0) throw ring_error("monicize: cancellation did not terminate");
    }
    if (!(h.leading_coeff() == t.one(Level::S))) {
        SkewPoly fix = SkewPoly::constant(
            t, t.frobenius(t.invert(h.leading_coeff()), inv_d));
        h = h * fix;
        v = v * fix;
    }
    return {std::move(v), std::move(h)};
}

}  // namespace

SkewDivision right_divide(const SkewPoly& f, const SkewPoly& g) {
    const GaloisTower& t = require_same(f, g);
    if (g.is_zero()) throw ring_error("right_divide: division by zero");
    if (!is_primitive(g)) throw ring_error("right_divide: divisor is not primitive");
    if (!g.leading_coeff().is_zero() && g.leading_coeff() == t.one(Level::S))
        return divide_monic_right(f, g);
    auto mon = monicize(g);
    auto div = divide_monic_right(f, mon.monic);
    return {div.quotient * mon.unit, std::move(div.remainder)};
}

SkewDivision left_divide(const SkewPoly& f, const SkewPoly& g) {
    const GaloisTower& t = require_same(f, g);
    if (g.is_zero()) throw ring_error("left_divide: division by zero");
    if (!is_primitive(g)) throw ring_error("left_divide: divisor is not primitive");
    if (!g.leading_coeff().is_zero() && g.leading_coeff() == t.one(Level::S))
        return divide_monic_left(f, g);
    auto mon = monicize_right(g);
    auto div = divide_monic_left(f, mon.monic);
    return {mon.unit * div.quotient, std::move(div.remainder)};
}

RingElement evaluate(const SkewPoly& f, const RingElement& s) {
    const GaloisTower& t = require_tower(f);
    RingElement acc = t.zero(Level::S);
    if (f.is_zero()) return acc;
    RingElement cur = s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) cur = t.frobenius(cur, 1);
        if (!f.coeffs()[i].is_zero()) acc = t.add(acc, t.mul(f.coeffs()[i], cur));
    }
    return acc;
}

std::vector<RingElement> multipoint_evaluate(const SkewPoly& f,
                                             std::span<const RingElement> points) {
    std::vector<RingElement> out;
    out.reserve(points.size());
    for (const auto& s : points) out.push_back(evaluate(f, s));
    return out;
}

SkewPoly annihilator_free(const GaloisTower& tower, std::span<const RingElement> points) {
    SkewPoly lam = SkewPoly::one(tower);
    for (const auto& g : points) {
        const RingElement beta = evaluate(lam, g);
        if (!tower.is_unit(beta)) throw ring_error("non-unit evaluation");
        const RingElement c = tower.mul(tower.frobenius(beta, 1), tower.invert(beta));
        lam = (SkewPoly::x(tower) - SkewPoly::constant(tower, c)) * lam;
    }
    return lam;
}

SkewPoly annihilator_general(const GaloisTower& tower, std::span<const RingElement> points) {
    const unsigned t_rank = vector_rank(tower, points).rank;
    if (t_rank == 0) return SkewPoly::one(tower);
    // monic of degree t: solve sum_{i<t} L_i sigma^i(e_j) = -sigma^t(e_j)
    RingMatrix a(tower, Level::S, points.size(), t_rank);
    std::vector<RingElement> rhs;
    rhs.reserve(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        RingElement cur = points[j];
        for (unsigned i = 0; i < t_rank; ++i) {
            a.set(j, i, cur);
            cur = tower.frobenius(cur, 1);
        }
        rhs.push_back(tower.neg(cur));
    }
    auto sol = solve(a, rhs);
    if (!sol) throw ring_error("annihilator_general: Moore system unsolvable");
    std::vector<RingElement> coeffs = std::move(*sol);
    coeffs.push_back(tower.one(Level::S));
    return SkewPoly(&tower, std::move(coeffs));
}

SkewPoly interpolate(const GaloisTower& tower, std::span<const RingElement> points,
                     std::span<const RingElement> values) {
    if (points.size() != values.size())
        throw ring_error("interpolate: points/values length mismatch");
    SkewPoly interp = SkewPoly::zero(tower);
    SkewPoly lam = SkewPoly::one(tower);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const RingElement beta = evaluate(lam, points[i]);
        if (!tower.is_unit(beta)) throw ring_error("non-unit evaluation");
        const RingElement beta_inv = tower.invert(beta);
        const RingElement deficit = tower.sub(values[i], evaluate(interp, points[i]));
        interp = interp + scale_left(tower.mul(deficit, beta_inv), lam);
        const RingElement twist = tower.mul(tower.frobenius(beta, 1), beta_inv);
        lam = (SkewPoly::x(tower) - SkewPoly::constant(tower, twist)) * lam;
    }
    return interp;
}

}  // namespace galrank
