#pragma once

#include "galrank/galois_ring.hpp"

namespace galrank {

/// Skew polynomial over S with the twist x*c = sigma(c)*x. Coefficients are
/// S-level elements, least degree first, trailing zeros trimmed. The zero
/// polynomial has degree -1 (ordered below every true degree). The
/// automorphism handle is the owning tower; mixing towers throws.
class SkewPoly {
  public:
    SkewPoly() = default;
    SkewPoly(const GaloisTower* tower, std::vector<RingElement> coeffs);

    static SkewPoly zero(const GaloisTower& tower) { return SkewPoly(&tower, {}); }
    static SkewPoly one(const GaloisTower& tower);
    static SkewPoly constant(const GaloisTower& tower, RingElement c);
    static SkewPoly monomial(const GaloisTower& tower, RingElement c, unsigned e);
    /// x (degree-1 monic monomial)
    static SkewPoly x(const GaloisTower& tower);

    const GaloisTower* tower() const { return tower_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const RingElement> coeffs() const { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    RingElement coeff(std::size_t i) const;
    const RingElement& leading_coeff() const;

    friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

  private:
    const GaloisTower* tower_ = nullptr;
    std::vector<RingElement> coeffs_;
    void trim();
};

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
SkewPoly operator-(const SkewPoly& a);
/// Skew product: (a*b)_k = sum_j a_j sigma^j(b_{k-j}).
SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);

/// c * f (constant on the left; coefficients scale without twisting).
SkewPoly scale_left(const RingElement& c, const SkewPoly& f);
/// x * f (degrees shift up by one, coefficients pass through sigma).
SkewPoly shift_x(const SkewPoly& f);
/// f mod x^k (truncation).
SkewPoly truncate(const SkewPoly& f, unsigned k);

/// True iff some coefficient is a unit (the residue image is nonzero).
bool is_primitive(const SkewPoly& f);

struct Monicized {
    SkewPoly unit;   // u, a unit polynomial
    SkewPoly monic;  // u * g, monic of degree deg(mu g)
};
/// Left monicization of a primitive polynomial: returns a unit u with u*g
/// monic of degree deg(mu g). Scales by the inverse of the highest-index
/// unit coefficient, then cancels nilpotent leading monomials with factors
/// (1 - c x^e); terminates because each cancellation raises valuations.
Monicized monicize(const SkewPoly& g);

struct SkewDivision {
    SkewPoly quotient;
    SkewPoly remainder;
};
/// f = q*g + rem with deg rem < deg g; g must be primitive.
SkewDivision right_divide(const SkewPoly& f, const SkewPoly& g);
/// f = g*q + rem with deg rem < deg g; g must be primitive.
SkewDivision left_divide(const SkewPoly& f, const SkewPoly& g);

/// Operator evaluation f(s) = sum f_i sigma^i(s); R-linear in s and
/// multiplicative under composition: (f*g)(s) = f(g(s)).
RingElement evaluate(const SkewPoly& f, const RingElement& s);
std::vector<RingElement> multipoint_evaluate(const SkewPoly& f,
                                             std::span<const RingElement> points);

/// Monic annihilator of linearly independent points, built incrementally as
/// products (x - sigma(b) b^-1); degree equals the number of points. Throws
/// ring_error("non-unit evaluation") when the points are dependent.
SkewPoly annihilator_free(const GaloisTower& tower, std::span<const RingElement> points);

/// Monic (hence primitive) annihilator of an arbitrary vector, of degree
/// exactly its rank. Solves the Moore system over S; oracle-grade cost.
SkewPoly annihilator_general(const GaloisTower& tower, std::span<const RingElement> points);

/// Unique interpolation polynomial of degree < n through (points_i -> values_i),
/// for points linearly independent over R (incremental Newton scheme).
SkewPoly interpolate(const GaloisTower& tower, std::span<const RingElement> points,
                     std::span<const RingElement> values);

}  // namespace galrank
