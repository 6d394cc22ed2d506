#pragma once

#include <optional>
#include <string>

#include "galrank/galois_ring.hpp"

namespace galrank {

/// Dense matrix over one tower level, row-major, entries canonically reduced.
class RingMatrix {
  public:
    RingMatrix() = default;
    RingMatrix(const GaloisTower& tower, Level level, std::size_t rows, std::size_t cols);
    static RingMatrix identity(const GaloisTower& tower, Level level, std::size_t n);
    static RingMatrix from_rows(const GaloisTower& tower, Level level,
                                std::vector<std::vector<RingElement>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Level level() const { return level_; }
    const GaloisTower* tower() const { return tower_; }

    const RingElement& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, RingElement v);

    std::vector<RingElement> row(std::size_t i) const;
    bool is_zero() const;

    friend bool operator==(const RingMatrix&, const RingMatrix&);

  private:
    const GaloisTower* tower_ = nullptr;
    Level level_ = Level::base;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RingElement> entries_;
};

RingMatrix matmul(const RingMatrix& a, const RingMatrix& b);
RingMatrix transpose(const RingMatrix& a);
RingMatrix matsub(const RingMatrix& a, const RingMatrix& b);

/// Smith decomposition left * A * right = diag, with the diagonal normalized
/// to pure powers p^v (zeros last) and nondecreasing valuations.
struct SnfResult {
    RingMatrix left;
    RingMatrix right;
    std::vector<RingElement> diag;          // length min(rows, cols)
    std::vector<unsigned> diag_valuations;  // v(d_i); r encodes a zero entry
};

/// Coefficients of the rank profile polynomial: counts[i] diagonal entries of
/// valuation i, i in [0, r). Zero diagonal entries are not counted.
struct RankProfile {
    std::vector<unsigned> counts;

    unsigned rank() const {
        unsigned t = 0;
        for (unsigned c : counts) t += c;
        return t;
    }
    unsigned free_rank() const { return counts.empty() ? 0 : counts[0]; }
    bool is_zero() const { return rank() == 0; }
    std::string to_string() const;

    friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

SnfResult smith_normal_form(const RingMatrix& a);
unsigned rank(const RingMatrix& a);
unsigned free_rank(const RingMatrix& a);
RankProfile rank_profile(const RingMatrix& a);

/// Coordinate expansion of an S-vector into an m x n matrix over R w.r.t.
/// the basis {1, alpha, ..., alpha^(m-1)} (column j holds the coordinates
/// of vec[j]).
RingMatrix expand(const GaloisTower& tower, std::span<const RingElement> vec);

struct VectorRank {
    unsigned rank = 0;
    unsigned free_rank = 0;
    RankProfile profile;
};
VectorRank vector_rank(const GaloisTower& tower, std::span<const RingElement> vec);

/// Rows generate the right kernel {x : A x = 0} as a module; torsion
/// directions contribute generators p^(r - v(d_i)) * (column i of the right
/// transform).
RingMatrix kernel_basis(const RingMatrix& a);

/// A particular solution of A x = b, or nullopt when the system is
/// unsolvable (some transformed right-hand side component not divisible by
/// the corresponding diagonal entry).
std::optional<std::vector<RingElement>> solve(const RingMatrix& a,
                                              std::span<const RingElement> b);

/// Moore matrix [sigma^i(v_j)] with the given number of rows, level S.
RingMatrix moore_matrix(const GaloisTower& tower, std::span<const RingElement> v,
                        std::size_t rows);

}  // namespace galrank
