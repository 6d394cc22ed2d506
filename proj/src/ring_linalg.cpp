#include "galrank/ring_linalg.hpp"

#include <algorithm>
#include <cassert>

namespace galrank {

RingMatrix::RingMatrix(const GaloisTower& tower, Level level, std::size_t rows,
                       std::size_t cols)
    : tower_(&tower), level_(level), rows_(rows), cols_(cols) {
    entries_.assign(rows * cols, tower.zero(level));
}

RingMatrix RingMatrix::identity(const GaloisTower& tower, Level level, std::size_t n) {
    RingMatrix m(tower, level, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, tower.one(level));
    return m;
}

RingMatrix RingMatrix::from_rows(const GaloisTower& tower, Level level,
                                 std::vector<std::vector<RingElement>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows[0].size();
    RingMatrix m(tower, level, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw ring_error("from_rows: ragged rows");
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, std::move(rows[i][j]));
    }
    return m;
}

void RingMatrix::set(std::size_t i, std::size_t j, RingElement v) {
    if (v.level() != level_) throw ring_error("matrix entry level mismatch");
    entries_[i * cols_ + j] = std::move(v);
}

std::vector<RingElement> RingMatrix::row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool RingMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const RingElement& e) { return e.is_zero(); });
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.level_ == b.level_ &&
           a.entries_ == b.entries_;
}

RingMatrix matmul(const RingMatrix& a, const RingMatrix& b) {
    if (a.tower() != b.tower() || a.level() != b.level())
        throw ring_error("matmul: incompatible matrices");
    if (a.cols() != b.rows()) throw ring_error("matmul: dimension mismatch");
    const GaloisTower& t = *a.tower();
    RingMatrix out(t, a.level(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const RingElement& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                out.set(i, j, t.add(out(i, j), t.mul(aik, b(k, j))));
            }
        }
    return out;
}

RingMatrix transpose(const RingMatrix& a) {
    RingMatrix out(*a.tower(), a.level(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a(i, j));
    return out;
}

RingMatrix matsub(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.level() != b.level())
        throw ring_error("matsub: dimension mismatch");
    const GaloisTower& t = *a.tower();
    RingMatrix out(t, a.level(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, t.sub(a(i, j), b(i, j)));
    return out;
}

std::string RankProfile::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(counts[i]);
        } else {
            if (counts[i] != 1) out += std::to_string(counts[i]);
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// Working state for the elimination. Entries are mutated in place; the
// optional transform accumulators replay every row/column operation.
struct SnfWork {
    const GaloisTower& t;
    Level level;
    std::size_t rows, cols;
    std::vector<RingElement> a;  // row-major
    bool need_left, need_right;
    std::vector<RingElement> left;   // rows x rows
    std::vector<RingElement> right;  // cols x cols
    std::vector<unsigned> dval;

    RingElement& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

    void run() {
        const unsigned r = t.nilpotency();
        const std::size_t mn = std::min(rows, cols);
        dval.assign(mn, r);
        for (std::size_t step = 0; step < mn; ++step) {
            // pivot: minimum valuation in the trailing submatrix, row-major ties
            unsigned best = r;
            std::size_t pi = step, pj = step;
            for (std::size_t i = step; i < rows && best > 0; ++i)
                for (std::size_t j = step; j < cols; ++j) {
                    const unsigned v = t.valuation(at(i, j));
                    if (v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                        if (best == 0) break;
                    }
                }
            if (best == r) break;  // trailing submatrix is zero
            swap_rows(step, pi);
            swap_cols(step, pj);

            const unsigned v = best;
            const RingElement w = t.divide_by_p_power(at(step, step), v);
            scale_row(step, t.invert(w));  // pivot becomes exactly p^v
            for (std::size_t i = step + 1; i < rows; ++i) {
                if (at(i, step).is_zero()) continue;
                const RingElement q = t.divide_by_p_power(at(i, step), v);
                row_axpy(i, step, q);
            }
            for (std::size_t j = step + 1; j < cols; ++j) {
                if (at(step, j).is_zero()) continue;
                const RingElement q = t.divide_by_p_power(at(step, j), v);
                col_axpy(j, step, q);
            }
            dval[step] = v;
        }
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
        if (need_left)
            for (std::size_t c = 0; c < rows; ++c)
                std::swap(left[i * rows + c], left[j * rows + c]);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t rr = 0; rr < rows; ++rr) std::swap(at(rr, i), at(rr, j));
        if (need_right)
            for (std::size_t rr = 0; rr < cols; ++rr)
                std::swap(right[rr * cols + i], right[rr * cols + j]);
    }

    void scale_row(std::size_t i, const RingElement& c) {
        for (std::size_t j = 0; j < cols; ++j)
            if (!at(i, j).is_zero()) at(i, j) = t.mul(c, at(i, j));
        if (need_left)
            for (std::size_t j = 0; j < rows; ++j) {
                auto& e = left[i * rows + j];
                if (!e.is_zero()) e = t.mul(c, e);
            }
    }

    // row i -= q * row src
    void row_axpy(std::size_t i, std::size_t src, const RingElement& q) {
        for (std::size_t j = 0; j < cols; ++j) {
            const RingElement& s = at(src, j);
            if (s.is_zero()) continue;
            at(i, j) = t.sub(at(i, j), t.mul(q, s));
        }
        if (need_left)
            for (std::size_t j = 0; j < rows; ++j) {
                const RingElement& s = left[src * rows + j];
                if (s.is_zero()) continue;
                auto& e = left[i * rows + j];
                e = t.sub(e, t.mul(q, s));
            }
    }

    // col j -= q * col src   (column ops act on the right: entries times q)
    void col_axpy(std::size_t j, std::size_t src, const RingElement& q) {
        for (std::size_t i = 0; i < rows; ++i) {
            const RingElement& s = at(i, src);
            if (s.is_zero()) continue;
            at(i, j) = t.sub(at(i, j), t.mul(s, q));
        }
        if (need_right)
            for (std::size_t i = 0; i < cols; ++i) {
                const RingElement& s = right[i * cols + src];
                if (s.is_zero()) continue;
                auto& e = right[i * cols + j];
                e = t.sub(e, t.mul(s, q));
            }
    }
};

SnfWork snf_core(const RingMatrix& m, bool need_left, bool need_right) {
    if (m.tower() == nullptr) throw ring_error("snf: empty matrix handle");
    const GaloisTower& t = *m.tower();
    SnfWork w{t, m.level(), m.rows(), m.cols(), {}, need_left, need_right, {}, {}, {}};
    w.a.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) w.a.push_back(m(i, j));
    if (need_left) {
        w.left.assign(m.rows() * m.rows(), t.zero(m.level()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            w.left[i * m.rows() + i] = t.one(m.level());
    }
    if (need_right) {
        w.right.assign(m.cols() * m.cols(), t.zero(m.level()));
        for (std::size_t i = 0; i < m.cols(); ++i)
            w.right[i * m.cols() + i] = t.one(m.level());
    }
    w.run();
    return w;
}

std::uint64_t p_power(const GaloisTower& t, unsigned v) {
    std::uint64_t x = 1;
    for (unsigned i = 0; i < v; ++i) x *= t.params().p;
    return x;
}

}  // namespace

SnfResult smith_normal_form(const RingMatrix& a) {
    auto w = snf_core(a, true, true);
    const GaloisTower& t = *a.tower();
    SnfResult out;
    out.left = RingMatrix(t, a.level(), a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            out.left.set(i, j, w.left[i * a.rows() + j]);
    out.right = RingMatrix(t, a.level(), a.cols(), a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.right.set(i, j, w.right[i * a.cols() + j]);
    out.diag_valuations = w.dval;
    for (unsigned v : w.dval)
        out.diag.push_back(v >= t.nilpotency() ? t.zero(a.level())
                                               : t.from_int(a.level(), p_power(t, v)));
    return out;
}

unsigned rank(const RingMatrix& a) {
    auto w = snf_core(a, false, false);
    unsigned n = 0;
    for (unsigned v : w.dval)
        if (v < a.tower()->nilpotency()) ++n;
    return n;
}

unsigned free_rank(const RingMatrix& a) {
    auto w = snf_core(a, false, false);
    unsigned n = 0;
    for (unsigned v : w.dval)
        if (v == 0) ++n;
    return n;
}

RankProfile rank_profile(const RingMatrix& a) {
    auto w = snf_core(a, false, false);
    RankProfile p;
    p.counts.assign(a.tower()->nilpotency(), 0);
    for (unsigned v : w.dval)
        if (v < a.tower()->nilpotency()) ++p.counts[v];
    return p;
}

RingMatrix expand(const GaloisTower& tower, std::span<const RingElement> vec) {
    const unsigned m = tower.params().m;
    RingMatrix out(tower, Level::R, m, vec.size());
    for (std::size_t j = 0; j < vec.size(); ++j) {
        auto coords = tower.s_coords(vec[j]);
        for (unsigned i = 0; i < m; ++i) out.set(i, j, std::move(coords[i]));
    }
    return out;
}

VectorRank vector_rank(const GaloisTower& tower, std::span<const RingElement> vec) {
    auto w = snf_core(expand(tower, vec), false, false);
    VectorRank out;
    out.profile.counts.assign(tower.nilpotency(), 0);
    for (unsigned v : w.dval)
        if (v < tower.nilpotency()) ++out.profile.counts[v];
    out.rank = out.profile.rank();
    out.free_rank = out.profile.free_rank();
    return out;
}

RingMatrix kernel_basis(const RingMatrix& a) {
    const GaloisTower& t = *a.tower();
    const unsigned r = t.nilpotency();
    auto w = snf_core(a, false, true);
    const std::size_t mn = std::min(a.rows(), a.cols());

    std::vector<std::vector<RingElement>> gens;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        unsigned v = i < mn ? w.dval[i] : 0;  // columns beyond the diagonal are free
        bool free_col = i >= mn || w.dval[i] >= r;
        if (i < mn && w.dval[i] == 0) continue;  // unit diagonal: no kernel direction
        const std::uint64_t mult = free_col ? 1 : p_power(t, r - v);
        std::vector<RingElement> gen;
        gen.reserve(a.cols());
        const RingElement c = t.from_int(a.level(), mult);
        for (std::size_t row = 0; row < a.cols(); ++row)
            gen.push_back(t.mul(w.right[row * a.cols() + i], c));
        gens.push_back(std::move(gen));
    }
    RingMatrix out(t, a.level(), gens.size(), a.cols());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, std::move(gens[i][j]));
    return out;
}

std::optional<std::vector<RingElement>> solve(const RingMatrix& a,
                                              std::span<const RingElement> b) {
    if (b.size() != a.rows()) throw ring_error("solve: rhs length mismatch");
    const GaloisTower& t = *a.tower();
    const unsigned r = t.nilpotency();
    auto w = snf_core(a, true, true);
    const std::size_t mn = std::min(a.rows(), a.cols());

    // c = left * b
    std::vector<RingElement> c(a.rows(), t.zero(a.level()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) {
            const RingElement& lij = w.left[i * a.rows() + j];
            if (lij.is_zero() || b[j].is_zero()) continue;
            c[i] = t.add(c[i], t.mul(lij, b[j]));
        }

    std::vector<RingElement> y(a.cols(), t.zero(a.level()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < mn && w.dval[i] < r) {
            if (t.valuation(c[i]) < w.dval[i]) return std::nullopt;
            y[i] = t.divide_by_p_power(c[i], w.dval[i]);
        } else if (!c[i].is_zero()) {
            return std::nullopt;
        }
    }

    // x = right * y
    std::vector<RingElement> x(a.cols(), t.zero(a.level()));
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const RingElement& rij = w.right[i * a.cols() + j];
            if (rij.is_zero() || y[j].is_zero()) continue;
            x[i] = t.add(x[i], t.mul(rij, y[j]));
        }
    return x;
}

RingMatrix moore_matrix(const GaloisTower& tower, std::span<const RingElement> v,
                        std::size_t rows) {
    RingMatrix out(tower, Level::S, rows, v.size());
    std::vector<RingElement> cur(v.begin(), v.end());
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out.set(i, j, cur[j]);
        if (i + 1 < rows)
            for (auto& e : cur) e = tower.frobenius(e, 1);
    }
    return out;
}

}  // namespace galrank
