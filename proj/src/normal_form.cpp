#include "pptor/normal_form.hpp"

#include <stdexcept>

namespace pptor {

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

// Smallest nonzero |a(i,j)| over i >= t, j >= t in row-major scan order.
std::optional<Position> smallest_entry(const IntMatrix& a, std::size_t t) {
    std::optional<Position> best;
    Int best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& x = a(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!best || ax < best_abs) {
                best = Position{i, j};
                best_abs = ax;
            }
        }
    return best;
}

// Smallest nonzero entry among the pivot row and pivot column of step t.
Position smallest_in_cross(const IntMatrix& a, std::size_t t) {
    Position best{t, t};
    Int best_abs = abs(a(t, t));
    auto consider = [&](std::size_t i, std::size_t j) {
        const Int& x = a(i, j);
        if (x == 0) return;
        Int ax = abs(x);
        if (best_abs == 0 || ax < best_abs) {
            best = Position{i, j};
            best_abs = ax;
        }
    };
    for (std::size_t i = t + 1; i < a.rows(); ++i) consider(i, t);
    for (std::size_t j = t + 1; j < a.cols(); ++j) consider(t, j);
    return best;
}

Int truncated_quotient(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor_quotient(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

std::vector<Int> SmithForm::invariant_factors() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(s(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    SmithForm f{IntMatrix::identity(m), input, IntMatrix::identity(n), IntMatrix::identity(n), 0};
    IntMatrix& a = f.s;

    auto swap_row = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        f.u.swap_rows(i, j);
    };
    auto swap_col = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        f.v.swap_cols(i, j);
        f.v_inverse.swap_rows(i, j);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& k) {
        a.add_row_multiple(dst, src, k);
        f.u.add_row_multiple(dst, src, k);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& k) {
        a.add_col_multiple(dst, src, k);
        f.v.add_col_multiple(dst, src, k);
        f.v_inverse.add_row_multiple(src, dst, -k);
    };

    const std::size_t limit = std::min(m, n);
    std::size_t t = 0;
    for (; t < limit; ++t) {
        auto pivot = smallest_entry(a, t);
        if (!pivot) break;
        swap_row(t, pivot->row);
        swap_col(t, pivot->col);

        for (;;) {
            bool clear = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                add_row(i, t, -truncated_quotient(a(i, t), a(t, t)));
                if (a(i, t) != 0) clear = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                add_col(j, t, -truncated_quotient(a(t, j), a(t, t)));
                if (a(t, j) != 0) clear = false;
            }
            if (!clear) {
                Position p = smallest_in_cross(a, t);
                swap_row(t, p.row);
                swap_col(t, p.col);
                continue;
            }
            // Divisibility of the remaining block by the pivot.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < m && !offending; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        offending = i;
                        break;
                    }
            if (!offending) break;
            add_row(t, *offending, 1);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            f.u.negate_row(t);
        }
    }
    f.rank = t;
    return f;
}

HermiteForm hermite_normal_form(const IntMatrix& input, bool with_transform) {
    IntMatrix a = input;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix t = with_transform ? IntMatrix::identity(m) : IntMatrix();

    auto swap_row = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        if (with_transform) t.swap_rows(i, j);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& k) {
        a.add_row_multiple(dst, src, k);
        if (with_transform) t.add_row_multiple(dst, src, k);
    };

    HermiteForm h;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        bool found = false;
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < m; ++i)
                if (a(i, c) != 0 && (!best || abs(a(i, c)) < abs(a(*best, c)))) best = i;
            if (!best) break;
            found = true;
            swap_row(r, *best);
            bool clear = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, c) == 0) continue;
                add_row(i, r, -truncated_quotient(a(i, c), a(r, c)));
                if (a(i, c) != 0) clear = false;
            }
            if (clear) break;
        }
        if (!found) continue;
        if (a(r, c) < 0) {
            a.negate_row(r);
            if (with_transform) t.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (a(i, c) == 0) continue;
            add_row(i, r, -floor_quotient(a(i, c), a(r, c)));
        }
        h.pivots.push_back(c);
        ++r;
    }
    h.basis = a.row_block(0, r);
    if (with_transform) h.transform = std::move(t);
    return h;
}

std::optional<IntVector> lattice_coordinates(const HermiteForm& h, std::span<const Int> v) {
    if (v.size() != h.basis.cols()) throw std::invalid_argument("lattice_coordinates: width mismatch");
    IntVector rest(v.begin(), v.end());
    IntVector coeffs(h.rank());
    std::size_t next = 0;
    for (std::size_t i = 0; i < h.rank(); ++i) {
        const std::size_t pc = h.pivots[i];
        // Anything left of this pivot must already be cleared.
        for (; next < pc; ++next)
            if (rest[next] != 0) return std::nullopt;
        const Int& p = h.basis(i, pc);
        if (!mpz_divisible_p(rest[pc].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
        Int c;
        mpz_divexact(c.get_mpz_t(), rest[pc].get_mpz_t(), p.get_mpz_t());
        if (c != 0)
            for (std::size_t j = pc; j < rest.size(); ++j) rest[j] -= c * h.basis(i, j);
        coeffs[i] = c;
        next = pc + 1;
    }
    for (; next < rest.size(); ++next)
        if (rest[next] != 0) return std::nullopt;
    return coeffs;
}

std::optional<IntVector> solve_row_combination(const IntMatrix& gens, std::span<const Int> target) {
    HermiteForm h = hermite_normal_form(gens, true);
    auto c = lattice_coordinates(h, target);
    if (!c) return std::nullopt;
    IntVector x(gens.rows());
    for (std::size_t i = 0; i < h.rank(); ++i) {
        if ((*c)[i] == 0) continue;
        for (std::size_t j = 0; j < gens.rows(); ++j) x[j] += (*c)[i] * h.transform(i, j);
    }
    return x;
}

IntMatrix left_kernel(const IntMatrix& a) {
    HermiteForm h = hermite_normal_form(a, true);
    return h.transform.row_block(h.rank(), a.rows() - h.rank());
}

IntMatrix right_kernel(const IntMatrix& a) { return left_kernel(a.transpose()); }

HermiteForm lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("lattice_intersection: width mismatch");
    IntMatrix k = left_kernel(stack(a, b));
    IntMatrix gens(0, a.cols());
    for (std::size_t r = 0; r < k.rows(); ++r) {
        auto u = k.row(r).subspan(0, a.rows());
        gens.append_row(multiply(u, a));
    }
    return hermite_normal_form(gens);
}

}  // namespace pptor
