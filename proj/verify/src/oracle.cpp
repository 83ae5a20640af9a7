#include "pptor/verify/oracle.hpp"

#include "pptor/error.hpp"
#include "pptor/normal_form.hpp"

#include <algorithm>

namespace pptor::verify {

std::size_t rational_rank(const IntMatrix& a) {
    std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = mpq_class(a(r, c));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && m[p][c] == 0) ++p;
        if (p == a.rows()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < a.cols(); ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

LowAnswer low_oracle(const PpFormula& f) {
    if (f.arity() != 1) throw ArityError("low_oracle needs one free variable");
    const std::string& x = f.free_vars()[0];
    const auto& bound = f.bound_vars();
    auto eqs = f.equations();
    IntMatrix d(eqs.size(), bound.size());
    IntVector c(eqs.size());
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (const auto& [name, coef] : eqs[r].coefficients) {
            if (name == x) {
                c[r] += coef;
                continue;
            }
            auto it = std::find(bound.begin(), bound.end(), name);
            d(r, static_cast<std::size_t>(it - bound.begin())) += coef;
        }

    Int bound_b = 1;
    for (std::size_t r = 0; r < d.rows(); ++r) {
        Int norm = 0;
        for (std::size_t k = 0; k < d.cols(); ++k) norm += abs(d(r, k));
        if (norm > 1) bound_b *= norm;
    }

    IntMatrix with_c(eqs.size(), bound.size() + 1);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
        for (std::size_t k = 0; k < bound.size(); ++k) with_c(r, k) = d(r, k);
        with_c(r, bound.size()) = c[r];
    }
    if (rational_rank(with_c) > rational_rank(d)) return {true, 0, bound_b};

    // a*c must lie in the integer column lattice of D.
    HermiteForm lattice = hermite_normal_form(d.transpose());
    for (Int a = 1; a <= bound_b; ++a) {
        IntVector v(c.size());
        for (std::size_t r = 0; r < c.size(); ++r) v[r] = a * c[r];
        if (lattice_coordinates(lattice, v)) return {false, a, bound_b};
    }
    throw std::logic_error("low_oracle: search bound exhausted");
}

}  // namespace pptor::verify
