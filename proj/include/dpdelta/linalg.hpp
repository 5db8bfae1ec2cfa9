#pragma once

#include "dpdelta/rational.hpp"

#include <stdexcept>
#include <vector>

namespace dpd {

using Vec = std::vector<Rat>;
using Matrix = std::vector<Vec>;

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Matrix principal_submatrix(const Matrix& m, const std::vector<size_t>& idx);

// Solves A x = B column by column (B given as a list of right-hand sides).
std::vector<Vec> solve(const Matrix& a, const std::vector<Vec>& rhs);
Vec solve(const Matrix& a, const Vec& rhs);
Matrix inverse(const Matrix& a);

// Exact test via the sign pattern of leading principal minors (Gaussian pivots).
bool is_negative_definite(const Matrix& a);

Vec mat_vec(const Matrix& a, const Vec& x);
Rat dot(const Vec& x, const Vec& y);

}  // namespace dpd
