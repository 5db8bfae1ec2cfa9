#include "dpdelta/linalg.hpp"

namespace dpd {

Matrix principal_submatrix(const Matrix& m, const std::vector<size_t>& idx) {
    Matrix r(idx.size(), Vec(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) r[i][j] = m[idx[i]][idx[j]];
    return r;
}

std::vector<Vec> solve(const Matrix& a, const std::vector<Vec>& rhs) {
    const size_t n = a.size(), m = rhs.size();
    Matrix w(n, Vec(n + m));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
        for (size_t k = 0; k < m; ++k) w[i][n + k] = rhs[k].at(i);
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && w[p][c] == 0) ++p;
        if (p == n) throw SingularMatrix("singular system");
        std::swap(w[c], w[p]);
        Rat inv = 1 / w[c][c];
        for (auto& x : w[c]) x *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || w[r][c] == 0) continue;
            Rat f = w[r][c];
            for (size_t j = c; j < n + m; ++j) w[r][j] -= f * w[c][j];
        }
    }
    std::vector<Vec> out(m, Vec(n));
    for (size_t k = 0; k < m; ++k)
        for (size_t i = 0; i < n; ++i) out[k][i] = w[i][n + k];
    return out;
}

Vec solve(const Matrix& a, const Vec& rhs) { return solve(a, std::vector<Vec>{rhs})[0]; }

Matrix inverse(const Matrix& a) {
    const size_t n = a.size();
    std::vector<Vec> e(n, Vec(n));
    for (size_t i = 0; i < n; ++i) e[i][i] = 1;
    auto cols = solve(a, e);
    Matrix r(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i][j] = cols[j][i];
    return r;
}

bool is_negative_definite(const Matrix& a) {
    Matrix w = a;
    const size_t n = w.size();
    for (size_t c = 0; c < n; ++c) {
        if (w[c][c] >= 0) return false;
        for (size_t r = c + 1; r < n; ++r) {
            if (w[r][c] == 0) continue;
            Rat f = w[r][c] / w[c][c];
            for (size_t j = c; j < n; ++j) w[r][j] -= f * w[c][j];
        }
    }
    return true;
}

Vec mat_vec(const Matrix& a, const Vec& x) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) r[i] += a[i][j] * x[j];
    return r;
}

Rat dot(const Vec& x, const Vec& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace dpd
