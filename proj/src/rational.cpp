#include "coset/rational.hpp"

#include "coset/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace coset {

rat parse_rat(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    std::string t = s;
    for (char ch : t) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw parse_error("bad rational literal: " + s);
    }
    try {
        rat x(t);
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal: " + s);
    }
}

std::string rat_str(const rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const rat& x) { return x.get_den() == 1; }

long to_long(const rat& x) {
    if (!is_integer(x)) throw inconsistency_error("expected integer, got " + rat_str(x));
    if (!x.get_num().fits_slong_p()) throw inconsistency_error("integer out of range: " + rat_str(x));
    return x.get_num().get_si();
}

rat rat_floor(const rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return rat(q);
}

ratmat rat_identity(std::size_t n) {
    ratmat m(n, ratvec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ratvec mat_apply(const ratmat& m, const ratvec& v) {
    ratvec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw inconsistency_error("matrix/vector size mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

ratmat mat_mul(const ratmat& a, const ratmat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ratmat out(n, ratvec(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw inconsistency_error("matrix size mismatch");
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
    }
    return out;
}

namespace {

// Row echelon in place; returns (rank, det sign bookkeeping not needed here).
std::size_t echelon(ratmat& a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

std::size_t rat_rank(ratmat a) { return echelon(a); }

rat rat_det(ratmat a) {
    std::size_t n = a.size();
    rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

std::optional<ratvec> rat_solve(ratmat a, ratvec b) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    ratvec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

std::optional<ratmat> rat_inverse(const ratmat& a) {
    std::size_t n = a.size();
    ratmat w(n, ratvec(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
        w[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(w[piv], w[c]);
        rat d = w[c][c];
        for (std::size_t j = 0; j < 2 * n; ++j) w[c][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            rat f = w[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
        }
    }
    ratmat inv(n, ratvec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = w[i][n + j];
    return inv;
}

std::vector<ratvec> rat_kernel(ratmat a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    // reduced echelon with pivot-column tracking
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        rat d = a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[r][j] /= d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            rat f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<ratvec> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        ratvec v(cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace coset
