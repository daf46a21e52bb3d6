#include "i1/linalg.hpp"

#include <utility>

namespace i1 {

namespace {

// Last nonzero column + 1 per row. Action matrices are banded, so row
// operations that respect these bounds cost O(band) instead of O(cols).
std::vector<std::size_t> row_ends(const Mat& m) {
    std::vector<std::size_t> hi(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::size_t h = m[i].size();
        while (h > 0 && m[i][h - 1].is_zero()) --h;
        hi[i] = h;
    }
    return hi;
}

}  // namespace

Scalar det_bareiss(Mat m) {
    const std::size_t n = m.size();
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Scalar(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = Scalar(0);
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::size_t mat_rank(Mat m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    auto hi = row_ends(m);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        std::swap(hi[r], hi[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            Scalar f = m[i][col] / m[r][col];
            std::size_t end = std::max(hi[i], hi[r]);
            for (std::size_t j = col; j < end; ++j) m[i][j] -= f * m[r][j];
            hi[i] = end;
            while (hi[i] > 0 && m[i][hi[i] - 1].is_zero()) --hi[i];
        }
        ++r;
    }
    return r;
}

std::vector<Row> nullspace(Mat m) {
    if (m.empty() || m[0].empty()) return {};
    const std::size_t rows = m.size(), cols = m[0].size();
    auto hi = row_ends(m);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        std::swap(hi[r], hi[p]);
        Scalar inv = m[r][col].inverse();
        for (std::size_t j = col; j < hi[r]; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            std::size_t end = std::max(hi[i], hi[r]);
            for (std::size_t j = col; j < end; ++j) m[i][j] -= f * m[r][j];
            hi[i] = end;
            while (hi[i] > 0 && m[i][hi[i] - 1].is_zero()) --hi[i];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Row v(cols);
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool invert(const Mat& m, Mat& out) {
    const std::size_t n = m.size();
    Mat a = m;
    out.assign(n, Row(n));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = Scalar(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col].is_zero()) ++p;
        if (p == n) return false;
        std::swap(a[col], a[p]);
        std::swap(out[col], out[p]);
        Scalar inv = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= inv;
            out[col][j] *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                out[i][j] -= f * out[col][j];
            }
        }
    }
    return true;
}

}  // namespace i1
