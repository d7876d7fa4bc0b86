#include "orush/smallmat.hpp"

#include <cstddef>
#include <utility>

namespace orush {

ZMat kernel_int(const ZMat& m) {
    const size_t rows = m.size();
    if (rows == 0) return {};
    const size_t cols = m[0].size();
    ZMat h = m;
    ZMat u(rows, std::vector<Int>(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    size_t rank = 0;
    for (size_t j = 0; j < cols && rank < rows; ++j) {
        // Euclidean elimination in column j on rows >= rank.
        while (true) {
            size_t piv = rows;
            for (size_t i = rank; i < rows; ++i) {
                if (is_zero(h[i][j])) continue;
                if (piv == rows || mpz_cmpabs(h[i][j].get_mpz_t(), h[piv][j].get_mpz_t()) < 0) piv = i;
            }
            if (piv == rows) break;  // column clear below rank
            std::swap(h[piv], h[rank]);
            std::swap(u[piv], u[rank]);
            bool done = true;
            for (size_t i = rank + 1; i < rows; ++i) {
                if (is_zero(h[i][j])) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[rank][j].get_mpz_t());
                for (size_t k = 0; k < cols; ++k) h[i][k] -= q * h[rank][k];
                for (size_t k = 0; k < rows; ++k) u[i][k] -= q * u[rank][k];
                if (!is_zero(h[i][j])) done = false;
            }
            if (done) {
                ++rank;
                break;
            }
        }
    }

    ZMat kernel;
    for (size_t i = rank; i < rows; ++i) kernel.push_back(u[i]);
    return kernel;
}

QMat kernel_rat(const QMat& m) {
    const size_t rows = m.size();
    if (rows == 0) return {};
    const size_t cols = m[0].size();
    QMat h = m;
    QMat u(rows, std::vector<Rat>(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    size_t rank = 0;
    for (size_t j = 0; j < cols && rank < rows; ++j) {
        size_t piv = rows;
        for (size_t i = rank; i < rows; ++i)
            if (!is_zero(h[i][j])) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(h[piv], h[rank]);
        std::swap(u[piv], u[rank]);
        Rat inv = inv_of(h[rank][j]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (is_zero(h[i][j])) continue;
            Rat f = h[i][j] * inv;
            for (size_t k = 0; k < cols; ++k) h[i][k] -= f * h[rank][k];
            for (size_t k = 0; k < rows; ++k) u[i][k] -= f * u[rank][k];
        }
        ++rank;
    }

    QMat kernel;
    for (size_t i = rank; i < rows; ++i) kernel.push_back(u[i]);
    return kernel;
}

}  // namespace orush
