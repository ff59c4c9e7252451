#include "mop/moments.hpp"

namespace mop {

std::vector<Rat> pearson_moments(const ScalarKernel& k, int m_max) {
    if (m_max < 0) throw arith_error("negative moment index");
    std::vector<Rat> mu(m_max + 1);
    mu[0] = 1;
    switch (k.kind()) {
        case KernelKind::Hermite:
            // m mu_{m-1} - 2 mu_{m+1} = 0
            for (int m = 1; m <= m_max; ++m)
                mu[m] = (m % 2 == 1) ? Rat(0) : frac(m - 1, 2) * mu[m - 2];
            break;
        case KernelKind::Laguerre: {
            // mu_{m+1} = (m + b + 1) mu_m
            const Rat& b = k.param_b();
            for (int m = 1; m <= m_max; ++m) mu[m] = (Rat(m - 1) + b + 1) * mu[m - 1];
            break;
        }
        case KernelKind::Jacobi: {
            // (m + a + b + 2) mu_{m+1} = m mu_{m-1} + (b - a) mu_m
            const Rat& a = k.param_a();
            const Rat& b = k.param_b();
            for (int m = 1; m <= m_max; ++m) {
                Rat num = (b - a) * mu[m - 1];
                if (m >= 2) num += Rat(m - 1) * mu[m - 2];
                mu[m] = num / (Rat(m - 1) + a + b + 2);
            }
            break;
        }
    }
    return mu;
}

std::vector<CMat> matrix_moments(const Weight& w, int m_max) {
    int n = w.size();
    PolyMat q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.at(i, j) = w.factor().at(i, j).as_poly();
    int qdeg = poly_mat_degree(q);
    std::vector<Rat> mu = pearson_moments(w.kernel(), m_max + qdeg);
    std::vector<CMat> out;
    out.reserve(m_max + 1);
    for (int m = 0; m <= m_max; ++m) {
        CMat acc(n, n);
        for (int k = 0; k <= qdeg; ++k) acc += poly_mat_coeff(q, k).scaled(CRat(mu[m + k]));
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace mop
