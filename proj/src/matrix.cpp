#include "colie/matrix.hpp"

namespace colie {

SquareMat<Scalar> scalar_mat_zero(std::size_t n, const FieldSpec& f) {
    return SquareMat<Scalar>(n, Scalar::zero(f));
}

SquareMat<Scalar> scalar_mat_identity(std::size_t n, const FieldSpec& f) {
    return SquareMat<Scalar>::identity(n, Scalar::zero(f), Scalar::one(f));
}

SquareMat<Jet> jet_mat_zero(std::size_t n, const FieldSpec& f, std::size_t order) {
    return SquareMat<Jet>(n, Jet(f, order));
}

SquareMat<Jet> to_jet(const SquareMat<Scalar>& m, std::size_t order) {
    SquareMat<Jet> out = jet_mat_zero(m.size(), m.at(0, 0).field(), order);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out.at(i, j) = Jet::constant(m.at(i, j), order);
    return out;
}

SquareMat<Scalar> jet_coeff(const SquareMat<Jet>& m, std::size_t k) {
    SquareMat<Scalar> out = scalar_mat_zero(m.size(), m.at(0, 0).field());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out.at(i, j) = m.at(i, j).coeff(k);
    return out;
}

std::optional<SquareMat<Scalar>> try_inverse(const SquareMat<Scalar>& m) {
    const std::size_t n = m.size();
    const FieldSpec f = m.at(0, 0).field();
    SquareMat<Scalar> a = m;
    SquareMat<Scalar> inv = scalar_mat_identity(n, f);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        Scalar d = a.at(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Scalar c = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= c * a.at(col, j);
                inv.at(i, j) -= c * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string matrix_str(const SquareMat<Scalar>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ";";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += ",";
            out += m.at(i, j).str();
        }
    }
    return out;
}

} // namespace colie
