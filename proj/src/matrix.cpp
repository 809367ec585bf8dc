#include "cobweb/matrix.hpp"

#include <stdexcept>

namespace cobweb {

BoolMatrix boolean_product(const BoolMatrix& a, const BoolMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("boolean_product: shape mismatch");
    BoolMatrix out(a.rows(), b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (!a(i, l)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(l, j)) out(i, j) = 1;
        }
    return out;
}

BoolMatrix boolean_or(const BoolMatrix& a, const BoolMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("boolean_or: shape mismatch");
    BoolMatrix out(a.rows(), a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = (a(i, j) || b(i, j)) ? 1 : 0;
    return out;
}

bool is_zero(const BoolMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j)) return false;
    return true;
}

IntMatrix to_integer(const BoolMatrix& m)
{
    IntMatrix out(m.rows(), m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

RawMatrix to_raw(const BoolMatrix& m)
{
    RawMatrix out(m.rows(), m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    IntMatrix out(a.rows(), b.cols(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Integer& lhs = a(i, l);
            if (lhs == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(l, j) != 0) out(i, j) += lhs * b(l, j);
        }
    return out;
}

} // namespace cobweb
