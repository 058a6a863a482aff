#include "tableaux/schur.hpp"

namespace tableaux {

BigInt syt_count(const Partition& shape, int m, int n) {
    if (shape.rows() > m)
        throw ShapeTooLong("shape has more parts than the allowed maximum");
    if (shape.size() != n)
        throw ShapeTooLong("shape size does not match n");
    std::vector<long> h(m);
    for (int i = 0; i < m; ++i) h[i] = shape.part(i) + m - (i + 1);
    BigInt num = factorial_big(n);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) num *= (h[i] - h[j]);
    BigInt den = 1;
    for (int i = 0; i < m; ++i) den *= factorial_big(h[i]);
    return num / den;
}

} // namespace tableaux
