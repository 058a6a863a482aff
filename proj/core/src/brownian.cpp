#include "tableaux/brownian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tableaux/errors.hpp"

namespace tableaux {

IncrementGrid sample_increment_grid(const AlphabetDistribution& dist, int n,
                                    Rng& rng) {
    if (n < 1) throw std::invalid_argument("grid resolution must be >= 1");
    const int m = dist.letters();
    IncrementGrid grid;
    grid.m = m;
    grid.n = n;
    grid.dist = dist;
    grid.inc.resize(static_cast<size_t>(m) * n);

    std::vector<double> sp(m);
    for (int i = 0; i < m; ++i) sp[i] = std::sqrt(dist.sorted_prob(i));
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));

    std::vector<double> g(m);
    for (int t = 0; t < n; ++t) {
        double w = 0.0;
        for (int i = 0; i < m; ++i) {
            g[i] = rng.gaussian();
            w += sp[i] * g[i];
        }
        for (int i = 0; i < m; ++i)
            grid.inc[static_cast<size_t>(i) * n + t] =
                (sp[i] * g[i] - dist.sorted_prob(i) * w) * inv_sqrt_n;
    }
    return grid;
}

namespace {

// States of the multi-front DP: q strictly increasing rows inside a block
// of d rows, with path p (1-based) restricted to rows p-1 .. p-1+(d-q).
std::vector<std::vector<int>> front_states(int d, int q) {
    std::vector<std::vector<int>> states;
    std::vector<int> cur(q);
    // iterate all strictly increasing q-subsets of {0..d-1}
    for (int i = 0; i < q; ++i) cur[i] = i;
    while (true) {
        bool ok = true;
        for (int p = 0; p < q; ++p)
            if (cur[p] < p || cur[p] > p + (d - q)) ok = false;
        if (ok) states.push_back(cur);
        int i = q - 1;
        while (i >= 0 && cur[i] == d - q + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < q; ++j) cur[j] = cur[j - 1] + 1;
    }
    return states;
}

struct BlockQuery {
    int row0;  // first grid row of the block
    int d;     // block size
    int q;     // paths through the block
    double full_rows;  // sum of the rows above the block
};

BlockQuery resolve(const IncrementGrid& grid, int l) {
    if (l < 1 || l > grid.m)
        throw std::invalid_argument("path count l out of range");
    const AlphabetDistribution& a = grid.dist;
    int k = a.block_of_sorted(l - 1);
    BlockQuery bq;
    bq.row0 = a.offsets[k];
    bq.d = a.mults[k];
    bq.q = l - a.offsets[k];
    bq.full_rows = 0.0;
    for (int r = 0; r < bq.row0; ++r)
        for (int t = 0; t < grid.n; ++t) bq.full_rows += grid.at(r, t);
    return bq;
}

} // namespace

double lhat(const IncrementGrid& grid, int l) {
    BlockQuery bq = resolve(grid, l);
    if (bq.q == bq.d) {
        // all rows of the block fully covered
        double s = bq.full_rows;
        for (int r = 0; r < bq.d; ++r)
            for (int t = 0; t < grid.n; ++t) s += grid.at(bq.row0 + r, t);
        return s;
    }

    auto states = front_states(bq.d, bq.q);
    const int ns = static_cast<int>(states.size());

    // precompute admissible predecessors (componentwise <=)
    std::vector<std::vector<int>> preds(ns);
    for (int s = 0; s < ns; ++s)
        for (int s2 = 0; s2 < ns; ++s2) {
            bool le = true;
            for (int p = 0; p < bq.q && le; ++p)
                le = states[s2][p] <= states[s][p];
            if (le) preds[s].push_back(s2);
        }

    const double neg = -std::numeric_limits<double>::infinity();
    std::vector<double> v(ns, 0.0), nv(ns, neg);
    for (int t = 0; t < grid.n; ++t) {
        for (int s = 0; s < ns; ++s) {
            double best = neg;
            for (int s2 : preds[s]) best = std::max(best, v[s2]);
            double reward = 0.0;
            for (int p = 0; p < bq.q; ++p)
                reward += grid.at(bq.row0 + states[s][p], t);
            nv[s] = best + reward;
        }
        std::swap(v, nv);
    }
    return bq.full_rows + *std::max_element(v.begin(), v.end());
}

double lhat_bruteforce(const IncrementGrid& grid, int l) {
    BlockQuery bq = resolve(grid, l);
    const int d = bq.d, q = bq.q, n = grid.n;
    const int nj = d - q;  // interior breakpoints per path
    if (nj == 0) return lhat(grid, l);

    double count = std::pow(static_cast<double>(n + 1),
                            static_cast<double>(q) * nj);
    if (count > 1e6)
        throw BruteForceTooLarge("subdivision count exceeds 1e6");

    // row prefix sums: pre[r][t] = sum of columns < t
    std::vector<std::vector<double>> pre(d, std::vector<double>(n + 1, 0.0));
    for (int r = 0; r < d; ++r)
        for (int t = 0; t < n; ++t)
            pre[r][t + 1] = pre[r][t] + grid.at(bq.row0 + r, t);

    // t[p][j], p = 0..q-1, j = 0..nj+1 with t[p][0] = 0, t[p][nj+1] = n
    std::vector<std::vector<int>> tt(q, std::vector<int>(nj + 2, 0));
    for (int p = 0; p < q; ++p) tt[p][nj + 1] = n;

    double best = -std::numeric_limits<double>::infinity();
    auto value = [&]() {
        double s = 0.0;
        for (int p = 0; p < q; ++p)
            for (int j = 0; j <= nj; ++j)
                s += pre[p + j][tt[p][j + 1]] - pre[p + j][tt[p][j]];
        return s;
    };
    // odometer over the q*nj free entries
    int total = q * nj;
    std::vector<int> flat(total, 0);
    while (true) {
        for (int idx = 0; idx < total; ++idx)
            tt[idx / nj][idx % nj + 1] = flat[idx];
        bool ok = true;
        for (int p = 0; p < q && ok; ++p)
            for (int j = 1; j <= nj && ok; ++j)
                ok = tt[p][j] <= tt[p][j + 1];
        for (int p = 0; p + 1 < q && ok; ++p)
            for (int j = 1; j <= nj && ok; ++j)
                ok = tt[p + 1][j] <= tt[p][j];
        if (ok) best = std::max(best, value());
        int i = 0;
        while (i < total && flat[i] == n) flat[i++] = 0;
        if (i == total) break;
        ++flat[i];
    }
    return bq.full_rows + best;
}

std::vector<double> lhat_shape_sample(const AlphabetDistribution& dist, int n,
                                      Rng& rng) {
    IncrementGrid grid = sample_increment_grid(dist, n, rng);
    std::vector<double> out(dist.letters());
    double prev = 0.0;
    for (int l = 1; l <= dist.letters(); ++l) {
        double cur = lhat(grid, l);
        out[l - 1] = cur - prev;
        prev = cur;
    }
    return out;
}

} // namespace tableaux
