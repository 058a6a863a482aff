#include "tableaux/rsk.hpp"

#include <algorithm>

namespace tableaux {

TableauPair rsk(const Word& word) {
    TableauPair t;
    for (int pos = 0; pos < word.length(); ++pos) {
        int c = word.letters[pos];
        size_t r = 0;
        // bump down the rows until c lands at the end of one
        while (true) {
            if (r == t.p_rows.size()) {
                t.p_rows.emplace_back();
                t.q_rows.emplace_back();
            }
            auto& row = t.p_rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), c);
            if (it == row.end()) {
                row.push_back(c);
                t.q_rows[r].push_back(pos + 1);
                break;
            }
            std::swap(*it, c);
            ++r;
        }
    }
    std::vector<int> parts;
    parts.reserve(t.p_rows.size());
    for (auto& row : t.p_rows) parts.push_back(static_cast<int>(row.size()));
    t.shape = Partition(std::move(parts));
    return t;
}

Partition rsk_shape(const Word& word) {
    const int m = word.m;
    // counts[r][c-1] = multiplicity of letter c in row r of P
    std::vector<std::vector<int>> counts;
    std::vector<int> len;
    for (int c0 : word.letters) {
        int c = c0;
        size_t r = 0;
        while (true) {
            if (r == counts.size()) {
                counts.emplace_back(m, 0);
                len.push_back(0);
            }
            auto& row = counts[r];
            int bump = 0;  // smallest letter > c present in this row
            for (int d = c + 1; d <= m; ++d) {
                if (row[d - 1] > 0) {
                    bump = d;
                    break;
                }
            }
            if (bump == 0) {
                ++row[c - 1];
                ++len[r];
                break;
            }
            --row[bump - 1];
            ++row[c - 1];
            c = bump;
            ++r;
        }
    }
    return Partition(std::move(len));
}

int lis_length(const Word& word) {
    const int m = word.m;
    // Fenwick tree over letters, prefix maxima of "best subsequence ending
    // with letter <= c"
    std::vector<int> tree(m + 1, 0);
    auto prefix_max = [&](int i) {
        int r = 0;
        for (; i > 0; i -= i & -i) r = std::max(r, tree[i]);
        return r;
    };
    auto update = [&](int i, int v) {
        for (; i <= m; i += i & -i) tree[i] = std::max(tree[i], v);
    };
    int best = 0;
    for (int c : word.letters) {
        int v = prefix_max(c) + 1;
        update(c, v);
        best = std::max(best, v);
    }
    return best;
}

} // namespace tableaux
