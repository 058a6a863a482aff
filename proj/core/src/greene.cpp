#include "tableaux/greene.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "tableaux/errors.hpp"

namespace tableaux {

namespace {

/// All size-q subsets of {0..m-1}, each sorted ascending.
std::vector<std::vector<int>> row_subsets(int m, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == q) {
            out.push_back(cur);
            return;
        }
        for (int r = next; r < m; ++r) {
            cur.push_back(r);
            self(self, r + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// prev -> cur allowed when every front moves weakly up.
bool monotone_step(const std::vector<int>& prev, const std::vector<int>& cur) {
    for (size_t p = 0; p < prev.size(); ++p)
        if (prev[p] > cur[p]) return false;
    return true;
}

} // namespace

long long greene_sums(const Word& word, int l) {
    const int m = word.m;
    const int n = word.length();
    if (l < 1 || l > m)
        throw InstanceTooLarge("path count l must satisfy 1 <= l <= m");
    if (m > 6 || n > 200)
        throw InstanceTooLarge("greene_sums DP guarded to m <= 6, N <= 200");
    if (l == m) return n;  // m horizontal rows cover every entry

    auto states = row_subsets(m, l);
    const int S = static_cast<int>(states.size());
    std::vector<std::vector<int>> preds(S);
    for (int s = 0; s < S; ++s)
        for (int s2 = 0; s2 < S; ++s2)
            if (monotone_step(states[s2], states[s])) preds[s].push_back(s2);

    std::vector<long long> v(S, 0), nv(S);
    for (int col = 0; col < n; ++col) {
        const int letter_row = word.letters[col] - 1;
        for (int s = 0; s < S; ++s) {
            long long best = -1;
            for (int s2 : preds[s]) best = std::max(best, v[s2]);
            const bool covered = std::binary_search(
                states[s].begin(), states[s].end(), letter_row);
            nv[s] = best + (covered ? 1 : 0);
        }
        std::swap(v, nv);
    }
    return *std::max_element(v.begin(), v.end());
}

long long greene_sums_bruteforce(const Word& word, int l) {
    const int m = word.m;
    const int n = word.length();
    if (l < 1 || l > m)
        throw InstanceTooLarge("path count l must satisfy 1 <= l <= m");
    if (m * n > 64)
        throw InstanceTooLarge("brute-force path enumeration needs m*N <= 64");
    if (l == m) return n;  // m horizontal rows cover every entry

    // every weakly increasing subsequence, as a bitmask over positions
    std::vector<std::uint64_t> paths;
    auto extend = [&](auto&& self, int from, int last,
                      std::uint64_t mask) -> void {
        if (paths.size() > 4000000)
            throw InstanceTooLarge(
                "brute-force subsequence enumeration exceeded 4e6 entries");
        if (mask != 0) paths.push_back(mask);
        for (int col = from; col < n; ++col)
            if (word.letters[col] >= last)
                self(self, col + 1, word.letters[col],
                     mask | (std::uint64_t{1} << col));
    };
    extend(extend, 0, 1, 0);

    std::vector<int> value(paths.size());
    for (size_t i = 0; i < paths.size(); ++i)
        value[i] = std::popcount(paths[i]);
    const int max_single =
        paths.empty() ? 0 : *std::max_element(value.begin(), value.end());

    long long best = 0;
    auto pick = [&](auto&& self, size_t from, int left, std::uint64_t used,
                    long long acc) -> void {
        if (left == 0) {
            best = std::max(best, acc);
            return;
        }
        if (acc + static_cast<long long>(left) * max_single <= best) return;
        best = std::max(best, acc);  // remaining paths may cover nothing new
        for (size_t i = from; i < paths.size(); ++i) {
            if (paths[i] & used) continue;
            self(self, i + 1, left - 1, used | paths[i], acc + value[i]);
        }
    };
    pick(pick, 0, l, 0, 0);
    return best;
}

} // namespace tableaux
