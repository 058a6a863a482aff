#ifndef TABLEAUX_PARTITION_HPP
#define TABLEAUX_PARTITION_HPP

#include <numeric>
#include <vector>

namespace tableaux {

/// Weakly decreasing nonnegative integer vector; trailing zeros allowed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    int rows() const {
        int r = static_cast<int>(parts.size());
        while (r > 0 && parts[r - 1] == 0) --r;
        return r;
    }

    /// Part i (0-based), zero beyond the stored length.
    int part(int i) const {
        return i < static_cast<int>(parts.size()) ? parts[i] : 0;
    }

    bool valid() const {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) return false;
            if (i > 0 && parts[i] > parts[i - 1]) return false;
        }
        return true;
    }

    /// Canonical form without trailing zeros; used as map key.
    std::vector<int> trimmed() const {
        std::vector<int> t(parts.begin(), parts.begin() + rows());
        return t;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.trimmed() == b.trimmed();
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.trimmed() < b.trimmed();
    }
};

/// All partitions of n into at most max_parts parts, in lexicographically
/// decreasing order of the part vector.
inline std::vector<Partition> partitions_of(int n, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp, int slots) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (slots == 0) return;
        int hi = std::min(rem, maxp);
        int lo = (rem + slots - 1) / slots;  // need rem <= part * slots
        for (int p = hi; p >= lo; --p) {
            cur.push_back(p);
            self(self, rem - p, p, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, n, max_parts);
    return out;
}

} // namespace tableaux

#endif
