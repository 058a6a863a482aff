#ifndef TABLEAUX_WORD_HPP
#define TABLEAUX_WORD_HPP

#include <string>
#include <vector>

#include "tableaux/alphabet.hpp"
#include "tableaux/rng.hpp"

namespace tableaux {

/// A word over the alphabet {1..m}; letters stored 1-based.
struct Word {
    std::vector<int> letters;
    int m = 0;

    int length() const { return static_cast<int>(letters.size()); }

    bool valid() const {
        for (int c : letters)
            if (c < 1 || c > m) return false;
        return true;
    }
};

/// Iid letters with P(letter = j) = probs[j-1]; deterministic given the rng.
inline Word sample_word(const AlphabetDistribution& dist, int n, Rng& rng) {
    Word w;
    w.m = dist.letters();
    w.letters.reserve(n);
    // inverse-cdf on the cumulative original-order probabilities
    std::vector<double> cum(dist.probs.size());
    double acc = 0.0;
    for (size_t j = 0; j < dist.probs.size(); ++j) {
        acc += dist.probs[j];
        cum[j] = acc;
    }
    cum.back() = 1.0;
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform();
        int j = static_cast<int>(
            std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
        w.letters.push_back(j + 1);
    }
    return w;
}

/// Comma-separated serialization, e.g. "2,1,2,2".
inline std::string to_csv(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.letters[i]);
    }
    return s;
}

inline Word word_from_csv(const std::string& s, int m) {
    Word w;
    w.m = m;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        w.letters.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return w;
}

} // namespace tableaux

#endif
