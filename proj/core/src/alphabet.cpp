#include "tableaux/alphabet.hpp"

namespace tableaux {

AlphabetDistribution build_block_structure(std::vector<double> probs) {
    if (probs.empty())
        throw NonPositiveProbability("alphabet must be nonempty");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p > 0.0))
            throw NonPositiveProbability("letter probability must be > 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw SumNotOne("letter probabilities must sum to 1 within 1e-9");
    for (double& p : probs) p /= sum;
    return detail::build_sorted_blocks(std::move(probs));
}

ExactAlphabet build_block_structure(std::vector<Rational> probs) {
    if (probs.empty())
        throw NonPositiveProbability("alphabet must be nonempty");
    Rational sum = 0;
    for (const Rational& p : probs) {
        if (!(p > 0))
            throw NonPositiveProbability("letter probability must be > 0");
        sum += p;
    }
    if (sum != 1)
        throw SumNotOne("exact letter probabilities must sum to exactly 1");
    return detail::build_sorted_blocks(std::move(probs));
}

AlphabetDistribution to_double(const ExactAlphabet& a) {
    AlphabetDistribution d;
    d.tau = a.tau;
    d.mults = a.mults;
    d.offsets = a.offsets;
    d.probs.reserve(a.probs.size());
    for (const Rational& p : a.probs)
        d.probs.push_back(p.convert_to<double>());
    d.distinct.reserve(a.distinct.size());
    for (const Rational& p : a.distinct)
        d.distinct.push_back(p.convert_to<double>());
    return d;
}

} // namespace tableaux
