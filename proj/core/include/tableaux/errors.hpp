#ifndef TABLEAUX_ERRORS_HPP
#define TABLEAUX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tableaux {

struct NonPositiveProbability : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SumNotOne : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InstanceTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeTooLong : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateSeparation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TailNotNegligible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BlockMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySample : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BruteForceTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace tableaux

#endif
