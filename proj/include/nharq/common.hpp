#ifndef NHARQ_COMMON_HPP
#define NHARQ_COMMON_HPP

#include <stdexcept>
#include <string>

#define NHARQ_VERSION "0.1.0"

namespace nharq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define NHARQ_DEFINE_ERROR(Name)                      \
    struct Name : Error {                             \
        explicit Name(const std::string& msg)         \
            : Error(std::string(#Name) + ": " + msg) {} \
    }

NHARQ_DEFINE_ERROR(EmptySegments);
NHARQ_DEFINE_ERROR(InvalidCode);
NHARQ_DEFINE_ERROR(InvalidInterval);
NHARQ_DEFINE_ERROR(NoConvergence);
NHARQ_DEFINE_ERROR(InfeasibleBlockDuration);
NHARQ_DEFINE_ERROR(InvalidConfig);
NHARQ_DEFINE_ERROR(NegativeProbability);
NHARQ_DEFINE_ERROR(SingularChain);
NHARQ_DEFINE_ERROR(SupportExplosion);
NHARQ_DEFINE_ERROR(ConfigMismatch);
NHARQ_DEFINE_ERROR(ShapeMismatch);
NHARQ_DEFINE_ERROR(ParseError);
NHARQ_DEFINE_ERROR(EvaluatorFailure);

#undef NHARQ_DEFINE_ERROR

}  // namespace nharq

#endif
