#ifndef MDET_ERRORS_HPP
#define MDET_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mdet {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A ground-set element realized by a zero column.
struct LoopError : Error {
    std::vector<int> loops;
    explicit LoopError(std::vector<int> which);
};

struct GroundSetTooLarge : Error {
    explicit GroundSetTooLarge(const std::string& msg) : Error(msg) {}
};

struct GaleMismatch : Error {
    explicit GaleMismatch(const std::string& msg) : Error(msg) {}
};

// A sample point landed on the hyperplane arrangement (some linear form vanished).
struct OnArrangement : Error {
    explicit OnArrangement(const std::string& msg) : Error(msg) {}
};

struct DisconnectedError : Error {
    explicit DisconnectedError(const std::string& msg) : Error(msg) {}
};

struct NonIntegralWeight : Error {
    explicit NonIntegralWeight(const std::string& msg) : Error(msg) {}
};

struct MissingData : Error {
    explicit MissingData(const std::string& msg) : Error(msg) {}
};

struct HomogeneityError : Error {
    explicit HomogeneityError(const std::string& msg) : Error(msg) {}
};

struct ParameterDegenerate : Error {
    explicit ParameterDegenerate(const std::string& msg) : Error(msg) {}
};

struct DegenerateRecurrence : Error {
    explicit DegenerateRecurrence(const std::string& msg) : Error(msg) {}
};

struct AnnihilationFailure : Error {
    explicit AnnihilationFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace mdet

#endif
