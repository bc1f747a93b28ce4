#pragma once

#include <stdexcept>
#include <string>

namespace gcalpha {

// Base class for all domain errors. `code()` is a stable machine-readable
// identifier used by the CLI's error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class MalformedCartanData : public Error {
public:
    explicit MalformedCartanData(const std::string& m) : Error("MalformedCartanData", m) {}
};
class RankOverflow : public Error {
public:
    explicit RankOverflow(const std::string& m) : Error("RankOverflow", m) {}
};
class GroupTooLarge : public Error {
public:
    explicit GroupTooLarge(const std::string& m) : Error("GroupTooLarge", m) {}
};
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& m) : Error("DimensionMismatch", m) {}
};
class DegeneratePolytope : public Error {
public:
    explicit DegeneratePolytope(const std::string& m) : Error("DegeneratePolytope", m) {}
};
class EmptyQ : public Error {
public:
    explicit EmptyQ(const std::string& m) : Error("EmptyQ", m) {}
};
class EmptyErosion : public Error {
public:
    explicit EmptyErosion(const std::string& m) : Error("EmptyErosion", m) {}
};
class NotSemisimple : public Error {
public:
    explicit NotSemisimple(const std::string& m) : Error("NotSemisimple", m) {}
};
class NotFano : public Error {
public:
    explicit NotFano(const std::string& m) : Error("NotFano", m) {}
};
class NewtonBodyOutOfRange : public Error {
public:
    explicit NewtonBodyOutOfRange(const std::string& m) : Error("NewtonBodyOutOfRange", m) {}
};
class NotWInvariant : public Error {
public:
    explicit NotWInvariant(const std::string& m) : Error("NotWInvariant", m) {}
};
class OutsideChamber : public Error {
public:
    explicit OutsideChamber(const std::string& m) : Error("OutsideChamber", m) {}
};
class SymmetryViolation : public Error {
public:
    explicit SymmetryViolation(const std::string& m) : Error("SymmetryViolation", m) {}
};
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& m) : Error("ValidationError", m) {}
};
// Raised when two code paths that must agree exactly do not. Always a bug.
class InternalConsistencyError : public Error {
public:
    explicit InternalConsistencyError(const std::string& m)
        : Error("InternalConsistencyError", m) {}
};

} // namespace gcalpha
