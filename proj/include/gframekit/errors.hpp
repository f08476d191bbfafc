#pragma once

#include <stdexcept>
#include <string>

namespace gframekit {

/// Base class for all gframekit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string& what) : Error(what) {}
};

class NotAFrame : public Error {
public:
    explicit NotAFrame(const std::string& what) : Error(what) {}
};

class NotARepresentation : public Error {
public:
    explicit NotARepresentation(const std::string& what) : Error(what) {}
};

class NotRieszBasis : public Error {
public:
    explicit NotRieszBasis(const std::string& what) : Error(what) {}
};

class NotDualPair : public Error {
public:
    explicit NotDualPair(const std::string& what) : Error(what) {}
};

class LocalPairNotDual : public Error {
public:
    explicit LocalPairNotDual(const std::string& what) : Error(what) {}
};

class NotUnitary : public Error {
public:
    explicit NotUnitary(const std::string& what) : Error(what) {}
};

class UnknownIndex : public Error {
public:
    explicit UnknownIndex(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class SingularSplitting : public Error {
public:
    explicit SingularSplitting(const std::string& what) : Error(what) {}
};

class SingularOperator : public Error {
public:
    explicit SingularOperator(const std::string& what) : Error(what) {}
};

class InvalidGrouping : public Error {
public:
    explicit InvalidGrouping(const std::string& what) : Error(what) {}
};

class InvalidLattice : public Error {
public:
    explicit InvalidLattice(const std::string& what) : Error(what) {}
};

class InfeasibleSpec : public Error {
public:
    explicit InfeasibleSpec(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

} // namespace gframekit
