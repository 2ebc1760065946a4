#pragma once

#include <stdexcept>
#include <string>

namespace pointlike {

/// Base for every domain failure raised by the library. The CLI maps these
/// to exit code 3.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A boundary condition that does not conserve the probability current.
class NotSymplectic : public DomainError {
public:
    NotSymplectic(double residual, int row, int col);

    double residual() const noexcept { return residual_; }
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    double residual_;
    int row_;
    int col_;
};

class InvalidParameter : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidMu : public DomainError {
public:
    using DomainError::DomainError;
};

/// The plane-wave matching system has no unique solution at this k.
class SingularMatching : public DomainError {
public:
    using DomainError::DomainError;
};

class ResolutionError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnclassifiedMatrix : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace pointlike
