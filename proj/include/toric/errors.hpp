#ifndef TORIC_ERRORS_HPP
#define TORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Shapes or lengths do not agree.
class DimensionError : public Error
{
public:
    using Error::Error;
};

/// Value outside the domain of an operation (zero vector, bad weights, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Unknown vertex, facet or face.
class LookupError : public Error
{
public:
    using Error::Error;
};

/// Vertex labels collide.
class NamingError : public Error
{
public:
    using Error::Error;
};

/// Generators are linearly dependent.
class RankError : public Error
{
public:
    using Error::Error;
};

/// Input violates a structural requirement (antichain, simplicity, ...).
class ValidityError : public Error
{
public:
    using Error::Error;
};

/// Caller-side precondition does not hold.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// An operation produced an invalid intermediate object.
class StructuralError : public Error
{
public:
    using Error::Error;
};

/// The hypotheses an operation needs are not certified.
class HypothesisError : public Error
{
public:
    using Error::Error;
};

}   // namespace toric

#endif
