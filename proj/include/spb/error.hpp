#pragma once

#include <stdexcept>
#include <string>

namespace spb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured desk-scale bound.
class BoundExceeded : public Error
{
public:
  using Error::Error;
};

/// Operands belong to different groups, sets or sizes.
class Mismatch : public Error
{
public:
  using Error::Error;
};

/// A precondition on the value of an argument does not hold
/// (not a basis, not an automorphism, wrong bundle mode, ...).
class DomainError : public Error
{
public:
  using Error::Error;
};

/// Division requested on a G-set whose action is not free.
class NotFree : public Error
{
public:
  using Error::Error;
};

/// Division requested between points of different orbits.
class NoQuotient : public Error
{
public:
  using Error::Error;
};

/// An equivariant map does not induce a bijection of orbit sets,
/// so it does not lift to frames.
class OrbitObstruction : public Error
{
public:
  using Error::Error;
};

/// Symmetric-group labelling needs at least three points.
class TooSmall : public Error
{
public:
  using Error::Error;
};

/// A symmetric-group action is not faithful.
class NotFaithful : public Error
{
public:
  using Error::Error;
};

/// A structured input document does not match its schema.
class SchemaError : public Error
{
public:
  using Error::Error;
};

} // namespace spb
