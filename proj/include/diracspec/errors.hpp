#pragma once

#include <stdexcept>
#include <string>

namespace diracspec {

// Base class of every error raised by the library. The CLI maps these to
// exit status 1.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Weight vectors of different ambient rank were combined.
class DimensionError : public Error
{
public:
  using Error::Error;
};

// A root argument was zero or otherwise unusable as a reflection root.
class InvalidRootError : public Error
{
public:
  using Error::Error;
};

// Root system construction failed (bad rank, non finite type Cartan matrix).
class ConstructionError : public Error
{
public:
  using Error::Error;
};

// An operation was called outside its mathematical domain.
class DomainError : public Error
{
public:
  using Error::Error;
};

// An enumeration exceeded its configured size guard.
class ResourceError : public Error
{
public:
  using Error::Error;
};

// A space descriptor was malformed.
class DescriptorError : public Error
{
public:
  using Error::Error;
};

class ClassificationError : public Error
{
public:
  using Error::Error;
};

// Catalog entry data contradicts a recomputed invariant.
class ValidationError : public Error
{
public:
  using Error::Error;
};

// A computed quantity violated an identity that must hold unconditionally.
class InternalError : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  ParseError(int line, const std::string &what)
  : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
    line_(line)
  {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

} // namespace diracspec
