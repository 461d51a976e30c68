#pragma once

#include <stdexcept>
#include <string>

namespace bisetkit {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// malformed input text (group specs, expressions, character specs)
class ParseError : public Error
{
public:
  using Error::Error;
};

// a size bound was exceeded
class ResourceError : public Error
{
public:
  using Error::Error;
};

// precondition on mathematical input violated (non-normal subgroup, p'-condition, ...)
class DomainError : public Error
{
public:
  using Error::Error;
};

// an internal cross-check failed
class ConsistencyError : public Error
{
public:
  using Error::Error;
};

} // namespace bisetkit
