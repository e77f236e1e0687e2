#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbank {

// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// An argument or a piece of content violates a documented precondition.
class ValidationError : public Error
{
public:
  using Error::Error;
};

// More questions were requested than the pool can produce.
class CapacityError : public Error
{
public:
  CapacityError(std::size_t requested, std::size_t available);

  std::size_t requested() const noexcept { return m_requested; }
  std::size_t available() const noexcept { return m_available; }

private:
  std::size_t m_requested;
  std::size_t m_available;
};

// Not enough valid items to draw from.
class SamplingError : public Error
{
public:
  using Error::Error;
};

// Malformed or truncated XML input.
class ParseError : public Error
{
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return m_line; }
  std::size_t column() const noexcept { return m_column; }

private:
  std::size_t m_line;
  std::size_t m_column;
};

// Content that cannot be represented in an XML 1.0 document.
class EncodeError : public Error
{
public:
  using Error::Error;
};

// File system failure. The message always names the path.
class IoError : public Error
{
public:
  IoError(const std::string& path, const std::string& what);

  const std::string& path() const noexcept { return m_path; }

private:
  std::string m_path;
};

// Mutation attempted on a closed bank.
class StateError : public Error
{
public:
  using Error::Error;
};

} // namespace qbank
