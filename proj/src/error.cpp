#include "qbank/error.hpp"

namespace qbank {

CapacityError::CapacityError(std::size_t requested, std::size_t available)
  : Error("requested " + std::to_string(requested) + " questions but the pool supports at most "
          + std::to_string(available) + " distinct questions"),
    m_requested(requested),
    m_available(available)
{
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
  : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
    m_line(line),
    m_column(column)
{
}

IoError::IoError(const std::string& path, const std::string& what)
  : Error(path + ": " + what),
    m_path(path)
{
}

} // namespace qbank
