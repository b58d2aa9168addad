#include "modserre/errors.hpp"

namespace modserre {

namespace {

std::string located(const std::string& message, int line, int column)
{
    if (line <= 0) {
        return message;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

} // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(located(message, line, column)), bare_(message), line_(line), column_(column)
{
}

} // namespace modserre
