#ifndef PSEUDOCTX_ERROR_HPP
#define PSEUDOCTX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pseudoctx
{

/// Malformed textual input. Carries the 1-based position of the offending token.
class parse_error : public std::runtime_error
{
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Structurally invalid hypergraph or labeling.
class validation_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called with arguments outside its contract.
class precondition_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace pseudoctx

#endif // PSEUDOCTX_ERROR_HPP
