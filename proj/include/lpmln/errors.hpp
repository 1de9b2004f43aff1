#pragma once

#include <stdexcept>
#include <string>

namespace lpmln {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class UnknownAtomError : public std::runtime_error {
public:
    explicit UnknownAtomError(const std::string& name)
        : std::runtime_error("atom '" + name + "' is not in the signature") {}
};

// The probability distribution is undefined when a program has no soft
// stable models (the normalization constant would be zero).
class EmptyModelSetError : public std::runtime_error {
public:
    EmptyModelSetError() : std::runtime_error("program has no soft stable models") {}
};

class NonIntegerWeightError : public std::runtime_error {
public:
    explicit NonIntegerWeightError(const std::string& weight)
        : std::runtime_error("ASP emission requires integer weights, got " + weight) {}
};

class PrimedNameCollisionError : public std::runtime_error {
public:
    explicit PrimedNameCollisionError(const std::string& name)
        : std::runtime_error("doubled atom name '" + name +
                             "' collides with an existing atom") {}
};

}  // namespace lpmln
