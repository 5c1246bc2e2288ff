#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdalg {

enum class Errc {
  MixedFields,
  DivisionByZero,
  ParseError,
  BadField,
  NotSquare,
  DimensionMismatch,
  IndexOutOfRange,
  DuplicateTriple,
  BadBasisName,
  MixedAlgebras,
  UnknownBuiltin,
  EmptyExpression,
  Singular,
  NotRepresentable,
  NonassociativeUnsupported,
  NoUnit,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::BadField: return "BadField";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateTriple: return "DuplicateTriple";
    case Errc::BadBasisName: return "BadBasisName";
    case Errc::MixedAlgebras: return "MixedAlgebras";
    case Errc::UnknownBuiltin: return "UnknownBuiltin";
    case Errc::EmptyExpression: return "EmptyExpression";
    case Errc::Singular: return "Singular";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::NonassociativeUnsupported: return "NonassociativeUnsupported";
    case Errc::NoUnit: return "NoUnit";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Text input failure; line and column are 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0)
      : Error(Errc::ParseError, format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fdalg
