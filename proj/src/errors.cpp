#include "cbn/errors.hpp"

namespace cbn {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::ConstantUpdate: return "constant-update";
    case ParseErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ParseErrorKind::DuplicateDefinition: return "duplicate-definition";
    case ParseErrorKind::MissingDefinition: return "missing-definition";
    case ParseErrorKind::MixedOperators: return "mixed-operators";
    case ParseErrorKind::Empty: return "empty";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      kind_(kind),
      line_(line) {}

} // namespace cbn
