#pragma once

#include <string>

#include "zscheme/polynomial.hpp"

namespace zscheme {

/// Recursive-descent parser for the expression grammar documented in the
/// README:
///
///   expr     := sign? term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | ident | '(' expr ')'
///   rational := int ('/' uint)?
///
/// Implicit multiplication is a syntax error. Unknown identifiers raise
/// UNKNOWN_VARIABLE; malformed input raises SYNTAX_ERROR, both carrying the
/// byte offset of the offending token.
PolyQ parse_polynomial(const std::string& text, const RingPtr& ring);

} // namespace zscheme
