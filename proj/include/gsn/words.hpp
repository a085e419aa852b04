#ifndef GSN_WORDS_HPP
#define GSN_WORDS_HPP

#include <string>

#include "gsn/tree.hpp"

namespace gsn {

// Word grammar for the CLI and golden files:
//   tokens x, y, X (= x^{-1}), Y (= y^{-1}); grouping (...);
//   postfix ^-1 and ^k; comm(a,b) = a^{-1}b^{-1}ab; z(n) for the catalog
//   element z_n. Whitespace ignored.
// Throws std::invalid_argument with a position message on bad input.
ElemPtr parse_word(const std::string& text, const TreeParams& params);

}  // namespace gsn

#endif
