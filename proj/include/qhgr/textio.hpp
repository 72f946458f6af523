#pragma once

#include "qhgr/nilcox.hpp"
#include "qhgr/quantum.hpp"

#include <string>

namespace qhgr {

// Comma-separated integers; empty input gives an empty list.
std::vector<i64> parse_int_list(const std::string& text, const char* what);

// Comma-separated parts; "0", "empty", and "" all mean the empty shape.
Partition parse_shape(const std::string& text);
std::string shape_to_text(const Partition& shape);  // "2,1", empty -> "0"

// Comma-separated letters in [0, n).
Word parse_word(i64 n, const std::string& text);
std::string word_to_text(const Word& word);

std::string window_to_text(const AffinePermutation& w);

// "q^2*s[2,1] + 3*s[1]"; coefficient omitted when 1, "q" when the degree is
// 1, bare degree power when the shape is empty; zero prints "0".
std::string qclass_to_text(const QClass& x);

// JSON list of {shape, qdeg, coeff} in term order; the parser reattaches the
// box parameters and re-validates every shape.
std::string qclass_to_json(const QClass& x);
QClass qclass_from_json(i64 m, i64 n, const std::string& text);

// Recursive expansion with correction-free leading rows shown as h-factors
// and the first corrected level expanded, e.g. "h4*h3*(h1^2 - h2)".
std::string kschur_factored(i64 n, const Partition& lam);

}  // namespace qhgr
