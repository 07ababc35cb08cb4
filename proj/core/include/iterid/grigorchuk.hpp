#ifndef ITERID_GRIGORCHUK_HPP
#define ITERID_GRIGORCHUK_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iterid {

/// Reduces a word over {a,b,c,d} using a^2 = b^2 = c^2 = d^2 = e and
/// bc = cb = d, bd = db = c, cd = dc = b. The result alternates between a and
/// single letters of {b,c,d}. Throws std::invalid_argument on other letters.
std::string grigorchuk_reduce(std::string_view word);

/// Word problem via the wreath recursion a = swap, b = (a,c), c = (a,d),
/// d = (e,b). Sections of reduced words of length >= 2 are strictly shorter,
/// so the recursion terminates.
bool grigorchuk_is_trivial(std::string_view word);

/// The permutation induced on the 2^level vertices of the given tree level;
/// vertex v is read as a bit string with the top-level bit first. Images
/// follow the right-action convention of word products.
std::vector<std::uint32_t> grigorchuk_level_action(std::string_view word, int level);

}  // namespace iterid

#endif  // ITERID_GRIGORCHUK_HPP
