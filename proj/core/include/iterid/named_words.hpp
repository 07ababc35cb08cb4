#ifndef ITERID_NAMED_WORDS_HPP
#define ITERID_NAMED_WORDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "iterid/word.hpp"

namespace iterid {

using WordParams = std::map<std::string, std::int64_t>;

/// Catalog of named words:
///
///   w0          [x1,x2]
///   w_BW        [x2,x1,x1,x3]^x4
///   w_BWW       [(x1^-1)^x2, x1]
///   w_BGGKPP    [x2 x1^-1 x2^-1, x3 x1^-1 x3^-1]
///   ribnere     [x1^(x_f), x1^(x_g)]           params f, g (default 2, 3)
///   adyan       (x1^(rn) x2^(rn) x1^-(rn) x2^-(rn))^n   params r, n
///   engel       [x1, x2, ..., x2] with k copies of x2    param k
///   wbar        [x1,[x2,x3]]
///
/// Throws std::invalid_argument for unknown names, unknown parameter keys or
/// out-of-range values.
Word named_word(std::string_view name, const WordParams& params = {});

std::vector<std::string> named_word_names();

}  // namespace iterid

#endif  // ITERID_NAMED_WORDS_HPP
