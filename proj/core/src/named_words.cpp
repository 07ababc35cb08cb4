#include "iterid/named_words.hpp"

#include <stdexcept>
#include <string>

#include "iterid/word_parser.hpp"

namespace iterid {

namespace {

std::int64_t param(const WordParams& params, const std::string& key, std::int64_t fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown(std::string_view name, const WordParams& params,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw std::invalid_argument("word '" + std::string(name) + "' has no parameter '" + key + "'");
  }
}

Word x(int i) { return Word::generator(i); }

}  // namespace

Word named_word(std::string_view name, const WordParams& params) {
  if (name == "w0") {
    reject_unknown(name, params, {});
    return parse_word("[x1,x2]");
  }
  if (name == "w_BW") {
    reject_unknown(name, params, {});
    return parse_word("[x2,x1,x1,x3]^x4");
  }
  if (name == "w_BWW") {
    reject_unknown(name, params, {});
    return parse_word("[(x1^-1)^x2, x1]");
  }
  if (name == "w_BGGKPP") {
    reject_unknown(name, params, {});
    return parse_word("[x2 x1^-1 x2^-1, x3 x1^-1 x3^-1]");
  }
  if (name == "wbar") {
    reject_unknown(name, params, {});
    return parse_word("[x1,[x2,x3]]");
  }
  if (name == "ribnere") {
    reject_unknown(name, params, {"f", "g"});
    const std::int64_t f = param(params, "f", 2);
    const std::int64_t g = param(params, "g", 3);
    if (f < 2 || g < 2 || f == g || f > 64 || g > 64) {
      throw std::invalid_argument("ribnere needs distinct variable indices f, g in 2..64");
    }
    return commutator(conjugate(x(1), x(static_cast<int>(f))), conjugate(x(1), x(static_cast<int>(g))));
  }
  if (name == "adyan") {
    reject_unknown(name, params, {"r", "n"});
    const std::int64_t r = param(params, "r", 1);
    const std::int64_t n = param(params, "n", 1);
    if (r < 1 || n < 1 || r > 1'000'000 || n > 1'000'000) {
      throw std::invalid_argument("adyan needs 1 <= r, n <= 10^6");
    }
    const std::int64_t rn = r * n;
    const Syllable raw[] = {{1, rn}, {2, rn}, {1, -rn}, {2, -rn}};
    return power(Word::from_syllables(raw), n);
  }
  if (name == "engel") {
    reject_unknown(name, params, {"k"});
    const std::int64_t k = param(params, "k", 1);
    if (k < 1 || k > 30) throw std::invalid_argument("engel needs 1 <= k <= 30");
    Word w = x(1);
    for (std::int64_t i = 0; i < k; ++i) w = commutator(w, x(2));
    return w;
  }
  throw std::invalid_argument("unknown named word '" + std::string(name) + "'");
}

std::vector<std::string> named_word_names() {
  return {"adyan", "engel", "ribnere", "w0", "wbar", "w_BGGKPP", "w_BW", "w_BWW"};
}

}  // namespace iterid
