#include "iterid/grigorchuk.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "backends.hpp"
#include "checked.hpp"
#include "literal.hpp"

namespace iterid {

namespace {

// b, c, d as the nonzero elements of the Klein four-group.
int klein(char c) { return c == 'b' ? 1 : c == 'c' ? 2 : c == 'd' ? 3 : 0; }
constexpr char kKleinLetter[] = {'e', 'b', 'c', 'd'};

bool is_klein(char c) { return c == 'b' || c == 'c' || c == 'd'; }

// Sections at vertex 0 and 1: b = (a,c), c = (a,d), d = (e,b).
char section(char letter, int vertex) {
  switch (letter) {
    case 'b':
      return vertex == 0 ? 'a' : 'c';
    case 'c':
      return vertex == 0 ? 'a' : 'd';
    case 'd':
      return vertex == 0 ? 'e' : 'b';
    default:
      return 'e';
  }
}

bool trivial_rec(const std::string& w, std::unordered_map<std::string, bool>& memo) {
  if (w.empty()) return true;
  const auto a_count = std::count(w.begin(), w.end(), 'a');
  if (a_count % 2 == 1) return false;
  if (a_count == 0) return false;  // a single letter of {b,c,d}
  if (const auto it = memo.find(w); it != memo.end()) return it->second;
  bool result = true;
  for (int v = 0; v < 2 && result; ++v) {
    std::string s;
    int pos = v;
    for (char c : w) {
      if (c == 'a') {
        pos ^= 1;
      } else {
        const char x = section(c, pos);
        if (x != 'e') s += x;
      }
    }
    result = trivial_rec(grigorchuk_reduce(s), memo);
  }
  memo.emplace(w, result);
  return result;
}

}  // namespace

std::string grigorchuk_reduce(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (char c : word) {
    if (c == 'e') continue;
    if (c == 'a') {
      if (!out.empty() && out.back() == 'a') {
        out.pop_back();
      } else {
        out.push_back('a');
      }
      continue;
    }
    if (!is_klein(c)) throw std::invalid_argument(std::string("letter '") + c + "' is not a Grigorchuk generator");
    if (!out.empty() && is_klein(out.back())) {
      const int merged = klein(out.back()) ^ klein(c);
      if (merged == 0) {
        out.pop_back();
      } else {
        out.back() = kKleinLetter[merged];
      }
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool grigorchuk_is_trivial(std::string_view word) {
  std::unordered_map<std::string, bool> memo;
  return trivial_rec(grigorchuk_reduce(word), memo);
}

std::vector<std::uint32_t> grigorchuk_level_action(std::string_view word, int level) {
  if (level < 0 || level > 20) throw std::invalid_argument("level must be in 0..20");
  const std::uint32_t count = std::uint32_t{1} << level;
  std::vector<std::uint32_t> image(count);
  for (std::uint32_t v = 0; v < count; ++v) {
    std::uint32_t x = v;
    for (char letter : word) {
      char state = letter;
      for (int k = level - 1; k >= 0 && state != 'e'; --k) {
        const std::uint32_t bit = (x >> k) & 1U;
        if (state == 'a') {
          x ^= std::uint32_t{1} << k;
          break;
        }
        state = section(state, static_cast<int>(bit));
      }
    }
    image[v] = x;
  }
  return image;
}

namespace detail {

namespace {

constexpr int kHashLevel = 5;

class GrigorchukGroup final : public Group {
 public:
  explicit GrigorchukGroup(const GroupDescriptor& d) : Group(d) {}

  Element identity() const override { return GrigorchukWord{}; }
  Element op(const Element& g, const Element& h) const override {
    check(g);
    check(h);
    return GrigorchukWord{grigorchuk_reduce(g.as<GrigorchukWord>().letters + h.as<GrigorchukWord>().letters)};
  }
  Element inv(const Element& g) const override {
    check(g);
    std::string s = g.as<GrigorchukWord>().letters;
    std::reverse(s.begin(), s.end());
    return GrigorchukWord{std::move(s)};
  }
  bool equal(const Element& g, const Element& h) const override {
    check(g);
    check(h);
    const auto& a = g.as<GrigorchukWord>().letters;
    const auto& b = h.as<GrigorchukWord>().letters;
    if (a == b) return true;
    std::string rb(b.rbegin(), b.rend());
    return grigorchuk_is_trivial(a + rb);
  }
  std::size_t hash(const Element& g) const override {
    check(g);
    std::size_t h = 0x6a09e667;
    for (auto x : grigorchuk_level_action(g.as<GrigorchukWord>().letters, kHashLevel)) hash_combine(h, x);
    return h;
  }
  Element random_element(Rng& rng, std::int64_t bound) const override {
    const std::int64_t len = rng.uniform(0, std::max<std::int64_t>(bound, 0));
    std::string s;
    for (std::int64_t i = 0; i < len; ++i) s += "abcd"[rng.uniform(0, 3)];
    return GrigorchukWord{grigorchuk_reduce(s)};
  }
  std::vector<Element> generators() const override {
    return {GrigorchukWord{"a"}, GrigorchukWord{"b"}, GrigorchukWord{"c"}, GrigorchukWord{"d"}};
  }
  Element parse_element(std::string_view text) const override {
    std::string letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c != 'e' && c != 'a' && !is_klein(c)) {
        throw ParseError(std::string("unexpected '") + c + "' in Grigorchuk word", i);
      }
      letters += c;
    }
    return GrigorchukWord{grigorchuk_reduce(letters)};
  }
  std::string format(const Element& g) const override {
    check(g);
    const auto& s = g.as<GrigorchukWord>().letters;
    return s.empty() ? "e" : s;
  }
  void check(const Element& g) const override {
    if (!g.holds<GrigorchukWord>()) throw BackendMismatch("element is not in grigorchuk");
  }
};

}  // namespace

GroupPtr make_grigorchuk_group(const GroupDescriptor& desc) { return std::make_shared<GrigorchukGroup>(desc); }

}  // namespace detail

}  // namespace iterid
