#include <map>
#include <stdexcept>
#include <string>

#include "backends.hpp"
#include "checked.hpp"
#include "literal.hpp"

namespace iterid::detail {

namespace {

// Elements (t, f) multiply as (t1,f1)(t2,f2) = (t1+t2, p -> f1(p) f2(p-t1)),
// so conjugating by the base generator moves lamp supports by one.
class WreathGroup final : public Group {
 public:
  explicit WreathGroup(const GroupDescriptor& d) : Group(d), lamp_(make_group(d.lamp())), k_(d.base) {}

  Element identity() const override { return WreathElement{}; }

  Element op(const Element& g, const Element& h) const override {
    check_shape(g);
    check_shape(h);
    const auto& a = g.as<WreathElement>();
    const auto& b = h.as<WreathElement>();
    std::map<std::int64_t, Element> lamps;
    for (std::size_t i = 0; i < a.positions.size(); ++i) lamps.emplace(a.positions[i], a.lamps[i]);
    for (std::size_t i = 0; i < b.positions.size(); ++i) {
      const std::int64_t p = reduce(checked_add(b.positions[i], a.base));
      auto it = lamps.find(p);
      if (it == lamps.end()) {
        lamps.emplace(p, b.lamps[i]);
      } else {
        it->second = lamp_->op(it->second, b.lamps[i]);
      }
    }
    return build(reduce(checked_add(a.base, b.base)), lamps);
  }

  Element inv(const Element& g) const override {
    check_shape(g);
    const auto& a = g.as<WreathElement>();
    std::map<std::int64_t, Element> lamps;
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
      lamps.emplace(reduce(checked_sub(a.positions[i], a.base)), lamp_->inv(a.lamps[i]));
    }
    return build(reduce(checked_neg(a.base)), lamps);
  }

  bool equal(const Element& g, const Element& h) const override {
    check_shape(g);
    check_shape(h);
    const auto& a = g.as<WreathElement>();
    const auto& b = h.as<WreathElement>();
    if (a.base != b.base || a.positions != b.positions) return false;
    for (std::size_t i = 0; i < a.lamps.size(); ++i) {
      if (!lamp_->equal(a.lamps[i], b.lamps[i])) return false;
    }
    return true;
  }

  std::size_t hash(const Element& g) const override {
    check_shape(g);
    const auto& a = g.as<WreathElement>();
    std::size_t h = std::hash<std::int64_t>{}(a.base);
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
      hash_combine(h, std::hash<std::int64_t>{}(a.positions[i]));
      hash_combine(h, lamp_->hash(a.lamps[i]));
    }
    return h;
  }

  std::vector<Element> enumerate() const override {
    (void)order();
    const std::vector<Element> lamp_elems = lamp_->enumerate();
    std::vector<Element> out;
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k_) + 1, lamp_elems.size());
    sizes[0] = static_cast<std::size_t>(k_);
    for_each_tuple(sizes, [&](const std::vector<std::size_t>& idx) {
      std::map<std::int64_t, Element> lamps;
      for (std::size_t p = 1; p < idx.size(); ++p) lamps.emplace(static_cast<std::int64_t>(p - 1), lamp_elems[idx[p]]);
      out.push_back(build(static_cast<std::int64_t>(idx[0]), lamps));
    });
    return out;
  }

  Element random_element(Rng& rng, std::int64_t bound) const override {
    const std::int64_t t = k_ == 0 ? rng.uniform(-bound, bound) : rng.uniform(0, k_ - 1);
    std::map<std::int64_t, Element> lamps;
    if (k_ != 0 && k_ <= 64) {
      for (std::int64_t p = 0; p < k_; ++p) lamps.emplace(p, lamp_->random_element(rng, bound));
    } else {
      const std::int64_t count = rng.uniform(0, bound);
      for (std::int64_t i = 0; i < count; ++i) {
        const std::int64_t p = k_ == 0 ? rng.uniform(-bound, bound) : rng.uniform(0, k_ - 1);
        Element l = lamp_->random_element(rng, bound);
        auto it = lamps.find(p);
        if (it == lamps.end()) {
          lamps.emplace(p, std::move(l));
        } else {
          it->second = lamp_->op(it->second, l);
        }
      }
    }
    return build(t, lamps);
  }

  std::vector<Element> generators() const override {
    std::vector<Element> out;
    if (k_ != 1) out.emplace_back(WreathElement{1, {}, {}});
    for (const auto& l : lamp_->generators()) out.emplace_back(WreathElement{0, {0}, {l}});
    return out;
  }

  Element parse_element(std::string_view text) const override {
    const std::string_view t = trim(text);
    if (t == "e") return identity();
    const std::size_t at = offset_in(text, t);
    const std::string_view body = unwrap(t, '(', ')', at);
    const auto halves = split_top(body, ';');
    if (halves.empty() || halves.size() > 2) throw ParseError("expected (s:<base>; <pos>:<lamp>, ...)", at);
    const std::string_view head = halves[0];
    const std::size_t head_colon = head.find(':');
    if (head_colon == std::string_view::npos || trim(head.substr(0, head_colon)) != "s") {
      throw ParseError("expected 's:<base>'", offset_in(text, head));
    }
    const std::string_view base_text = trim(head.substr(head_colon + 1));
    const std::int64_t base = reduce(parse_int(base_text, offset_in(text, base_text)));
    std::map<std::int64_t, Element> lamps;
    if (halves.size() == 2) {
      for (auto entry : split_top(halves[1], ',')) {
        const std::size_t where = offset_in(text, entry);
        const std::size_t colon = find_top(entry, ':');
        if (colon == std::string_view::npos) throw ParseError("expected <pos>:<lamp>", where);
        const std::int64_t p = reduce(parse_int(entry.substr(0, colon), where));
        const std::string_view lamp_text = entry.substr(colon + 1);
        Element l;
        try {
          l = lamp_->parse_element(lamp_text);
        } catch (const ParseError& e) {
          throw ParseError(e.detail(), offset_in(text, lamp_text) + e.position());
        }
        auto it = lamps.find(p);
        if (it == lamps.end()) {
          lamps.emplace(p, std::move(l));
        } else {
          it->second = lamp_->op(it->second, l);
        }
      }
    }
    return build(base, lamps);
  }

  std::string format(const Element& g) const override {
    check(g);
    const auto& a = g.as<WreathElement>();
    if (a.base == 0 && a.positions.empty()) return "e";
    std::string s = "(s:" + std::to_string(a.base) + ";";
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
      s += i == 0 ? " " : ", ";
      s += std::to_string(a.positions[i]) + ":" + lamp_->format(a.lamps[i]);
    }
    return s + ")";
  }

  void check(const Element& g) const override {
    check_shape(g);
    const auto& a = g.as<WreathElement>();
    if (k_ != 0 && (a.base < 0 || a.base >= k_)) mismatch("base out of range");
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
      if (i > 0 && a.positions[i] <= a.positions[i - 1]) mismatch("lamp positions not increasing");
      if (k_ != 0 && (a.positions[i] < 0 || a.positions[i] >= k_)) mismatch("lamp position out of range");
      lamp_->check(a.lamps[i]);
      if (lamp_->is_identity(a.lamps[i])) mismatch("identity lamp stored");
    }
  }

  const Group& lamp_group() const { return *lamp_; }

 private:
  [[noreturn]] void mismatch(const std::string& what) const {
    throw BackendMismatch("element is not in " + name() + ": " + what);
  }
  void check_shape(const Element& g) const {
    if (!g.holds<WreathElement>()) mismatch("expected a wreath element");
    if (g.as<WreathElement>().positions.size() != g.as<WreathElement>().lamps.size()) mismatch("malformed lamps");
  }
  std::int64_t reduce(std::int64_t p) const { return k_ == 0 ? p : mod(p, k_); }

  Element build(std::int64_t base, const std::map<std::int64_t, Element>& lamps) const {
    WreathElement w;
    w.base = base;
    for (const auto& [p, l] : lamps) {
      if (lamp_->is_identity(l)) continue;
      w.positions.push_back(p);
      w.lamps.push_back(l);
    }
    return w;
  }

  GroupPtr lamp_;
  std::int64_t k_;
};

}  // namespace

GroupPtr make_wreath_group(const GroupDescriptor& desc) { return std::make_shared<WreathGroup>(desc); }

}  // namespace iterid::detail
