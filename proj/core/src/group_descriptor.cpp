#include "iterid/group_descriptor.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "iterid/word_parser.hpp"
#include "literal.hpp"

namespace iterid {

namespace {

constexpr std::int64_t kMaxCyclic = std::int64_t{1} << 62;
constexpr std::int64_t kMaxPermDegree = 20;
constexpr std::int64_t kMaxMatrixSize = 16;
constexpr std::int64_t kMaxFreeAbelianRank = 64;
constexpr std::int64_t kMaxMatrixModulus = std::int64_t{1} << 31;

std::uint64_t mul_order(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group order exceeds 64 bits");
  return r;
}

std::uint64_t pow_order(std::uint64_t a, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = mul_order(r, a);
  return r;
}

}  // namespace

GroupDescriptor GroupDescriptor::cyclic(std::int64_t m) {
  GroupDescriptor d;
  d.kind = GroupKind::kCyclic;
  d.size = m;
  d.validate();
  return d;
}

GroupDescriptor GroupDescriptor::free_abelian(std::int64_t rank) {
  GroupDescriptor d;
  d.kind = GroupKind::kFreeAbelian;
  d.size = rank;
  d.validate();
  return d;
}

GroupDescriptor GroupDescriptor::symmetric(std::int64_t n) {
  GroupDescriptor d;
  d.kind = GroupKind::kSymmetric;
  d.size = n;
  d.validate();
  return d;
}

GroupDescriptor GroupDescriptor::alternating(std::int64_t n) {
  GroupDescriptor d;
  d.kind = GroupKind::kAlternating;
  d.size = n;
  d.validate();
  return d;
}

GroupDescriptor GroupDescriptor::unitriangular(std::int64_t n, std::int64_t modulus) {
  GroupDescriptor d;
  d.kind = GroupKind::kUnitriangular;
  d.size = n;
  d.modulus = modulus;
  d.validate();
  return d;
}

GroupDescriptor GroupDescriptor::wreath(GroupDescriptor lamp, std::int64_t base_cyclic) {
  GroupDescriptor d;
  d.kind = GroupKind::kWreath;
  d.base = base_cyclic;
  d.children.push_back(std::move(lamp));
  d.validate();
  return d;
}

GroupDescriptor GroupDescriptor::inf_unitri_shift() {
  GroupDescriptor d;
  d.kind = GroupKind::kInfUnitriShift;
  return d;
}

GroupDescriptor GroupDescriptor::grigorchuk() {
  GroupDescriptor d;
  d.kind = GroupKind::kGrigorchuk;
  return d;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  GroupDescriptor d;
  d.kind = GroupKind::kProduct;
  d.children = std::move(factors);
  d.validate();
  return d;
}

void GroupDescriptor::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
  };
  switch (kind) {
    case GroupKind::kCyclic:
      require(size >= 1 && size <= kMaxCyclic, "cyclic(m) needs 1 <= m <= 2^62");
      break;
    case GroupKind::kFreeAbelian:
      require(size >= 1 && size <= kMaxFreeAbelianRank, "zd(d) needs 1 <= d <= 64");
      break;
    case GroupKind::kSymmetric:
    case GroupKind::kAlternating:
      require(size >= 1 && size <= kMaxPermDegree, "permutation degree must be in 1..20");
      break;
    case GroupKind::kUnitriangular:
      require(size >= 1 && size <= kMaxMatrixSize, "unitri(n) needs 1 <= n <= 16");
      require(modulus == 0 || (modulus >= 2 && modulus <= kMaxMatrixModulus),
              "unitri modulus must be 0 (integers) or in 2..2^31");
      break;
    case GroupKind::kWreath:
      require(children.size() == 1, "wreath needs exactly one lamp group");
      require(base >= 0 && base <= (std::int64_t{1} << 31), "wreath base must be int or cyclic(k), k <= 2^31");
      children[0].validate();
      break;
    case GroupKind::kInfUnitriShift:
    case GroupKind::kGrigorchuk:
      break;
    case GroupKind::kProduct:
      require(!children.empty(), "product needs at least one factor");
      for (const auto& c : children) c.validate();
      break;
  }
}

bool GroupDescriptor::is_finite() const {
  switch (kind) {
    case GroupKind::kCyclic:
    case GroupKind::kSymmetric:
    case GroupKind::kAlternating:
      return true;
    case GroupKind::kUnitriangular:
      return modulus != 0 || size == 1;
    case GroupKind::kWreath:
      return base != 0 && children.at(0).is_finite();
    case GroupKind::kProduct:
      for (const auto& c : children) {
        if (!c.is_finite()) return false;
      }
      return true;
    case GroupKind::kFreeAbelian:
    case GroupKind::kInfUnitriShift:
    case GroupKind::kGrigorchuk:
      return false;
  }
  return false;
}

std::uint64_t GroupDescriptor::order() const {
  if (!is_finite()) throw std::domain_error(format_group(*this) + " is infinite");
  switch (kind) {
    case GroupKind::kCyclic:
      return static_cast<std::uint64_t>(size);
    case GroupKind::kSymmetric:
    case GroupKind::kAlternating: {
      std::uint64_t f = 1;
      for (std::int64_t i = 2; i <= size; ++i) f = mul_order(f, static_cast<std::uint64_t>(i));
      return kind == GroupKind::kAlternating && size >= 2 ? f / 2 : f;
    }
    case GroupKind::kUnitriangular: {
      if (size == 1) return 1;
      const auto free_entries = static_cast<std::uint64_t>(size * (size - 1) / 2);
      return pow_order(static_cast<std::uint64_t>(modulus), free_entries);
    }
    case GroupKind::kWreath: {
      const std::uint64_t k = static_cast<std::uint64_t>(base);
      return mul_order(pow_order(children[0].order(), k), k);
    }
    case GroupKind::kProduct: {
      std::uint64_t r = 1;
      for (const auto& c : children) r = mul_order(r, c.order());
      return r;
    }
    default:
      break;
  }
  throw std::domain_error("infinite group");
}

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  GroupDescriptor parse() {
    GroupDescriptor d = descriptor();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return d;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      if (pos_ >= text_.size()) throw ParseError("expected group name before end of input", pos_);
      throw ParseError(std::string("expected group name, got '") + text_[pos_] + "'", pos_);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return detail::parse_int(text_.substr(start, pos_ - start), start);
  }

  std::vector<std::int64_t> int_args(std::size_t min_count, std::size_t max_count, const std::string& name) {
    const std::size_t at = pos_;
    expect('(');
    std::vector<std::int64_t> args;
    args.push_back(integer());
    while (accept(',')) args.push_back(integer());
    expect(')');
    if (args.size() < min_count || args.size() > max_count) {
      throw ParseError("wrong number of arguments for " + name, at);
    }
    return args;
  }

  template <typename F>
  GroupDescriptor checked(std::size_t at, F&& make) {
    try {
      return make();
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
  }

  GroupDescriptor descriptor() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name == "int") return GroupDescriptor::integers();
    if (name == "infunitri") return GroupDescriptor::inf_unitri_shift();
    if (name == "grigorchuk") return GroupDescriptor::grigorchuk();
    if (name == "cyclic") {
      const auto a = int_args(1, 1, name);
      return checked(at, [&] { return GroupDescriptor::cyclic(a[0]); });
    }
    if (name == "zd") {
      const auto a = int_args(1, 1, name);
      return checked(at, [&] { return GroupDescriptor::free_abelian(a[0]); });
    }
    if (name == "sym") {
      const auto a = int_args(1, 1, name);
      return checked(at, [&] { return GroupDescriptor::symmetric(a[0]); });
    }
    if (name == "alt") {
      const auto a = int_args(1, 1, name);
      return checked(at, [&] { return GroupDescriptor::alternating(a[0]); });
    }
    if (name == "unitri") {
      const auto a = int_args(1, 2, name);
      return checked(at, [&] { return GroupDescriptor::unitriangular(a[0], a.size() > 1 ? a[1] : 0); });
    }
    if (name == "wreath") {
      expect('(');
      GroupDescriptor lamp = descriptor();
      expect(',');
      const std::size_t base_at = pos_;
      GroupDescriptor base = descriptor();
      expect(')');
      std::int64_t k = 0;
      if (base.kind == GroupKind::kCyclic) {
        k = base.size;
      } else if (!(base.kind == GroupKind::kFreeAbelian && base.size == 1)) {
        throw ParseError("wreath base must be int or cyclic(k)", base_at);
      }
      return checked(at, [&] { return GroupDescriptor::wreath(std::move(lamp), k); });
    }
    if (name == "product") {
      expect('(');
      std::vector<GroupDescriptor> factors;
      factors.push_back(descriptor());
      while (accept(',')) factors.push_back(descriptor());
      expect(')');
      return checked(at, [&] { return GroupDescriptor::product(std::move(factors)); });
    }
    throw ParseError("unknown group '" + name + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupDescriptor parse_group(std::string_view text) { return DescriptorParser(text).parse(); }

std::string format_group(const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupKind::kCyclic:
      return "cyclic(" + std::to_string(d.size) + ")";
    case GroupKind::kFreeAbelian:
      return d.size == 1 ? "int" : "zd(" + std::to_string(d.size) + ")";
    case GroupKind::kSymmetric:
      return "sym(" + std::to_string(d.size) + ")";
    case GroupKind::kAlternating:
      return "alt(" + std::to_string(d.size) + ")";
    case GroupKind::kUnitriangular:
      if (d.modulus == 0) return "unitri(" + std::to_string(d.size) + ")";
      return "unitri(" + std::to_string(d.size) + "," + std::to_string(d.modulus) + ")";
    case GroupKind::kWreath:
      return "wreath(" + format_group(d.children.at(0)) + "," +
             (d.base == 0 ? std::string("int") : "cyclic(" + std::to_string(d.base) + ")") + ")";
    case GroupKind::kInfUnitriShift:
      return "infunitri";
    case GroupKind::kGrigorchuk:
      return "grigorchuk";
    case GroupKind::kProduct: {
      std::string s = "product(";
      for (std::size_t i = 0; i < d.children.size(); ++i) {
        if (i) s += ',';
        s += format_group(d.children[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace iterid
