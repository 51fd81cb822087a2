#include <cctype>
#include <limits>

#include "relkummer/errors.hpp"
#include "relkummer/ratfield.hpp"

namespace relkummer {

namespace {

// A parsed value: either zero or an element of E^x. Zero is only legal as an
// intermediate summand.
struct Value {
  bool zero = false;
  FactoredElement elem;
};

class RatFuncParser {
 public:
  RatFuncParser(std::string_view text, const GaloisField& k, std::uint64_t seed, std::size_t line)
      : text_(text), k_(k), seed_(seed), line_(line) {}

  FactoredElement parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Value v = parse_sum();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    if (v.zero) throw DomainError("expression evaluates to zero, which is not in E^x");
    return v.elem;
  }

  FieldElement parse_literal_only() {
    skip_ws();
    FieldElement c = parse_literal();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::uint64_t parse_digits() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto d = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("integer literal too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  FieldElement parse_literal() {
    skip_ws();
    if (peek() == '[') {
      ++pos_;
      std::vector<std::int64_t> coeffs;
      if (!accept(']')) {
        do {
          coeffs.push_back(static_cast<std::int64_t>(parse_digits() % k_.characteristic()));
        } while (accept(','));
        expect(']');
      }
      if (coeffs.size() > k_.degree()) fail("too many coefficients for " + k_.name());
      return k_.from_coefficients(coeffs);
    }
    return k_.from_int(static_cast<std::int64_t>(parse_digits() % k_.characteristic()));
  }

  Value parse_atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Value v = parse_sum();
      expect(')');
      return v;
    }
    if (c == 't') {
      ++pos_;
      return Value{false, FactoredElement{k_.one(), {{poly::variable(k_), 1}}}};
    }
    if (c == '[' || std::isdigit(static_cast<unsigned char>(c))) {
      const FieldElement lit = parse_literal();
      if (lit == k_.zero()) return Value{true, {}};
      return Value{false, ratfunc::from_unit(lit)};
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  Value parse_power() {
    Value base = parse_atom();
    if (!accept('^')) return base;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    const std::size_t exp_pos = pos_;
    const std::uint64_t mag = parse_digits();
    if (mag > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
      pos_ = exp_pos;
      fail("exponent too large");
    }
    const auto e = negative ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
    if (base.zero) {
      if (e < 0) throw DomainError("division by zero rational function");
      return e == 0 ? Value{false, ratfunc::from_unit(k_.one())} : base;
    }
    return Value{false, ratfunc::power(k_, base.elem, e)};
  }

  Value parse_product() {
    Value acc = parse_power();
    for (;;) {
      if (accept('*')) {
        Value rhs = parse_power();
        if (acc.zero || rhs.zero) {
          acc = Value{true, {}};
        } else {
          acc.elem = ratfunc::multiply(k_, acc.elem, rhs.elem);
        }
      } else if (accept('/')) {
        Value rhs = parse_power();
        if (rhs.zero) throw DomainError("division by zero rational function");
        if (!acc.zero) acc.elem = ratfunc::divide(k_, acc.elem, rhs.elem);
      } else {
        return acc;
      }
    }
  }

  Value parse_sum() {
    skip_ws();
    bool negate = false;
    bool signed_lead = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      signed_lead = true;
      ++pos_;
    }
    Value first = parse_product();
    skip_ws();
    if (!signed_lead && peek() != '+' && peek() != '-') return first;

    // Sums are evaluated on expanded numerator/denominator pairs.
    Polynomial num, den = poly::constant(k_.one());
    auto add_term = [&](const Value& v, bool neg) {
      if (v.zero) return;
      auto [n, d] = ratfunc::expand(k_, v.elem);
      if (neg) n = poly::scale(k_, n, k_.neg(k_.one()));
      num = poly::add(k_, poly::mul(k_, num, d), poly::mul(k_, n, den));
      den = poly::mul(k_, den, d);
    };
    add_term(first, negate);
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      const bool neg = peek() == '-';
      ++pos_;
      add_term(parse_product(), neg);
    }
    if (num.is_zero()) return Value{true, {}};
    return Value{false, ratfunc::divide(k_, ratfunc::from_polynomial(k_, num, seed_),
                                        ratfunc::from_polynomial(k_, den, seed_))};
  }

  std::string_view text_;
  const GaloisField& k_;
  std::uint64_t seed_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

FactoredElement parse_ratfunc(std::string_view expr, const GaloisContext& ctx, std::uint64_t seed,
                              std::size_t line) {
  return RatFuncParser(expr, ctx.k(), seed, line).parse();
}

FieldElement parse_field_literal(std::string_view text, const GaloisField& k) {
  return RatFuncParser(text, k, 0, 1).parse_literal_only();
}

}  // namespace relkummer
