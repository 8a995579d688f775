#include "discplane/parse.hpp"

#include <cctype>
#include <vector>

#include "discplane/errors.hpp"

namespace discplane {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Bindings& bindings) : s_(text), b_(bindings) {}

  Scalar parse_all() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*'))
        v = v * unary();
      else if (eat('/'))
        v = v / unary();
      else
        return v;
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      long e = integer_literal();
      return base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }

  long integer_literal() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Rational number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string whole(s_.substr(start, pos_ - start));
    std::string frac;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      frac = std::string(s_.substr(fs, pos_ - fs));
    }
    if (whole.empty() && frac.empty()) fail("expected number");
    Integer num(whole.empty() ? "0" : whole);
    Integer den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational rational_arg(const Scalar& v, const char* what) {
    if (!v.is_rational()) fail(std::string(what) + " expects a rational argument");
    return v.rational();
  }

  Scalar kth_root(const Rational& q, long k) {
    if (k < 1) fail("root index must be >= 1");
    if (q == 0 || k == 1) return Scalar(q);
    if (q < 0 && k % 2 == 0) fail("even root of a negative number");
    // Root of den*x^k - num; bracket it with a float estimate and widen until isolated.
    std::vector<Rational> c(k + 1);
    c[0] = -q.get_num();
    c[k] = q.get_den();
    QPoly f(c);
    mpfr_t x;
    mpfr_init2(x, 80);
    Rational aq = abs(q);
    mpfr_set_q(x, aq.get_mpq_t(), MPFR_RNDN);
    mpfr_rootn_ui(x, x, static_cast<unsigned long>(k), MPFR_RNDN);
    Rational approx;
    mpfr_get_q(approx.get_mpq_t(), x);
    mpfr_clear(x);
    if (q < 0) approx = -approx;
    Rational rel(1, 1 << 20);
    for (int attempt = 0; attempt < 8; ++attempt) {
      Rational lo = approx - abs(approx) * rel, hi = approx + abs(approx) * rel;
      try {
        RealRoot r = isolate_root(f, lo, hi);
        return r.rational ? Scalar(r.value) : Scalar::generator_of(r.field);
      } catch (const DomainError&) {
        rel /= 16;
      }
    }
    fail("could not isolate root");
  }

  Scalar algebraic_literal() {
    std::vector<Rational> coeffs;
    coeffs.push_back(rational_arg(expr(), "algebraic"));
    while (eat(',')) coeffs.push_back(rational_arg(expr(), "algebraic"));
    expect(';');
    Rational lo = rational_arg(expr(), "algebraic");
    expect(',');
    Rational hi = rational_arg(expr(), "algebraic");
    expect(')');
    QPoly f(coeffs);
    if (f.degree() < 1) fail("algebraic() needs a polynomial of degree >= 1");
    try {
      RealRoot r = isolate_root(f, lo, hi);
      return r.rational ? Scalar(r.value) : Scalar::generator_of(r.field);
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (eat('(')) {
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Scalar(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id = identifier();
      if (id == "pi") return Scalar::pi();
      if (id == "sqrt" || id == "root" || id == "algebraic") {
        expect('(');
        if (id == "algebraic") return algebraic_literal();
        Rational q = rational_arg(expr(), id.c_str());
        long k = 2;
        if (id == "root") {
          expect(',');
          skip();
          k = integer_literal();
        }
        expect(')');
        return kth_root(q, k);
      }
      auto it = b_.find(id);
      if (it == b_.end()) fail("unknown name '" + id + "'");
      return it->second;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const Bindings& b_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Bindings& bindings) {
  return Parser(text, bindings).parse_all();
}

Vec3 parse_vec3(std::string_view text, const Bindings& bindings) {
  std::vector<std::string_view> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  if (parts.size() != 3)
    throw ParseError("expected three comma-separated coordinates, got " +
                     std::to_string(parts.size()) + " in \"" + std::string(text) + "\"");
  return Vec3(parse_scalar(parts[0], bindings), parse_scalar(parts[1], bindings),
              parse_scalar(parts[2], bindings));
}

void parse_binding(std::string_view text, Bindings& bindings) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("binding must look like name=expr");
  std::string name(text.substr(0, eq));
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])) || name == "pi" ||
      name == "sqrt" || name == "root" || name == "algebraic")
    throw ParseError("invalid binding name '" + name + "'");
  bindings[name] = parse_scalar(text.substr(eq + 1), bindings);
}

}  // namespace discplane
