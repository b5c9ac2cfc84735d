#include "finsite/field.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "finsite/errors.hpp"

namespace finsite {

  namespace {
    bool is_prime(std::uint32_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
      std::uint64_t result = 1 % m;
      base %= m;
      while (exp > 0) {
        if (exp & 1) {
          result = result * base % m;
        }
        base = base * base % m;
        exp >>= 1;
      }
      return result;
    }

    using boost::multiprecision::cpp_int;

    std::uint64_t mod_of(cpp_int const& v, std::uint32_t p) {
      cpp_int r = v % p;
      if (r < 0) {
        r += p;
      }
      return r.convert_to<std::uint64_t>();
    }
  }  // namespace

  Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) {
      throw InvalidData("field characteristic " + std::to_string(p)
                        + " is not a supported prime");
    }
    return Field(p);
  }

  Field Field::parse(std::string_view text) {
    std::string t;
    for (char c : text) {
      if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) {
        t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
      }
    }
    if (t == "Q" || t == "0") {
      return rationals();
    }
    if (t.rfind("GF", 0) == 0) {
      t = t.substr(2);
    } else if (!t.empty() && t[0] == 'F') {
      t = t.substr(1);
    }
    if (t.empty() || t.size() > 10
        || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidData("unrecognised field '" + std::string(text) + "'");
    }
    return prime(static_cast<std::uint32_t>(std::stoull(t)));
  }

  std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
  }

  Scalar Field::reduce(Scalar const& q) const {
    if (p_ == 0) {
      return q;
    }
    std::uint64_t num = mod_of(numerator(q), p_);
    std::uint64_t den = mod_of(denominator(q), p_);
    if (den == 0) {
      throw std::domain_error("denominator vanishes in " + name());
    }
    return Scalar(num * pow_mod(den, p_ - 2, p_) % p_);
  }

  Scalar Field::from_int(std::int64_t v) const {
    if (p_ == 0) {
      return Scalar(v);
    }
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) {
      r += p_;
    }
    return Scalar(r);
  }

  Scalar Field::add(Scalar const& a, Scalar const& b) const {
    if (p_ == 0) {
      return a + b;
    }
    std::uint64_t s = residue(a) + residue(b);
    return Scalar(s >= p_ ? s - p_ : s);
  }

  Scalar Field::sub(Scalar const& a, Scalar const& b) const {
    if (p_ == 0) {
      return a - b;
    }
    std::uint64_t ra = residue(a), rb = residue(b);
    return Scalar(ra >= rb ? ra - rb : ra + p_ - rb);
  }

  Scalar Field::mul(Scalar const& a, Scalar const& b) const {
    if (p_ == 0) {
      return a * b;
    }
    return Scalar(residue(a) * residue(b) % p_);
  }

  Scalar Field::neg(Scalar const& a) const {
    if (p_ == 0) {
      return -a;
    }
    std::uint64_t r = residue(a);
    return Scalar(r == 0 ? 0 : p_ - r);
  }

  Scalar Field::inv(Scalar const& a) const {
    if (a == 0) {
      throw std::domain_error("division by zero in " + name());
    }
    if (p_ == 0) {
      return 1 / a;
    }
    return Scalar(pow_mod(residue(a), p_ - 2, p_));
  }

  std::uint64_t Field::residue(Scalar const& a) const {
    return numerator(a).convert_to<std::uint64_t>();
  }

  Scalar Field::parse_scalar(std::string_view text) const {
    std::string t(text);
    auto slash = t.find('/');
    try {
      if (slash == std::string::npos) {
        return reduce(Scalar(cpp_int(t)));
      }
      cpp_int num(t.substr(0, slash));
      cpp_int den(t.substr(slash + 1));
      if (den == 0) {
        throw InvalidData("zero denominator in '" + t + "'");
      }
      return reduce(Scalar(num, den));
    } catch (std::runtime_error const&) {
      throw InvalidData("malformed scalar '" + t + "'");
    }
  }

  std::string Field::format(Scalar const& a) {
    if (denominator(a) == 1) {
      return numerator(a).str();
    }
    return numerator(a).str() + "/" + denominator(a).str();
  }

}  // namespace finsite
