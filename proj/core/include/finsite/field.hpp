#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace finsite {

  //! Exact field element. Rationals are stored as themselves, elements of
  //! F_p as their canonical residue in [0, p).
  using Scalar = boost::multiprecision::cpp_rational;

  //! Descriptor of an exact field: the rationals (characteristic 0) or a
  //! prime field F_p. All arithmetic on Scalar values goes through a Field
  //! so that prime-field results are always reduced.
  class Field {
   public:
    //! The rationals.
    Field() = default;

    static Field rationals() { return Field(); }
    //! Throws InvalidData unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);
    //! Accepts "Q", "q", "0", "F5", "f5", "GF5", "GF(5)", "5".
    static Field parse(std::string_view text);

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_finite() const noexcept { return p_ != 0; }
    //! "Q" or "F<p>".
    std::string name() const;

    //! Canonical representative of q (for F_p this maps a/b to a * b^-1).
    Scalar reduce(Scalar const& q) const;
    Scalar from_int(std::int64_t v) const;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    Scalar add(Scalar const& a, Scalar const& b) const;
    Scalar sub(Scalar const& a, Scalar const& b) const;
    Scalar mul(Scalar const& a, Scalar const& b) const;
    Scalar neg(Scalar const& a) const;
    //! Throws std::domain_error on zero.
    Scalar inv(Scalar const& a) const;
    Scalar div(Scalar const& a, Scalar const& b) const { return mul(a, inv(b)); }

    //! Residue of a reduced F_p element; only valid when is_finite().
    std::uint64_t residue(Scalar const& a) const;

    //! Parses "3", "-2", "1/3" and reduces into the field.
    Scalar parse_scalar(std::string_view text) const;
    //! Inverse of parse_scalar for reduced values.
    static std::string format(Scalar const& a);

    friend bool operator==(Field const&, Field const&) = default;

   private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
  };

}  // namespace finsite
