#pragma once

#include <stdexcept>
#include <string>

namespace finsite {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Raised when input data does not describe a valid object of the
  //! requested kind (presheaf not functorial, algebra map not unital, ...).
  class InvalidData : public Error {
   public:
    using Error::Error;
  };

  //! A brute-force search would exceed its configured bound.
  class SearchSpaceTooLarge : public Error {
   public:
    using Error::Error;
  };

  //! A precondition on the shape of the input was violated (non-EI
  //! category, non-strictly-full subcategory, mismatched categories...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace finsite
