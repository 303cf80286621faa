#ifndef FOLBOX_ERRORS_HPP_
#define FOLBOX_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folbox {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text. `position` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

// A tuple or valuation value lies outside the domain of its world.
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownWorld : public Error {
 public:
  using Error::Error;
};

// The replacement variable would be bound by a quantifier at a substitution site.
class CaptureError : public Error {
 public:
  using Error::Error;
};

// Input lies outside the monadic-with-identity, modality-free fragment.
class FragmentError : public Error {
 public:
  using Error::Error;
};

class CertificateError : public Error {
 public:
  using Error::Error;
};

// Malformed structure or proof document.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace folbox

#endif  // FOLBOX_ERRORS_HPP_
