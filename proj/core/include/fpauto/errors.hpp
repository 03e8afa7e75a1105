#ifndef FPAUTO_ERRORS_HPP
#define FPAUTO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpauto {

// Malformed input: unknown identifiers, non-total tables, bad documents.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exploration hit its configured cap.  Never a wrong answer; the caller
// may retry with a larger cap.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& msg, std::size_t cap)
      : std::runtime_error(msg), cap_(cap) {}

  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace fpauto

#endif  // FPAUTO_ERRORS_HPP
